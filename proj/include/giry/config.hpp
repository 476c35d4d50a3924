#pragma once

#include "errors.hpp"
#include "measure.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace giry {

enum class Format { json, text };

/// Parameters shared by every generated-case suite.
struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t max_ground_size = 5;
  long max_denominator = 12;
  std::size_t cases = 500;
  Additivity mode = Additivity::sigma;
  Format format = Format::json;

  void validate() const {
    if (max_ground_size == 0) throw invalid_input("--size must be positive");
    if (max_ground_size > kDefaultMaxGroundSize) throw invalid_input("--size exceeds the ground set limit");
    if (max_denominator <= 0) throw invalid_input("--denominator must be positive");
    if (cases == 0) throw invalid_input("--cases must be positive");
  }

  [[nodiscard]] SuiteConfig with(std::size_t size, long denominator, std::size_t n_cases) const {
    SuiteConfig c = *this;
    c.max_ground_size = size;
    c.max_denominator = denominator;
    c.cases = n_cases;
    return c;
  }
};

}  // namespace giry
