#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace giry {

/// Base of every error the library throws on purpose.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what, nlohmann::json witness = nullptr)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  [[nodiscard]] const nlohmann::json& witness() const { return witness_; }

 private:
  nlohmann::json witness_;
};

// A value that is not in the domain of an operation (point outside the ground
// set, set outside the algebra, mismatched algebras).
class domain_error : public error { using error::error; };

// A function value outside [0,1] where a simple function is expected.
class range_error : public error { using error::error; };

// A stated precondition is false (non-premeasurable map, invalid metric, ...).
class precondition_error : public error { using error::error; };

// Malformed or structurally invalid input data.
class invalid_input : public error { using error::error; };

// A functional or cone does not determine a measure.
class reconstruction_error : public error { using error::error; };

// A set function on a semi-ring is not additive.
class extension_error : public error { using error::error; };

}  // namespace giry
