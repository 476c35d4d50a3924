#include <giry/json_io.hpp>
#include <giry/report.hpp>

#include <gtest/gtest.h>

using namespace giry;
using nlohmann::json;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const invalid_input& e) {
    return e.what();
  }
  return "";
}

const json kAlgebra = json::parse(R"({"points": ["x", "y", "z"], "family": [[], [0], [1, 2], [0, 1, 2]]})");

}  // namespace

TEST(Io, Rationals) {
  EXPECT_EQ(io::rational_from("3/6", "/r"), Rational(1, 2));
  EXPECT_EQ(io::rational_from(2, "/r"), Rational(2));
  EXPECT_NE(error_of([] { io::rational_from("1.5", "/w/0"); }).find("/w/0"), std::string::npos);
  EXPECT_NE(error_of([] { io::rational_from(0.5, "/w/0"); }).find("/w/0"), std::string::npos);
}

TEST(Io, MeasureRoundTrip) {
  json j = {{"algebra", kAlgebra}, {"weights", {"1/4", "3/4"}}, {"mode", "finitely_additive"}};
  auto p = io::measure_from(j, "");
  EXPECT_EQ(p.weight(1), Rational(3, 4));
  EXPECT_EQ(p.mode(), Additivity::finite);
  auto again = io::measure_from(io::to_json(p), "");
  EXPECT_EQ(again, p);
  EXPECT_EQ(again.mode(), p.mode());
}

TEST(Io, SchemaErrorsNameTheLocation) {
  json bad_weights = {{"algebra", kAlgebra}, {"weights", {"1/4", "1/4"}}};
  EXPECT_NE(error_of([&] { io::measure_from(bad_weights, "/measure"); }).find("/measure/weights"), std::string::npos);
  auto bad_index = json::parse(R"({"points": ["a", "b"], "family": [[0, 7]]})");
  EXPECT_NE(error_of([&] { io::family_from(bad_index, ""); }).find("/family/0"), std::string::npos);
  json missing = {{"points", {"a"}}};
  EXPECT_NE(error_of([&] { io::family_from(missing, ""); }).find("family"), std::string::npos);
  auto not_algebra = json::parse(R"({"points": ["a", "b", "c"], "family": [[], [0], [0, 1, 2]]})");
  EXPECT_THROW(io::algebra_from(not_algebra, ""), invalid_input);
  not_algebra["generate"] = true;
  EXPECT_EQ(io::algebra_from(not_algebra, "").member_count(), 4U);
  EXPECT_THROW(io::check_format(json{{"format", 2}}), invalid_input);
  EXPECT_NO_THROW(io::check_format(json{{"format", 1}}));
}

TEST(Io, FunctionalTable) {
  auto j = json::parse(R"({"family": [{"terms": [["1", [0]]]}, {"terms": [["1", [1, 2]]]}, {"terms": [["1", [0, 1, 2]]]}],
                            "values": ["2/5", "3/5", "1"]})");
  j["algebra"] = kAlgebra;
  auto F = io::functional_from(j);
  EXPECT_EQ(reconstruct_measure(F).weights(), (std::vector<Rational>{Rational(2, 5), Rational(3, 5)}));
  j["values"] = json::parse(R"(["2/5", "3/5"])");
  EXPECT_THROW(io::functional_from(j), invalid_input);
}

TEST(Io, ArrowRoundTrip) {
  auto x = io::algebra_from(kAlgebra, "");
  auto f = hat(SimpleFunction::from_atom_values(x, {Rational(1, 3), Rational(1)}));
  auto back = io::arrow_from(io::to_json(f), x, "");
  EXPECT_EQ(back, f);
  auto j = io::to_json(f);
  j["rows"].erase("y");
  EXPECT_NE(error_of([&] { io::arrow_from(j, x, "/cone/0/0"); }).find("/cone/0/0/rows"), std::string::npos);
}

TEST(Io, MetricAndExtension) {
  auto m = json::parse(R"({"points": ["a", "b"], "dist": [["0", "1/2"], ["1/2", "0"]]})");
  EXPECT_EQ(io::metric_from(m, "")(0, 1), Rational(1, 2));
  m["dist"][0][1] = "1/3";
  EXPECT_THROW(io::metric_from(m, ""), invalid_input);
  auto e = json::parse(R"({"points": ["a", "b"], "family": [[], [0], [1]], "values": ["0", "1/4", "3/4"]})");
  auto in = io::extension_from(e);
  auto ext = caratheodory_extend(in.semiring, in.mu);
  EXPECT_EQ(io::to_json(ext)["weights"], json({"1/4", "3/4"}));
}

TEST(Report, JsonShape) {
  Report r;
  r.suite = "demo";
  r.check("a").record(true);
  r.check("b").record(false, [] { return json{{"x", 1}}; });
  r.check("b").record(false, [] { return json{{"x", 2}}; });
  auto j = r.to_json();
  EXPECT_EQ(j["format"], 1);
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_EQ(j["checks"][1]["failed"], 2);
  EXPECT_EQ(j["checks"][1]["witnesses"].size(), 2U);
  EXPECT_FALSE(j.contains("wall_time"));
}
