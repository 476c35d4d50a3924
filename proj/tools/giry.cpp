// giry: command-line front end for the verification suites.
//
//   giry laws        [input]   monad laws (suite, or on the given algebra)
//   giry codensity   [input]   cone bijection and small-index sufficiency
//   giry distance    [input]   bounded Lipschitz distance
//   giry reconstruct [input]   measure from an integration functional
//   giry extend      [input]   Caratheodory extension from a semi-ring
//   giry integrate   [input]   integral properties of a measure
//   giry all                   every acceptance criterion
//
// Input is a path or "-" for stdin. Exit status: 0 pass, 1 property
// violated, 2 invalid input.

#include <giry/giry.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace giry;

constexpr int kPass = 0;
constexpr int kViolated = 1;
constexpr int kInvalid = 2;

struct Options {
  SuiteConfig cfg;
  std::string mode = "sigma";
  std::string format = "json";
  std::string method = "both";
  std::optional<std::size_t> k;
  std::string input;
  bool cases_given = false;
};

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("malformed JSON: ") + e.what());
  }
  io::check_format(j);
  return j;
}

int emit(const Report& r, const Options& o) {
  if (o.cfg.format == Format::json) std::cout << r.to_json().dump(2) << "\n";
  else std::cout << r.to_text();
  return r.ok() ? kPass : kViolated;
}

int emit_value(const std::string& suite, json value, bool ok, const Options& o) {
  if (o.cfg.format == Format::json) {
    std::cout << json{{"format", io::kFormat}, {"suite", suite}, {"ok", ok}, {"result", std::move(value)}}.dump(2) << "\n";
  } else {
    std::cout << suite << ": " << (ok ? "PASS" : "FAIL") << "\n" << value.dump(2) << "\n";
  }
  return ok ? kPass : kViolated;
}

// ---------------------------------------------------------------------------

int cmd_laws(const Options& o) {
  if (o.input.empty()) return emit(suites::laws(o.cfg), o);
  auto j = read_input(o.input);
  auto x = io::algebra_from(io::field(j, "algebra", ""), "/algebra");
  auto r = check_monad_laws(x, o.cfg);
  r.parameters = {{"seed", o.cfg.seed}, {"cases", o.cfg.cases}, {"mode", to_string(o.cfg.mode)}};
  return emit(r, o);
}

int cmd_codensity(const Options& o) {
  if (o.input.empty()) {
    auto r = suites::codensity(o.cfg, o.k.value_or(3));
    r.absorb(suites::small_index(o.cfg, o.k), "small_index.");
    return emit(r, o);
  }
  auto j = read_input(o.input);
  auto x = io::algebra_from(io::field(j, "algebra", ""), "/algebra");
  if (j.contains("cone")) {
    auto c = io::cone_from(j["cone"], x, "/cone");
    try {
      auto p = reconstruct_from_cone(c, o.cfg.mode);
      return emit_value("codensity", io::to_json(p), true, o);
    } catch (const reconstruction_error& e) {
      return emit_value("codensity", {{"error", e.what()}, {"witness", e.witness()}}, false, o);
    }
  }
  auto p = io::measure_from(io::field(j, "measure", ""), "/measure");
  if (!(p.algebra() == x)) io::bad("/measure/algebra", "measure is on a different algebra");
  auto c = cone_of_measure(p, closed_family(x, o.k.value_or(3)));
  auto nat = check_cone_naturality(c);
  auto back = reconstruct_from_cone(c, p.mode());
  bool ok = nat.ok && back == p;
  return emit_value("codensity",
                    {{"cone", io::to_json(c)}, {"triangles", nat.triangles}, {"round_trip", io::to_json(back)}}, ok, o);
}

int cmd_distance(const Options& o) {
  if (o.method != "lp" && o.method != "subsets" && o.method != "both")
    throw invalid_input("--method must be lp, subsets or both");
  if (o.input.empty()) return emit(suites::bl_identity(o.cfg), o);
  auto j = read_input(o.input);
  auto p = io::rationals_from(io::field(j, "p", ""), "/p");
  auto q = io::rationals_from(io::field(j, "q", ""), "/q");
  if (p.size() != q.size()) io::bad("/q", "p and q need the same length");
  SimplexPoint sp, sq;
  try {
    sp = SimplexPoint::make(p);
    sq = SimplexPoint::make(q);
  } catch (const giry::error& e) {
    throw invalid_input(std::string("at /: ") + e.what(), e.witness());
  }
  bool discrete = !j.contains("metric");
  auto m = discrete ? FiniteMetricSpace::discrete(p.size()) : io::metric_from(j["metric"], "/metric");
  if (m.size() != p.size()) io::bad("/metric", "metric size differs from the distributions");
  json out = {{"metric", discrete ? json("discrete") : io::to_json(m)}};
  bool ok = true;
  std::optional<Rational> lp, sub;
  if (o.method != "subsets") {
    auto d = bl_distance_lp(sp, sq, m);
    lp = d.value;
    out["lp"] = d.value.str();
    out["test_function"] = io::to_json(d.witness);
  }
  if (o.method != "lp") {
    if (!discrete) io::bad("/metric", "the subset formula holds only under the discrete metric");
    sub = bl_distance_subsets(sp, sq);
    out["subsets"] = sub->str();
  }
  if (lp && sub) ok = *lp == *sub;
  return emit_value("distance", std::move(out), ok, o);
}

int cmd_reconstruct(const Options& o) {
  if (o.input.empty()) {
    auto r = suites::reconstruction(o.cfg);
    r.absorb(suites::extension(o.cfg, 0, std::min<std::size_t>(o.cfg.cases, 100)), "daniell_stone.");
    return emit(r, o);
  }
  auto j = read_input(o.input);
  if (j.contains("lattice")) {
    // {"lattice": {"points", "functions"}, "density": [...]}: I(f) = sum f(x) w(x).
    const auto& lj = j["lattice"];
    WeakIntegrationLattice L;
    L.ground = io::ground_from(io::field(lj, "points", "/lattice"), "/lattice/points");
    const auto& fj = io::array_at(io::field(lj, "functions", "/lattice"), "/lattice/functions");
    for (std::size_t i = 0; i < fj.size(); ++i) {
      auto f = io::rationals_from(fj[i], "/lattice/functions/" + std::to_string(i));
      if (f.size() != L.ground.size()) io::bad("/lattice/functions/" + std::to_string(i), "one value per point expected");
      L.functions.push_back(std::move(f));
    }
    auto w = io::rationals_from(io::field(j, "density", ""), "/density");
    if (w.size() != L.ground.size()) io::bad("/density", "one value per point expected");
    auto I = [w](const PointFunction& f) {
      Rational s;
      for (std::size_t x = 0; x < f.size(); ++x) s += f[x] * w[x];
      return s;
    };
    try {
      auto res = daniell_stone(L, I);
      json out = {{"measure", io::to_json(res.measure)}, {"slabs", res.slab_count}, {"cells", res.cell_count}};
      if (res.direct) out["direct"] = io::to_json(*res.direct);
      return emit_value("reconstruct", std::move(out), !res.direct || *res.direct == res.measure, o);
    } catch (const reconstruction_error& e) {
      return emit_value("reconstruct", {{"error", e.what()}, {"witness", e.witness()}}, false, o);
    } catch (const extension_error& e) {
      return emit_value("reconstruct", {{"error", e.what()}, {"witness", e.witness()}}, false, o);
    }
  }
  auto F = io::functional_from(j);
  try {
    auto p = o.cfg.mode == Additivity::sigma ? reconstruct_measure(F) : reconstruct_charge(F);
    return emit_value("reconstruct", io::to_json(p), true, o);
  } catch (const reconstruction_error& e) {
    return emit_value("reconstruct", {{"error", e.what()}, {"witness", e.witness()}}, false, o);
  }
}

int cmd_extend(const Options& o) {
  if (o.input.empty()) return emit(suites::extension(o.cfg, 500, 0), o);
  auto in = io::extension_from(read_input(o.input));
  try {
    return emit_value("extend", io::to_json(caratheodory_extend(in.semiring, in.mu)), true, o);
  } catch (const extension_error& e) {
    return emit_value("extend", {{"error", e.what()}, {"witness", e.witness()}}, false, o);
  }
}

int cmd_integrate(const Options& o) {
  if (o.input.empty()) return emit(suites::integral(o.cfg), o);
  auto j = read_input(o.input);
  auto p = io::measure_from(io::field(j, "measure", ""), "/measure");
  std::vector<SimpleFunction> fns;
  json integrals = json::array();
  if (j.contains("functions")) {
    const auto& fj = io::array_at(j["functions"], "/functions");
    for (std::size_t i = 0; i < fj.size(); ++i) {
      fns.push_back(io::simple_function_from(fj[i], p.algebra(), "/functions/" + std::to_string(i)));
      integrals.push_back(j_integral(p, fns.back()).str());
    }
  }
  auto rep = check_integral_properties(p, fns);
  Report r;
  r.suite = "integrate";
  r.parameters = {{"integrals", integrals}};
  for (const auto& c : rep.clauses) {
    auto& chk = r.check("clause_" + c.clause);
    chk.note = c.description;
    chk.passed = c.checked - c.failed;
    chk.failed = c.failed;
    chk.witnesses = c.witnesses;
  }
  return emit(r, o);
}

int cmd_all(const Options& o) {
  std::optional<std::size_t> override_cases;
  if (o.cases_given) override_cases = o.cfg.cases;
  std::vector<acceptance::Outcome> outcomes;
  for (const auto& c : acceptance::criteria(override_cases)) {
    outcomes.push_back(acceptance::run(c, o.cfg));
    std::cerr << acceptance::line(outcomes.back()) << "\n";
  }
  auto doc = acceptance::document(outcomes, o.cfg);
  if (o.cfg.format == Format::json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& out : outcomes) std::cout << "criterion " << out.number << "\n" << out.report.to_text();
  }
  return doc["ok"].get<bool>() ? kPass : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite checks for the Giry monad"};
  app.require_subcommand(1);
  Options o;
  std::size_t size = o.cfg.max_ground_size;
  long den = o.cfg.max_denominator;
  std::size_t cases = o.cfg.cases;
  app.add_option("--seed", o.cfg.seed, "random seed")->capture_default_str();
  auto* cases_opt = app.add_option("--cases", cases, "generated cases per suite")->capture_default_str();
  app.add_option("--size", size, "largest ground set")->capture_default_str();
  app.add_option("--denominator", den, "largest generated denominator")->capture_default_str();
  app.add_option("--mode", o.mode, "sigma or finitely_additive")->capture_default_str();
  app.add_option("--format", o.format, "json or text")->capture_default_str();
  app.add_option("--method", o.method, "lp, subsets or both")->capture_default_str();
  app.add_option("--k", o.k, "index bound for small-index sufficiency");

  using Handler = int (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h, bool takes_input) {
    auto* s = app.add_subcommand(name, help);
    if (takes_input) s->add_option("input", o.input, "JSON input file, or - for stdin");
    s->fallthrough();
    commands.emplace_back(s, h);
  };
  sub("laws", "monad laws", cmd_laws, true);
  sub("codensity", "codensity bijection and small-index sufficiency", cmd_codensity, true);
  sub("distance", "bounded Lipschitz distance", cmd_distance, true);
  sub("reconstruct", "measure from an integration functional", cmd_reconstruct, true);
  sub("extend", "Caratheodory extension", cmd_extend, true);
  sub("integrate", "integral properties", cmd_integrate, true);
  sub("all", "every acceptance criterion", cmd_all, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInvalid;
  }

  try {
    o.cfg.max_ground_size = size;
    o.cfg.max_denominator = den;
    o.cfg.cases = cases;
    o.cases_given = cases_opt->count() > 0;
    if (o.mode == "sigma") o.cfg.mode = Additivity::sigma;
    else if (o.mode == "finitely_additive" || o.mode == "finite") o.cfg.mode = Additivity::finite;
    else throw invalid_input("--mode must be sigma or finitely_additive");
    if (o.format == "json") o.cfg.format = Format::json;
    else if (o.format == "text") o.cfg.format = Format::text;
    else throw invalid_input("--format must be json or text");
    if (o.k && *o.k == 0) throw invalid_input("--k must be positive");
    o.cfg.validate();
    for (const auto& [s, h] : commands)
      if (s->parsed()) return h(o);
  } catch (const giry::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.witness().is_null()) std::cerr << "witness: " << e.witness().dump() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
