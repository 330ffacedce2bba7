#include "corpus.hpp"

#include <algorithm>

#include "pgcycles/errors.hpp"
#include "reports.hpp"

namespace pgc::tools {
namespace {

const Cycle& named(const LoadedCase& c, const std::string& name) {
  auto it = c.cycles.find(name);
  if (it == c.cycles.end()) throw ValidationError("fixture has no cycle '" + name + "'");
  return it->second;
}

// Keeps only the keys of `actual` that `expected` mentions, recursively
// through arrays of objects.
Json restrict_to(const Json& actual, const Json& expected) {
  if (expected.is_object() && actual.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : expected.items()) {
      if (actual.contains(k)) out[k] = restrict_to(actual.at(k), v);
    }
    return out;
  }
  if (expected.is_array() && actual.is_array() && expected.size() == actual.size()) {
    Json out = Json::array();
    for (std::size_t i = 0; i < actual.size(); ++i) out.push_back(restrict_to(actual[i], expected[i]));
    return out;
  }
  return actual;
}

Json evaluate(const LoadedCase& c, const Json& fixture, const Json& check, Json& expected) {
  const std::string kind = check.at("check").get<std::string>();
  const std::string cycle = check.value("cycle", "Z");
  const GraphPtr& g = c.sing.graph;

  if (kind == "negative_definite") return g->form().negative_definite();
  if (kind == "is_minimal") return is_minimal(*g);
  if (kind == "numerically_gorenstein") return is_numerically_gorenstein(g);
  if (kind == "degree") return degree(c.base);
  if (kind == "canonical_cycle" || kind == "fundamental_cycle") {
    expected = cycle_to_json(cycle_from_json(expected, g));
    return cycle_to_json(kind == "canonical_cycle" ? canonical_cycle(g) : fundamental_cycle(g));
  }
  if (kind == "choose_W") {
    expected = cycle_to_json(cycle_from_json(expected, g));
    return cycle_to_json(choose_W(c.sing));
  }
  if (kind == "pairing") {
    return rational_to_json(intersect(named(c, cycle), named(c, check.at("other").get<std::string>())));
  }
  if (kind == "self_intersection") {
    const Cycle& z = named(c, cycle);
    return rational_to_json(intersect(z, z));
  }
  if (kind == "k_dot") return rational_to_json(k_dot(named(c, cycle)));
  if (kind == "anti_nef") return is_anti_nef(named(c, cycle));
  if (kind == "minimal_wrt") return is_minimal_wrt(named(c, cycle));
  if (kind == "perp") {
    const auto p = perp(named(c, cycle));
    return std::vector<std::string>(p.begin(), p.end());
  }
  if (kind == "construction") {
    const Cycle w = resolve_w(c, check.value("W", Json("choose")));
    const Seed seed = resolve_c0(c, check.value("C0", Json("canonical")), w);
    const ConstructionResult r = run_construction(c.sing, w, seed.c0);
    return restrict_to(construction_summary(r, certify_pg_cycle(r, c.sing)), expected);
  }
  if (kind == "classify") {
    Json cases = Json::array();
    for (const auto& u : classify_ulrich(check.at("degree").get<long>())) cases.push_back(ulrich_case_json(u));
    return restrict_to(cases, expected);
  }

  if (!fixture.contains("ideal")) throw ValidationError("check '" + kind + "' needs an 'ideal'");
  const Json& ideal = fixture.at("ideal");
  const IdealDescriptor d = load_ideal(c, ideal, ideal.value("cycle", "Z"));
  const Json report = invariants_report(c, d);
  if (kind == "colength" || kind == "ideal_colength" || kind == "multiplicity") return report.at(kind);
  if (kind == "mu_upper") return report.at("mu").at("upper");
  if (kind == "mu_lower") return report.at("mu").at("lower");
  if (kind == "is_pg_cycle" || kind == "good" || kind == "ulrich") return report.at(kind).at("value");
  throw ValidationError("unknown check '" + kind + "'");
}

}  // namespace

std::vector<CheckOutcome> run_fixture(const Json& fixture, const std::string& name) {
  std::vector<CheckOutcome> out;
  const LoadedCase c = load_case(fixture);
  for (const auto& check : fixture.at("expected")) {
    CheckOutcome o;
    o.fixture = name;
    o.check = check.at("check").get<std::string>();
    if (check.contains("label")) o.check += " (" + check.at("label").get<std::string>() + ")";
    o.tag = check.value("tag", "");
    o.expected = check.at("value");
    try {
      o.actual = evaluate(c, fixture, check, o.expected);
      o.passed = o.actual == o.expected;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    if (o.tag != "PAPER" && o.tag != "DERIVED" && o.tag != "TRIVIAL") {
      o.passed = false;
      o.error = "missing provenance tag";
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> run_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (files.empty()) throw IoError("no fixtures in '" + dir.string() + "'");
  std::sort(files.begin(), files.end());
  std::vector<CheckOutcome> out;
  for (const auto& f : files) {
    auto part = run_fixture(read_json_file(f.string()), f.stem().string());
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace pgc::tools
