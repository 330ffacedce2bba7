#include "reports.hpp"

#include "pgcycles/errors.hpp"

namespace pgc::tools {
namespace {

Json id_list(const std::set<std::string>& ids) { return Json(std::vector<std::string>(ids.begin(), ids.end())); }

Json optional_json(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json invariants_report(const LoadedCase& c, const IdealDescriptor& d) {
  Json out;
  out["cycle"] = cycle_to_json(d.z);
  out["anti_nef"] = is_anti_nef(d.z);
  out["minimal_wrt"] = is_minimal_wrt(d.z);
  out["perp"] = id_list(perp(d.z));
  out["self_intersection"] = rational_to_json(intersect(d.z, d.z));
  out["k_dot"] = rational_to_json(k_dot(d.z));
  out["colength"] = unknowable_json(colength(d));
  out["ideal_colength"] = unknowable_json(ideal_colength(d));
  out["multiplicity"] = unknowable_json(multiplicity(d));

  const TriBool pg_cycle = is_pg_cycle(d);
  out["is_pg_cycle"] = tribool_json(pg_cycle);
  out["good"] = tribool_json(good_ideal_test(d));

  const auto m = maximal_ideal_cycle(c);
  if (m) {
    std::optional<long> eps;
    if (d.sing.rational() || pg_cycle.is_true()) eps = 0;
    const MuData mu = mu_data(d, *m, eps);
    out["mu"] = {{"upper", mu.upper}, {"lower", optional_json(mu.lower)},
                 {"exact_coangle", optional_json(mu.exact_coangle)}};
    out["ulrich"] = tribool_json(ulrich_screen(d, *m));
  } else {
    out["mu"] = {{"unknown", "maximal_ideal_cycle"}};
    out["ulrich"] = tribool_json(TriBool::unknown("maximal_ideal_cycle"));
  }
  return out;
}

Json construction_summary(const ConstructionResult& r, const Certificate& cert) {
  Json out;
  out["steps"] = r.steps;
  out["branches"] = r.branches.size();
  out["branches_per_sweep"] = r.branches_per_sweep;
  out["kz"] = rational_to_json(r.kz);
  out["minus_zsq"] = rational_to_json(-r.zsq);
  out["passed"] = cert.passed();
  out["good"] = cert.good;
  out["conditional"] = cert.conditional;
  out["violations"] = cert.violations;
  if (cert.c_is_canonical) out["c_is_canonical"] = *cert.c_is_canonical;
  return out;
}

Json construction_report(const ConstructionResult& r, const Certificate& cert) {
  Json out = construction_summary(r, cert);
  out["W"] = cycle_to_json(r.w);
  out["C0"] = cycle_to_json(r.c0);
  out["Y"] = graph_to_json(*r.y);
  out["Z"] = cycle_to_json(r.z);
  out["C_final"] = cycle_to_json(r.c_final);
  out["multiplicity"] = cert.multiplicity;
  Json sweeps = Json::array();
  for (const auto& s : r.sweeps) {
    sweeps.push_back({{"step", s.step}, {"centers", s.centers}, {"C", cycle_to_json(s.c_after)}});
  }
  out["sweeps"] = sweeps;
  return out;
}

Json ulrich_case_json(const UlrichCase& c) {
  return {{"label", c.label},
          {"colength", c.colength},
          {"integral_gap", c.integral_gap},
          {"h1", c.h1},
          {"n", c.n},
          {"self_intersection", c.self_intersection},
          {"k_dot", c.k_dot},
          {"minus_mz", c.minus_mz},
          {"parametrization", c.parametrization.describe()},
          {"base_cycle", c.base_cycle},
          {"point_multiplicities", c.point_multiplicities},
          {"note", c.note}};
}

Cycle resolve_w(const LoadedCase& c, const Json& spec) {
  if (spec.is_string() && spec.get<std::string>() == "choose") return choose_W(c.sing);
  if (spec.is_number_integer()) {
    const long k = spec.get<long>();
    if (k < 1) throw ValidationError("W multiple must be >= 1");
    return Rational(k) * Cycle::reduced(c.sing.graph);
  }
  if (spec.is_string()) {
    auto it = c.cycles.find(spec.get<std::string>());
    if (it == c.cycles.end()) throw ValidationError("no cycle named '" + spec.get<std::string>() + "'");
    return it->second;
  }
  return cycle_from_json(spec, c.sing.graph);
}

Seed resolve_c0(const LoadedCase& c, const Json& spec, const Cycle& w) {
  if (spec.is_string() && spec.get<std::string>() == "canonical") {
    return seed_C0(c.sing, SeedStrategy::Canonical, w);
  }
  if (spec.is_string() && spec.get<std::string>() == "W") return seed_C0(c.sing, SeedStrategy::W, w);
  if (spec.is_string()) {
    auto it = c.cycles.find(spec.get<std::string>());
    if (it == c.cycles.end()) throw ValidationError("no cycle named '" + spec.get<std::string>() + "'");
    return seed_C0(c.sing, SeedStrategy::Explicit, w, it->second);
  }
  return seed_C0(c.sing, SeedStrategy::Explicit, w, cycle_from_json(spec, c.sing.graph));
}

}  // namespace pgc::tools
