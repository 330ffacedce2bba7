#include "pgcycles/pg_construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "pgcycles/errors.hpp"

namespace pgc {
namespace {

void require_cycle(const Cycle& z, const GraphPtr& g, const char* name) {
  if (z.graph() != g) throw GraphMismatchError();
  if (!z.is_integral() || !z.is_positive()) {
    throw ValidationError(std::string(name) + " must be integral and > 0");
  }
}

long max_coefficient(const Cycle& z) {
  long best = 0;
  for (const auto& c : z.coefficients()) best = std::max(best, to_long(c));
  return best;
}

}  // namespace

std::vector<long> w_bounds(const GraphPtr& g) {
  std::vector<long> out(g->size());
  for (std::size_t j = 0; j < g->size(); ++j) {
    const auto& v = g->vertex(j);
    const long k = -v.self_intersection + 2 * v.genus - 2;  // K_X E_j
    long neighbour = 0;
    for (std::size_t i : g->neighbors(j)) neighbour = std::max(neighbour, g->pairing(i, j));
    const long with_neighbour = g->neighbors(j).empty() ? k : k + neighbour;
    out[j] = std::max({with_neighbour, k, 2L * v.genus});
  }
  return out;
}

Cycle choose_W(const SingularityData& s) {
  s.validate();
  const auto bounds = w_bounds(s.graph);
  std::vector<Rational> upper(bounds.size());
  for (std::size_t j = 0; j < bounds.size(); ++j) upper[j] = -bounds[j];
  return laufer_closure(Cycle::reduced(s.graph), upper);
}

Seed seed_C0(const SingularityData& s, SeedStrategy strategy, const Cycle& w,
             const std::optional<Cycle>& explicit_cycle) {
  if (s.rational() && strategy != SeedStrategy::Explicit) {
    return {w, SeedStrategy::W, "rational: every anti-nef cycle is already a p_g-cycle"};
  }
  switch (strategy) {
    case SeedStrategy::Canonical: {
      Cycle zk = canonical_cycle(s.graph);
      if (!zk.is_integral() || !zk.is_positive()) {
        throw ValidationError("Z_K = " + zk.to_string() + " is not an integral cycle > 0");
      }
      return {std::move(zk), SeedStrategy::Canonical, "C0 = Z_K"};
    }
    case SeedStrategy::W:
      require_cycle(w, s.graph, "W");
      return {w, SeedStrategy::W, "C0 = W"};
    case SeedStrategy::Explicit:
      if (!explicit_cycle) throw ValidationError("explicit C0 strategy needs a cycle");
      require_cycle(*explicit_cycle, s.graph, "C0");
      return {*explicit_cycle, SeedStrategy::Explicit,
              "C0 supplied; h^1(O_C0) = p_g is assumed, not checked"};
  }
  throw std::logic_error("unknown seed strategy");
}

ConstructionResult run_construction(const SingularityData& s, const Cycle& w, const Cycle& c0,
                                    std::optional<unsigned> shuffle_seed) {
  s.validate();
  require_cycle(w, s.graph, "W");
  require_cycle(c0, s.graph, "C0");
  if (!is_anti_nef(w)) throw ValidationError("W must be anti-nef");

  ConstructionResult r(w, c0);
  r.source = s.graph;
  r.c0_is_w = c0 == w;
  const Cycle zk = canonical_cycle(s.graph);
  r.c0_is_canonical = zk.is_integral() && c0 == zk;

  GraphPtr g = s.graph;
  Cycle c = c0;
  Cycle z = w;

  std::size_t serial = 0;
  for (std::size_t j = 0; j < g->size(); ++j) {
    const long count = to_long(-intersect_vertex(w, j));
    for (long t = 0; t < count; ++t) {
      r.branches.push_back({"h" + std::to_string(++serial), g->vertex(j).id, {}});
    }
  }

  // With p_g = 0 the zero cycle already has h^1 = p_g, so nothing is blown up.
  if (s.rational()) {
    c = Cycle(g);
  } else {
    const long bound = max_coefficient(c0);
    std::mt19937 rng(shuffle_seed.value_or(0));
    for (;;) {
      const auto supp = support(c);
      std::vector<std::size_t> active;
      for (std::size_t b = 0; b < r.branches.size(); ++b) {
        if (supp.count(r.branches[b].carrier)) active.push_back(b);
      }
      if (active.empty()) break;
      if (static_cast<long>(r.steps) >= bound) {
        throw std::logic_error("construction exceeded the step bound " + std::to_string(bound));
      }
      if (shuffle_seed) std::shuffle(active.begin(), active.end(), rng);

      SweepRecord sweep{r.steps, {}, c};
      for (std::size_t b : active) {
        Branch& br = r.branches[b];
        const PointSpec center = OnBranch{br.id, br.carrier};
        BlowupMap m = blow_up(g, center);
        c = pullback(m, c);
        z = pullback(m, z);
        const Cycle f = Cycle::vertex(m.target, m.new_index);
        c -= f;
        z += f;
        sweep.centers.push_back(to_string(center));
        br.chain.push_back(m.new_vertex);
        br.carrier = m.new_vertex;
        g = m.target;
        r.history.push_back(std::move(m));
      }
      r.branches_per_sweep.push_back(active.size());
      sweep.c_after = c;
      r.sweeps.push_back(std::move(sweep));
      ++r.steps;
    }
  }

  r.y = g;
  r.z = z;
  r.c_final = c;
  r.kz = k_dot(z);
  r.zsq = intersect(z, z);
  return r;
}

Certificate certify_pg_cycle(const ConstructionResult& r, const SingularityData& s) {
  Certificate cert;
  const Cycle& z = r.z;
  cert.integral = z.is_integral();
  if (!cert.integral) cert.violations.push_back("integral");
  cert.anti_nef = is_anti_nef(z);
  if (!cert.anti_nef) cert.violations.push_back("anti_nef");

  cert.trivial_on_c = true;
  for (std::size_t i = 0; i < r.c_final.size(); ++i) {
    if (sgn(r.c_final[i]) != 0 && sgn(intersect_vertex(z, i)) != 0) cert.trivial_on_c = false;
  }
  if (!cert.trivial_on_c) cert.violations.push_back("trivial_on_C");

  cert.step_bound = static_cast<long>(r.steps) <= max_coefficient(r.c0);
  if (!cert.step_bound) cert.violations.push_back("step_bound");

  const Rational kz = k_dot(z);
  if (r.c0_is_canonical) {
    cert.kz_zero = sgn(kz) == 0;
    if (!*cert.kz_zero) cert.violations.push_back("kz_zero");
    cert.c_is_canonical = r.c_final == canonical_cycle(r.y);
    if (!*cert.c_is_canonical) cert.violations.push_back("c_is_canonical");
  }
  cert.conditional = !r.c0_is_canonical && !r.c0_is_w && !s.rational();
  cert.good = s.gorenstein && sgn(kz) == 0 && cert.violations.empty();
  if (cert.integral) cert.multiplicity = to_long(-intersect(z, z));
  return cert;
}

}  // namespace pgc
