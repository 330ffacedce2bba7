#include "pgcycles/cycle_algorithms.hpp"

#include <stdexcept>

#include "pgcycles/blowup.hpp"
#include "pgcycles/errors.hpp"

namespace pgc {

void SingularityData::validate() const {
  if (!graph) throw ValidationError("singularity data has no graph");
  if (pg && *pg < 0) throw ValidationError("p_g must be non-negative");
  if (maximal_ideal_cycle) {
    const Cycle& m = *maximal_ideal_cycle;
    if (m.graph() != graph) throw GraphMismatchError();
    if (!m.is_integral() || !m.is_positive() || !is_anti_nef(m)) {
      throw ValidationError("maximal ideal cycle must be integral, anti-nef and > 0");
    }
  }
  if (cohomological_cycle) {
    const Cycle& c = *cohomological_cycle;
    if (c.graph() != graph) throw GraphMismatchError();
    if (!c.is_integral() || !c.is_positive()) {
      throw ValidationError("cohomological cycle must be integral and > 0");
    }
    if (pg == 0) throw ValidationError("a rational singularity has no cohomological cycle");
  }
}

Unknowable<Cycle> max_ideal_cycle(const SingularityData& s) {
  if (s.maximal_ideal_cycle) return *s.maximal_ideal_cycle;
  if ((s.rational() || s.minimally_elliptic()) && is_minimal(*s.graph)) {
    return fundamental_cycle(s.graph);
  }
  return Unknowable<Cycle>::unknown("maximal_ideal_cycle");
}

Unknowable<Cycle> coh_cycle(const SingularityData& s) {
  if (s.cohomological_cycle) return *s.cohomological_cycle;
  if (s.gorenstein && s.pg && *s.pg > 0 && is_minimal(*s.graph) &&
      is_numerically_gorenstein(s.graph)) {
    return canonical_cycle(s.graph);
  }
  return Unknowable<Cycle>::unknown("cohomological_cycle");
}

Cycle laufer_closure(const Cycle& start, std::span<const Rational> upper, SelectionOrder order) {
  if (!start.is_integral()) throw ValidationError("closure needs an integral starting cycle");
  const std::size_t n = start.size();
  if (upper.size() != n) throw ValidationError("bound vector has wrong length");
  Cycle z = start;
  // Each increment stays below the componentwise minimum of the feasible set,
  // so the loop is bounded by that minimum; the cap only traps bugs.
  constexpr long kMaxSteps = 50'000'000;
  for (long step = 0; step < kMaxSteps; ++step) {
    std::optional<std::size_t> violated;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t j = order == SelectionOrder::LowestIndex ? k : n - 1 - k;
      if (intersect_vertex(z, j) > upper[j]) {
        violated = j;
        break;
      }
    }
    if (!violated) return z;
    z[*violated] += 1;
  }
  throw std::logic_error("laufer_closure did not terminate");
}

Cycle anti_nef_closure(const Cycle& start, SelectionOrder order) {
  if (!start.is_effective()) throw ValidationError("anti-nef closure needs an effective cycle");
  const std::vector<Rational> zeros(start.size());
  return laufer_closure(start, zeros, order);
}

Cycle fundamental_cycle(const GraphPtr& g) { return anti_nef_closure(Cycle::reduced(g)); }

Cycle canonical_cycle(const GraphPtr& g) {
  std::vector<Rational> rhs(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) {
    const auto& v = g->vertex(i);
    rhs[i] = v.self_intersection + 2 - 2 * v.genus;
  }
  return Cycle(g, g->form().solve(std::move(rhs)));
}

Rational k_dot(const Cycle& z) { return -intersect(canonical_cycle(z.graph()), z); }

bool is_numerically_gorenstein(const GraphPtr& g) { return canonical_cycle(g).is_integral(); }

long degree(const GraphPtr& g) {
  if (!is_minimal(*g)) {
    throw ValidationError("degree is defined on the minimal resolution; graph has a (-1)-curve");
  }
  const Cycle zf = fundamental_cycle(g);
  return to_long(-intersect(zf, zf));
}

long degree(const SingularityData& s) { return degree(s.graph); }

}  // namespace pgc
