#include "pgcycles/invariants.hpp"

#include "pgcycles/elliptic.hpp"
#include "pgcycles/errors.hpp"

namespace pgc {
namespace {

std::string str(long v) { return std::to_string(v); }

// Goodness for rational singularities: integrally closed and
// represented on the minimal resolution.
TriBool rational_good(const IdealDescriptor& d) {
  if (!d.integral_gap) return TriBool::unknown("integral_gap");
  if (*d.integral_gap > 0) return TriBool::no("not integrally closed");
  Cycle z = d.z;
  while (!is_minimal(*z.graph())) {
    const auto& g = *z.graph();
    std::optional<std::size_t> trivial_curve;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (is_exceptional_curve(g.vertex(i)) && sgn(intersect_vertex(z, i)) == 0) {
        trivial_curve = i;
        break;
      }
    }
    if (!trivial_curve) {
      return TriBool::no("represented only on a non-minimal resolution (Z.C < 0 on a (-1)-curve)");
    }
    try {
      z = pushforward(contract(z.graph(), g.vertex(*trivial_curve).id), z);
    } catch (const ValidationError& e) {
      return TriBool::unknown(std::string("contraction outside simple graphs: ") + e.what());
    }
  }
  return TriBool::yes("integrally closed and represented on the minimal resolution");
}

}  // namespace

void IdealDescriptor::normalize() {
  sing.validate();
  if (z.graph() != sing.graph) throw GraphMismatchError();
  if (!z.is_integral() || !z.is_positive() || !is_anti_nef(z)) {
    throw ValidationError("ideal cycle must be integral, anti-nef and > 0");
  }
  if (!history.empty() && history.back().target != sing.graph) {
    throw ValidationError("blow-up history does not end at the ideal's graph");
  }
  if (h1 && *h1 < 0) throw InconsistentInputError("h1 must be non-negative");
  if (integral_gap && *integral_gap < 0) throw InconsistentInputError("gap must be non-negative");
  if (sing.pg && h1 && *h1 > *sing.pg) {
    throw InconsistentInputError("h1 = " + str(*h1) + " exceeds p_g = " + str(*sing.pg));
  }
  if (sing.rational()) {
    if (h1 && *h1 != 0) throw InconsistentInputError("rational singularity forces h1 = 0");
    h1 = 0;
    generated = true;
  }
  if (generated) no_fixed_component = true;
}

Unknowable<long> colength(const IdealDescriptor& d) {
  if (!d.sing.pg) return Unknowable<long>::unknown("pg");
  if (!d.h1) return Unknowable<long>::unknown("h1");
  const Rational value = -(intersect(d.z, d.z) + k_dot(d.z)) / 2 + *d.sing.pg - *d.h1;
  if (!is_integer(value)) {
    throw InconsistentInputError("colength " + value.get_str() + " is not an integer");
  }
  if (sgn(value) < 0) {
    throw InconsistentInputError("colength " + value.get_str() + " is negative");
  }
  return to_long(value);
}

Unknowable<long> ideal_colength(const IdealDescriptor& d) {
  auto bar = colength(d);
  if (!bar.known()) return bar;
  if (!d.integral_gap) return Unknowable<long>::unknown("integral_gap");
  return *bar + *d.integral_gap;
}

Unknowable<long> multiplicity(const IdealDescriptor& d) {
  if (!d.generated) return Unknowable<long>::unknown("generated");
  return to_long(-intersect(d.z, d.z));
}

Unknowable<long> epsilon(const SingularityData& s, const Cycle& z1, const Cycle& z2,
                         std::optional<long> h1_z1, std::optional<long> h1_z2,
                         std::optional<long> h1_sum) {
  if (z1.graph() != s.graph || z2.graph() != s.graph) throw GraphMismatchError();
  if (!s.pg) return Unknowable<long>::unknown("pg");
  if (!h1_z1) return Unknowable<long>::unknown("h1(Z1)");
  if (!h1_z2) return Unknowable<long>::unknown("h1(Z2)");
  if (!h1_sum) return Unknowable<long>::unknown("h1(Z1+Z2)");
  const long pg = *s.pg;
  const long value = pg - *h1_z1 - *h1_z2 + *h1_sum;
  if (value < 0 || value > pg) {
    throw InconsistentInputError("epsilon = " + str(value) + " outside [0, " + str(pg) + "]");
  }
  if ((*h1_z1 == pg || *h1_z2 == pg) && value != 0) {
    throw InconsistentInputError("epsilon with a p_g-cycle argument must vanish, got " +
                                 str(value));
  }
  return value;
}

MuData mu_data(const IdealDescriptor& d, const Cycle& m, std::optional<long> eps) {
  if (!is_anti_nef(m)) throw ValidationError("maximal ideal cycle must be anti-nef");
  MuData out;
  out.upper = to_long(-intersect(m, d.z)) + 1;
  if (d.sing.pg) out.lower = out.upper - *d.sing.pg;
  if (eps) out.exact_coangle = out.upper - *eps;
  return out;
}

TriBool is_pg_cycle(const IdealDescriptor& d) {
  const auto& pg = d.sing.pg;
  if (pg == 0) return TriBool::yes("rational: every anti-nef cycle is a p_g-cycle");
  if (pg && d.h1 && *d.h1 < *pg) return TriBool::no("h1 < p_g");
  const auto cx = coh_cycle(d.sing);
  if (cx.known()) {
    for (std::size_t i = 0; i < d.z.size(); ++i) {
      if (sgn((*cx)[i]) != 0 && sgn(intersect_vertex(d.z, i)) != 0) {
        return TriBool::no("Z.E != 0 for " + d.z.graph()->vertex(i).id +
                           " in the support of C_X");
      }
    }
  }
  if (!pg) return TriBool::unknown("pg");
  if (d.h1 && *d.h1 == *pg) {
    if (d.generated || d.no_fixed_component) return TriBool::yes("h1 = p_g and generated");
    return TriBool::unknown("generated");
  }
  return TriBool::unknown("line-bundle class on C_X not graph-determined");
}

TriBool good_ideal_test(const IdealDescriptor& d) {
  if (!d.sing.gorenstein) {
    if (d.sing.rational()) return rational_good(d);
    return TriBool::unknown("gorenstein");
  }
  const TriBool pg_cycle = is_pg_cycle(d);
  const Rational kz = k_dot(d.z);
  if (pg_cycle.is_true()) {
    if (sgn(kz) != 0) return TriBool::no("p_g-cycle with K_X Z = " + kz.get_str() + " != 0");
    if (!d.integral_gap) return TriBool::unknown("integral_gap");
    if (*d.integral_gap > 0) {
      return TriBool::no("closure is a p_g-ideal but I is not integrally closed");
    }
    return TriBool::yes("p_g-cycle with K_X Z = 0");
  }
  if (!d.stable) return TriBool::unknown("stability I^2 = QI");
  if (!d.integral_gap) return TriBool::unknown("integral_gap");
  if (!d.generated) return TriBool::unknown("generated");
  const auto ell = ideal_colength(d);
  if (!ell.known()) return TriBool::unknown(ell.reason());
  const long e0 = to_long(-intersect(d.z, d.z));
  std::string rule = "e0 = 2 length(A/I)";
  if (d.sing.minimally_elliptic() && d.h1 == 0) {
    rule = "h1 = 0 and K_X Z = 2(1 + gap)";
  } else if (d.sing.minimally_elliptic() && d.h1 == 1) {
    rule = "h1 = 1, K_X Z = 0 and integrally closed";
  }
  return TriBool::from(e0 == 2 * *ell, rule);
}

TriBool ulrich_screen(const IdealDescriptor& d, const Cycle& m) {
  if (!d.sing.minimally_elliptic()) return TriBool::unknown("minimally elliptic data");
  const GraphPtr base = d.history.empty() ? d.sing.graph : d.history.front().source;
  if (!is_minimal(*base)) return TriBool::unknown("contraction chain to the minimal resolution");
  const long e = degree(base);
  if (e >= 5) return TriBool::no("degree " + str(e) + " >= 5 admits no Ulrich ideals");

  const TriBool pg_cycle = is_pg_cycle(d);
  if (pg_cycle.is_true() && e > 2) {
    return TriBool::no("an Ulrich p_g-ideal forces degree <= 2");
  }
  if (d.integral_gap && *d.integral_gap > 1) return TriBool::no("length closure(I)/I > 1");
  const TriBool good = good_ideal_test(d);
  if (good.is_false()) return TriBool::no("not good: " + good.reason());

  const long minus_mz = to_long(-intersect(m, d.z));
  if (pg_cycle.is_true() && minus_mz + 1 != 3) {
    return TriBool::no("mu = -MZ + 1 = " + str(minus_mz + 1) + " != 3");
  }
  if (d.integral_gap && minus_mz - *d.integral_gap > 3) {
    return TriBool::no("3 = mu >= -MZ - gap fails");
  }
  if (!good.is_true()) return TriBool::unknown(good.reason());

  const bool simple_elliptic = base->size() == 1 && base->vertex(0).genus == 1;
  if (simple_elliptic && d.h1 && d.integral_gap) {
    const auto ell = ideal_colength(d);
    const long zsq = to_long(intersect(d.z, d.z));
    const long kz = to_long(k_dot(d.z));
    for (const auto& c : classify_ulrich(e)) {
      if (ell.known() && c.colength == *ell && c.integral_gap == *d.integral_gap &&
          c.h1 == *d.h1 && c.self_intersection == zsq && c.k_dot == kz &&
          c.minus_mz == minus_mz) {
        return TriBool::yes("matches classified case " + c.label);
      }
    }
    return TriBool::no("no classified Ulrich case has these invariants");
  }
  return TriBool::unknown("Ulrich property not certified by graph data");
}

}  // namespace pgc
