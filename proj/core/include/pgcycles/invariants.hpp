#pragma once

#include <optional>
#include <vector>

#include "pgcycles/blowup.hpp"
#include "pgcycles/cycle_algorithms.hpp"
#include "pgcycles/tribool.hpp"

namespace pgc {

/// Combinatorial shadow of an m-primary ideal I whose integral closure is
/// represented by the anti-nef cycle z.
struct IdealDescriptor {
  SingularityData sing;
  Cycle z;
  std::optional<long> h1;            // h^1(O_X(-Z)); nullopt = unknown
  std::optional<long> integral_gap;  // length of closure(I)/I; 0 = integrally closed
  bool no_fixed_component = false;
  bool generated = false;
  bool stable = false;  // I^2 = QI supplied as an input fact
  /// Blow-ups leading from the minimal resolution to sing.graph; empty when
  /// sing.graph is itself the model of interest.
  std::vector<BlowupMap> history;

  /// Validates and applies the documented models. Rational data forces h1 = 0
  /// and generation. Throws ValidationError or InconsistentInputError.
  void normalize();
};

/// Colength of the integral closure, -(Z^2 + K_X Z)/2 + p_g - h1.
/// Throws InconsistentInputError when the value is negative or non-integral.
Unknowable<long> colength(const IdealDescriptor& d);

/// Colength of I itself: colength(d) + integral_gap.
Unknowable<long> ideal_colength(const IdealDescriptor& d);

/// -Z^2, valid when O_X(-Z) is generated.
Unknowable<long> multiplicity(const IdealDescriptor& d);

/// p_g - h1(Z1) - h1(Z2) + h1(Z1 + Z2). Throws InconsistentInputError outside
/// [0, p_g], or when a p_g-cycle argument gives a nonzero value.
Unknowable<long> epsilon(const SingularityData& s, const Cycle& z1, const Cycle& z2,
                         std::optional<long> h1_z1, std::optional<long> h1_z2,
                         std::optional<long> h1_sum);

struct MuData {
  long upper = 0;                     // -MZ + 1
  std::optional<long> lower;          // upper - p_g
  std::optional<long> exact_coangle;  // -MZ + 1 - eps(Z, M) = length I / closure(I m)
};

MuData mu_data(const IdealDescriptor& d, const Cycle& m, std::optional<long> eps);

TriBool is_pg_cycle(const IdealDescriptor& d);

/// Goodness from numeric data. Gorenstein: p_g-cycles are good iff K_X Z = 0;
/// otherwise stability plus e_0 = 2 length(A/I). Rational: integrally closed
/// and represented on the minimal resolution.
TriBool good_ideal_test(const IdealDescriptor& d);

/// Screens minimally elliptic data for the Ulrich property.
TriBool ulrich_screen(const IdealDescriptor& d, const Cycle& m);

}  // namespace pgc
