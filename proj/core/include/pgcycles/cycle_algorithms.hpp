#pragma once

#include <optional>
#include <span>

#include "pgcycles/graph.hpp"
#include "pgcycles/tribool.hpp"

namespace pgc {

/// A dual graph together with the analytic data it cannot determine.
struct SingularityData {
  GraphPtr graph;
  std::optional<int> pg;                     // geometric genus; nullopt = unknown
  std::optional<Cycle> maximal_ideal_cycle;  // M
  std::optional<Cycle> cohomological_cycle;  // C_X
  bool gorenstein = false;

  /// Throws ValidationError: M must be anti-nef and > 0, C_X integral and > 0,
  /// and a rational singularity has no cohomological cycle.
  void validate() const;

  bool rational() const { return pg == 0; }
  bool minimally_elliptic() const { return gorenstein && pg == 1; }
};

/// M if supplied; Z_f on a minimal graph of a rational or minimally elliptic
/// singularity; otherwise unknown.
Unknowable<Cycle> max_ideal_cycle(const SingularityData& s);

/// C_X if supplied; Z_K for Gorenstein p_g > 0 data on a minimal numerically
/// Gorenstein graph; otherwise unknown.
Unknowable<Cycle> coh_cycle(const SingularityData& s);

enum class SelectionOrder { LowestIndex, HighestIndex };

/// Smallest integral Z >= start with Z.E_j <= upper[j] for all j, by the
/// increment loop: while some E_j violates its bound, add E_j.
Cycle laufer_closure(const Cycle& start, std::span<const Rational> upper,
                     SelectionOrder order = SelectionOrder::LowestIndex);

/// Smallest anti-nef cycle >= start. Throws ValidationError unless start is
/// integral and effective.
Cycle anti_nef_closure(const Cycle& start, SelectionOrder order = SelectionOrder::LowestIndex);

Cycle fundamental_cycle(const GraphPtr& g);

/// The rational Z_K with Z_K.E_i = E_i^2 + 2 - 2 g(E_i).
Cycle canonical_cycle(const GraphPtr& g);

/// K_X . Z, computed as -Z_K . Z.
Rational k_dot(const Cycle& z);

bool is_numerically_gorenstein(const GraphPtr& g);

/// -Z_f^2. Throws ValidationError on a non-minimal graph.
long degree(const GraphPtr& g);
long degree(const SingularityData& s);

}  // namespace pgc
