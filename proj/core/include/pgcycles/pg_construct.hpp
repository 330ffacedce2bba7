#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgcycles/blowup.hpp"
#include "pgcycles/cycle_algorithms.hpp"

namespace pgc {

/// A transverse branch of the general hyperplane section H, tracked by the
/// curve its point currently lies on.
struct Branch {
  std::string id;
  std::string carrier;
  /// Exceptional curves created over this branch, in order; the m-th one
  /// receives ladder contribution m in b^*H - H'.
  std::vector<std::string> chain;
};

/// Per-vertex lower bounds b_j for -W E_j.
std::vector<long> w_bounds(const GraphPtr& g);

/// Componentwise-minimal integral anti-nef W >= E with -W E_j >= w_bounds[j].
Cycle choose_W(const SingularityData& s);

enum class SeedStrategy { Canonical, W, Explicit };

struct Seed {
  Cycle c0;
  SeedStrategy used;
  std::string note;
};

/// Canonical: Z_K, rejected unless integral and > 0. W: the given W.
/// Explicit: the supplied cycle, which must be integral and > 0.
Seed seed_C0(const SingularityData& s, SeedStrategy strategy, const Cycle& w,
             const std::optional<Cycle>& explicit_cycle = std::nullopt);

struct SweepRecord {
  std::size_t step = 0;  // i, blowing up B_i
  std::vector<std::string> centers;
  Cycle c_after;  // C_{i+1}
};

struct ConstructionResult {
  ConstructionResult(Cycle w_in, Cycle c0_in)
      : w(w_in), c0(c0_in), z(std::move(w_in)), c_final(std::move(c0_in)) {}

  GraphPtr source;
  GraphPtr y;
  Cycle w;
  Cycle c0;
  Cycle z;
  Cycle c_final;
  std::size_t steps = 0;
  Rational kz;
  Rational zsq;
  std::vector<BlowupMap> history;
  std::vector<Branch> branches;
  std::vector<std::size_t> branches_per_sweep;  // |B_i|
  std::vector<SweepRecord> sweeps;
  bool c0_is_canonical = false;
  bool c0_is_w = false;
};

/// Runs the branch blow-up loop. Branches are processed in id order within a
/// sweep; `shuffle_seed` permutes that order (the result must not change).
/// Throws ValidationError on bad W or C0, std::logic_error if the step bound
/// is exceeded.
ConstructionResult run_construction(const SingularityData& s, const Cycle& w, const Cycle& c0,
                                    std::optional<unsigned> shuffle_seed = std::nullopt);

struct Certificate {
  bool anti_nef = false;
  bool integral = false;
  bool trivial_on_c = false;  // Z.E_i = 0 on supp(C_n)
  bool step_bound = false;    // n <= max coefficient of C0
  std::optional<bool> kz_zero;         // only when C0 = Z_K
  std::optional<bool> c_is_canonical;  // C_n == Z_K(Y), only when C0 = Z_K
  bool good = false;                   // Gorenstein input and K Z = 0
  bool conditional = false;  // C0 neither W nor Z_K: h^1(O_{C0}) = p_g not checked
  std::vector<std::string> violations;
  long multiplicity = 0;

  bool passed() const { return violations.empty(); }
};

/// Checks the numeric content of the construction on (possibly altered) output.
Certificate certify_pg_cycle(const ConstructionResult& r, const SingularityData& s);

}  // namespace pgc
