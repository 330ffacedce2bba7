#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pgcycles/blowup.hpp"
#include "pgcycles/graph.hpp"
#include "pgcycles/rational.hpp"
#include "pgcycles/tribool.hpp"

namespace pgc {

/// Element of the divisible group (Q/Z)^2, standing in for Pic^0 of the
/// elliptic curve E0. A point P of E0 is identified with the class P - O;
/// a divisor class of degree d with its difference to d*O.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  GroupElement operator+(const GroupElement& o) const { return {a_ + o.a_, b_ + o.b_}; }
  GroupElement operator-(const GroupElement& o) const { return {a_ - o.a_, b_ - o.b_}; }
  GroupElement operator-() const { return {-a_, -b_}; }
  GroupElement operator*(long n) const { return {a_ * n, b_ * n}; }
  friend GroupElement operator*(long n, const GroupElement& g) { return g * n; }
  bool operator==(const GroupElement& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator<(const GroupElement& o) const {
    return a_ != o.a_ ? a_ < o.a_ : b_ < o.b_;
  }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

namespace elliptic_group {

/// The n^2 elements of E[n].
std::vector<GroupElement> torsion(long n);
/// Every P with m P = target (m^2 of them: the group is divisible).
std::vector<GroupElement> solve(long m, const GroupElement& target);
GroupElement random(std::mt19937_64& rng, long max_denominator = 997);

}  // namespace elliptic_group

long torsion_count(long m, const GroupElement& target);

/// Simple elliptic singularity: minimal resolution is one genus-1 curve E0
/// with E0^2 = -degree; base_class is the class of O_{E0}(-E0).
struct EllipticSingularity {
  long degree = 1;
  GroupElement base_class;

  /// Single vertex "E0", genus 1, self-intersection -degree.
  GraphPtr minimal_graph() const;
};

/// A resolution dominating the minimal one, with the point of E0 under every
/// exceptional curve that meets E0.
class EllipticResolution {
 public:
  explicit EllipticResolution(EllipticSingularity s);

  const EllipticSingularity& singularity() const { return sing_; }
  const GraphPtr& graph() const { return graph_; }
  const std::vector<BlowupMap>& history() const { return history_; }
  const std::map<std::string, GroupElement>& points() const { return points_; }

  /// Blows up the point p of (the strict transform of) E0; returns the new id.
  std::string blow_up_point(const GroupElement& p);
  /// Blow-up at any center; centers on E0 must go through blow_up_point or be
  /// intersections with a registered curve.
  std::string blow_up(const PointSpec& center);

  /// Total transform of E0 from the minimal resolution.
  Cycle pullback_e0() const;

 private:
  EllipticSingularity sing_;
  GraphPtr graph_;
  std::vector<BlowupMap> history_;
  std::map<std::string, GroupElement> points_;
};

struct RestrictedClass {
  long degree = 0;                 // deg O_{E0}(-Z) = -Z . E0'
  Unknowable<GroupElement> cls = GroupElement{};  // sum_P y_P P - a c, see restricted_class
  bool trivial() const { return degree == 0 && cls.known() && cls.value().is_zero(); }
};

/// Degree and group class of O_{E0}(-Z) (class up to sign): with
/// Z = a f^*E0 + Y, cls = sum over curves C meeting E0' of Y_C P_C - a c.
RestrictedClass restricted_class(const EllipticResolution& res, const Cycle& z);

enum class ParamKind { Single, CurveE0, ProjectiveLineMinusPoints, Finite, Family, Unstated };

struct Parametrization {
  ParamKind kind = ParamKind::Single;
  long count = 0;  // excluded points, number of ideals, or family dimension
  std::string describe() const;
};

/// One case of the Ulrich classification on a simple elliptic singularity.
struct UlrichCase {
  std::string label;
  long colength = 0;      // length A/I
  long integral_gap = 0;  // length closure(I)/I
  long h1 = 0;            // h^1(O_X(-Z)) for the closure
  long n = 0;             // coefficient of E0 in the pushforward to the minimal resolution
  long self_intersection = 0;  // Z^2
  long k_dot = 0;              // K_X Z
  long minus_mz = 0;           // -M Z
  Parametrization parametrization;
  std::map<std::string, long> base_cycle;  // on the starting model (X0, or X1 when e = 1)
  std::vector<long> point_multiplicities;  // extra coefficient over each blown-up point
  std::string note;
};

/// Graph-level constraint search for Ulrich ideals of the simple elliptic
/// singularity of degree e. Families and finite counts come from the group model.
std::vector<UlrichCase> classify_ulrich(long e, const GroupElement& base_class = {});

/// Starting model of the search: X0, or for e = 1 the blow-up X1 of the base
/// point of the maximal ideal (registered at the point c).
EllipticResolution starting_model(const EllipticSingularity& s);
/// Maximal ideal cycle on the starting model.
Cycle starting_max_ideal_cycle(const EllipticResolution& start);

struct CaseRealization {
  EllipticResolution resolution;
  Cycle z;
  Cycle m;  // pullback of the maximal ideal cycle
};

/// Concrete resolution and cycle for a case, blowing up the given points of
/// E0 (one per entry of point_multiplicities).
CaseRealization realize(const UlrichCase& c, const EllipticSingularity& s,
                        std::span<const GroupElement> points);

}  // namespace pgc
