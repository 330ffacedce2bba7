#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pgcycles/graph.hpp"

namespace pgc {

/// A general point of one curve, away from every other curve.
struct GenericOn {
  std::string vertex;
};

/// The transverse intersection point of two adjacent curves.
struct Intersection {
  std::string first;
  std::string second;
};

/// The point carried by a transverse curve germ (branch) on its current carrier.
/// Geometrically a general point of the carrier; the branch id names the chain.
struct OnBranch {
  std::string branch;
  std::string carrier;
};

using PointSpec = std::variant<GenericOn, Intersection, OnBranch>;

/// "E0", "E1:E2" or "b3@E0".
std::string to_string(const PointSpec& p);
/// Inverse of to_string. Throws ValidationError on malformed text.
PointSpec parse_point(const std::string& text);

/// One monoidal transform. Target vertices: the strict transforms in source
/// order (same ids), then the new (-1)-curve F.
struct BlowupMap {
  GraphPtr source;
  GraphPtr target;
  PointSpec center;
  std::string new_vertex;
  std::size_t new_index = 0;
  std::vector<std::size_t> strict_transform;  // source index -> target index
};

/// Throws ValidationError when the center does not exist on g.
BlowupMap blow_up(const GraphPtr& g, const PointSpec& center);

/// Total transform b^*Z. Coefficient of F is the multiplicity of Z at the center.
Cycle pullback(const BlowupMap& m, const Cycle& z);
/// b_*Z: drops F and renames strict transforms back.
Cycle pushforward(const BlowupMap& m, const Cycle& z);

/// Strict transforms chained through a sequence of blow-ups (front = first).
Cycle pullback(const std::vector<BlowupMap>& history, const Cycle& z);
Cycle pushforward(const std::vector<BlowupMap>& history, const Cycle& z);

struct Contraction {
  GraphPtr source;
  GraphPtr target;
  std::string removed;
  std::vector<std::optional<std::size_t>> correspondence;  // source index -> target index
};

/// Blows down a genus-0 (-1)-curve meeting at most two curves. Throws
/// ValidationError when the vertex is not contractible within simple graphs.
Contraction contract(const GraphPtr& g, const std::string& vertex);

/// Pushforward along a contraction.
Cycle pushforward(const Contraction& c, const Cycle& z);

bool is_exceptional_curve(const VertexData& v);  // P^1 with self-intersection -1

/// No (-1)-curves.
bool is_minimal(const DualGraph& g);

/// Every (-1)-curve C has Z.C < 0.
bool is_minimal_wrt(const Cycle& z);

}  // namespace pgc
