#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgcycles/rational.hpp"

namespace pgc {

struct VertexData {
  std::string id;
  int self_intersection = -1;
  int genus = 0;
};

struct EdgeData {
  std::string a;
  std::string b;
  int multiplicity = 1;
};

/// Dense symmetric integer form (E_i E_j) with the leading principal minors of
/// its negative computed exactly.
class QuadForm {
 public:
  explicit QuadForm(std::vector<std::vector<long>> entries);

  std::size_t size() const { return entries_.size(); }
  long operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  /// Leading principal minors of -A, computed up to and including the first
  /// one that is not positive.
  const std::vector<Rational>& leading_minors() const { return minors_; }
  bool negative_definite() const { return negative_definite_; }

  /// Solves A x = rhs exactly. Throws ValidationError when A is singular.
  std::vector<Rational> solve(std::vector<Rational> rhs) const;

 private:
  std::vector<std::vector<long>> entries_;
  std::vector<Rational> minors_;
  bool negative_definite_ = false;
};

/// Builds the intersection form of unvalidated graph data. Unknown vertex ids
/// in edges throw ValidationError; nothing else is checked.
QuadForm build_quad_form(std::span<const VertexData> vertices, std::span<const EdgeData> edges);

bool is_negative_definite(const QuadForm& form);
bool is_negative_definite(std::span<const VertexData> vertices, std::span<const EdgeData> edges);

class DualGraph;
using GraphPtr = std::shared_ptr<const DualGraph>;

/// Weighted dual graph of a connected exceptional set. Immutable; only
/// constructible through create(), which enforces every invariant.
class DualGraph {
 public:
  /// Throws ValidationError on duplicate ids, negative genus, self-intersection
  /// >= 0, loops, multiple edges, disconnected or non negative definite input.
  static GraphPtr create(std::vector<VertexData> vertices, std::vector<EdgeData> edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexData>& vertices() const { return vertices_; }
  const VertexData& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<EdgeData>& edges() const { return edges_; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws ValidationError for an unknown id.
  std::size_t index(std::string_view id) const;

  long pairing(std::size_t i, std::size_t j) const { return form_(i, j); }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return neighbors_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const { return i != j && form_(i, j) != 0; }
  const QuadForm& form() const { return form_; }

 private:
  DualGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges, QuadForm form);

  std::vector<VertexData> vertices_;
  std::vector<EdgeData> edges_;
  QuadForm form_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Same vertex data and edges keyed by id, irrespective of listing order.
bool same_structure(const DualGraph& a, const DualGraph& b);

/// Rational combination of the vertices of one graph. The graph is held by
/// identity: cycles on distinct graph objects never mix.
class Cycle {
 public:
  explicit Cycle(GraphPtr graph);
  Cycle(GraphPtr graph, std::vector<Rational> coefficients);

  /// The reduced exceptional cycle E = sum of all vertices.
  static Cycle reduced(GraphPtr graph);
  static Cycle vertex(GraphPtr graph, std::size_t i);
  static Cycle vertex(GraphPtr graph, std::string_view id);
  /// Ids absent from the map get coefficient zero; unknown ids throw.
  static Cycle from_map(GraphPtr graph, const std::map<std::string, Rational>& coefficients);

  const GraphPtr& graph() const { return graph_; }
  std::size_t size() const { return coefficients_.size(); }
  const Rational& operator[](std::size_t i) const { return coefficients_[i]; }
  Rational& operator[](std::size_t i) { return coefficients_[i]; }
  const Rational& at(std::string_view id) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  bool is_zero() const;
  bool is_integral() const;
  /// All coefficients >= 0.
  bool is_effective() const;
  /// Effective and nonzero (Z > 0).
  bool is_positive() const;

  Cycle& operator+=(const Cycle& other);
  Cycle& operator-=(const Cycle& other);
  Cycle& operator*=(const Rational& factor);

  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(const Rational& factor, Cycle z) { return z *= factor; }
  friend bool operator==(const Cycle& a, const Cycle& b);

  /// Componentwise a <= b.
  friend bool leq(const Cycle& a, const Cycle& b);

  std::string to_string() const;

 private:
  void require_same_graph(const Cycle& other) const;

  GraphPtr graph_;
  std::vector<Rational> coefficients_;
};

/// Z1 . Z2 under the intersection form. Throws GraphMismatchError.
Rational intersect(const Cycle& a, const Cycle& b);
/// Z . E_i.
Rational intersect_vertex(const Cycle& z, std::size_t i);

bool is_anti_nef(const Cycle& z);
/// Vertices E_i with Z . E_i = 0.
std::set<std::string> perp(const Cycle& z);
std::set<std::string> support(const Cycle& z);

}  // namespace pgc
