#include "pgcycles/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <utility>

#include "pgcycles/errors.hpp"

namespace pgc {

QuadForm::QuadForm(std::vector<std::vector<long>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  // LDL^T of -A without pivoting: the k-th leading minor is the product of the
  // first k pivots, so the form is definite iff every pivot is positive.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = -entries_[i][j];
  Rational minor = 1;
  negative_definite_ = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = m[k][k];
    minor *= pivot;
    minors_.push_back(minor);
    if (sgn(pivot) <= 0) {
      negative_definite_ = false;
      break;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m[i][k]) == 0) continue;
      const Rational factor = m[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
}

std::vector<Rational> QuadForm::solve(std::vector<Rational> rhs) const {
  const std::size_t n = size();
  if (rhs.size() != n) throw ValidationError("right-hand side has wrong length");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = entries_[i][j];
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    if (p == n) throw ValidationError("intersection form is singular");
    std::swap(m[p], m[k]);
    std::swap(rhs[p], rhs[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m[i][k]) == 0) continue;
      const Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
      rhs[i] -= factor * rhs[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= m[k][j] * x[j];
    x[k] = acc / m[k][k];
  }
  return x;
}

QuadForm build_quad_form(std::span<const VertexData> vertices, std::span<const EdgeData> edges) {
  const std::size_t n = vertices.size();
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(vertices[i].id, i);
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = vertices[i].self_intersection;
  for (const auto& e : edges) {
    auto ia = index.find(e.a);
    auto ib = index.find(e.b);
    if (ia == index.end() || ib == index.end()) {
      throw ValidationError("edge references unknown vertex '" +
                            (ia == index.end() ? e.a : e.b) + "'");
    }
    if (ia->second == ib->second) continue;  // loops are rejected by DualGraph::create
    a[ia->second][ib->second] += e.multiplicity;
    a[ib->second][ia->second] += e.multiplicity;
  }
  return QuadForm(std::move(a));
}

bool is_negative_definite(const QuadForm& form) { return form.negative_definite(); }

bool is_negative_definite(std::span<const VertexData> vertices, std::span<const EdgeData> edges) {
  return build_quad_form(vertices, edges).negative_definite();
}

GraphPtr DualGraph::create(std::vector<VertexData> vertices, std::vector<EdgeData> edges) {
  if (vertices.empty()) throw ValidationError("graph has no vertices");
  std::set<std::string, std::less<>> ids;
  for (const auto& v : vertices) {
    if (v.id.empty()) throw ValidationError("empty vertex id");
    if (!ids.insert(v.id).second) throw ValidationError("duplicate vertex id '" + v.id + "'");
    if (v.genus < 0) throw ValidationError("vertex '" + v.id + "' has negative genus");
    if (v.self_intersection > -1) {
      throw ValidationError("vertex '" + v.id + "' has self-intersection " +
                            std::to_string(v.self_intersection) + " > -1");
    }
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : edges) {
    if (!ids.contains(e.a) || !ids.contains(e.b)) {
      throw ValidationError("edge references unknown vertex '" + (ids.contains(e.a) ? e.b : e.a) +
                            "'");
    }
    if (e.a == e.b) throw ValidationError("loop at vertex '" + e.a + "' is not representable");
    if (e.multiplicity < 1) {
      throw ValidationError("edge " + e.a + "-" + e.b + " has non-positive multiplicity");
    }
    if (e.multiplicity > 1) {
      throw ValidationError("edge " + e.a + "-" + e.b + " has multiplicity " +
                            std::to_string(e.multiplicity) +
                            "; only simple normal crossing graphs are supported");
    }
    auto key = std::minmax(e.a, e.b);
    if (!seen.emplace(key.first, key.second).second) {
      throw ValidationError("repeated edge " + e.a + "-" + e.b +
                            "; only simple normal crossing graphs are supported");
    }
  }
  QuadForm form = build_quad_form(vertices, edges);
  GraphPtr g(new DualGraph(std::move(vertices), std::move(edges), std::move(form)));

  std::vector<bool> reached(g->size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  reached[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j : g->neighbors(i)) {
      if (!reached[j]) {
        reached[j] = true;
        ++count;
        todo.push(j);
      }
    }
  }
  if (count != g->size()) throw ValidationError("graph is disconnected");
  if (!g->form().negative_definite()) {
    throw ValidationError("intersection matrix is not negative definite");
  }
  return g;
}

DualGraph::DualGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges, QuadForm form)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), form_(std::move(form)) {
  neighbors_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    index_.emplace(vertices_[i].id, i);
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (i != j && form_(i, j) != 0) neighbors_[i].push_back(j);
    }
  }
}

std::optional<std::size_t> DualGraph::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DualGraph::index(std::string_view id) const {
  auto i = find(id);
  if (!i) throw ValidationError("unknown vertex '" + std::string(id) + "'");
  return *i;
}

bool same_structure(const DualGraph& a, const DualGraph& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a.vertices()) {
    auto j = b.find(v.id);
    if (!j) return false;
    const auto& w = b.vertex(*j);
    if (w.self_intersection != v.self_intersection || w.genus != v.genus) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a.pairing(i, k) != b.pairing(b.index(a.vertex(i).id), b.index(a.vertex(k).id))) {
        return false;
      }
    }
  }
  return true;
}

Cycle::Cycle(GraphPtr graph) : graph_(std::move(graph)), coefficients_(graph_->size()) {}

Cycle::Cycle(GraphPtr graph, std::vector<Rational> coefficients)
    : graph_(std::move(graph)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != graph_->size()) {
    throw ValidationError("cycle has " + std::to_string(coefficients_.size()) +
                          " coefficients for a graph with " + std::to_string(graph_->size()) +
                          " vertices");
  }
}

Cycle Cycle::reduced(GraphPtr graph) {
  const std::size_t n = graph->size();
  return Cycle(std::move(graph), std::vector<Rational>(n, Rational(1)));
}

Cycle Cycle::vertex(GraphPtr graph, std::size_t i) {
  Cycle z(std::move(graph));
  z.coefficients_.at(i) = 1;
  return z;
}

Cycle Cycle::vertex(GraphPtr graph, std::string_view id) {
  const std::size_t i = graph->index(id);
  return vertex(std::move(graph), i);
}

Cycle Cycle::from_map(GraphPtr graph, const std::map<std::string, Rational>& coefficients) {
  Cycle z(graph);
  for (const auto& [id, value] : coefficients) z.coefficients_[graph->index(id)] = value;
  return z;
}

const Rational& Cycle::at(std::string_view id) const { return coefficients_[graph_->index(id)]; }

bool Cycle::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

bool Cycle::is_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return is_integer(c); });
}

bool Cycle::is_effective() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return sgn(c) >= 0; });
}

bool Cycle::is_positive() const { return is_effective() && !is_zero(); }

void Cycle::require_same_graph(const Cycle& other) const {
  if (graph_ != other.graph_) throw GraphMismatchError();
}

Cycle& Cycle::operator+=(const Cycle& other) {
  require_same_graph(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& other) {
  require_same_graph(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

Cycle& Cycle::operator*=(const Rational& factor) {
  for (auto& c : coefficients_) c *= factor;
  return *this;
}

bool operator==(const Cycle& a, const Cycle& b) {
  return a.graph_ == b.graph_ && a.coefficients_ == b.coefficients_;
}

bool leq(const Cycle& a, const Cycle& b) {
  a.require_same_graph(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string Cycle::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (sgn(coefficients_[i]) == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (coefficients_[i] != 1) out << coefficients_[i].get_str() << "*";
    out << graph_->vertex(i).id;
  }
  if (first) out << "0";
  return out.str();
}

Rational intersect_vertex(const Cycle& z, std::size_t i) {
  const auto& g = *z.graph();
  Rational acc = z[i] * g.pairing(i, i);
  for (std::size_t j : g.neighbors(i)) acc += z[j] * g.pairing(i, j);
  return acc;
}

Rational intersect(const Cycle& a, const Cycle& b) {
  if (a.graph() != b.graph()) throw GraphMismatchError();
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    acc += a[i] * intersect_vertex(b, i);
  }
  return acc;
}

bool is_anti_nef(const Cycle& z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (sgn(intersect_vertex(z, i)) > 0) return false;
  }
  return true;
}

std::set<std::string> perp(const Cycle& z) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (sgn(intersect_vertex(z, i)) == 0) out.insert(z.graph()->vertex(i).id);
  }
  return out;
}

std::set<std::string> support(const Cycle& z) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (sgn(z[i]) != 0) out.insert(z.graph()->vertex(i).id);
  }
  return out;
}

}  // namespace pgc
