#include "pgcycles/blowup.hpp"

#include <algorithm>

#include "pgcycles/errors.hpp"

namespace pgc {
namespace {

std::string fresh_id(const DualGraph& g, const std::string& prefix) {
  for (int n = 1;; ++n) {
    std::string id = prefix + ".F" + std::to_string(n);
    if (!g.find(id)) return id;
  }
}

struct ResolvedCenter {
  std::size_t first;
  std::optional<std::size_t> second;
  std::string prefix;
};

ResolvedCenter resolve(const DualGraph& g, const PointSpec& p) {
  return std::visit(
      [&](const auto& c) -> ResolvedCenter {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, GenericOn>) {
          return {g.index(c.vertex), std::nullopt, c.vertex};
        } else if constexpr (std::is_same_v<T, OnBranch>) {
          if (c.branch.empty()) throw ValidationError("branch marker needs an id");
          return {g.index(c.carrier), std::nullopt, c.branch};
        } else {
          const std::size_t a = g.index(c.first);
          const std::size_t b = g.index(c.second);
          if (!g.adjacent(a, b)) {
            throw ValidationError("'" + c.first + "' and '" + c.second + "' do not intersect");
          }
          return {a, b, c.first + "~" + c.second};
        }
      },
      p);
}

}  // namespace

std::string to_string(const PointSpec& p) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, GenericOn>) {
          return c.vertex;
        } else if constexpr (std::is_same_v<T, OnBranch>) {
          return c.branch + "@" + c.carrier;
        } else {
          return c.first + ":" + c.second;
        }
      },
      p);
}

PointSpec parse_point(const std::string& text) {
  if (text.empty()) throw ValidationError("empty blow-up center");
  if (auto at = text.find('@'); at != std::string::npos) {
    if (at == 0 || at + 1 == text.size()) throw ValidationError("malformed center '" + text + "'");
    return OnBranch{text.substr(0, at), text.substr(at + 1)};
  }
  if (auto colon = text.find(':'); colon != std::string::npos) {
    if (colon == 0 || colon + 1 == text.size()) {
      throw ValidationError("malformed center '" + text + "'");
    }
    return Intersection{text.substr(0, colon), text.substr(colon + 1)};
  }
  return GenericOn{text};
}

BlowupMap blow_up(const GraphPtr& g, const PointSpec& center) {
  const ResolvedCenter rc = resolve(*g, center);
  std::vector<VertexData> vertices = g->vertices();
  vertices[rc.first].self_intersection -= 1;
  if (rc.second) vertices[*rc.second].self_intersection -= 1;

  const std::string f = fresh_id(*g, rc.prefix);
  vertices.push_back({f, -1, 0});

  std::vector<EdgeData> edges;
  const std::string& a = g->vertex(rc.first).id;
  for (const auto& e : g->edges()) {
    if (rc.second) {
      const std::string& b = g->vertex(*rc.second).id;
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) continue;
    }
    edges.push_back(e);
  }
  edges.push_back({a, f, 1});
  if (rc.second) edges.push_back({g->vertex(*rc.second).id, f, 1});

  BlowupMap m;
  m.source = g;
  m.target = DualGraph::create(std::move(vertices), std::move(edges));
  m.center = center;
  m.new_vertex = f;
  m.new_index = g->size();
  m.strict_transform.resize(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) m.strict_transform[i] = i;
  return m;
}

Cycle pullback(const BlowupMap& m, const Cycle& z) {
  if (z.graph() != m.source) throw GraphMismatchError();
  Cycle out(m.target);
  for (std::size_t i = 0; i < z.size(); ++i) out[m.strict_transform[i]] = z[i];
  const ResolvedCenter rc = resolve(*m.source, m.center);
  Rational mult = z[rc.first];
  if (rc.second) mult += z[*rc.second];
  out[m.new_index] = mult;
  return out;
}

Cycle pushforward(const BlowupMap& m, const Cycle& z) {
  if (z.graph() != m.target) throw GraphMismatchError();
  Cycle out(m.source);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = z[m.strict_transform[i]];
  return out;
}

Cycle pullback(const std::vector<BlowupMap>& history, const Cycle& z) {
  Cycle out = z;
  for (const auto& m : history) out = pullback(m, out);
  return out;
}

Cycle pushforward(const std::vector<BlowupMap>& history, const Cycle& z) {
  Cycle out = z;
  for (auto it = history.rbegin(); it != history.rend(); ++it) out = pushforward(*it, out);
  return out;
}

bool is_exceptional_curve(const VertexData& v) { return v.genus == 0 && v.self_intersection == -1; }

Contraction contract(const GraphPtr& g, const std::string& vertex) {
  const std::size_t v = g->index(vertex);
  if (!is_exceptional_curve(g->vertex(v))) {
    throw ValidationError("'" + vertex + "' is not a (-1)-curve of genus 0");
  }
  const auto& nbrs = g->neighbors(v);
  if (g->size() == 1) throw ValidationError("contracting '" + vertex + "' leaves no exceptional set");
  if (nbrs.size() > 2) {
    throw ValidationError("'" + vertex + "' meets " + std::to_string(nbrs.size()) +
                          " curves; contraction would create a point outside simple graphs");
  }
  for (std::size_t j : nbrs) {
    if (g->pairing(v, j) != 1) {
      throw ValidationError("'" + vertex + "' meets a neighbour with multiplicity > 1");
    }
  }
  if (nbrs.size() == 2 && g->adjacent(nbrs[0], nbrs[1])) {
    throw ValidationError("contracting '" + vertex + "' would create a double edge");
  }

  std::vector<VertexData> vertices;
  Contraction c;
  c.source = g;
  c.removed = vertex;
  c.correspondence.resize(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) {
    if (i == v) continue;
    VertexData d = g->vertex(i);
    if (std::find(nbrs.begin(), nbrs.end(), i) != nbrs.end()) d.self_intersection += 1;
    c.correspondence[i] = vertices.size();
    vertices.push_back(std::move(d));
  }
  std::vector<EdgeData> edges;
  for (const auto& e : g->edges()) {
    if (e.a != vertex && e.b != vertex) edges.push_back(e);
  }
  if (nbrs.size() == 2) edges.push_back({g->vertex(nbrs[0]).id, g->vertex(nbrs[1]).id, 1});
  try {
    c.target = DualGraph::create(std::move(vertices), std::move(edges));
  } catch (const ValidationError& err) {
    throw ValidationError("contracting '" + vertex + "' gives an invalid graph: " + err.what());
  }
  return c;
}

Cycle pushforward(const Contraction& c, const Cycle& z) {
  if (z.graph() != c.source) throw GraphMismatchError();
  Cycle out(c.target);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (c.correspondence[i]) out[*c.correspondence[i]] = z[i];
  }
  return out;
}

bool is_minimal(const DualGraph& g) {
  return std::none_of(g.vertices().begin(), g.vertices().end(), is_exceptional_curve);
}

bool is_minimal_wrt(const Cycle& z) {
  const auto& g = *z.graph();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (is_exceptional_curve(g.vertex(i)) && sgn(intersect_vertex(z, i)) >= 0) return false;
  }
  return true;
}

}  // namespace pgc
