#include "pgcycles/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "pgcycles/errors.hpp"

namespace pgc {
namespace {

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ValidationError(where + " must be an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ValidationError(where + " is out of range");
  }
  return static_cast<int>(v);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError(where + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw IoError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

GraphPtr graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices", "graph");
  if (!vs.is_array()) throw ValidationError("graph: 'vertices' must be an array");
  std::vector<VertexData> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertex " + std::to_string(i);
    VertexData v;
    v.id = as_string(field(vs[i], "id", where), where + " id");
    v.self_intersection =
        as_int(field(vs[i], "self_intersection", where), where + " self_intersection");
    v.genus = vs[i].contains("genus") ? as_int(vs[i].at("genus"), where + " genus") : 0;
    vertices.push_back(std::move(v));
  }
  std::vector<EdgeData> edges;
  if (j.contains("edges")) {
    const Json& es = j.at("edges");
    if (!es.is_array()) throw ValidationError("graph: 'edges' must be an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "edge " + std::to_string(i);
      const Json& e = es[i];
      if (!e.is_array() || e.size() < 2 || e.size() > 3) {
        throw ValidationError(where + " must be [a, b] or [a, b, multiplicity]");
      }
      EdgeData d{as_string(e[0], where), as_string(e[1], where), 1};
      if (e.size() == 3) d.multiplicity = as_int(e[2], where + " multiplicity");
      edges.push_back(std::move(d));
    }
  }
  return DualGraph::create(std::move(vertices), std::move(edges));
}

Json graph_to_json(const DualGraph& g) {
  std::vector<VertexData> vs = g.vertices();
  std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  Json vertices = Json::array();
  for (const auto& v : vs) {
    vertices.push_back({{"id", v.id}, {"self_intersection", v.self_intersection}, {"genus", v.genus}});
  }
  std::vector<EdgeData> es = g.edges();
  for (auto& e : es) {
    if (e.b < e.a) std::swap(e.a, e.b);
  }
  std::sort(es.begin(), es.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  Json edges = Json::array();
  for (const auto& e : es) edges.push_back({e.a, e.b, e.multiplicity});
  return {{"vertices", vertices}, {"edges", edges}};
}

Json rational_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("coefficient must be an integer or a \"p/q\" string, got " + j.dump());
}

Cycle cycle_from_json(const Json& j, const GraphPtr& g) {
  const Json& map = j.is_object() && j.contains("coefficients") ? j.at("coefficients") : j;
  if (!map.is_object()) throw ValidationError("cycle must be an object of coefficients");
  std::map<std::string, Rational> coeffs;
  for (const auto& [id, v] : map.items()) coeffs[id] = rational_from_json(v);
  return Cycle::from_map(g, coeffs);
}

Json cycle_to_json(const Cycle& z) {
  Json coeffs = Json::object();
  const auto& g = *z.graph();
  for (std::size_t i = 0; i < z.size(); ++i) coeffs[g.vertex(i).id] = rational_to_json(z[i]);
  return {{"coefficients", coeffs}};
}

Json blowup_to_json(const BlowupMap& m) {
  Json corr = Json::object();
  for (std::size_t i = 0; i < m.strict_transform.size(); ++i) {
    corr[m.source->vertex(i).id] = m.target->vertex(m.strict_transform[i]).id;
  }
  return {{"center", to_string(m.center)}, {"new_vertex", m.new_vertex}, {"correspondence", corr}};
}

}  // namespace pgc
