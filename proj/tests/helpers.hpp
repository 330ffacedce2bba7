#pragma once

#include <map>
#include <string>
#include <vector>

#include "pgcycles/cycle_algorithms.hpp"
#include "pgcycles/graph.hpp"

namespace pgc::test {

inline GraphPtr make_graph(std::vector<VertexData> v, std::vector<EdgeData> e = {}) {
  return DualGraph::create(std::move(v), std::move(e));
}

/// Central (-1)-curve meeting curves of self-intersection -2, -3, -7.
inline GraphPtr e237() {
  return make_graph({{"E0", -1, 0}, {"E1", -2, 0}, {"E2", -3, 0}, {"E3", -7, 0}},
                    {{"E0", "E1", 1}, {"E0", "E2", 1}, {"E0", "E3", 1}});
}

/// Central (-2)-curve with four (-3)-arms.
inline GraphPtr star4() {
  return make_graph({{"E0", -2, 0}, {"E1", -3, 0}, {"E2", -3, 0}, {"E3", -3, 0}, {"E4", -3, 0}},
                    {{"E0", "E1", 1}, {"E0", "E2", 1}, {"E0", "E3", 1}, {"E0", "E4", 1}});
}

inline GraphPtr single(int self, int genus, const std::string& id = "E") {
  return make_graph({{id, self, genus}});
}

inline GraphPtr chain(const std::vector<int>& selfs) {
  std::vector<VertexData> v;
  std::vector<EdgeData> e;
  for (std::size_t i = 0; i < selfs.size(); ++i) {
    v.push_back({"C" + std::to_string(i), selfs[i], 0});
    if (i > 0) e.push_back({"C" + std::to_string(i - 1), "C" + std::to_string(i), 1});
  }
  return make_graph(v, e);
}

inline Cycle cyc(const GraphPtr& g, const std::map<std::string, Rational>& m) {
  return Cycle::from_map(g, m);
}

inline std::vector<long> longs(const Cycle& z) {
  std::vector<long> out;
  for (const auto& c : z.coefficients()) out.push_back(to_long(c));
  return out;
}

inline Cycle from_longs(const GraphPtr& g, const std::vector<long>& x) {
  std::vector<Rational> c(x.begin(), x.end());
  return Cycle(g, c);
}

}  // namespace pgc::test
