#include "case_io.hpp"

#include <algorithm>

#include "pgcycles/errors.hpp"

namespace pgc::tools {
namespace {

bool has_flag(const Json& j, const char* flag) {
  if (j.contains(flag) && j.at(flag).is_boolean()) return j.at(flag).get<bool>();
  if (!j.contains("flags")) return false;
  const Json& flags = j.at("flags");
  if (!flags.is_array()) throw ValidationError("'flags' must be an array of strings");
  return std::any_of(flags.begin(), flags.end(),
                     [&](const Json& f) { return f.is_string() && f.get<std::string>() == flag; });
}

}  // namespace

std::optional<long> optional_count(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const Json& v = j.at(key);
  if (v.is_string() && v.get<std::string>() == "unknown") return std::nullopt;
  if (!v.is_number_integer()) throw ValidationError(std::string("'") + key + "' must be an integer or \"unknown\"");
  return v.get<long>();
}

LoadedCase load_case(const Json& j) {
  if (!j.is_object() || !j.contains("graph")) throw ValidationError("case needs a 'graph'");
  LoadedCase c;
  c.base = graph_from_json(j.at("graph"));
  GraphPtr g = c.base;
  if (j.contains("blowups")) {
    for (const auto& center : j.at("blowups")) {
      if (!center.is_string()) throw ValidationError("blow-up centers must be strings");
      c.history.push_back(blow_up(g, parse_point(center.get<std::string>())));
      g = c.history.back().target;
    }
  }
  c.sing.graph = g;
  if (auto pg = optional_count(j, "pg")) {
    if (*pg < 0) throw ValidationError("p_g must be non-negative");
    c.sing.pg = static_cast<int>(*pg);
  }
  if (has_flag(j, "rational")) {
    if (c.sing.pg && *c.sing.pg != 0) throw InconsistentInputError("rational but p_g != 0");
    c.sing.pg = 0;
  }
  c.sing.gorenstein = has_flag(j, "gorenstein");

  if (j.contains("cycles")) {
    for (const auto& [name, z] : j.at("cycles").items()) c.cycles.emplace(name, cycle_from_json(z, g));
  }
  if (j.contains("cycle")) c.cycles.insert_or_assign("Z", cycle_from_json(j.at("cycle"), g));
  if (j.contains("M")) c.cycles.insert_or_assign("M", cycle_from_json(j.at("M"), g));
  if (j.contains("C_X")) c.cycles.insert_or_assign("C_X", cycle_from_json(j.at("C_X"), g));

  if (auto it = c.cycles.find("M"); it != c.cycles.end()) c.sing.maximal_ideal_cycle = it->second;
  if (auto it = c.cycles.find("C_X"); it != c.cycles.end()) c.sing.cohomological_cycle = it->second;
  if (!c.sing.maximal_ideal_cycle) {
    if (auto m = maximal_ideal_cycle(c)) c.sing.maximal_ideal_cycle = *m;
  }
  c.sing.validate();
  return c;
}

std::optional<Cycle> maximal_ideal_cycle(const LoadedCase& c) {
  if (c.sing.maximal_ideal_cycle) return c.sing.maximal_ideal_cycle;
  if (c.history.empty()) {
    auto m = max_ideal_cycle(c.sing);
    if (m.known()) return *m;
    return std::nullopt;
  }
  // m O_X = O_X(-Z_f) is invertible on the minimal resolution for rational
  // and for minimally elliptic singularities of degree >= 2; then its total
  // transform is the maximal ideal cycle upstairs.
  if (!is_minimal(*c.base)) return std::nullopt;
  const bool generated = c.sing.rational() || (c.sing.minimally_elliptic() && degree(c.base) >= 2);
  if (!generated) return std::nullopt;
  return pullback(c.history, fundamental_cycle(c.base));
}

IdealDescriptor load_ideal(const LoadedCase& c, const Json& ideal, const std::string& name) {
  auto it = c.cycles.find(name);
  if (it == c.cycles.end()) throw ValidationError("no cycle named '" + name + "'");
  IdealDescriptor d{c.sing, it->second, optional_count(ideal, "h1"), optional_count(ideal, "gap"),
                    has_flag(ideal, "no_fixed_component"), has_flag(ideal, "generated"),
                    has_flag(ideal, "stable"), c.history};
  d.normalize();
  return d;
}

Json tribool_json(const TriBool& t) { return {{"value", t.name()}, {"reason", t.reason()}}; }

}  // namespace pgc::tools
