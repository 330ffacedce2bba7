#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgcycles/invariants.hpp"
#include "pgcycles/json_io.hpp"

namespace pgc::tools {

/// A graph with analytic data, optionally reached from a minimal graph by
/// blow-ups, and a set of named cycles on the final graph.
struct LoadedCase {
  GraphPtr base;
  std::vector<BlowupMap> history;
  SingularityData sing;
  std::map<std::string, Cycle> cycles;
};

/// Reads "graph", "blowups", "pg", "flags"/"gorenstein"/"rational",
/// "cycles" (plus "cycle" as Z, "M" and "C_X"). Without an explicit M the
/// pullback of Z_f is used when that is the maximal ideal cycle.
LoadedCase load_case(const Json& j);

/// Maximal ideal cycle for the case, if known.
std::optional<Cycle> maximal_ideal_cycle(const LoadedCase& c);

/// Ideal on cycle `name` with "h1", "gap" (integer or "unknown") and "flags".
IdealDescriptor load_ideal(const LoadedCase& c, const Json& ideal, const std::string& name);

std::optional<long> optional_count(const Json& j, const char* key);

Json tribool_json(const TriBool& t);
template <class T>
Json unknowable_json(const Unknowable<T>& u) {
  if (u.known()) return *u;
  return Json{{"unknown", u.reason()}};
}

}  // namespace pgc::tools
