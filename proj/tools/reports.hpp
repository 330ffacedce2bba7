#pragma once

#include "case_io.hpp"
#include "pgcycles/elliptic.hpp"
#include "pgcycles/pg_construct.hpp"

namespace pgc::tools {

Json invariants_report(const LoadedCase& c, const IdealDescriptor& d);

/// Compact numbers of a construction run plus its certificate.
Json construction_summary(const ConstructionResult& r, const Certificate& cert);
/// Summary plus graphs, cycles and the sweep trace.
Json construction_report(const ConstructionResult& r, const Certificate& cert);

Json ulrich_case_json(const UlrichCase& c);

/// W from a JSON spec: "choose", an integer k (k times the reduced cycle) or a cycle.
Cycle resolve_w(const LoadedCase& c, const Json& spec);
/// C0 from "canonical", "W" or a cycle.
Seed resolve_c0(const LoadedCase& c, const Json& spec, const Cycle& w);

}  // namespace pgc::tools
