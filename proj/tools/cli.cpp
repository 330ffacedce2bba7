#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <random>

#include "corpus.hpp"
#include "pgcycles/errors.hpp"
#include "reports.hpp"

#ifndef PGCYCLES_CORPUS_DIR
#define PGCYCLES_CORPUS_DIR "corpus"
#endif

namespace pgc::tools {
namespace {

struct Output {
  bool json_only = false;
  bool table_only = false;
};

struct AnalyticFlags {
  std::string graph;
  std::vector<std::string> at;
  std::string pg;
  bool gorenstein = false;
  bool rational = false;
};

void add_analytic(CLI::App* cmd, AnalyticFlags& a) {
  cmd->add_option("--graph", a.graph, "graph JSON file");
  cmd->add_option("--at", a.at, "blow-up center applied to the graph (repeatable)");
  cmd->add_option("--pg", a.pg, "geometric genus, or 'unknown'");
  cmd->add_flag("--gorenstein", a.gorenstein, "the singularity is Gorenstein");
  cmd->add_flag("--rational", a.rational, "the singularity is rational (p_g = 0)");
}

void add_output(CLI::App* cmd, Output& o) {
  cmd->add_flag("--json", o.json_only, "print JSON only");
  cmd->add_flag("--table", o.table_only, "print the table only");
}

Json count_json(const std::string& text, const char* name) {
  if (text.empty() || text == "unknown") return "unknown";
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError(std::string("--") + name + " expects an integer or 'unknown', got '" + text + "'");
}

// Merges command-line analytic data into a case description.
Json case_json(Json j, const AnalyticFlags& a) {
  if (!a.graph.empty()) j["graph"] = read_json_file(a.graph);
  if (!j.contains("graph")) throw ValidationError("a graph is required (--graph or descriptor)");
  if (!a.at.empty()) j["blowups"] = a.at;
  if (!a.pg.empty()) j["pg"] = count_json(a.pg, "pg");
  if (a.gorenstein) j["gorenstein"] = true;
  if (a.rational) j["rational"] = true;
  return j;
}

void emit(std::ostream& out, const Json& j, const Output& o) {
  if (!o.table_only) out << j.dump(2) << "\n";
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void table(std::ostream& err, const Output& o, const std::vector<std::pair<std::string, Json>>& rows) {
  if (o.json_only) return;
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) err << std::left << std::setw(static_cast<int>(width) + 2) << k << cell(v) << "\n";
}

std::string cycle_text(const Cycle& z) { return z.to_string(); }

int cmd_validate(const AnalyticFlags& a, const Output& o, std::ostream& out, std::ostream& err) {
  const LoadedCase c = load_case(case_json({}, a));
  const GraphPtr& g = c.sing.graph;
  Json minors = Json::array();
  for (const auto& m : g->form().leading_minors()) minors.push_back(rational_to_json(m));
  Json j = {{"valid", true},
            {"graph", graph_to_json(*g)},
            {"vertices", g->size()},
            {"negative_definite", g->form().negative_definite()},
            {"leading_minors", minors},
            {"minimal", is_minimal(*g)},
            {"numerically_gorenstein", is_numerically_gorenstein(g)}};
  emit(out, j, o);
  table(err, o, {{"vertices", g->size()}, {"negative definite", true}, {"minimal", is_minimal(*g)},
                 {"numerically Gorenstein", is_numerically_gorenstein(g)}});
  return kOk;
}

int cmd_cycle(bool canonical, const AnalyticFlags& a, const Output& o, std::ostream& out,
              std::ostream& err) {
  const LoadedCase c = load_case(case_json({}, a));
  const GraphPtr& g = c.sing.graph;
  const Cycle z = canonical ? canonical_cycle(g) : fundamental_cycle(g);
  emit(out, cycle_to_json(z), o);
  table(err, o, {{canonical ? "Z_K" : "Z_f", cycle_text(z)},
                 {"Z^2", rational_to_json(intersect(z, z))},
                 {"K Z", rational_to_json(k_dot(z))}});
  return kOk;
}

int cmd_blowup(const AnalyticFlags& a, const std::string& cycle_file, const Output& o,
               std::ostream& out, std::ostream& err) {
  if (a.at.empty()) throw ValidationError("blowup needs at least one --at center");
  AnalyticFlags base = a;
  base.at.clear();
  const LoadedCase c = load_case(case_json({}, base));
  GraphPtr g = c.sing.graph;
  std::optional<Cycle> z;
  if (!cycle_file.empty()) z = cycle_from_json(read_json_file(cycle_file), g);
  Json maps = Json::array();
  std::vector<std::pair<std::string, Json>> rows;
  for (const auto& text : a.at) {
    const BlowupMap m = blow_up(g, parse_point(text));
    maps.push_back(blowup_to_json(m));
    rows.emplace_back("blow up " + text, "new curve " + m.new_vertex);
    if (z) z = pullback(m, *z);
    g = m.target;
  }
  Json j = {{"graph", graph_to_json(*g)}, {"maps", maps}};
  if (z) {
    j["pullback"] = cycle_to_json(*z);
    rows.emplace_back("pullback", cycle_text(*z));
  }
  emit(out, j, o);
  table(err, o, rows);
  return kOk;
}

int cmd_invariants(const AnalyticFlags& a, const std::string& descriptor, const std::string& cycle_file,
                   const std::string& m_file, const std::string& h1, const std::string& gap,
                   const std::vector<std::string>& flags, const Output& o, std::ostream& out,
                   std::ostream& err) {
  Json j = descriptor.empty() ? Json::object() : read_json_file(descriptor);
  j = case_json(std::move(j), a);
  if (!cycle_file.empty()) j["cycle"] = read_json_file(cycle_file);
  if (!m_file.empty()) j["M"] = read_json_file(m_file);
  if (!j.contains("cycle") && !(j.contains("cycles") && j["cycles"].contains("Z"))) {
    throw ValidationError("an ideal cycle is required (--cycle or descriptor 'cycle')");
  }
  if (!h1.empty()) j["h1"] = count_json(h1, "h1");
  if (!gap.empty()) j["gap"] = count_json(gap, "gap");
  if (!flags.empty()) {
    Json f = j.value("flags", Json::array());
    for (const auto& x : flags) f.push_back(x);
    j["flags"] = f;
  }
  const LoadedCase c = load_case(j);
  const IdealDescriptor d = load_ideal(c, j, "Z");
  const Json report = invariants_report(c, d);
  emit(out, report, o);
  std::vector<std::pair<std::string, Json>> rows;
  for (const char* k : {"self_intersection", "k_dot", "colength", "ideal_colength", "multiplicity", "mu"}) {
    rows.emplace_back(k, report.at(k));
  }
  for (const char* k : {"is_pg_cycle", "good", "ulrich"}) {
    const Json& t = report.at(k);
    rows.emplace_back(k, t.at("value").get<std::string>() + "  " + t.at("reason").get<std::string>());
  }
  table(err, o, rows);
  return kOk;
}

int cmd_construct(const AnalyticFlags& a, const std::string& w_spec, const std::string& c0_spec,
                  std::optional<unsigned> seed, const Output& o, std::ostream& out, std::ostream& err) {
  const LoadedCase c = load_case(case_json({}, a));
  Json w_json = "choose";
  if (!w_spec.empty() && w_spec != "choose") {
    try {
      std::size_t used = 0;
      const long k = std::stol(w_spec, &used);
      w_json = used == w_spec.size() ? Json(k) : read_json_file(w_spec);
    } catch (const std::invalid_argument&) {
      w_json = read_json_file(w_spec);
    }
  }
  const Cycle w = resolve_w(c, w_json);
  Json c0_json = c0_spec;
  if (c0_spec != "canonical" && c0_spec != "W") c0_json = read_json_file(c0_spec);
  const Seed s = resolve_c0(c, c0_json, w);
  const ConstructionResult r = run_construction(c.sing, w, s.c0, seed);
  const Certificate cert = certify_pg_cycle(r, c.sing);
  Json report = construction_report(r, cert);
  report["seed_note"] = s.note;
  emit(out, report, o);
  if (!o.json_only) {
    err << "W = " << cycle_text(w) << ", C0 = " << cycle_text(s.c0) << " (" << s.note << ")\n";
    for (const auto& sw : r.sweeps) {
      err << "sweep " << sw.step << ": " << sw.centers.size() << " blow-ups, C" << sw.step + 1 << " = "
          << cycle_text(sw.c_after) << "\n";
    }
    err << "n = " << r.steps << ", -Z^2 = " << Rational(-r.zsq).get_str() << ", K Z = " << r.kz.get_str()
        << ", certificate " << (cert.passed() ? "passed" : "FAILED") << (cert.good ? ", good" : "")
        << (cert.conditional ? " (conditional)" : "") << "\n";
    for (const auto& v : cert.violations) err << "  violated: " << v << "\n";
  }
  return kOk;
}

// Re-runs the classification for random base classes and realizes every case
// at random points; counts and invariants must not move.
Json group_samples(long e, long samples, unsigned seed, const std::vector<UlrichCase>& cases) {
  std::mt19937_64 rng(seed);
  bool consistent = true;
  for (long i = 0; i < samples; ++i) {
    const GroupElement c = elliptic_group::random(rng);
    const auto again = classify_ulrich(e, c);
    if (again.size() != cases.size()) consistent = false;
    for (std::size_t k = 0; consistent && k < cases.size(); ++k) {
      consistent = again[k].colength == cases[k].colength &&
                   again[k].parametrization.describe() == cases[k].parametrization.describe();
      const EllipticSingularity s{e, c};
      const auto base = starting_model(s).points();
      std::vector<GroupElement> pts;
      while (pts.size() < cases[k].point_multiplicities.size()) {
        const GroupElement p = elliptic_group::random(rng);
        bool clash = false;
        for (const auto& [id, q] : base) clash = clash || q == p;
        for (const auto& q : pts) clash = clash || q == p;
        if (!clash) pts.push_back(p);
      }
      const CaseRealization r = realize(cases[k], s, pts);
      consistent = consistent && to_long(intersect(r.z, r.z)) == cases[k].self_intersection &&
                   to_long(k_dot(r.z)) == cases[k].k_dot &&
                   to_long(-intersect(r.m, r.z)) == cases[k].minus_mz;
    }
  }
  return {{"samples", samples}, {"seed", seed}, {"consistent", consistent}};
}

int cmd_classify(long e, long samples, unsigned seed, const Output& o, std::ostream& out,
                 std::ostream& err) {
  const auto cases = classify_ulrich(e);
  Json list = Json::array();
  for (const auto& c : cases) list.push_back(ulrich_case_json(c));
  Json j = {{"degree", e}, {"cases", list}};
  if (samples > 0) j["group_samples"] = group_samples(e, samples, seed, cases);
  emit(out, j, o);
  if (!o.json_only) {
    err << "degree " << e << ": " << cases.size() << " case(s)\n";
    if (!cases.empty()) {
      err << std::left << std::setw(6) << "case" << std::setw(10) << "colength" << std::setw(6) << "gap"
          << std::setw(5) << "h1" << std::setw(5) << "n" << std::setw(6) << "Z^2" << std::setw(5) << "KZ"
          << "parametrization\n";
    }
    for (const auto& c : cases) {
      err << std::left << std::setw(6) << c.label << std::setw(10) << c.colength << std::setw(6)
          << c.integral_gap << std::setw(5) << c.h1 << std::setw(5) << c.n << std::setw(6)
          << c.self_intersection << std::setw(5) << c.k_dot << c.parametrization.describe() << "\n";
    }
    if (j.contains("group_samples")) {
      err << "group samples: " << samples << ", consistent = " << std::boolalpha
          << j["group_samples"]["consistent"].get<bool>() << "\n";
    }
  }
  return kOk;
}

int cmd_corpus(const std::string& dir, const Output& o, std::ostream& out, std::ostream& err) {
  const auto outcomes = run_corpus(dir);
  Json list = Json::array();
  long failed = 0;
  for (const auto& c : outcomes) {
    failed += c.passed ? 0 : 1;
    Json item = {{"fixture", c.fixture}, {"check", c.check}, {"tag", c.tag}, {"passed", c.passed}};
    if (!c.passed) {
      item["expected"] = c.expected;
      item["actual"] = c.actual;
      if (!c.error.empty()) item["error"] = c.error;
    }
    list.push_back(item);
    if (!o.json_only) {
      err << (c.passed ? "ok    " : "FAIL  ") << c.fixture << ": " << c.check << " [" << c.tag << "]";
      if (!c.passed) err << "  expected " << c.expected.dump() << " got " << c.actual.dump() << " " << c.error;
      err << "\n";
    }
  }
  emit(out, {{"checks", list}, {"total", outcomes.size()}, {"failed", failed}}, o);
  if (!o.json_only) err << outcomes.size() - failed << "/" << outcomes.size() << " checks passed\n";
  return failed == 0 ? kOk : kValidation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cycle computations on resolution graphs of surface singularities"};
  app.require_subcommand(1);
  Output o;
  AnalyticFlags a;

  auto* validate = app.add_subcommand("validate", "check a graph and report its lattice data");
  add_analytic(validate, a);
  add_output(validate, o);

  auto* fundamental = app.add_subcommand("fundamental-cycle", "smallest nonzero anti-nef cycle");
  add_analytic(fundamental, a);
  add_output(fundamental, o);

  auto* canonical = app.add_subcommand("canonical-cycle", "canonical cycle Z_K");
  add_analytic(canonical, a);
  add_output(canonical, o);

  std::string cycle_file;
  auto* blowup_cmd = app.add_subcommand("blowup", "blow up points and pull back a cycle");
  add_analytic(blowup_cmd, a);
  add_output(blowup_cmd, o);
  blowup_cmd->add_option("--cycle", cycle_file, "cycle JSON to pull back");

  std::string descriptor, m_file, h1, gap;
  std::vector<std::string> flags;
  auto* invariants = app.add_subcommand("invariants", "ideal invariants and verdicts for an anti-nef cycle");
  add_analytic(invariants, a);
  add_output(invariants, o);
  invariants->add_option("--descriptor", descriptor, "ideal descriptor JSON");
  invariants->add_option("--cycle", cycle_file, "ideal cycle JSON");
  invariants->add_option("--M", m_file, "maximal ideal cycle JSON");
  invariants->add_option("--h1", h1, "h^1(O_X(-Z)), or 'unknown'");
  invariants->add_option("--gap", gap, "length of closure(I)/I, or 'unknown'");
  invariants->add_option("--flag", flags, "generated, no_fixed_component or stable (repeatable)");

  std::string w_spec = "choose", c0_spec = "canonical";
  std::optional<unsigned> shuffle;
  auto* construct = app.add_subcommand("construct-pg", "build a p_g-cycle by branch blow-ups");
  add_analytic(construct, a);
  add_output(construct, o);
  construct->add_option("--W", w_spec, "'choose', a multiple k of E, or a cycle file");
  construct->add_option("--C0", c0_spec, "'canonical', 'W' or a cycle file");
  construct->add_option("--seed", shuffle, "shuffle the blow-up order within sweeps");

  long e = 0, samples = 0;
  unsigned seed = 1;
  auto* classify = app.add_subcommand("classify-elliptic", "Ulrich ideals of a simple elliptic singularity");
  add_output(classify, o);
  classify->add_option("--degree", e, "degree e >= 1")->required();
  classify->add_option("--group-samples", samples, "re-check counts on N random base classes");
  classify->add_option("--seed", seed, "seed for --group-samples");

  std::string corpus_dir = PGCYCLES_CORPUS_DIR;
  auto* corpus = app.add_subcommand("corpus", "fixture corpus");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "re-verify every fixture");
  add_output(corpus_run, o);
  corpus_run->add_option("--dir", corpus_dir, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex, out, err);
  }

  try {
    if (validate->parsed()) return cmd_validate(a, o, out, err);
    if (fundamental->parsed()) return cmd_cycle(false, a, o, out, err);
    if (canonical->parsed()) return cmd_cycle(true, a, o, out, err);
    if (blowup_cmd->parsed()) return cmd_blowup(a, cycle_file, o, out, err);
    if (invariants->parsed()) {
      return cmd_invariants(a, descriptor, cycle_file, m_file, h1, gap, flags, o, out, err);
    }
    if (construct->parsed()) return cmd_construct(a, w_spec, c0_spec, shuffle, o, out, err);
    if (classify->parsed()) return cmd_classify(e, samples, seed, o, out, err);
    if (corpus_run->parsed()) return cmd_corpus(corpus_dir, o, out, err);
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << "\n";
    return kIo;
  } catch (const InconsistentInputError& ex) {
    err << "inconsistent input: " << ex.what() << "\n";
    return kInconsistent;
  } catch (const MissingAnalyticData& ex) {
    err << "missing analytic data: " << ex.what() << "\n";
    return kInconsistent;
  } catch (const ValidationError& ex) {
    err << "invalid input: " << ex.what() << "\n";
    return kValidation;
  } catch (const std::filesystem::filesystem_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kIo;
  }
  return kValidation;
}

}  // namespace pgc::tools
