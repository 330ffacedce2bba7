#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "pgcycles/errors.hpp"
#include "pgcycles/json_io.hpp"

using namespace pgc;
using namespace pgc::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pgcycles-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tools::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "pgcycles_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const char* kStar4 = R"({"vertices": [{"id": "E0", "self_intersection": -2},
  {"id": "E1", "self_intersection": -3}, {"id": "E2", "self_intersection": -3},
  {"id": "E3", "self_intersection": -3}, {"id": "E4", "self_intersection": -3}],
  "edges": [["E0", "E1"], ["E0", "E2"], ["E0", "E3"], ["E0", "E4"]]})";

}  // namespace

TEST_CASE("graph JSON round-trip") {
  const auto g = e237();
  const Json j = graph_to_json(*g);
  const auto back = graph_from_json(j);
  CHECK(same_structure(*g, *back));
  CHECK(graph_to_json(*back) == j);
  CHECK_THROWS_AS(graph_from_json(Json::parse(
                      R"({"vertices": [{"id": "A", "self_intersection": -3},
                                       {"id": "B", "self_intersection": -3}],
                          "edges": [["A", "B", 2]]})")),
                  ValidationError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": []})")), ValidationError);
}

TEST_CASE("rational and cycle JSON round-trip") {
  for (const Rational q : {Rational(3), Rational(-7, 2), Rational(0)}) {
    CHECK(rational_from_json(rational_to_json(q)) == q);
  }
  CHECK(rational_to_json(Rational(5)) == Json(5));
  CHECK(rational_to_json(Rational(1, 3)) == Json("1/3"));
  CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ValidationError);
  const auto g = star4();
  const Cycle z = cyc(g, {{"E0", 3}, {"E2", Rational(1, 2)}});
  CHECK(cycle_from_json(cycle_to_json(z), g) == z);
  CHECK(cycle_from_json(Json::parse(R"({"E0": 2})"), g) == cyc(g, {{"E0", 2}}));
}

TEST_CASE("malformed JSON reports the byte offset") {
  try {
    parse_json("{\"a\": [1, 2,, 3]}", "input");
    FAIL("no exception");
  } catch (const IoError& e) {
    const std::string what = e.what();
    CHECK(what.find("input") != std::string::npos);
    CHECK(what.find("13") != std::string::npos);
  }
  CHECK_THROWS_AS(read_json_file("/nonexistent/graph.json"), IoError);
}

TEST_CASE("CLI exit codes") {
  const auto good = write_temp("star4.json", kStar4);
  const auto bad = write_temp("semidefinite.json", R"({"vertices": [
    {"id": "A", "self_intersection": -2}, {"id": "B", "self_intersection": -1},
    {"id": "C", "self_intersection": -2}], "edges": [["A", "B"], ["B", "C"]]})");
  const auto broken = write_temp("broken.json", "{\"vertices\": [");

  CHECK(cli({"validate", "--graph", good, "--json"}).code == 0);
  CHECK(cli({"validate", "--graph", bad}).code == 1);
  const Run io = cli({"validate", "--graph", broken});
  CHECK(io.code == 3);
  CHECK(io.err.find("byte") != std::string::npos);
  CHECK(cli({"validate", "--graph", "/nonexistent.json"}).code == 3);
  CHECK(cli({"invariants", "--graph", good, "--pg", "0", "--h1", "1", "--cycle",
             write_temp("z.json", R"({"E0": 3, "E1": 1, "E2": 1, "E3": 1, "E4": 1})")})
            .code == 2);
  CHECK(cli({"bogus"}).code != 0);
}

TEST_CASE("CLI cycle commands") {
  const auto good = write_temp("star4.json", kStar4);
  const Run f = cli({"fundamental-cycle", "--graph", good, "--json"});
  REQUIRE(f.code == 0);
  CHECK(Json::parse(f.out)["coefficients"] == Json::parse(R"({"E0": 2, "E1": 1, "E2": 1, "E3": 1, "E4": 1})"));
  const Run k = cli({"canonical-cycle", "--graph", good, "--json"});
  CHECK(Json::parse(k.out)["coefficients"]["E0"] == 2);
  const Run b = cli({"blowup", "--graph", good, "--at", "E0:E1", "--at", "E2", "--json"});
  REQUIRE(b.code == 0);
  CHECK(Json::parse(b.out)["maps"].size() == 2);
  CHECK(Json::parse(b.out)["graph"]["vertices"].size() == 7);
}

TEST_CASE("CLI invariants with unknown analytic data") {
  const auto good = write_temp("star4.json", kStar4);
  const auto z = write_temp("z.json", R"({"E0": 3, "E1": 1, "E2": 1, "E3": 1, "E4": 1})");
  const Run r = cli({"invariants", "--graph", good, "--gorenstein", "--cycle", z, "--json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["colength"] == Json::parse(R"({"unknown": "pg"})"));
  CHECK(j["self_intersection"] == -6);
  const Run known = cli({"invariants", "--graph", good, "--gorenstein", "--pg", "1", "--h1", "0",
                         "--gap", "1", "--flag", "generated", "--flag", "stable", "--cycle", z,
                         "--json"});
  const Json k = Json::parse(known.out);
  CHECK(k["colength"] == 2);
  CHECK(k["ideal_colength"] == 3);
  CHECK(k["good"]["value"] == "true");
}

TEST_CASE("CLI construction and classification") {
  const auto cone = write_temp("cone.json", R"({"vertices": [{"id": "E", "self_intersection": -2, "genus": 2}]})");
  const Run r = cli({"construct-pg", "--graph", cone, "--pg", "3", "--gorenstein", "--W", "2",
                     "--json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["minus_zsq"] == 16);
  CHECK(j["passed"] == true);
  const Run shuffled = cli({"construct-pg", "--graph", cone, "--pg", "3", "--gorenstein", "--W",
                            "2", "--seed", "7", "--json"});
  CHECK(Json::parse(shuffled.out)["minus_zsq"] == 16);

  const Run seven = cli({"classify-elliptic", "--degree", "7", "--json"});
  REQUIRE(seven.code == 0);
  CHECK(Json::parse(seven.out)["cases"] == Json::array());
  const Run two = cli({"classify-elliptic", "--degree", "2", "--group-samples", "3", "--json"});
  const Json t = Json::parse(two.out);
  CHECK(t["cases"].size() == 4);
  CHECK(t["group_samples"]["consistent"] == true);
  CHECK(cli({"classify-elliptic", "--degree", "0"}).code == 1);
}

TEST_CASE("corpus fixtures all pass") {
  const auto outcomes = tools::run_corpus(oracle::corpus_dir());
  CHECK(outcomes.size() > 50);
  for (const auto& o : outcomes) {
    CAPTURE(o.fixture);
    CAPTURE(o.check);
    CAPTURE(o.error);
    CHECK(o.passed);
  }
  const Run r = cli({"corpus", "run", "--dir", oracle::corpus_dir().string(), "--json"});
  CHECK(r.code == 0);
}
