#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "pgcycles/blowup.hpp"
#include "pgcycles/errors.hpp"

using namespace pgc;
using namespace pgc::test;

TEST_CASE("point specs round-trip through text") {
  for (const std::string text : {"E0", "E1:E2", "h3@E0"}) {
    CHECK(to_string(parse_point(text)) == text);
  }
  CHECK(std::holds_alternative<Intersection>(parse_point("A:B")));
  CHECK(std::holds_alternative<OnBranch>(parse_point("b@A")));
  CHECK_THROWS_AS(parse_point(""), ValidationError);
  CHECK_THROWS_AS(parse_point(":A"), ValidationError);
  CHECK_THROWS_AS(parse_point("b@"), ValidationError);
}

TEST_CASE("blow-up at a general point") {
  const auto g = single(-3, 1, "E0");
  const BlowupMap m = blow_up(g, GenericOn{"E0"});
  const auto& t = *m.target;
  REQUIRE(t.size() == 2);
  CHECK(t.vertex(0).self_intersection == -4);
  CHECK(t.vertex(0).genus == 1);
  CHECK(t.vertex(m.new_index).self_intersection == -1);
  CHECK(t.vertex(m.new_index).id == m.new_vertex);
  CHECK(t.pairing(0, m.new_index) == 1);
  const Cycle z = pullback(m, Cycle::reduced(g));
  CHECK(z == cyc(m.target, {{"E0", 1}, {m.new_vertex, 1}}));
  CHECK(intersect_vertex(z, m.new_index) == 0);
  CHECK(pushforward(m, z) == Cycle::reduced(g));
  CHECK_FALSE(is_minimal(t));
  CHECK(is_minimal(*g));
}

TEST_CASE("blow-up at an intersection point") {
  const auto g = chain({-2, -2});
  const BlowupMap m = blow_up(g, Intersection{"C0", "C1"});
  const auto& t = *m.target;
  CHECK(t.vertex(0).self_intersection == -3);
  CHECK(t.vertex(1).self_intersection == -3);
  CHECK(t.pairing(0, 1) == 0);
  CHECK(t.pairing(0, m.new_index) == 1);
  CHECK(t.pairing(1, m.new_index) == 1);
  const Cycle z = pullback(m, cyc(g, {{"C0", 2}, {"C1", 3}}));
  CHECK(z[m.new_index] == 5);
  CHECK_THROWS_AS(blow_up(chain({-2, -2, -2}), Intersection{"C0", "C2"}), ValidationError);
  CHECK_THROWS_AS(blow_up(g, GenericOn{"X"}), ValidationError);
}

TEST_CASE("contraction inverts a blow-up") {
  const auto g = chain({-3, -1, -3});
  const Contraction c = contract(g, "C1");
  const auto& t = *c.target;
  REQUIRE(t.size() == 2);
  CHECK(t.vertex(t.index("C0")).self_intersection == -2);
  CHECK(t.vertex(t.index("C2")).self_intersection == -2);
  CHECK(t.pairing(t.index("C0"), t.index("C2")) == 1);
  CHECK(pushforward(c, cyc(g, {{"C0", 1}, {"C1", 2}, {"C2", 1}})) ==
        cyc(c.target, {{"C0", 1}, {"C2", 1}}));
  CHECK_THROWS_AS(contract(g, "C0"), ValidationError);
  CHECK_THROWS_AS(contract(single(-1, 0), "E"), ValidationError);

  const BlowupMap m = blow_up(single(-3, 1, "E0"), GenericOn{"E0"});
  const Contraction back = contract(m.target, m.new_vertex);
  CHECK(same_structure(*back.target, *m.source));
}

TEST_CASE("minimality with respect to a cycle") {
  const BlowupMap m = blow_up(single(-1, 1, "E0"), GenericOn{"E0"});
  const auto f = m.new_vertex;
  CHECK(is_minimal_wrt(cyc(m.target, {{"E0", 1}, {f, 2}})));
  CHECK_FALSE(is_minimal_wrt(cyc(m.target, {{"E0", 1}, {f, 1}})));
  CHECK(is_minimal_wrt(Cycle::reduced(single(-2, 0))));
}

TEST_CASE("branch blow-ups move along a chain") {
  auto g = single(-2, 2);
  BlowupMap m1 = blow_up(g, OnBranch{"h1", "E"});
  BlowupMap m2 = blow_up(m1.target, OnBranch{"h1", m1.new_vertex});
  const auto& t = *m2.target;
  CHECK(t.size() == 3);
  CHECK(t.vertex(m1.new_index).self_intersection == -2);
  CHECK(t.vertex(m2.new_index).self_intersection == -1);
  CHECK(t.pairing(0, m2.new_index) == 0);
  const Cycle z = pullback(std::vector<BlowupMap>{m1, m2}, Cycle::reduced(g));
  CHECK(longs(z) == std::vector<long>{1, 1, 1});
  CHECK(pushforward(std::vector<BlowupMap>{m1, m2}, z) == Cycle::reduced(g));
}

TEST_CASE("random blow-ups preserve pairings and definiteness") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_nd_graph(rng, 5);
    std::uniform_int_distribution<std::size_t> pick(0, g->size() - 1);
    const std::size_t i = pick(rng);
    PointSpec center = GenericOn{g->vertex(i).id};
    if (!g->neighbors(i).empty() && coef(rng) > 0) {
      center = Intersection{g->vertex(i).id, g->vertex(g->neighbors(i).front()).id};
    }
    const BlowupMap m = blow_up(g, center);
    CHECK(m.target->form().negative_definite());
    CHECK(oracle::negative_definite(*m.target));
    Cycle a(g), b(g);
    for (std::size_t k = 0; k < g->size(); ++k) {
      a[k] = coef(rng);
      b[k] = coef(rng);
    }
    CHECK(intersect(pullback(m, a), pullback(m, b)) == intersect(a, b));
    CHECK(intersect_vertex(pullback(m, a), m.new_index) == 0);
    const Cycle f = Cycle::vertex(m.target, m.new_index);
    CHECK(canonical_cycle(m.target) == pullback(m, canonical_cycle(g)) - f);
  }
}
