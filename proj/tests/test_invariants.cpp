#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "pgcycles/blowup.hpp"
#include "pgcycles/errors.hpp"
#include "pgcycles/invariants.hpp"

using namespace pgc;
using namespace pgc::test;

namespace {

IdealDescriptor star4_ideal() {
  const auto g = star4();
  SingularityData s{g, 1, std::nullopt, std::nullopt, true};
  IdealDescriptor d{s, cyc(g, {{"E0", 3}, {"E1", 1}, {"E2", 1}, {"E3", 1}, {"E4", 1}}),
                    0, 1, false, true, true, {}};
  d.normalize();
  return d;
}

Cycle star4_m(const GraphPtr& g) {
  return cyc(g, {{"E0", 2}, {"E1", 1}, {"E2", 1}, {"E3", 1}, {"E4", 1}});
}

}  // namespace

TEST_CASE("degree-4 star with an h1 = 0 ideal") {
  const IdealDescriptor d = star4_ideal();
  const Cycle m = star4_m(d.z.graph());
  CHECK(intersect(d.z, d.z) == -6);
  CHECK(k_dot(d.z) == 4);
  CHECK(intersect(m, d.z) == -4);
  CHECK(*colength(d) == 2);
  CHECK(*ideal_colength(d) == 3);
  CHECK(*multiplicity(d) == 6);
  CHECK(*multiplicity(d) == 2 * *ideal_colength(d));
  const MuData mu = mu_data(d, m, std::nullopt);
  CHECK(mu.upper == 5);
  CHECK(mu.lower == 4);
  CHECK_FALSE(mu.exact_coangle);
  CHECK(is_pg_cycle(d).is_false());
  const TriBool good = good_ideal_test(d);
  CHECK(good.is_true());
  CHECK(good.reason() == "h1 = 0 and K_X Z = 2(1 + gap)");
  // -MZ - gap = 3 is allowed; the screen cannot certify without a classification.
  CHECK(ulrich_screen(d, m).is_unknown());
}

TEST_CASE("goodness needs the stability flag on the h1 = 0 branch") {
  IdealDescriptor d = star4_ideal();
  d.stable = false;
  const TriBool t = good_ideal_test(d);
  CHECK(t.is_unknown());
  CHECK(t.reason() == "stability I^2 = QI");
}

TEST_CASE("unknown verdicts name the missing datum") {
  const auto g = star4();
  const Cycle z = cyc(g, {{"E0", 3}, {"E1", 1}, {"E2", 1}, {"E3", 1}, {"E4", 1}});
  SingularityData no_pg{g, std::nullopt, std::nullopt, std::nullopt, true};
  IdealDescriptor d{no_pg, z, std::nullopt, std::nullopt, false, false, false, {}};
  d.normalize();
  CHECK(colength(d).reason() == "pg");
  CHECK(mu_data(d, star4_m(g), std::nullopt).lower == std::nullopt);

  d.sing.pg = 1;
  CHECK(colength(d).reason() == "h1");
  d.h1 = 0;
  CHECK(colength(d).known());
  CHECK(ideal_colength(d).reason() == "integral_gap");
  CHECK(multiplicity(d).reason() == "generated");

  CHECK(epsilon(no_pg, z, z, 0, 0, 0).reason() == "pg");
  SingularityData s{g, 1, std::nullopt, std::nullopt, true};
  CHECK(epsilon(s, z, z, std::nullopt, 0, 0).reason() == "h1(Z1)");
  CHECK(epsilon(s, z, z, 0, std::nullopt, 0).reason() == "h1(Z2)");
  CHECK(epsilon(s, z, z, 0, 0, std::nullopt).reason() == "h1(Z1+Z2)");

  IdealDescriptor non_gor{{g, 1, std::nullopt, std::nullopt, false}, z, 0, 0, false, true, true, {}};
  CHECK(good_ideal_test(non_gor).reason() == "gorenstein");
  CHECK(ulrich_screen(non_gor, star4_m(g)).reason() == "minimally elliptic data");

  // Z = E + 3F is trivial on C_X = E, so with h1 unknown nothing decides.
  const BlowupMap up = blow_up(single(-2, 2), GenericOn{"E"});
  IdealDescriptor pg2{{up.target, 2, std::nullopt, cyc(up.target, {{"E", 1}}), true},
                      cyc(up.target, {{"E", 1}, {up.new_vertex, 3}}), std::nullopt, 0, false,
                      false, false, {}};
  CHECK(is_pg_cycle(pg2).reason() == "line-bundle class on C_X not graph-determined");
  pg2.h1 = 2;
  CHECK(is_pg_cycle(pg2).reason() == "generated");
  pg2.generated = true;
  CHECK(is_pg_cycle(pg2).is_true());
  pg2.sing.pg = std::nullopt;
  pg2.h1 = std::nullopt;
  CHECK(is_pg_cycle(pg2).reason() == "pg");

  const auto cg = chain({-2, -3});
  IdealDescriptor rat_gap{{cg, 0, std::nullopt, std::nullopt, false}, fundamental_cycle(cg),
                          std::nullopt, std::nullopt, false, false, false, {}};
  rat_gap.normalize();
  CHECK(good_ideal_test(rat_gap).reason() == "integral_gap");
}

TEST_CASE("degree obstruction on the cohomological cycle") {
  const auto g = single(-3, 1, "E0");
  IdealDescriptor d{{g, 1, std::nullopt, std::nullopt, true}, Cycle::reduced(g), std::nullopt, 0,
                    false, true, false, {}};
  d.normalize();
  const TriBool t = is_pg_cycle(d);
  CHECK(t.is_false());
  CHECK(t.reason() == "Z.E != 0 for E0 in the support of C_X");
}

TEST_CASE("inconsistent analytic inputs are rejected") {
  const auto g = single(-3, 1, "E0");
  SingularityData s{g, 1, std::nullopt, std::nullopt, true};
  const Cycle z = Cycle::reduced(g);
  IdealDescriptor too_big{s, z, 2, 0, false, true, false, {}};
  CHECK_THROWS_AS(too_big.normalize(), InconsistentInputError);
  IdealDescriptor negative{s, z, -1, 0, false, true, false, {}};
  CHECK_THROWS_AS(negative.normalize(), InconsistentInputError);
  IdealDescriptor not_anti_nef{s, cyc(single(-2, 0), {{"E", 0}}), 0, 0, false, true, false, {}};
  not_anti_nef.sing.graph = not_anti_nef.z.graph();
  CHECK_THROWS_AS(not_anti_nef.normalize(), ValidationError);

  // -(Z^2 + K Z)/2 = 0 for Z = E0, so p_g = 0 with h1 = 1 gives -1.
  IdealDescriptor raw{{g, 0, std::nullopt, std::nullopt, false}, z, 1, 0, false, false, false, {}};
  CHECK_THROWS_AS(colength(raw), InconsistentInputError);

  CHECK_THROWS_AS(epsilon(s, z, z, 0, 0, 2), InconsistentInputError);
  CHECK_THROWS_AS(epsilon(s, z, z, 1, 1, 0), InconsistentInputError);
  CHECK_THROWS_AS(epsilon(s, z, z, 1, 0, 1), InconsistentInputError);
  CHECK(*epsilon(s, z, z, 0, 0, 0) == 1);
  CHECK(*epsilon(s, z, z, 1, 0, 0) == 0);
}

TEST_CASE("rational model forces h1 = 0") {
  const auto g = chain({-2, -2});
  IdealDescriptor d{{g, 0, std::nullopt, std::nullopt, true}, Cycle::reduced(g), std::nullopt, 0,
                    false, false, false, {}};
  d.normalize();
  CHECK(d.h1 == 0);
  CHECK(d.generated);
  CHECK(is_pg_cycle(d).is_true());
  IdealDescriptor bad{{g, 0, std::nullopt, std::nullopt, true}, Cycle::reduced(g), 1, 0, false,
                      false, false, {}};
  CHECK_THROWS_AS(bad.normalize(), InconsistentInputError);
}

TEST_CASE("rational goodness on a non-minimal resolution") {
  const auto g = chain({-3, -1, -3});
  for (long a = 1; a <= 4; ++a) {
    for (long b = 1; b <= 6; ++b) {
      for (long c = 1; c <= 4; ++c) {
        const Cycle z = from_longs(g, {a, b, c});
        if (!is_anti_nef(z)) continue;
        IdealDescriptor d{{g, 0, std::nullopt, std::nullopt, false}, z, 0, 0, false, true, false,
                          {}};
        d.normalize();
        const TriBool good = good_ideal_test(d);
        CAPTURE(z.to_string());
        CHECK_FALSE(good.is_unknown());
        // Good exactly when Z comes from the minimal resolution, i.e. Z.C = 0.
        CHECK(good.is_true() == (intersect_vertex(z, 1) == 0));
        CHECK(good.is_true() == !is_minimal_wrt(z));
      }
    }
  }
}

TEST_CASE("good rational ideals on minimal corpus graphs are minimal with respect to Z") {
  for (const auto& [name, g, rational] : oracle::corpus_graphs()) {
    if (!rational || !is_minimal(*g)) continue;
    CAPTURE(name);
    std::vector<long> x(g->size(), 1);
    for (;;) {
      const Cycle z = from_longs(g, x);
      if (is_anti_nef(z)) {
        IdealDescriptor d{{g, 0, std::nullopt, std::nullopt, false}, z, 0, 0, false, true, false,
                          {}};
        d.normalize();
        if (good_ideal_test(d).is_true()) CHECK(is_minimal_wrt(z));
        CHECK(good_ideal_test(d).is_true());
      }
      std::size_t i = 0;
      while (i < x.size() && x[i] == 5) x[i++] = 1;
      if (i == x.size()) break;
      ++x[i];
    }
  }
}
