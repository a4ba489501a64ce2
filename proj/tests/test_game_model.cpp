#include <doctest.h>

#include <cmath>
#include <limits>

#include "support.hpp"

using namespace testing;

TEST_CASE("parse_rational reads fractions, integers and decimals exactly") {
  CHECK(q("3/6") == frac(1, 2));
  CHECK(q("-7") == Rational(-7));
  CHECK(q("0.3") == frac(3, 10));
  CHECK(q("2.5e-1") == frac(1, 4));
  CHECK(q(" 12/4 ") == Rational(3));
  CHECK_THROWS_AS(q("1/0"), InputError);
  CHECK_THROWS_AS(q("abc"), InputError);
  CHECK_THROWS_AS(q(""), InputError);
  CHECK(to_string(frac(6, 4)) == "3/2");
  CHECK(to_string(frac(-4, 2)) == "-2");
}

TEST_CASE("validate_dgpd") {
  CHECK(validate_dgpd(kGridParams).ok());
  CHECK(validate_dgpd(kSadp).ok());
  const ValidityReport bad = validate_dgpd(DgpdParams{9, 5, 4, 2, 3});
  REQUIRE_FALSE(bad.ok());
  CHECK(std::find(bad.violations.begin(), bad.violations.end(), "p > s fails") != bad.violations.end());
  const ValidityReport halves = validate_dgpd(DgpdParams{20, 10, 9, 2, 1});
  CHECK(std::find(halves.violations.begin(), halves.violations.end(), "r > (t+s)/2 fails") != halves.violations.end());

  SUBCASE("non-finite input") {
    try {
      dgpd_from_doubles(9, 5, std::numeric_limits<double>::infinity(), 2, 0);
      FAIL("expected rejection");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("non-finite payoff") != std::string::npos);
    }
    CHECK_THROWS_AS(dgpd_from_doubles(std::nan(""), 5, 4, 2, 0), InputError);
    CHECK(dgpd_from_doubles(9, 5, 4, 2, 0) == kSadp);
  }
}

TEST_CASE("type space invariants") {
  CHECK_THROWS_AS(space({q("1/2"), q("1/4")}, {q("1/2"), q("1/2")}), InputError);
  CHECK_THROWS_AS(space({q("1/4"), q("1/4")}, {q("1/2"), q("1/2")}), InputError);
  CHECK_THROWS_AS(space({q("1/4"), q("3/2")}, {q("1/2"), q("1/2")}), InputError);
  CHECK_THROWS_AS(space({q("1/4"), q("1/2")}, {q("1/2"), q("2/5")}), InputError);
  CHECK_THROWS_AS(space({q("1/4"), q("1/2")}, {q("3/2"), q("-1/2")}), InputError);
  CHECK_THROWS_AS(TabulatedCdf({0.0, 1.0}, {0.1, 1.0}), InputError);
  CHECK_THROWS_AS(TabulatedCdf({0.0, 0.5, 1.0}, {0.0, 0.6, 0.5}), InputError);
  const TabulatedCdf cdf({0.0, 0.5, 1.0}, {0.0, 0.8, 1.0});
  CHECK(cdf.cdf(0.25) == doctest::Approx(0.4));
  CHECK(cdf.cdf(0.75) == doctest::Approx(0.9));
  CHECK(cdf.cdf(-1.0) == 0.0);
  CHECK(cdf.cdf(2.0) == 1.0);
}

TEST_CASE("dgpd block must match the tables") {
  std::vector<LocalGame> games = dgpd_local_games(kSadp);
  CHECK(detect_dgpd(games) == kSadp);
  games[1].agent[0](Action::D, Action::D) = 1;
  CHECK_FALSE(detect_dgpd(games).has_value());
  CHECK_THROWS_AS(Multigame(games, {Uniform01{}, Uniform01{}}, kSadp), InputError);
}

TEST_CASE("zeta on the sixtieths grid") {
  const Multigame g = sixtieths_game();
  // A DC threshold strictly between 12/60 and 13/60: types 13/60..1 play C.
  const ExactStrategy s{Extended<Rational>(q("25/120")), Orientation::DC, Rational(1)};
  CHECK(zeta<Rational>(g, 0, Action::C, s) == q("48/61"));
  CHECK(zeta<Rational>(g, 0, Action::D, s) == q("13/61"));
  const ExactStrategy low{Extended<Rational>(q("-1/10")), Orientation::DC, Rational(0)};
  CHECK(zeta<Rational>(g, 1, Action::C, low) == 1);
  CHECK(zeta<Rational>(g, 1, Action::C, ExactStrategy::always_d()) == 0);
  const ExactStrategy cd_inf{Extended<Rational>::pos_inf(), Orientation::CD, Rational(1)};
  CHECK(zeta<Rational>(g, 1, Action::C, cd_inf) == 1);
}

TEST_CASE("zeta matches direct summation on random priors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const DiscreteTypeSpace s = random_type_space(rng, 5);
    const ExactStrategy strat = random_strategy(rng, s);
    Rational direct = 0;
    for (std::size_t k = 0; k < s.size(); ++k) direct += s.probs()[k] * apply_strategy(strat, s.points()[k]).c;
    const Rational fast = zeta_c(s, strat);
    CHECK(fast == direct);
    CHECK(zeta_c(s, to_float(strat)) == doctest::Approx(direct.get_d()).epsilon(1e-12));
    const Multigame g(random_games(rng, 0, 9), {s, s});
    CHECK(zeta<Rational>(g, 0, Action::C, strat) + zeta<Rational>(g, 0, Action::D, strat) == 1);
  }
}

TEST_CASE("expected utility") {
  const Multigame g = sixtieths_game();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ExactStrategy opp = random_strategy(rng, sixtieths());
    CHECK(expected_utility<Rational>(g, 0, Action::C, Rational(1), opp) == kGridParams.y);
    CHECK(expected_utility<Rational>(g, 0, Action::D, Rational(1), opp) == kGridParams.s);

    // Affine in theta: three collinear points.
    const Rational a = expected_utility<Rational>(g, 1, Action::D, Rational(0), opp);
    const Rational b = expected_utility<Rational>(g, 1, Action::D, frac(1, 3), opp);
    const Rational c = expected_utility<Rational>(g, 1, Action::D, Rational(1), opp);
    CHECK(Rational(b - a) * 3 == Rational(c - a));
  }

  SUBCASE("crossing point equalizes the actions") {
    const ExactStrategy opp{Extended<Rational>(q("25/120")), Orientation::DC, Rational(1)};
    const Rational theta = threshold_function_dgpd<Rational>(q("48/61"), kGridParams);
    CHECK(theta == q("231/963"));
    CHECK(expected_utility<Rational>(g, 0, Action::C, theta, opp) == expected_utility<Rational>(g, 0, Action::D, theta, opp));
    const Rational quarter = frac(1, 4);
    CHECK(expected_utility<Rational>(g, 0, Action::C, quarter, opp) > expected_utility<Rational>(g, 0, Action::D, quarter, opp));
  }
}

TEST_CASE("delta vector") {
  const Multigame g = sixtieths_game();
  const std::vector<Rational> d = delta_vector<Rational>(g, 0, ExactStrategy::always_c());
  REQUIRE(d.size() == 2);
  CHECK(d[0] == -4);
  CHECK(d[1] == 12);

  SUBCASE("identical rows give zero") {
    const PayoffTable flat = table(3, 1, 3, 1);
    const std::vector<PayoffTable> tables{flat, flat};
    for (const Rational& v : delta_vector<Rational>(tables, frac(2, 7))) CHECK(v == 0);
  }

  SUBCASE("agrees with expected-utility differences") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const Multigame rg = random_discrete_game(rng, 6, -5, 5);
      const ExactStrategy opp = random_strategy(rng, rg.discrete_space(1));
      const std::vector<Rational> dv = delta_vector<Rational>(rg, 0, opp);
      const Rational theta = frac(trial, 100);
      const Rational diff = expected_utility<Rational>(rg, 0, Action::C, theta, opp) -
                            expected_utility<Rational>(rg, 0, Action::D, theta, opp);
      CHECK(diff == Rational((1 - theta) * dv[0] + theta * dv[1]));

      const FloatStrategy fopp = to_float(opp);
      const std::vector<double> fv = delta_vector<double>(rg, 0, fopp);
      CHECK(std::abs(fv[0] - dv[0].get_d()) < 1e-12);
      CHECK(std::abs(fv[1] - dv[1].get_d()) < 1e-12);
    }
  }

  SUBCASE("purely cooperative component stays positive") {
    std::mt19937_64 rng(5);
    const DiscreteTypeSpace s = random_type_space(rng, 6);
    const Multigame dg = Multigame::from_dgpd(kGridParams, s, s);
    for (int trial = 0; trial < 100; ++trial) {
      const ExactStrategy opp = random_strategy(rng, s);
      CHECK(delta_vector<Rational>(dg, 1, opp)[1] > 0);
    }
  }
}

TEST_CASE("local game classification") {
  const Multigame g = sixtieths_game();
  CHECK(is_purely_cooperative(g, 0, 1) == LocalGameKind::Cooperative);
  CHECK(is_purely_cooperative(g, 0, 0) == LocalGameKind::Competitive);  // the Prisoner's Dilemma
  const LocalGame ego = bimatrix({{{{{0, 0}, {-1, 1}}}, {{{1, -1}, {0, 0}}}}});
  CHECK(classify_local_game(ego.agent[0]) == LocalGameKind::Competitive);
  CHECK(classify_local_game(table(3, 0, 1, 2)) == LocalGameKind::Neither);
}

TEST_CASE("pure equilibrium guarantee on continuous priors") {
  CHECK(has_pure_ne_guarantee(Multigame::from_dgpd(kSadp, Uniform01{}, Uniform01{})));
  const LocalGame ego = bimatrix({{{{{0, 0}, {-1, 1}}}, {{{1, -1}, {0, 0}}}}});
  const LocalGame survival = bimatrix({{{{{0, 0}, {0, 0}}}, {{{0, 0}, {-2, -2}}}}});
  CHECK(has_pure_ne_guarantee(Multigame({ego, survival}, {Uniform01{}, Uniform01{}})));
  const LocalGame neither = bimatrix({{{{{3, 3}, {0, 1}}}, {{{1, 0}, {2, 2}}}}});
  CHECK_FALSE(has_pure_ne_guarantee(Multigame({neither, neither}, {Uniform01{}, Uniform01{}})));
  CHECK_THROWS_AS(has_pure_ne_guarantee(sixtieths_game()), InputError);
}
