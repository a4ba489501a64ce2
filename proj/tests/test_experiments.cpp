#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>

#include "multigame/discrete_solver.hpp"
#include "multigame/game_io.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("random payoff matrices are seeded and in range") {
  CHECK(random_payoff_matrix(5, 0, 9) == random_payoff_matrix(5, 0, 9));
  CHECK(random_payoff_matrix(5, 0, 9) != random_payoff_matrix(6, 0, 9));
  for (const LocalGame& g : random_payoff_matrix(1, -3, 3)) {
    for (const PayoffTable& t : g.agent) {
      for (Action a : {Action::C, Action::D}) {
        for (Action b : {Action::C, Action::D}) {
          CHECK(t(a, b) >= -3);
          CHECK(t(a, b) <= 3);
        }
      }
    }
  }
  CHECK_THROWS_AS(random_payoff_matrix(1, 3, 2), InputError);
}

TEST_CASE("trial streams are independent of each other") {
  std::mt19937_64 a = trial_rng(1, 0);
  std::mt19937_64 b = trial_rng(1, 1);
  std::mt19937_64 c = trial_rng(1, 0);
  const auto first = a();
  CHECK(first != b());
  CHECK(first == c());
}

TEST_CASE("random type spaces") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 8u, 100u}) {
    const DiscreteTypeSpace s = random_type_space(rng, n);
    CHECK(s.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(s.points()[k] > 0);
      CHECK(s.points()[k] < 1);
      CHECK(s.probs()[k] >= frac(1, kTypeDenominator));
      CHECK(Rational(s.probs()[k] * kTypeDenominator).get_den() == 1);
      CHECK(Rational(s.points()[k] * kTypeDenominator).get_den() == 1);
    }
  }
  CHECK_THROWS_AS(random_type_space(rng, 0), InputError);
}

TEST_CASE("random DGPD parameters are valid") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) CHECK(validate_dgpd(random_dgpd_params(rng)).ok());
}

TEST_CASE("parallel_for covers every index once and forwards errors") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; }, 4);
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) { if (i == 7) throw InputError("boom"); }, 3), InputError);
}

TEST_CASE("labels") {
  CHECK(label_of(10, 10) == ClassLabel::Full);
  CHECK(label_of(3, 10) == ClassLabel::Hybrid);
  CHECK(label_of(0, 10) == ClassLabel::Solutionless);
  CHECK(std::string(to_string(ClassLabel::Hybrid)) == "hybrid-observed");
}

TEST_CASE("classification sweep") {
  const ClassificationOptions opts{.seed = 100, .matrices = 6, .configs = 10, .max_size = 4, .threads = 2};
  const ClassificationResult a = run_classification(opts);
  const ClassificationResult b = run_classification({.seed = 100, .matrices = 6, .configs = 10, .max_size = 4, .threads = 1});
  REQUIRE(a.rows.size() == 6);
  CHECK(a.records.size() == 60);
  for (std::size_t m = 0; m < a.rows.size(); ++m) {
    CHECK(a.rows[m].label == b.rows[m].label);
    CHECK(a.rows[m].solvable == b.rows[m].solvable);
    CHECK(a.rows[m].seed == 100 + m);
    if (a.rows[m].full_set_condition) CHECK(a.rows[m].label == ClassLabel::Full);
  }
  CHECK(a.count(ClassLabel::Full) + a.count(ClassLabel::Hybrid) + a.count(ClassLabel::Solutionless) == 6);

  std::ostringstream csv;
  write_classification_csv(csv, a.rows);
  CHECK(csv.str().rfind("matrix_id,seed,label,solvable_configs,configs,full_set_condition\n", 0) == 0);
  std::ostringstream rec;
  write_records_csv(rec, a.records);
  CHECK(rec.str().rfind("matrix_id,seed,n1,n2,solution_count,wall_seconds\n", 0) == 0);
}

TEST_CASE("solutionless witnesses are dumped") {
  // Payoffs in [0, 0] give an all-indifferent game, solvable everywhere.
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "multigame_dump_test";
  std::filesystem::remove_all(dir);
  const ClassificationResult r = run_classification({.seed = 7, .matrices = 3, .configs = 4, .lo = 0, .hi = 0, .dump_dir = dir});
  CHECK(r.count(ClassLabel::Full) == 3);
  CHECK(r.dumped.empty());

  // A dump of a hand-built solutionless game reloads unchanged.
  std::mt19937_64 rng(1);
  const Multigame pennies = matching_pennies_double(random_type_space(rng, 3), random_type_space(rng, 2));
  write_game_file(pennies, dir / "pennies.json");
  const Multigame back = parse_game_file(dir / "pennies.json");
  CHECK(back == pennies);
  CHECK_FALSE(general_search(back).found());
  std::filesystem::remove_all(dir);
}

TEST_CASE("average solution counts") {
  const std::vector<AvgSolutionsRow> rows = run_avg_solutions(pair_games(), {1, 3, 5}, 8, 11, 2);
  REQUIRE(rows.size() == 3);
  for (const AvgSolutionsRow& r : rows) {
    CHECK(r.min <= r.mean);
    CHECK(r.mean <= r.max);
  }
  const std::vector<AvgSolutionsRow> again = run_avg_solutions(pair_games(), {1, 3, 5}, 8, 11, 1);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].mean == again[i].mean);

  // A DGPD always has at least one.
  const std::vector<AvgSolutionsRow> dg = run_avg_solutions(dgpd_local_games(kGridParams), {2, 6}, 5, 3);
  for (const AvgSolutionsRow& r : dg) CHECK(r.min >= 1);
  std::ostringstream csv;
  write_avg_solutions_csv(csv, rows);
  CHECK(csv.str().rfind("size,mean_solutions,min_solutions,max_solutions\n", 0) == 0);
}

TEST_CASE("grid type spaces") {
  const DiscreteTypeSpace g = grid_type_space(4);
  CHECK(g.points() == std::vector<Rational>{q("1/5"), q("2/5"), q("3/5"), q("4/5")});
  CHECK(g.probs().front() == q("1/4"));
  CHECK_THROWS_AS(grid_type_space(0), InputError);
}

TEST_CASE("benchmark shape") {
  BenchOptions opts;
  opts.sizes = {20, 40};
  opts.min_seconds = 0.0;
  opts.max_repeats = 2;
  const std::vector<BenchRow> rows = run_benchmark(opts);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].series == "diagonal");
  CHECK(rows[2].series == "fixed_n1");
  CHECK(rows[2].n1 == 10);
  CHECK(rows[2].n2 == 20);
  CHECK(rows[5].series == "fixed_n2");
  CHECK(rows[5].n1 == 40);
  for (const BenchRow& r : rows) {
    CHECK(r.mean_seconds > 0);
    CHECK(r.mean_iterations >= 1);
  }
  opts.algo = BenchAlgo::General;
  opts.fixed_n1 = opts.fixed_n2 = false;
  CHECK(run_benchmark(opts).size() == 2);
  std::ostringstream csv;
  write_benchmark_csv(csv, rows);
  CHECK(csv.str().rfind("series,n1,n2,mean_seconds,mean_iterations\n", 0) == 0);
}

TEST_CASE("line fit") {
  const LinearFit exact = fit_line({1, 2, 3, 4}, {3, 5, 7, 9});
  CHECK(exact.slope == doctest::Approx(2));
  CHECK(exact.intercept == doctest::Approx(1));
  CHECK(exact.r_squared == doctest::Approx(1));
  const LinearFit noisy = fit_line({1, 2, 3, 4}, {1, 3, 2, 4});
  CHECK(noisy.r_squared == doctest::Approx(0.64));
  CHECK_THROWS_AS(fit_line({1, 1}, {2, 3}), InputError);
  CHECK_THROWS_AS(fit_line({1}, {2}), InputError);
}
