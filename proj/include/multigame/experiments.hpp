#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "multigame/game_model.hpp"

namespace multigame {

// Sixteen independent uniform integers in [lo, hi], in the order game, agent, own action,
// opponent action.
std::vector<LocalGame> random_payoff_matrix(std::uint64_t seed, long lo, long hi);

// Independent stream for trial `index` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

inline constexpr long kTypeDenominator = 10'000;

// n distinct points k/10^4 with 0 < k < 10^4, sorted, and a flat-simplex prior rounded to
// multiples of 10^-4 (each point keeps at least one unit).
DiscreteTypeSpace random_type_space(std::mt19937_64& rng, std::size_t n);

// Valid DGPD parameters with integer payoffs in [0, hi].
DgpdParams random_dgpd_params(std::mt19937_64& rng, long hi = 40);

// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware concurrency).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

enum class ClassLabel { Full, Hybrid, Solutionless };

const char* to_string(ClassLabel label);

// Observed label from how many sampled configurations admitted a pure equilibrium.
ClassLabel label_of(std::size_t solvable, std::size_t configs);

struct ExperimentRecord {
  std::size_t matrix_id = 0;
  std::uint64_t seed = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t solution_count = 0;
  double wall_seconds = 0.0;
};

struct ClassificationOptions {
  std::uint64_t seed = 1;
  std::size_t matrices = 100;
  std::size_t configs = 100;
  long lo = 0;
  long hi = 9;
  std::size_t max_size = 8;
  std::optional<std::filesystem::path> dump_dir;
  std::size_t threads = 0;
};

struct ClassificationRow {
  std::size_t matrix_id = 0;
  std::uint64_t seed = 0;
  ClassLabel label = ClassLabel::Full;
  std::size_t solvable = 0;
  std::size_t configs = 0;
  bool full_set_condition = false;
};

struct ClassificationResult {
  std::vector<ClassificationRow> rows;
  std::vector<ExperimentRecord> records;
  std::vector<std::filesystem::path> dumped;

  std::size_t count(ClassLabel label) const;
};

// Matrix m is drawn with seed + m; its configurations use trial_rng(seed + m, c).
ClassificationResult run_classification(const ClassificationOptions& options);

struct AvgSolutionsRow {
  std::size_t size = 0;
  double mean = 0.0;
  std::size_t min = 0;
  std::size_t max = 0;
};

// Mean number of solution classes over `trials` random configurations with n1 = n2 = size.
std::vector<AvgSolutionsRow> run_avg_solutions(const std::vector<LocalGame>& games, const std::vector<std::size_t>& sizes,
                                               std::size_t trials, std::uint64_t seed, std::size_t threads = 0);

enum class BenchAlgo { Dgpd, General };

struct BenchOptions {
  BenchAlgo algo = BenchAlgo::Dgpd;
  std::vector<std::size_t> sizes;
  std::size_t fixed = 10;
  bool diagonal = true;   // n1 = n2 = size
  bool fixed_n1 = true;   // n1 = fixed, n2 = size
  bool fixed_n2 = true;   // n1 = size, n2 = fixed
  double min_seconds = 0.02;
  std::size_t max_repeats = 1000;
};

struct BenchRow {
  std::string series;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double mean_seconds = 0.0;
  double mean_iterations = 0.0;
};

// Uniform grid k/(n+1), k = 1..n, with the uniform prior.
DiscreteTypeSpace grid_type_space(std::size_t n);

// Times the solver on the (20,16,15,6,3) DGPD over grid type spaces.
std::vector<BenchRow> run_benchmark(const BenchOptions& options);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

void write_classification_csv(std::ostream& out, const std::vector<ClassificationRow>& rows);
void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_avg_solutions_csv(std::ostream& out, const std::vector<AvgSolutionsRow>& rows);
void write_benchmark_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace multigame
