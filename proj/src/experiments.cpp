#include "multigame/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "multigame/discrete_solver.hpp"
#include "multigame/game_io.hpp"

namespace multigame {

std::vector<LocalGame> random_payoff_matrix(std::uint64_t seed, long lo, long hi) {
  if (lo > hi) throw InputError("empty payoff range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(lo, hi);
  std::vector<LocalGame> games(2);
  for (LocalGame& g : games) {
    for (PayoffTable& table : g.agent) {
      for (Action own : {Action::C, Action::D}) {
        for (Action opp : {Action::C, Action::D}) table(own, opp) = draw(rng);
      }
    }
  }
  return games;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

DiscreteTypeSpace random_type_space(std::mt19937_64& rng, std::size_t n) {
  if (n == 0 || n >= static_cast<std::size_t>(kTypeDenominator)) throw InputError("type space size out of range");
  std::uniform_int_distribution<long> draw(1, kTypeDenominator - 1);
  std::vector<long> ticks;
  while (ticks.size() < n) {
    const long k = draw(rng);
    if (std::find(ticks.begin(), ticks.end(), k) == ticks.end()) ticks.push_back(k);
  }
  std::sort(ticks.begin(), ticks.end());

  // Exponential draws normalized give a flat Dirichlet sample.
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(n);
  for (double& w : weights) w = expo(rng);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

  const long spare = kTypeDenominator - static_cast<long>(n);
  std::vector<long> units(n, 1);
  std::vector<std::pair<double, std::size_t>> remainders(n);
  long given = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double share = weights[i] / total * static_cast<double>(spare);
    const long whole = static_cast<long>(std::floor(share));
    units[i] += whole;
    given += whole;
    remainders[i] = {share - static_cast<double>(whole), i};
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (long r = 0; r < spare - given; ++r) ++units[remainders[static_cast<std::size_t>(r) % n].second];

  std::vector<Rational> points;
  std::vector<Rational> probs;
  for (std::size_t i = 0; i < n; ++i) {
    Rational pt(ticks[i], kTypeDenominator);
    Rational pr(units[i], kTypeDenominator);
    pt.canonicalize();
    pr.canonicalize();
    points.push_back(pt);
    probs.push_back(pr);
  }
  return DiscreteTypeSpace(std::move(points), std::move(probs));
}

DgpdParams random_dgpd_params(std::mt19937_64& rng, long hi) {
  if (hi < 4) throw InputError("payoff bound too small for a DGPD");
  std::uniform_int_distribution<long> draw(0, hi);
  for (;;) {
    std::array<long, 5> v{};
    for (long& x : v) x = draw(rng);
    std::sort(v.begin(), v.end(), std::greater<>());
    const DgpdParams q{v[0], v[1], v[2], v[3], v[4]};
    if (validate_dgpd(q).ok()) return q;
  }
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::mutex guard;
  std::size_t next = 0;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      std::size_t i = 0;
      {
        std::lock_guard lock(guard);
        if (next >= count || error) return;
        i = next++;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(guard);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

const char* to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::Full: return "full-observed";
    case ClassLabel::Hybrid: return "hybrid-observed";
    case ClassLabel::Solutionless: return "solutionless-observed";
  }
  return "?";
}

ClassLabel label_of(std::size_t solvable, std::size_t configs) {
  if (solvable == configs) return ClassLabel::Full;
  if (solvable == 0) return ClassLabel::Solutionless;
  return ClassLabel::Hybrid;
}

std::size_t ClassificationResult::count(ClassLabel label) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const ClassificationRow& r) { return r.label == label; }));
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ClassificationResult run_classification(const ClassificationOptions& options) {
  if (options.configs < 2) throw InputError("classification needs at least two configurations per matrix");
  if (options.max_size == 0) throw InputError("max type-space size must be positive");
  ClassificationResult result;
  result.rows.resize(options.matrices);
  std::vector<std::vector<ExperimentRecord>> records(options.matrices);
  std::vector<std::optional<Multigame>> witnesses(options.matrices);

  parallel_for(
      options.matrices,
      [&](std::size_t m) {
        const std::uint64_t seed = options.seed + m;
        const std::vector<LocalGame> games = random_payoff_matrix(seed, options.lo, options.hi);
        ClassificationRow& row = result.rows[m];
        row.matrix_id = m;
        row.seed = seed;
        row.configs = options.configs;
        row.full_set_condition = prop10_check(games);
        for (std::size_t c = 0; c < options.configs; ++c) {
          std::mt19937_64 rng = trial_rng(seed, c);
          std::uniform_int_distribution<std::size_t> size(1, options.max_size);
          const std::size_t n1 = size(rng);
          const std::size_t n2 = size(rng);
          DiscreteTypeSpace t1 = random_type_space(rng, n1);
          DiscreteTypeSpace t2 = random_type_space(rng, n2);
          Multigame game(games, {std::move(t1), std::move(t2)});
          const auto start = std::chrono::steady_clock::now();
          const SearchReport report = general_search(game, {.find_all = true, .certify = false});
          records[m].push_back({m, seed, n1, n2, report.solutions.size(), seconds_since(start)});
          if (report.found()) {
            ++row.solvable;
          } else if (!witnesses[m]) {
            witnesses[m] = game;
          }
        }
        row.label = label_of(row.solvable, row.configs);
      },
      options.threads);

  for (auto& r : records) result.records.insert(result.records.end(), r.begin(), r.end());
  if (options.dump_dir) {
    std::filesystem::create_directories(*options.dump_dir);
    for (const ClassificationRow& row : result.rows) {
      if (row.label != ClassLabel::Solutionless) continue;
      const auto path = *options.dump_dir / ("solutionless_matrix_" + std::to_string(row.matrix_id) + ".json");
      write_game_file(*witnesses[row.matrix_id], path);
      result.dumped.push_back(path);
    }
  }
  return result;
}

std::vector<AvgSolutionsRow> run_avg_solutions(const std::vector<LocalGame>& games, const std::vector<std::size_t>& sizes,
                                               std::size_t trials, std::uint64_t seed, std::size_t threads) {
  if (trials == 0) throw InputError("trials must be at least 1");
  std::vector<AvgSolutionsRow> rows;
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    const std::size_t n = sizes[s];
    std::vector<std::size_t> counts(trials);
    parallel_for(
        trials,
        [&](std::size_t t) {
          // Stream index mixes size position and trial so every cell is independent.
          std::mt19937_64 rng = trial_rng(seed, (static_cast<std::uint64_t>(s) << 32) | t);
          DiscreteTypeSpace t1 = random_type_space(rng, n);
          DiscreteTypeSpace t2 = random_type_space(rng, n);
          const Multigame game(games, {std::move(t1), std::move(t2)});
          counts[t] = general_search(game, {.find_all = true, .certify = false}).solutions.size();
        },
        threads);
    AvgSolutionsRow row;
    row.size = n;
    row.mean = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0})) /
               static_cast<double>(trials);
    row.min = *std::min_element(counts.begin(), counts.end());
    row.max = *std::max_element(counts.begin(), counts.end());
    rows.push_back(row);
  }
  return rows;
}

DiscreteTypeSpace grid_type_space(std::size_t n) {
  if (n == 0) throw InputError("grid size must be positive");
  std::vector<Rational> points;
  points.reserve(n);
  const auto den = static_cast<unsigned long>(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational q(static_cast<unsigned long>(k), den);
    q.canonicalize();
    points.push_back(q);
  }
  return DiscreteTypeSpace::uniform(std::move(points));
}

namespace {

BenchRow time_instance(const BenchOptions& options, const std::string& series, std::size_t n1, std::size_t n2) {
  const Multigame game = Multigame::from_dgpd(DgpdParams{20, 16, 15, 6, 3}, grid_type_space(n1), grid_type_space(n2));
  const SearchOptions search{.find_all = false, .certify = false};
  auto solve = [&] {
    return options.algo == BenchAlgo::Dgpd ? dgpd_search(game, search) : general_search(game, search);
  };
  std::size_t repeats = 0;
  std::size_t iterations = 0;
  const auto start = std::chrono::steady_clock::now();
  do {
    const SearchReport report = solve();
    if (!report.found()) throw SolverError("benchmark instance returned no solution");
    iterations += report.iterations;
    ++repeats;
  } while (repeats < options.max_repeats && seconds_since(start) < options.min_seconds);
  const double elapsed = seconds_since(start);
  return {series, n1, n2, elapsed / static_cast<double>(repeats),
          static_cast<double>(iterations) / static_cast<double>(repeats)};
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (std::size_t n : options.sizes) {
    if (options.diagonal) rows.push_back(time_instance(options, "diagonal", n, n));
  }
  for (std::size_t n : options.sizes) {
    if (options.fixed_n1) rows.push_back(time_instance(options, "fixed_n1", options.fixed, n));
  }
  for (std::size_t n : options.sizes) {
    if (options.fixed_n2) rows.push_back(time_instance(options, "fixed_n2", n, options.fixed));
  }
  return rows;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("a line fit needs at least two paired samples");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw InputError("line fit needs distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

void write_classification_csv(std::ostream& out, const std::vector<ClassificationRow>& rows) {
  out << "matrix_id,seed,label,solvable_configs,configs,full_set_condition\n";
  for (const ClassificationRow& r : rows) {
    out << r.matrix_id << ',' << r.seed << ',' << to_string(r.label) << ',' << r.solvable << ',' << r.configs << ','
        << (r.full_set_condition ? 1 : 0) << '\n';
  }
}

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "matrix_id,seed,n1,n2,solution_count,wall_seconds\n";
  for (const ExperimentRecord& r : records) {
    out << r.matrix_id << ',' << r.seed << ',' << r.n1 << ',' << r.n2 << ',' << r.solution_count << ','
        << r.wall_seconds << '\n';
  }
}

void write_avg_solutions_csv(std::ostream& out, const std::vector<AvgSolutionsRow>& rows) {
  out << "size,mean_solutions,min_solutions,max_solutions\n";
  for (const AvgSolutionsRow& r : rows) out << r.size << ',' << r.mean << ',' << r.min << ',' << r.max << '\n';
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "series,n1,n2,mean_seconds,mean_iterations\n";
  for (const BenchRow& r : rows) {
    out << r.series << ',' << r.n1 << ',' << r.n2 << ',' << r.mean_seconds << ',' << r.mean_iterations << '\n';
  }
}

}  // namespace multigame
