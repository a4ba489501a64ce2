#include "multigame/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "multigame/continuous_solver.hpp"
#include "multigame/discrete_solver.hpp"
#include "multigame/experiments.hpp"
#include "multigame/game_io.hpp"
#include "multigame/oracle.hpp"

namespace multigame {

namespace {

Json extended_json(const Extended<Rational>& x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.is_pos_inf()) return "+inf";
  return to_string(x.value());
}

Json extended_float_json(const Extended<Rational>& x) {
  if (!x.is_finite()) return extended_json(x);
  return to_double(x.value());
}

Json strategy_json(const ExactStrategy& s, const PureClass& c) {
  return {{"threshold", extended_json(s.threshold)},
          {"threshold_float", extended_float_json(s.threshold)},
          {"orientation", to_string(s.orientation)},
          {"alpha", to_string(s.alpha)},
          {"class", {{"orientation", to_string(c.orientation)}, {"cut", c.cut}}}};
}

Json result_json(const EquilibriumResult& r) {
  Json out = {{"agent1", strategy_json(r.strategies.first, r.classes[0])},
              {"agent2", strategy_json(r.strategies.second, r.classes[1])},
              {"intervals", {r.intervals[0].k, r.intervals[1].k}}};
  if (r.regret) out["regret"] = to_string(*r.regret);
  return out;
}

Json rational_array(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& q : values) out.push_back(to_string(q));
  return out;
}

Json regret_json(const RegretReport<Rational>& r) {
  Json agents = Json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    agents.push_back({{"max_regret", to_string(r.max_regret[i])},
                      {"worst_type", to_string(r.worst_type[i])},
                      {"worst_deviation", to_string(r.worst_deviation[i])}});
  }
  return {{"regret", to_string(r.regret())}, {"regret_float", to_double(r.regret())}, {"agents", agents}};
}

Json regret_json(const RegretReport<double>& r) {
  Json agents = Json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    agents.push_back({{"max_regret", r.max_regret[i]},
                      {"worst_type", r.worst_type[i]},
                      {"worst_deviation", to_string(r.worst_deviation[i])}});
  }
  return {{"regret", r.regret()}, {"agents", agents}};
}

Extended<Rational> parse_extended(const std::string& text) {
  if (text == "-inf") return Extended<Rational>::neg_inf();
  if (text == "+inf" || text == "inf") return Extended<Rational>::pos_inf();
  return Extended<Rational>(parse_rational(text));
}

Orientation parse_orientation(const std::string& text) {
  if (text == "DC" || text == "dc") return Orientation::DC;
  if (text == "CD" || text == "cd") return Orientation::CD;
  throw InputError("orientation must be DC or CD, got \"" + text + "\"");
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || value == 0) throw InputError("bad size \"" + item + "\" in --sizes");
    out.push_back(static_cast<std::size_t>(value));
    pos = comma + 1;
  }
  return out;
}

const char* kind_of(const Multigame& game) {
  if (game.is_discrete()) return "discrete";
  if (game.is_continuous()) return "continuous";
  return "mixed";
}

void print(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

int cmd_validate(const std::string& path, std::ostream& out) {
  const Multigame game = parse_game_file(path);
  Json doc = {{"valid", true}, {"kind", kind_of(game)}};
  if (const auto q = game.dgpd()) {
    const LambdaMu lm = lambda_mu(*q);
    doc["dgpd"] = true;
    doc["lambda"] = to_string(lm.lambda);
    doc["mu"] = to_string(lm.mu);
  } else {
    doc["dgpd"] = false;
  }
  if (game.num_games() == 2) doc["full_set_condition"] = prop10_check(game);
  print(out, doc);
  return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& method, bool all, std::ostream& out) {
  const Multigame game = parse_game_file(path);
  std::string chosen = method;
  if (chosen == "auto") {
    if (game.is_continuous()) {
      chosen = "continuous";
    } else if (game.is_discrete()) {
      chosen = game.dgpd() ? "dgpd" : "general";
    } else {
      throw InputError("one discrete and one continuous type space is not supported");
    }
  }

  if (chosen == "continuous") {
    const ContinuousSolution sol = solve_continuous(game);
    const RegretReport<double> regret = sampled_regret(game, sol.strategies());
    print(out, {{"status", "solved"},
                {"method", "continuous"},
                {"theta1", sol.theta1},
                {"theta2", sol.theta2},
                {"orientation", "DC"},
                {"residual", sol.residual},
                {"symmetric", sol.symmetric},
                {"sampled_regret", regret.regret()}});
    return kExitOk;
  }

  if (!game.is_discrete()) throw InputError("method " + chosen + " needs discrete type spaces");
  SearchReport report;
  Json doc = Json::object();
  if (chosen == "dgpd") {
    const auto q = game.dgpd();
    if (!q) throw InputError("method dgpd needs DGPD payoff tables");
    report = dgpd_search(game, {.find_all = all, .certify = true});
    const LambdaMu lm = lambda_mu(*q);
    const SearchWindow w = search_space_boundaries(*q, game.discrete_space(0).points());
    doc["lambda"] = to_string(lm.lambda);
    doc["mu"] = to_string(lm.mu);
    doc["window"] = {w.start, w.end};
  } else if (chosen == "general") {
    report = general_search(game, {.find_all = all, .certify = true});
  } else {
    throw InputError("unknown method \"" + chosen + "\"");
  }
  Json solutions = Json::array();
  for (const EquilibriumResult& r : report.solutions) solutions.push_back(result_json(r));
  Json head = {{"status", report.found() ? "solved" : "no_solution"}, {"method", chosen}};
  head.update(doc);
  head["iterations"] = report.iterations;
  head["candidates"] = rational_array(report.candidates);
  head["solutions"] = std::move(solutions);
  print(out, head);
  return report.found() ? kExitOk : kExitNoEquilibrium;
}

int cmd_verify(const std::string& path, const std::string& theta1, const std::string& theta2,
               const std::string& orient1, const std::string& orient2, const std::string& alpha1,
               const std::string& alpha2, std::ostream& out) {
  const Multigame game = parse_game_file(path);
  const ExactStrategy s1{parse_extended(theta1), parse_orientation(orient1), parse_rational(alpha1)};
  const ExactStrategy s2{parse_extended(theta2), parse_orientation(orient2), parse_rational(alpha2)};
  for (const Rational& a : {s1.alpha, s2.alpha}) {
    if (a < 0 || a > 1) throw InputError("alpha must lie in [0,1]");
  }
  Json doc;
  bool ok = false;
  if (game.is_discrete()) {
    const RegretReport<Rational> r = verify_equilibrium(game, StrategyPair<Rational>{s1, s2});
    ok = is_equilibrium(r);
    doc = regret_json(r);
    doc["mode"] = "exact";
  } else if (game.is_continuous()) {
    const RegretReport<double> r = sampled_regret(game, StrategyPair<double>{to_float(s1), to_float(s2)});
    ok = r.regret() <= 1e-6;
    doc = regret_json(r);
    doc["mode"] = "sampled";
  } else {
    throw InputError("one discrete and one continuous type space is not supported");
  }
  Json head = {{"equilibrium", ok}};
  head.update(doc);
  print(out, head);
  return ok ? kExitOk : kExitNoEquilibrium;
}

int cmd_oracle(const std::string& path, std::size_t cap, std::ostream& out) {
  const Multigame game = parse_game_file(path);
  const std::vector<OracleEquilibrium> found = brute_force_ne(game, cap);
  Json list = Json::array();
  for (const OracleEquilibrium& e : found) {
    list.push_back({{"agent1", strategy_json(e.strategies.first, e.classes[0])},
                    {"agent2", strategy_json(e.strategies.second, e.classes[1])}});
  }
  print(out, {{"status", found.empty() ? "no_solution" : "solved"}, {"count", found.size()}, {"equilibria", list}});
  return found.empty() ? kExitNoEquilibrium : kExitOk;
}

template <class Writer>
void emit_csv(const std::string& path, std::ostream& out, Writer&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  write(file);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pure Bayesian equilibria of two-agent double games"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "auto";
  bool all = false;
  auto* solve = app.add_subcommand("solve", "Find pure threshold equilibria");
  solve->add_option("file", file, "Game file")->required();
  solve->add_option("--method", method, "auto|dgpd|general|continuous")
      ->check(CLI::IsMember({"auto", "dgpd", "general", "continuous"}));
  solve->add_flag("--all", all, "Return every solution class");

  auto* validate = app.add_subcommand("validate", "Check a game file");
  validate->add_option("file", file, "Game file")->required();

  std::string theta1, theta2, orient1 = "DC", orient2 = "DC", alpha1 = "1", alpha2 = "1";
  auto* verify = app.add_subcommand("verify", "Regret of a threshold pair");
  verify->add_option("file", file, "Game file")->required();
  verify->add_option("--theta1", theta1, "Agent 1 threshold (rational, -inf or +inf)")->required();
  verify->add_option("--theta2", theta2, "Agent 2 threshold")->required();
  verify->add_option("--orient1", orient1, "DC or CD");
  verify->add_option("--orient2", orient2, "DC or CD");
  verify->add_option("--alpha1", alpha1, "Agent 1 probability of C on the threshold");
  verify->add_option("--alpha2", alpha2, "Agent 2 probability of C on the threshold");

  std::size_t cap = kDefaultCandidateCap;
  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration of pure equilibria");
  oracle->add_option("file", file, "Game file")->required();
  oracle->add_option("--cap", cap, "Maximum number of candidate pairs");

  ClassificationOptions cls;
  std::string out_path, records_path, dump_dir;
  auto* classify = app.add_subcommand("classify", "Label random payoff matrices as full, hybrid or solutionless");
  classify->add_option("--seeds", cls.matrices, "Number of matrices (seeds seed..seed+N-1)");
  classify->add_option("--configs", cls.configs, "Type-space configurations per matrix");
  classify->add_option("--seed", cls.seed, "Base seed")->required();
  classify->add_option("--lo", cls.lo, "Lowest payoff");
  classify->add_option("--hi", cls.hi, "Highest payoff");
  classify->add_option("--max-size", cls.max_size, "Largest type-space size");
  classify->add_option("--threads", cls.threads, "Worker threads (0 = all cores)");
  classify->add_option("--out", out_path, "CSV path (default stdout)");
  classify->add_option("--records", records_path, "Per-configuration CSV path");
  classify->add_option("--dump-dir", dump_dir, "Directory for solutionless counterexamples");

  std::string matrix_file, sizes_text;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  auto* avg = app.add_subcommand("avg-solutions", "Mean solution count per type-space size");
  avg->add_option("--matrix-file", matrix_file, "Game file providing the payoff tables")->required();
  avg->add_option("--sizes", sizes_text, "Comma-separated sizes")->required();
  avg->add_option("--trials", trials, "Configurations per size");
  avg->add_option("--seed", seed, "Seed")->required();
  avg->add_option("--threads", threads, "Worker threads (0 = all cores)");
  avg->add_option("--out", out_path, "CSV path (default stdout)");

  std::string algo = "dgpd", series = "all";
  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Solver timing over growing type spaces");
  bench->add_option("--algo", algo, "dgpd|general")->check(CLI::IsMember({"dgpd", "general"}));
  bench->add_option("--sizes", sizes_text, "Comma-separated sizes")->required();
  bench->add_option("--fixed", bench_opts.fixed, "Size held fixed in the fixed_n1 and fixed_n2 series");
  bench->add_option("--series", series, "all|diagonal|fixed-n1|fixed-n2")
      ->check(CLI::IsMember({"all", "diagonal", "fixed-n1", "fixed-n2"}));
  bench->add_option("--min-seconds", bench_opts.min_seconds, "Minimum timed duration per row");
  bench->add_option("--out", out_path, "CSV path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*solve) return cmd_solve(file, method, all, out);
    if (*validate) return cmd_validate(file, out);
    if (*verify) return cmd_verify(file, theta1, theta2, orient1, orient2, alpha1, alpha2, out);
    if (*oracle) return cmd_oracle(file, cap, out);
    if (*classify) {
      if (!dump_dir.empty()) cls.dump_dir = dump_dir;
      const ClassificationResult result = run_classification(cls);
      emit_csv(out_path, out, [&](std::ostream& o) { write_classification_csv(o, result.rows); });
      if (!records_path.empty()) emit_csv(records_path, out, [&](std::ostream& o) { write_records_csv(o, result.records); });
      err << "full-observed=" << result.count(ClassLabel::Full) << " hybrid-observed=" << result.count(ClassLabel::Hybrid)
          << " solutionless-observed=" << result.count(ClassLabel::Solutionless) << '\n';
      for (const auto& p : result.dumped) err << "counterexample: " << p.string() << '\n';
      return kExitOk;
    }
    if (*avg) {
      const Multigame source = parse_game_file(matrix_file);
      const auto rows = run_avg_solutions(source.local_games(), parse_sizes(sizes_text), trials, seed, threads);
      emit_csv(out_path, out, [&](std::ostream& o) { write_avg_solutions_csv(o, rows); });
      return kExitOk;
    }
    if (*bench) {
      bench_opts.algo = algo == "general" ? BenchAlgo::General : BenchAlgo::Dgpd;
      bench_opts.sizes = parse_sizes(sizes_text);
      bench_opts.diagonal = series == "all" || series == "diagonal";
      bench_opts.fixed_n1 = series == "all" || series == "fixed-n1";
      bench_opts.fixed_n2 = series == "all" || series == "fixed-n2";
      const auto rows = run_benchmark(bench_opts);
      emit_csv(out_path, out, [&](std::ostream& o) { write_benchmark_csv(o, rows); });
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitNoEquilibrium;
  }
  return kExitInputError;
}

}  // namespace multigame
