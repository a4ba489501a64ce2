#include "multigame/discrete_solver.hpp"

#include <algorithm>
#include <string>

#include "multigame/oracle.hpp"

namespace multigame {

std::vector<Rational> compute_cumul_proba(std::span<const Rational> probs) {
  if (probs.empty()) throw InputError("empty distribution");
  std::vector<Rational> out;
  out.reserve(probs.size());
  Rational running = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0) throw InputError("negative probability at index " + std::to_string(i));
    running += probs[i];
    out.push_back(running);
  }
  if (running != 1) throw InputError("probabilities sum to " + to_string(running) + ", expected 1");
  return out;
}

std::size_t finder(std::span<const Rational> points, const Rational& threshold) {
  return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), threshold) - points.begin());
}

std::size_t finder(std::span<const Rational> points, const Extended<Rational>& threshold) {
  if (threshold.is_neg_inf()) return 0;
  if (threshold.is_pos_inf()) return points.size();
  return finder(points, threshold.value());
}

SearchWindow search_space_boundaries(const DgpdParams& params, std::span<const Rational> points) {
  const LambdaMu lm = lambda_mu(params);
  SearchWindow w;
  w.start = static_cast<std::size_t>(std::upper_bound(points.begin(), points.end(), lm.low()) - points.begin());
  w.end = finder(points, lm.high());
  // lambda == mu on a type point: the single interval just below it.
  if (w.start > w.end) w.start = w.end;
  return w;
}

namespace {

void finish_candidates(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

void certify(const Multigame& game, EquilibriumResult& result) {
  const RegretReport<Rational> report = verify_equilibrium(game, result.strategies);
  if (!is_equilibrium(report)) {
    throw SolverError("search returned a pair with regret " + to_string(report.regret()));
  }
  result.regret = report.regret();
}

bool in_response(const BestResponse<Rational>& br, const PureClass& c, const DiscreteTypeSpace& space) {
  if (std::holds_alternative<Indifferent>(br)) return true;
  const std::vector<PureClass> classes = response_classes(br, space);
  return std::find(classes.begin(), classes.end(), c) != classes.end();
}

void note_threshold(const BestResponse<Rational>& br, std::vector<Rational>& out) {
  if (const auto* r = std::get_if<ThresholdResponse<Rational>>(&br); r != nullptr && r->threshold.is_finite()) {
    out.push_back(r->threshold.value());
  }
}

}  // namespace

SearchReport dgpd_search(const Multigame& game, SearchOptions options) {
  const std::optional<DgpdParams> params = game.dgpd();
  if (!params) throw InputError("dgpd search needs DGPD payoff tables");
  const DiscreteTypeSpace& space1 = game.discrete_space(0);
  const DiscreteTypeSpace& space2 = game.discrete_space(1);
  const auto& pts1 = space1.points();
  const auto& pts2 = space2.points();
  const std::size_t n1 = pts1.size();

  SearchReport report;
  const SearchWindow window = search_space_boundaries(*params, pts1);
  for (std::size_t k = window.start; k <= window.end; ++k) {
    ++report.iterations;
    // Agent 1 plays D on its k lowest types.
    Rational zeta2 = 1 - space1.mass_below(k);
    Rational theta2 = threshold_function_dgpd<Rational>(zeta2, *params);
    const std::size_t k2 = finder(pts2, theta2);
    Rational zeta1 = 1 - space2.mass_below(k2);
    Rational theta1 = threshold_function_dgpd<Rational>(zeta1, *params);
    report.candidates.push_back(theta2);
    report.candidates.push_back(theta1);

    const bool above_lower = k == 0 || pts1[k - 1] <= theta1;
    const bool below_upper = k == n1 || theta1 <= pts1[k];
    if (!(above_lower && below_upper)) continue;

    EquilibriumResult result;
    // A threshold on the interval's lower point must leave that type on the D side.
    const bool on_lower_point = k > 0 && theta1 == pts1[k - 1];
    result.strategies.first = {Extended<Rational>(theta1), Orientation::DC, Rational(on_lower_point ? 0 : 1)};
    result.strategies.second = {Extended<Rational>(theta2), Orientation::DC, Rational(1)};
    result.intervals = {IntervalIndex{0, k}, IntervalIndex{1, k2}};
    result.classes = {canonical_class(Orientation::DC, k, n1), canonical_class(Orientation::DC, k2, pts2.size())};
    report.solutions.push_back(std::move(result));
    if (!options.find_all) break;
  }

  finish_candidates(report.candidates);
  for (EquilibriumResult& result : report.solutions) {
    result.candidates = report.candidates;
    if (options.certify) certify(game, result);
  }
  return report;
}

SearchReport general_search(const Multigame& game, SearchOptions options) {
  if (game.num_games() != 2) throw InputError("general search requires exactly two local games");
  const DiscreteTypeSpace& space1 = game.discrete_space(0);
  const DiscreteTypeSpace& space2 = game.discrete_space(1);
  const PayoffTable& a1g1 = game.payoff(0, 0);
  const PayoffTable& a1g2 = game.payoff(0, 1);
  const PayoffTable& a2g1 = game.payoff(1, 0);
  const PayoffTable& a2g2 = game.payoff(1, 1);

  SearchReport report;
  for (const PureClass& start : all_pure_classes(space1)) {
    ++report.iterations;
    const ExactStrategy s1 = representative(start, space1);
    const BestResponse<Rational> br2 = threshold_function_general<Rational>(zeta_c(space1, s1), a2g1, a2g2);
    note_threshold(br2, report.candidates);
    for (const PureClass& reply : response_classes(br2, space2)) {
      const ExactStrategy s2 = strategy_in_class(br2, reply, space2);
      const BestResponse<Rational> br1 = threshold_function_general<Rational>(zeta_c(space2, s2), a1g1, a1g2);
      note_threshold(br1, report.candidates);
      if (!in_response(br1, start, space1)) continue;

      EquilibriumResult result;
      result.strategies = {strategy_in_class(br1, start, space1), s2};
      result.intervals = {IntervalIndex{0, start.cut}, IntervalIndex{1, reply.cut}};
      result.classes = {start, reply};
      report.solutions.push_back(std::move(result));
      if (!options.find_all) break;
    }
    if (!options.find_all && report.found()) break;
  }

  finish_candidates(report.candidates);
  for (EquilibriumResult& result : report.solutions) {
    result.candidates = report.candidates;
    if (options.certify) certify(game, result);
  }
  return report;
}

namespace {

enum class Trend { Flat, Up, Down, Mixed };

Trend trend_of(std::span<const std::size_t> values) {
  bool up = false;
  bool down = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) up = true;
    if (values[i] < values[i - 1]) down = true;
  }
  if (up && down) return Trend::Mixed;
  if (up) return Trend::Up;
  if (down) return Trend::Down;
  return Trend::Flat;
}

}  // namespace

std::size_t monotone_fixed_point(std::span<const std::size_t> f, std::span<const std::size_t> g) {
  if (f.empty() || g.empty()) throw InputError("fixed-point maps must be non-empty");
  // f has M+1 entries in [0,N]; g has N+1 entries in [0,M].
  for (std::size_t v : f) {
    if (v >= g.size()) throw InputError("f maps outside [0,N]");
  }
  for (std::size_t v : g) {
    if (v >= f.size()) throw InputError("g maps outside [0,M]");
  }
  const Trend tf = trend_of(f);
  const Trend tg = trend_of(g);
  const bool compatible = tf == Trend::Flat || tg == Trend::Flat || tf == tg;
  if (tf == Trend::Mixed || tg == Trend::Mixed || !compatible) {
    throw InputError("f and g must both be nondecreasing or both nonincreasing");
  }
  std::size_t c = 0;
  for (std::size_t step = 0; step <= g.size(); ++step) {
    const std::size_t next = f[g[c]];
    if (next == c) return c;
    c = next;
  }
  throw SolverError("fixed-point iteration did not settle");
}

bool prop10_check(std::span<const LocalGame> games) {
  if (games.size() != 2) throw InputError("the full-set condition is stated for two local games");
  std::array<Orientation, 2> type{};
  std::array<int, 2> det_sign{};
  for (std::size_t agent = 0; agent < 2; ++agent) {
    const PayoffTable& g1 = games[0].agent[agent];
    const PayoffTable& g2 = games[1].agent[agent];
    if (const auto fv = forbidden_value(g1, g2); fv && *fv >= 0 && *fv <= 1) return false;
    // Without a forbidden value in [0,1] the slope keeps the sign it has at zeta = 0.
    const int slope = sgn(Rational(g2.delta(Action::D) - g1.delta(Action::D)));
    if (slope == 0) return false;
    type[agent] = slope > 0 ? Orientation::DC : Orientation::CD;
    det_sign[agent] = sgn(delta_determinant(g1, g2));
  }
  // A constant threshold function is compatible with either direction.
  if (det_sign[0] == 0 || det_sign[1] == 0) return true;
  return (type[0] == type[1]) ? det_sign[0] == det_sign[1] : det_sign[0] == -det_sign[1];
}

bool prop10_check(const Multigame& game) { return prop10_check(std::span<const LocalGame>(game.local_games())); }

}  // namespace multigame
