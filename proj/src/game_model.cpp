#include "multigame/game_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace multigame {

// ---------------------------------------------------------------------------
// Type spaces

DiscreteTypeSpace::DiscreteTypeSpace(std::vector<Rational> points, std::vector<Rational> probs)
    : points_(std::move(points)), probs_(std::move(probs)) {
  if (points_.empty()) throw InputError("type space has no points");
  for (Rational& q : points_) q.canonicalize();
  for (Rational& q : probs_) q.canonicalize();
  if (points_.size() != probs_.size()) {
    throw InputError("type space has " + std::to_string(points_.size()) + " points but " +
                     std::to_string(probs_.size()) + " probabilities");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] < 0 || points_[i] > 1) {
      throw InputError("type point " + to_string(points_[i]) + " lies outside [0,1]");
    }
    if (i > 0 && !(points_[i - 1] < points_[i])) {
      throw InputError("type points are not strictly increasing at index " + std::to_string(i));
    }
    if (probs_[i] < 0) throw InputError("negative probability at index " + std::to_string(i));
  }
  cumulative_.resize(probs_.size());
  std::partial_sum(probs_.begin(), probs_.end(), cumulative_.begin());
  if (cumulative_.back() != 1) {
    throw InputError("probabilities sum to " + to_string(cumulative_.back()) + ", expected 1");
  }
}

DiscreteTypeSpace DiscreteTypeSpace::uniform(std::vector<Rational> points) {
  const std::size_t n = points.size();
  if (n == 0) throw InputError("type space has no points");
  std::vector<Rational> probs(n, Rational(1, static_cast<unsigned long>(n)));
  return DiscreteTypeSpace(std::move(points), std::move(probs));
}

Rational DiscreteTypeSpace::mass_below(std::size_t k) const {
  if (k == 0) return 0;
  return cumulative_.at(k - 1);
}

TabulatedCdf::TabulatedCdf(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.size() < 2) throw InputError("tabulated CDF needs at least two knots");
  if (knots_.size() != values_.size()) throw InputError("tabulated CDF knots and values differ in length");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i]) || !std::isfinite(values_[i])) throw InputError("tabulated CDF has a non-finite entry");
    if (knots_[i] < 0.0 || knots_[i] > 1.0) throw InputError("tabulated CDF knot outside [0,1]");
    if (i > 0 && !(knots_[i - 1] < knots_[i])) throw InputError("tabulated CDF knots are not strictly increasing");
    if (i > 0 && values_[i] < values_[i - 1]) throw InputError("tabulated CDF values decrease");
  }
  if (values_.front() != 0.0) throw InputError("tabulated CDF must start at 0");
  if (values_.back() != 1.0) throw InputError("tabulated CDF must end at 1");
}

double TabulatedCdf::cdf(double x) const {
  if (x <= knots_.front()) return 0.0;
  if (x >= knots_.back()) return 1.0;
  const auto hi = static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), x) - knots_.begin());
  const std::size_t lo = hi - 1;
  const double w = (x - knots_[lo]) / (knots_[hi] - knots_[lo]);
  return values_[lo] + w * (values_[hi] - values_[lo]);
}

double continuous_cdf(const TypeSpace& t, double x) {
  if (std::holds_alternative<Uniform01>(t)) return std::clamp(x, 0.0, 1.0);
  if (const auto* tab = std::get_if<TabulatedCdf>(&t)) return tab->cdf(x);
  throw InputError("a continuous prior is required");
}

TabulatedCdf as_tabulated(const TypeSpace& t) {
  if (std::holds_alternative<Uniform01>(t)) return TabulatedCdf::uniform();
  if (const auto* tab = std::get_if<TabulatedCdf>(&t)) return *tab;
  throw InputError("a continuous prior is required");
}

// ---------------------------------------------------------------------------
// DGPD parameters

ValidityReport validate_dgpd(const DgpdParams& q) {
  ValidityReport report;
  auto require = [&](bool holds, const char* name) {
    if (!holds) report.violations.emplace_back(std::string(name) + " fails");
  };
  require(q.t > q.r, "t > r");
  require(q.r > q.y, "r > y");
  require(q.y > q.p, "y > p");
  require(q.p > q.s, "p > s");
  require(2 * q.r > q.t + q.s, "r > (t+s)/2");
  require(2 * q.y > q.r + q.p, "y > (r+p)/2");
  return report;
}

DgpdParams dgpd_from_doubles(double t, double r, double y, double p, double s) {
  for (double v : {t, r, y, p, s}) {
    if (!std::isfinite(v)) throw InputError("non-finite payoff");
  }
  return {Rational(t), Rational(r), Rational(y), Rational(p), Rational(s)};
}

std::vector<LocalGame> dgpd_local_games(const DgpdParams& q) {
  using enum Action;
  LocalGame pd;
  LocalGame social;
  for (std::size_t i = 0; i < 2; ++i) {
    PayoffTable& a = pd.agent[i];
    a(C, C) = q.r;
    a(C, D) = q.s;
    a(D, C) = q.t;
    a(D, D) = q.p;
    PayoffTable& b = social.agent[i];
    b(C, C) = q.y;
    b(C, D) = q.y;
    b(D, C) = q.s;
    b(D, D) = q.s;
  }
  return {pd, social};
}

std::optional<DgpdParams> detect_dgpd(std::span<const LocalGame> games) {
  using enum Action;
  if (games.size() != 2) return std::nullopt;
  const PayoffTable& pd = games[0].agent[0];
  const PayoffTable& social = games[1].agent[0];
  DgpdParams q{pd(D, C), pd(C, C), social(C, C), pd(D, D), pd(C, D)};
  const std::vector<LocalGame> expected = dgpd_local_games(q);
  if (!std::equal(games.begin(), games.end(), expected.begin())) return std::nullopt;
  if (!validate_dgpd(q).ok()) return std::nullopt;
  return q;
}

// ---------------------------------------------------------------------------
// Multigame

Multigame::Multigame(std::vector<LocalGame> games, std::array<TypeSpace, 2> types, std::optional<DgpdParams> dgpd)
    : games_(std::move(games)), types_(std::move(types)), dgpd_(std::move(dgpd)) {
  if (games_.empty()) throw InputError("a multigame needs at least one local game");
  if (dgpd_) {
    const ValidityReport report = validate_dgpd(*dgpd_);
    if (!report.ok()) throw InputError("dgpd block is invalid: " + report.violations.front());
    if (games_ != dgpd_local_games(*dgpd_)) throw InputError("dgpd block does not match the payoff tables");
  }
}

Multigame Multigame::from_dgpd(const DgpdParams& params, TypeSpace type1, TypeSpace type2) {
  return Multigame(dgpd_local_games(params), {std::move(type1), std::move(type2)}, params);
}

std::vector<PayoffTable> Multigame::payoffs_of(std::size_t agent) const {
  std::vector<PayoffTable> out;
  out.reserve(games_.size());
  for (const LocalGame& g : games_) out.push_back(g.agent.at(agent));
  return out;
}

const DiscreteTypeSpace& Multigame::discrete_space(std::size_t agent) const {
  const auto* d = std::get_if<DiscreteTypeSpace>(&types_.at(agent));
  if (d == nullptr) throw InputError("agent " + std::to_string(agent + 1) + " does not have a discrete type space");
  return *d;
}

std::optional<DgpdParams> Multigame::dgpd() const {
  if (dgpd_) return dgpd_;
  return detect_dgpd(games_);
}

// ---------------------------------------------------------------------------
// zeta, expected utility, delta

Rational zeta_c(const DiscreteTypeSpace& space, const ExactStrategy& s) {
  const bool dc = s.orientation == Orientation::DC;
  if (!s.threshold.is_finite()) {
    // DC with -inf and CD with +inf play C everywhere.
    return (s.threshold.is_neg_inf() == dc) ? Rational(1) : Rational(0);
  }
  const auto& pts = space.points();
  const Rational& q = s.threshold.value();
  const auto lower = static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), q) - pts.begin());
  const Rational below = space.mass_below(lower);
  Rational at = 0;
  if (lower < pts.size() && pts[lower] == q) at = space.probs()[lower];
  Rational above = 1 - below - at;
  Rational result = (dc ? above : below) + s.alpha * at;
  return result;
}

double zeta_c(const DiscreteTypeSpace& space, const FloatStrategy& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    sum += space.probs()[i].get_d() * apply_strategy(s, space.points()[i].get_d()).c;
  }
  return sum;
}

double zeta_c(const TypeSpace& space, const FloatStrategy& s) {
  if (const auto* d = std::get_if<DiscreteTypeSpace>(&space)) return zeta_c(*d, s);
  const bool dc = s.orientation == Orientation::DC;
  if (!s.threshold.is_finite()) return (s.threshold.is_neg_inf() == dc) ? 1.0 : 0.0;
  // Atom-free prior: the boundary carries no mass, so alpha is irrelevant.
  const double below = continuous_cdf(space, s.threshold.value());
  return dc ? 1.0 - below : below;
}

template <Scalar T>
T zeta(const Multigame& game, std::size_t agent, Action opponent_action, const ThresholdStrategy<T>& opponent_strategy) {
  const std::size_t opp = opponent_of(agent);
  T zc;
  if constexpr (std::same_as<T, Rational>) {
    zc = zeta_c(game.discrete_space(opp), opponent_strategy);
  } else {
    zc = zeta_c(game.type_space(opp), opponent_strategy);
  }
  if (opponent_action == Action::C) return zc;
  T zd = T(1) - zc;
  return zd;
}

template <Scalar T>
T local_expected_utility(const PayoffTable& table, Action own, const T& zc) {
  T zd = T(1) - zc;
  T value = zc * scalar_cast<T>(table(own, Action::C)) + zd * scalar_cast<T>(table(own, Action::D));
  return value;
}

namespace {

void require_two_games(const Multigame& game) {
  if (game.num_games() != 2) throw InputError("scalar types (1 - theta, theta) require exactly two local games");
}

}  // namespace

template <Scalar T>
T expected_utility(const Multigame& game, std::size_t agent, Action action, const T& theta,
                   const ThresholdStrategy<T>& opponent_strategy) {
  require_two_games(game);
  const T zc = zeta(game, agent, Action::C, opponent_strategy);
  const T u1 = local_expected_utility(game.payoff(agent, 0), action, zc);
  const T u2 = local_expected_utility(game.payoff(agent, 1), action, zc);
  T value = (T(1) - theta) * u1 + theta * u2;
  return value;
}

template <Scalar T>
std::vector<T> delta_vector(std::span<const PayoffTable> tables, const T& zc) {
  std::vector<T> out;
  out.reserve(tables.size());
  T zd = T(1) - zc;
  for (const PayoffTable& table : tables) {
    T d = zc * scalar_cast<T>(table.delta(Action::C)) + zd * scalar_cast<T>(table.delta(Action::D));
    out.push_back(d);
  }
  return out;
}

template <Scalar T>
std::vector<T> delta_vector(const Multigame& game, std::size_t agent, const ThresholdStrategy<T>& opponent_strategy) {
  const std::vector<PayoffTable> tables = game.payoffs_of(agent);
  const T zc = zeta(game, agent, Action::C, opponent_strategy);
  return delta_vector<T>(std::span<const PayoffTable>(tables), zc);
}

template Rational zeta<Rational>(const Multigame&, std::size_t, Action, const ExactStrategy&);
template double zeta<double>(const Multigame&, std::size_t, Action, const FloatStrategy&);
template Rational local_expected_utility<Rational>(const PayoffTable&, Action, const Rational&);
template double local_expected_utility<double>(const PayoffTable&, Action, const double&);
template Rational expected_utility<Rational>(const Multigame&, std::size_t, Action, const Rational&, const ExactStrategy&);
template double expected_utility<double>(const Multigame&, std::size_t, Action, const double&, const FloatStrategy&);
template std::vector<Rational> delta_vector<Rational>(std::span<const PayoffTable>, const Rational&);
template std::vector<double> delta_vector<double>(std::span<const PayoffTable>, const double&);
template std::vector<Rational> delta_vector<Rational>(const Multigame&, std::size_t, const ExactStrategy&);
template std::vector<double> delta_vector<double>(const Multigame&, std::size_t, const FloatStrategy&);

// ---------------------------------------------------------------------------
// Local game classification

const char* to_string(LocalGameKind k) {
  switch (k) {
    case LocalGameKind::Cooperative: return "cooperative";
    case LocalGameKind::Competitive: return "competitive";
    case LocalGameKind::Neither: return "neither";
  }
  return "?";
}

LocalGameKind classify_local_game(const PayoffTable& table) {
  const int sc = sgn(table.delta(Action::C));
  const int sd = sgn(table.delta(Action::D));
  if (sc > 0 && sd > 0) return LocalGameKind::Cooperative;
  if (sc < 0 && sd < 0) return LocalGameKind::Competitive;
  return LocalGameKind::Neither;
}

LocalGameKind is_purely_cooperative(const Multigame& game, std::size_t agent, std::size_t local_game) {
  return classify_local_game(game.payoff(agent, local_game));
}

bool has_pure_ne_guarantee(const Multigame& game) {
  if (!game.is_continuous()) {
    throw InputError("the pure-equilibrium guarantee applies to continuous priors only");
  }
  for (std::size_t agent = 0; agent < 2; ++agent) {
    bool found = false;
    for (std::size_t j = 0; j < game.num_games(); ++j) {
      if (classify_local_game(game.payoff(agent, j)) != LocalGameKind::Neither) found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace multigame
