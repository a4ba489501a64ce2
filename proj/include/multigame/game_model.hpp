#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "multigame/errors.hpp"
#include "multigame/rational.hpp"
#include "multigame/strategy.hpp"

namespace multigame {

// One agent's utilities in one local game, indexed by (own action, opponent action).
struct PayoffTable {
  std::array<std::array<Rational, 2>, 2> u;

  const Rational& operator()(Action own, Action opponent) const { return u[index_of(own)][index_of(opponent)]; }
  Rational& operator()(Action own, Action opponent) { return u[index_of(own)][index_of(opponent)]; }

  // u(C, opponent) - u(D, opponent)
  Rational delta(Action opponent) const { return Rational((*this)(Action::C, opponent) - (*this)(Action::D, opponent)); }

  friend bool operator==(const PayoffTable&, const PayoffTable&) = default;
};

// A local game holds one payoff table per agent.
struct LocalGame {
  std::array<PayoffTable, 2> agent;

  friend bool operator==(const LocalGame&, const LocalGame&) = default;
};

// Finite type space: strictly increasing points in [0,1] with an exact prior.
class DiscreteTypeSpace {
 public:
  DiscreteTypeSpace(std::vector<Rational> points, std::vector<Rational> probs);

  static DiscreteTypeSpace uniform(std::vector<Rational> points);

  std::size_t size() const { return points_.size(); }
  const std::vector<Rational>& points() const { return points_; }
  const std::vector<Rational>& probs() const { return probs_; }
  // cumulative()[k] = probability of the first k+1 points.
  const std::vector<Rational>& cumulative() const { return cumulative_; }

  // Probability mass of the k lowest types, k in [0, size()].
  Rational mass_below(std::size_t k) const;

  friend bool operator==(const DiscreteTypeSpace& a, const DiscreteTypeSpace& b) {
    return a.points_ == b.points_ && a.probs_ == b.probs_;
  }

 private:
  std::vector<Rational> points_;
  std::vector<Rational> probs_;
  std::vector<Rational> cumulative_;
};

// Uniform prior on [0,1].
struct Uniform01 {
  friend bool operator==(const Uniform01&, const Uniform01&) = default;
};

// Atom-free prior given by a piecewise-linear CDF through (knots, values).
class TabulatedCdf {
 public:
  TabulatedCdf(std::vector<double> knots, std::vector<double> values);

  static TabulatedCdf uniform() { return TabulatedCdf({0.0, 1.0}, {0.0, 1.0}); }

  double cdf(double x) const;

  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const TabulatedCdf&, const TabulatedCdf&) = default;

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
};

using TypeSpace = std::variant<DiscreteTypeSpace, Uniform01, TabulatedCdf>;

inline bool is_discrete(const TypeSpace& t) { return std::holds_alternative<DiscreteTypeSpace>(t); }

// CDF of a continuous type space; rejects discrete spaces.
double continuous_cdf(const TypeSpace& t, double x);

// The continuous prior as a tabulated CDF (Uniform01 becomes knots {0,1}).
TabulatedCdf as_tabulated(const TypeSpace& t);

// Double Game Prisoner Dilemma parameters; z is fixed to s.
struct DgpdParams {
  Rational t, r, y, p, s;

  friend bool operator==(const DgpdParams&, const DgpdParams&) = default;
};

struct ValidityReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidityReport validate_dgpd(const DgpdParams& params);

// Rejects non-finite values with "non-finite payoff"; converts exactly.
DgpdParams dgpd_from_doubles(double t, double r, double y, double p, double s);

// Prisoner's Dilemma followed by the social game (y for C, z = s for D).
std::vector<LocalGame> dgpd_local_games(const DgpdParams& params);

// Recovers DGPD parameters when the tables have exactly the DGPD shape and pass validation.
std::optional<DgpdParams> detect_dgpd(std::span<const LocalGame> games);

// Two-agent uniform multigame with normalized types (1 - theta, theta) and independent priors.
class Multigame {
 public:
  Multigame(std::vector<LocalGame> games, std::array<TypeSpace, 2> types,
            std::optional<DgpdParams> dgpd = std::nullopt);

  static Multigame from_dgpd(const DgpdParams& params, TypeSpace type1, TypeSpace type2);

  std::size_t num_games() const { return games_.size(); }
  const std::vector<LocalGame>& local_games() const { return games_; }
  const PayoffTable& payoff(std::size_t agent, std::size_t game) const { return games_.at(game).agent.at(agent); }
  // Agent's tables across all local games.
  std::vector<PayoffTable> payoffs_of(std::size_t agent) const;

  const TypeSpace& type_space(std::size_t agent) const { return types_.at(agent); }
  const DiscreteTypeSpace& discrete_space(std::size_t agent) const;

  // Declared DGPD block, if any.
  const std::optional<DgpdParams>& declared_dgpd() const { return dgpd_; }
  // Declared or detected DGPD parameters.
  std::optional<DgpdParams> dgpd() const;

  bool is_discrete() const { return multigame::is_discrete(types_[0]) && multigame::is_discrete(types_[1]); }
  bool is_continuous() const { return !multigame::is_discrete(types_[0]) && !multigame::is_discrete(types_[1]); }

  friend bool operator==(const Multigame&, const Multigame&) = default;

 private:
  std::vector<LocalGame> games_;
  std::array<TypeSpace, 2> types_;
  std::optional<DgpdParams> dgpd_;
};

constexpr std::size_t opponent_of(std::size_t agent) { return 1 - agent; }

// Probability that the opponent, following s under the given prior, plays C.
Rational zeta_c(const DiscreteTypeSpace& opponent_space, const ExactStrategy& s);
double zeta_c(const DiscreteTypeSpace& opponent_space, const FloatStrategy& s);
double zeta_c(const TypeSpace& opponent_space, const FloatStrategy& s);

// zeta_i^{a}(sigma_{-i}) for agent i, drawing the prior from the opponent's type space.
template <Scalar T>
T zeta(const Multigame& game, std::size_t agent, Action opponent_action, const ThresholdStrategy<T>& opponent_strategy);

// Expected local-game utilities u_bar_j(a, sigma_{-i}) for a given zeta^C.
template <Scalar T>
T local_expected_utility(const PayoffTable& table, Action own, const T& zeta_c);

// Expected utility of playing `action` with type theta against the opponent strategy.
template <Scalar T>
T expected_utility(const Multigame& game, std::size_t agent, Action action, const T& theta,
                   const ThresholdStrategy<T>& opponent_strategy);

// delta_j = u_bar_j(C) - u_bar_j(D), for any number of local games.
template <Scalar T>
std::vector<T> delta_vector(std::span<const PayoffTable> tables, const T& zeta_c);

template <Scalar T>
std::vector<T> delta_vector(const Multigame& game, std::size_t agent, const ThresholdStrategy<T>& opponent_strategy);

enum class LocalGameKind { Cooperative, Competitive, Neither };

const char* to_string(LocalGameKind k);

LocalGameKind classify_local_game(const PayoffTable& table);
LocalGameKind is_purely_cooperative(const Multigame& game, std::size_t agent, std::size_t local_game);

// Every agent has a purely cooperative or competitive local game. Continuous priors only.
bool has_pure_ne_guarantee(const Multigame& game);

}  // namespace multigame
