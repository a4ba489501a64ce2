#include "multigame/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace multigame {

template <Scalar T>
RegretReport<T> verify_equilibrium(const Multigame& game, const StrategyPair<T>& strategies) {
  if (game.num_games() != 2) throw InputError("verification requires exactly two local games");
  RegretReport<T> report;
  for (std::size_t agent = 0; agent < 2; ++agent) {
    const DiscreteTypeSpace& own = game.discrete_space(agent);
    const DiscreteTypeSpace& opp = game.discrete_space(opponent_of(agent));
    const ThresholdStrategy<T>& mine = strategies[agent];
    const ThresholdStrategy<T>& theirs = strategies[opponent_of(agent)];

    // Opponent action distribution, summed type by type.
    std::array<T, 2> opp_play{T(0), T(0)};
    for (std::size_t k = 0; k < opp.size(); ++k) {
      const ActionMix<T> mix = apply_strategy(theirs, scalar_cast<T>(opp.points()[k]));
      const T p = scalar_cast<T>(opp.probs()[k]);
      opp_play[0] += p * mix.c;
      opp_play[1] += p * mix.d;
    }

    const PayoffTable& g1 = game.payoff(agent, 0);
    const PayoffTable& g2 = game.payoff(agent, 1);
    report.worst_type[agent] = scalar_cast<T>(own.points().front());
    for (const Rational& point : own.points()) {
      const T theta = scalar_cast<T>(point);
      const T weight1 = T(1) - theta;
      std::array<T, 2> utility{T(0), T(0)};
      for (Action a : {Action::C, Action::D}) {
        for (Action b : {Action::C, Action::D}) {
          utility[index_of(a)] += opp_play[index_of(b)] *
                                  (weight1 * scalar_cast<T>(g1(a, b)) + theta * scalar_cast<T>(g2(a, b)));
        }
      }
      const ActionMix<T> played = apply_strategy(mine, theta);
      const T achieved = played.c * utility[0] + played.d * utility[1];
      for (Action a : {Action::C, Action::D}) {
        const T gain = utility[index_of(a)] - achieved;
        if (gain > report.max_regret[agent]) {
          report.max_regret[agent] = gain;
          report.worst_type[agent] = theta;
          report.worst_deviation[agent] = a;
        }
      }
    }
  }
  return report;
}

template RegretReport<Rational> verify_equilibrium<Rational>(const Multigame&, const StrategyPair<Rational>&);
template RegretReport<double> verify_equilibrium<double>(const Multigame&, const StrategyPair<double>&);

namespace {

std::vector<ExactStrategy> agent_candidates(const DiscreteTypeSpace& space, bool both_orientations) {
  std::vector<ExactStrategy> out;
  for (std::size_t k = 0; k <= space.size(); ++k) {
    out.push_back(representative(Orientation::DC, k, space));
    if (both_orientations) out.push_back(representative(Orientation::CD, k, space));
  }
  return out;
}

}  // namespace

std::vector<StrategyPair<Rational>> enumerate_candidates(const Multigame& game, CandidateOptions options) {
  const auto first = agent_candidates(game.discrete_space(0), options.both_orientations);
  const auto second = agent_candidates(game.discrete_space(1), options.both_orientations);
  std::vector<StrategyPair<Rational>> out;
  out.reserve(first.size() * second.size());
  for (const ExactStrategy& a : first) {
    for (const ExactStrategy& b : second) out.push_back({a, b});
  }
  return out;
}

std::vector<OracleEquilibrium> brute_force_ne(const Multigame& game, std::size_t cap) {
  const DiscreteTypeSpace& space1 = game.discrete_space(0);
  const DiscreteTypeSpace& space2 = game.discrete_space(1);
  const std::size_t count = 4 * (space1.size() + 1) * (space2.size() + 1);
  if (count > cap) {
    throw InputError("brute force would examine " + std::to_string(count) + " candidate pairs, above the cap of " +
                     std::to_string(cap));
  }
  const auto first = agent_candidates(space1, true);
  const auto second = agent_candidates(space2, true);

  std::set<std::array<PureClass, 2>> seen;
  std::vector<OracleEquilibrium> found;
  for (const ExactStrategy& a : first) {
    const PureClass ca = *pure_class_of(a, space1);
    for (const ExactStrategy& b : second) {
      const std::array<PureClass, 2> key{ca, *pure_class_of(b, space2)};
      if (!seen.insert(key).second) continue;
      const StrategyPair<Rational> pair{a, b};
      if (is_equilibrium(verify_equilibrium(game, pair))) found.push_back({pair, key});
    }
  }
  std::sort(found.begin(), found.end(),
            [](const OracleEquilibrium& x, const OracleEquilibrium& y) { return x.classes < y.classes; });
  return found;
}

}  // namespace multigame
