#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "multigame/game_model.hpp"
#include "multigame/strategy.hpp"
#include "multigame/threshold.hpp"

namespace multigame {

// Largest expected-utility gain available to any type of each agent by deviating.
template <Scalar T>
struct RegretReport {
  std::array<T, 2> max_regret{T(0), T(0)};
  std::array<T, 2> worst_type{T(0), T(0)};
  std::array<Action, 2> worst_deviation{Action::C, Action::C};

  T regret() const { return max_regret[0] < max_regret[1] ? max_regret[1] : max_regret[0]; }
};

// Float-mode equilibrium tolerance on the regret.
inline constexpr double kFloatRegretTolerance = 1e-9;

inline bool is_equilibrium(const RegretReport<Rational>& r) { return r.regret() <= 0; }
inline bool is_equilibrium(const RegretReport<double>& r) { return r.regret() <= kFloatRegretTolerance; }

// Checks every type point and both actions by direct summation over the opponent's prior.
// Only payoff tables and apply_strategy are used, never the solvers' zeta/threshold code.
template <Scalar T>
RegretReport<T> verify_equilibrium(const Multigame& game, const StrategyPair<T>& strategies);

struct CandidateOptions {
  bool both_orientations = true;
};

// One representative per interval (and orientation) per agent, paired exhaustively.
std::vector<StrategyPair<Rational>> enumerate_candidates(const Multigame& game, CandidateOptions options = {});

struct OracleEquilibrium {
  StrategyPair<Rational> strategies;
  std::array<PureClass, 2> classes;
};

inline constexpr std::size_t kDefaultCandidateCap = 1'000'000;

// All pure threshold equilibria, deduplicated by equivalence and sorted by class.
std::vector<OracleEquilibrium> brute_force_ne(const Multigame& game, std::size_t cap = kDefaultCandidateCap);

}  // namespace multigame
