#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "multigame/game_model.hpp"
#include "multigame/strategy.hpp"
#include "multigame/threshold.hpp"

namespace multigame {

// Interval I^k of an agent's partition [0,p_1], [p_1,p_2], ..., [p_n,1].
struct IntervalIndex {
  std::size_t agent = 0;
  std::size_t k = 0;

  friend bool operator==(const IntervalIndex&, const IntervalIndex&) = default;
};

struct EquilibriumResult {
  StrategyPair<Rational> strategies;
  std::array<IntervalIndex, 2> intervals;
  std::array<PureClass, 2> classes;
  // Best-response threshold values met while searching, sorted and distinct.
  std::vector<Rational> candidates;
  // Oracle regret; present when the search was asked to certify (always 0 then).
  std::optional<Rational> regret;
};

struct SearchOptions {
  bool find_all = false;
  bool certify = true;
};

struct SearchReport {
  std::vector<EquilibriumResult> solutions;
  std::size_t iterations = 0;  // main-loop passes
  std::vector<Rational> candidates;

  bool found() const { return !solutions.empty(); }
};

// Running sums of a distribution; rejects negative entries and totals other than 1.
std::vector<Rational> compute_cumul_proba(std::span<const Rational> probs);

// Index k of the interval holding the threshold; a threshold on a type point goes to the
// lower of the two intervals that share it.
std::size_t finder(std::span<const Rational> points, const Extended<Rational>& threshold);
std::size_t finder(std::span<const Rational> points, const Rational& threshold);

// Inclusive range of agent-1 intervals that can hold a threshold in [min(lambda,mu), max(lambda,mu)].
// The window starts at the interval whose lower end is min(lambda,mu) when that value is a type point.
struct SearchWindow {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start + 1; }
};

SearchWindow search_space_boundaries(const DgpdParams& params, std::span<const Rational> points);

// Exhaustive best-response chain over agent 1's window for a DGPD on finite type spaces.
SearchReport dgpd_search(const Multigame& game, SearchOptions options = {});

// Both orientations for every agent-1 class, arbitrary 2x2x2 payoffs.
SearchReport general_search(const Multigame& game, SearchOptions options = {});

// c with f(g(c)) = c for monotone maps f: [0,M] -> [0,N] and g: [0,N] -> [0,M], both
// nondecreasing or both nonincreasing, found by iterating f o g from 0.
std::size_t monotone_fixed_point(std::span<const std::size_t> f, std::span<const std::size_t> g);

// Sufficient condition for a payoff matrix to admit a pure equilibrium for every type-space
// configuration: both forbidden values outside [0,1] and compatible determinant signs.
bool prop10_check(const Multigame& game);
bool prop10_check(std::span<const LocalGame> games);

}  // namespace multigame
