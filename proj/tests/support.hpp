#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "multigame/experiments.hpp"
#include "multigame/game_model.hpp"
#include "multigame/threshold.hpp"

namespace testing {

using namespace multigame;

inline Rational q(const char* text) { return parse_rational(text); }

inline PayoffTable table(long cc, long cd, long dc, long dd) {
  PayoffTable t;
  t(Action::C, Action::C) = cc;
  t(Action::C, Action::D) = cd;
  t(Action::D, Action::C) = dc;
  t(Action::D, Action::D) = dd;
  return t;
}

// Bimatrix rows are agent 1's actions, columns agent 2's; entries (u1, u2).
inline LocalGame bimatrix(std::array<std::array<std::pair<long, long>, 2>, 2> m) {
  LocalGame g;
  g.agent[0] = table(m[0][0].first, m[0][1].first, m[1][0].first, m[1][1].first);
  g.agent[1] = table(m[0][0].second, m[1][0].second, m[0][1].second, m[1][1].second);
  return g;
}

inline std::vector<LocalGame> pair_games() {
  return {bimatrix({{{{{3, 4}, {4, 3}}}, {{{5, 0}, {1, 1}}}}}), bimatrix({{{{{2, 4}, {6, 5}}}, {{{7, 2}, {5, 2}}}}})};
}

inline DiscreteTypeSpace space(std::vector<Rational> points, std::vector<Rational> probs) {
  return DiscreteTypeSpace(std::move(points), std::move(probs));
}

inline Multigame pair_game(bool prime) {
  const std::vector<Rational> pr{q("3/10"), q("2/5"), q("3/10")};
  DiscreteTypeSpace t1 = space({q("1/5"), q("1/2"), prime ? q("7/10") : q("3/5")}, pr);
  DiscreteTypeSpace t2 = space({q("1/5"), q("2/5"), q("4/5")}, pr);
  return Multigame(pair_games(), {std::move(t1), std::move(t2)});
}

inline DiscreteTypeSpace sixtieths() {
  std::vector<Rational> pts;
  for (long t = 0; t <= 60; ++t) pts.push_back(frac(t, 60));
  return DiscreteTypeSpace::uniform(std::move(pts));
}

inline const DgpdParams kGridParams{20, 16, 15, 6, 3};
inline const DgpdParams kSadp{9, 5, 4, 2, 0};

inline Multigame sixtieths_game() { return Multigame::from_dgpd(kGridParams, sixtieths(), sixtieths()); }

// Matching pennies twice over: the type weights change nothing, so no pure equilibrium exists.
inline Multigame matching_pennies_double(DiscreteTypeSpace t1, DiscreteTypeSpace t2) {
  const LocalGame pennies = bimatrix({{{{{1, -1}, {-1, 1}}}, {{{-1, 1}, {1, -1}}}}});
  return Multigame({pennies, pennies}, {std::move(t1), std::move(t2)});
}

inline std::vector<LocalGame> random_games(std::mt19937_64& rng, long lo, long hi) {
  return random_payoff_matrix(rng(), lo, hi);
}

inline Multigame random_discrete_game(std::mt19937_64& rng, std::size_t max_n, long lo, long hi) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  const std::size_t n1 = size(rng);
  const std::size_t n2 = size(rng);
  DiscreteTypeSpace t1 = random_type_space(rng, n1);
  DiscreteTypeSpace t2 = random_type_space(rng, n2);
  return Multigame(random_games(rng, lo, hi), {std::move(t1), std::move(t2)});
}

inline Multigame random_dgpd_game(std::mt19937_64& rng, std::size_t max_n) {
  const DgpdParams params = random_dgpd_params(rng);
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  const std::size_t n1 = size(rng);
  const std::size_t n2 = size(rng);
  DiscreteTypeSpace t1 = random_type_space(rng, n1);
  DiscreteTypeSpace t2 = random_type_space(rng, n2);
  return Multigame::from_dgpd(params, std::move(t1), std::move(t2));
}

// A random threshold strategy on a discrete space: finite cuts at, between or outside the
// type points, infinite ends, both orientations and boundary mixes in {0, 1/2, 1}.
inline ExactStrategy random_strategy(std::mt19937_64& rng, const DiscreteTypeSpace& s) {
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<std::size_t> idx(0, s.size() - 1);
  const Orientation o = pick(rng) % 2 == 0 ? Orientation::DC : Orientation::CD;
  const Rational alphas[] = {Rational(0), frac(1, 2), Rational(1)};
  const Rational alpha = alphas[pick(rng) % 3];
  switch (pick(rng)) {
    case 0: return {Extended<Rational>::neg_inf(), o, alpha};
    case 1: return {Extended<Rational>::pos_inf(), o, alpha};
    case 2:
    case 3: return {Extended<Rational>(s.points()[idx(rng)]), o, alpha};
    default: {
      std::uniform_int_distribution<std::size_t> interval(0, s.size());
      ExactStrategy r = representative(o, interval(rng), s);
      r.alpha = alpha;
      return r;
    }
  }
}

inline std::filesystem::path corpus(const std::string& name) {
  return std::filesystem::path(MULTIGAME_DATA_DIR) / "games" / name;
}

}  // namespace testing
