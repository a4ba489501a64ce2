#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "multigame/game_model.hpp"
#include "multigame/strategy.hpp"

namespace multigame {

// ---------------------------------------------------------------------------
// DGPD best-response threshold

// theta*(x) = (x(t-r) + (1-x)(p-s)) / (x(t-r) + (1-x)(p-s) + (y-s))
template <Scalar T>
T threshold_function_dgpd(const T& zeta_c, const DgpdParams& params);

struct LambdaMu {
  Rational lambda;  // theta*(1)
  Rational mu;      // theta*(0)

  Rational low() const { return lambda < mu ? lambda : mu; }
  Rational high() const { return lambda < mu ? mu : lambda; }
};

LambdaMu lambda_mu(const DgpdParams& params);

// ---------------------------------------------------------------------------
// General 2x2x2 best-response threshold

struct Indifferent {};

// Best response to an opponent cooperating with probability zeta_c: a threshold with
// orientation (possibly infinite), or indifference when both utility lines coincide.
template <Scalar T>
struct ThresholdResponse {
  Extended<T> threshold;
  Orientation orientation;
};

template <Scalar T>
using BestResponse = std::variant<ThresholdResponse<T>, Indifferent>;

template <Scalar T>
BestResponse<T> threshold_function_general(const T& zeta_c, const PayoffTable& game1, const PayoffTable& game2);

// zeta at which both expected-utility lines have equal slope; nullopt if they never do
// (or always do).
std::optional<Rational> forbidden_value(const PayoffTable& game1, const PayoffTable& game2);

// delta_1^D delta_2^C - delta_1^C delta_2^D
Rational delta_determinant(const PayoffTable& game1, const PayoffTable& game2);

enum class Monotonicity { Increasing, Decreasing, Constant };

const char* to_string(Monotonicity m);

Monotonicity delta_monotonicity(const PayoffTable& game1, const PayoffTable& game2);

// ---------------------------------------------------------------------------
// Equivalence on finite type spaces

// Agreement of apply_strategy on every type point, boundary mixes included.
bool strategies_equivalent(const ExactStrategy& a, const ExactStrategy& b, const DiscreteTypeSpace& space);
// Rejects continuous spaces.
bool strategies_equivalent(const ExactStrategy& a, const ExactStrategy& b, const TypeSpace& space);

// Vector thresholds over explicit m-dimensional types; alpha applies on orthogonal types.
template <Scalar T>
bool vector_thresholds_equivalent(const VectorThreshold<T>& a, const VectorThreshold<T>& b,
                                  std::span<const std::vector<T>> types, const T& alpha = T(1));

// Canonical label of a pure threshold strategy on a finite space.
// `cut` counts the types playing the "low-side" action (D for DC, C for CD).
// Constant profiles are always stored as DC: cut 0 is all-C, cut n is all-D.
struct PureClass {
  Orientation orientation = Orientation::DC;
  std::size_t cut = 0;

  friend auto operator<=>(const PureClass&, const PureClass&) = default;
};

PureClass canonical_class(Orientation orientation, std::size_t cut, std::size_t n);

// nullopt when the strategy mixes on some type point.
std::optional<PureClass> pure_class_of(const ExactStrategy& s, const DiscreteTypeSpace& space);

// All distinct pure threshold classes: 2n for n >= 1 points.
std::vector<PureClass> all_pure_classes(const DiscreteTypeSpace& space);

// A strategy whose threshold sits strictly away from every type point: the midpoint of the
// interval, or an outer endpoint shifted by half the first interval's width.
ExactStrategy representative(Orientation orientation, std::size_t interval, const DiscreteTypeSpace& space);
ExactStrategy representative(const PureClass& c, const DiscreteTypeSpace& space);

// The pure classes that are best responses: one, two when the threshold sits on a type
// point (that type is indifferent), or every class for an Indifferent response.
std::vector<PureClass> response_classes(const BestResponse<Rational>& br, const DiscreteTypeSpace& space);

// A strategy in class c built from the best response's own threshold when possible.
ExactStrategy strategy_in_class(const BestResponse<Rational>& br, const PureClass& c, const DiscreteTypeSpace& space);

}  // namespace multigame
