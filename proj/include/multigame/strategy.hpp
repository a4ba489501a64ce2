#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "multigame/errors.hpp"
#include "multigame/rational.hpp"

namespace multigame {

enum class Action { C = 0, D = 1 };

constexpr Action opposite(Action a) { return a == Action::C ? Action::D : Action::C; }
constexpr const char* to_string(Action a) { return a == Action::C ? "C" : "D"; }
constexpr std::size_t index_of(Action a) { return static_cast<std::size_t>(a); }

// DC plays D below the threshold and C above it; CD is the mirror image.
enum class Orientation { DC, CD };

constexpr const char* to_string(Orientation o) { return o == Orientation::DC ? "DC" : "CD"; }

// A point of the extended real line. Infinite thresholds are values, never sentinels.
template <Scalar T>
class Extended {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Extended(T value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT(implicit)

  static Extended neg_inf() { return Extended(Kind::NegInf); }
  static Extended pos_inf() { return Extended(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  // Only meaningful when finite.
  const T& value() const { return value_; }

  // Three-way comparison against a finite scalar: -1, 0 or 1.
  int compare(const T& x) const {
    if (kind_ == Kind::NegInf) return -1;
    if (kind_ == Kind::PosInf) return 1;
    if (value_ < x) return -1;
    if (x < value_) return 1;
    return 0;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }

 private:
  explicit Extended(Kind kind) : kind_(kind), value_(0) {}

  Kind kind_;
  T value_;
};

template <Scalar T>
std::string to_string(const Extended<T>& x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.is_pos_inf()) return "inf";
  if constexpr (std::same_as<T, Rational>) {
    return to_string(x.value());
  } else {
    return std::to_string(x.value());
  }
}

// Scalar threshold strategy on the pro-social coefficient theta.
// alpha is the weight on C for a type sitting exactly on the threshold.
template <Scalar T>
struct ThresholdStrategy {
  Extended<T> threshold = Extended<T>::neg_inf();
  Orientation orientation = Orientation::DC;
  T alpha = 1;

  static ThresholdStrategy always_c() { return {Extended<T>::neg_inf(), Orientation::DC, T(1)}; }
  static ThresholdStrategy always_d() { return {Extended<T>::pos_inf(), Orientation::DC, T(1)}; }
};

using ExactStrategy = ThresholdStrategy<Rational>;
using FloatStrategy = ThresholdStrategy<double>;

template <Scalar T>
struct StrategyPair {
  ThresholdStrategy<T> first;
  ThresholdStrategy<T> second;

  const ThresholdStrategy<T>& operator[](std::size_t agent) const { return agent == 0 ? first : second; }
};

FloatStrategy to_float(const ExactStrategy& s);

// Probability of each action.
template <Scalar T>
struct ActionMix {
  T c;
  T d;

  const T& operator[](Action a) const { return a == Action::C ? c : d; }
};

template <Scalar T>
ActionMix<T> apply_strategy(const ThresholdStrategy<T>& s, const T& theta) {
  const int side = s.threshold.compare(theta);  // sign of (threshold - theta)
  T p_c;
  if (side == 0) {
    p_c = s.alpha;
  } else {
    // theta above the threshold: C for DC, D for CD.
    const bool above = side < 0;
    p_c = (above == (s.orientation == Orientation::DC)) ? T(1) : T(0);
  }
  T p_d = T(1) - p_c;
  return {p_c, p_d};
}

// Vector threshold over an m-dimensional type: C where theta.delta > 0, D where < 0.
template <Scalar T>
struct VectorThreshold {
  std::vector<T> delta;
};

template <Scalar T>
T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
  T sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

template <Scalar T>
ActionMix<T> apply_vector_threshold(const VectorThreshold<T>& v, std::span<const T> theta, const T& alpha) {
  const int s = sign_of(dot<T>(theta, std::span<const T>(v.delta)));
  T p_c = s > 0 ? T(1) : (s < 0 ? T(0) : alpha);
  T p_d = T(1) - p_c;
  return {p_c, p_d};
}

}  // namespace multigame
