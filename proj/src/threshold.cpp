#include "multigame/threshold.hpp"

#include <algorithm>

namespace multigame {

template <Scalar T>
T threshold_function_dgpd(const T& zeta_c, const DgpdParams& q) {
  const T temptation = scalar_cast<T>(Rational(q.t - q.r));
  const T fear = scalar_cast<T>(Rational(q.p - q.s));
  const T social = scalar_cast<T>(Rational(q.y - q.s));
  T num = zeta_c * temptation + (T(1) - zeta_c) * fear;
  T value = num / (num + social);
  return value;
}

template Rational threshold_function_dgpd<Rational>(const Rational&, const DgpdParams&);
template double threshold_function_dgpd<double>(const double&, const DgpdParams&);

LambdaMu lambda_mu(const DgpdParams& params) {
  return {threshold_function_dgpd<Rational>(Rational(1), params), threshold_function_dgpd<Rational>(Rational(0), params)};
}

template <Scalar T>
BestResponse<T> threshold_function_general(const T& zeta_c, const PayoffTable& g1, const PayoffTable& g2) {
  const T zeta_d = T(1) - zeta_c;
  // Net preference for C at type theta is d1 + theta (d2 - d1).
  T d1 = zeta_c * scalar_cast<T>(g1.delta(Action::C)) + zeta_d * scalar_cast<T>(g1.delta(Action::D));
  T d2 = zeta_c * scalar_cast<T>(g2.delta(Action::C)) + zeta_d * scalar_cast<T>(g2.delta(Action::D));
  T slope = d2 - d1;
  if (const int s = sign_of(slope); s != 0) {
    T crossing = d1 / (d1 - d2);
    return ThresholdResponse<T>{Extended<T>(crossing), s > 0 ? Orientation::DC : Orientation::CD};
  }
  if (const int s = sign_of(d1); s != 0) {
    return ThresholdResponse<T>{s > 0 ? Extended<T>::neg_inf() : Extended<T>::pos_inf(), Orientation::DC};
  }
  return Indifferent{};
}

template BestResponse<Rational> threshold_function_general<Rational>(const Rational&, const PayoffTable&,
                                                                     const PayoffTable&);
template BestResponse<double> threshold_function_general<double>(const double&, const PayoffTable&,
                                                                 const PayoffTable&);

std::optional<Rational> forbidden_value(const PayoffTable& g1, const PayoffTable& g2) {
  Rational den = g1.delta(Action::C) - g1.delta(Action::D) - g2.delta(Action::C) + g2.delta(Action::D);
  if (den == 0) return std::nullopt;
  Rational num = g2.delta(Action::D) - g1.delta(Action::D);
  Rational value = num / den;
  return value;
}

Rational delta_determinant(const PayoffTable& g1, const PayoffTable& g2) {
  Rational value = g1.delta(Action::D) * g2.delta(Action::C) - g1.delta(Action::C) * g2.delta(Action::D);
  return value;
}

const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Constant: return "constant";
  }
  return "?";
}

Monotonicity delta_monotonicity(const PayoffTable& g1, const PayoffTable& g2) {
  const int s = sgn(delta_determinant(g1, g2));
  if (s > 0) return Monotonicity::Increasing;
  if (s < 0) return Monotonicity::Decreasing;
  return Monotonicity::Constant;
}

bool strategies_equivalent(const ExactStrategy& a, const ExactStrategy& b, const DiscreteTypeSpace& space) {
  for (const Rational& theta : space.points()) {
    if (apply_strategy(a, theta).c != apply_strategy(b, theta).c) return false;
  }
  return true;
}

bool strategies_equivalent(const ExactStrategy& a, const ExactStrategy& b, const TypeSpace& space) {
  const auto* d = std::get_if<DiscreteTypeSpace>(&space);
  if (d == nullptr) throw InputError("strategy equivalence is defined on discrete type spaces only");
  return strategies_equivalent(a, b, *d);
}

template <Scalar T>
bool vector_thresholds_equivalent(const VectorThreshold<T>& a, const VectorThreshold<T>& b,
                                  std::span<const std::vector<T>> types, const T& alpha) {
  for (const std::vector<T>& theta : types) {
    const std::span<const T> view(theta);
    if (apply_vector_threshold(a, view, alpha).c != apply_vector_threshold(b, view, alpha).c) return false;
  }
  return true;
}

template bool vector_thresholds_equivalent<Rational>(const VectorThreshold<Rational>&, const VectorThreshold<Rational>&,
                                                     std::span<const std::vector<Rational>>, const Rational&);
template bool vector_thresholds_equivalent<double>(const VectorThreshold<double>&, const VectorThreshold<double>&,
                                                   std::span<const std::vector<double>>, const double&);

// ---------------------------------------------------------------------------
// Pure classes

PureClass canonical_class(Orientation orientation, std::size_t cut, std::size_t n) {
  if (orientation == Orientation::CD) {
    if (cut == 0) return {Orientation::DC, n};
    if (cut == n) return {Orientation::DC, 0};
  }
  return {orientation, cut};
}

std::optional<PureClass> pure_class_of(const ExactStrategy& s, const DiscreteTypeSpace& space) {
  const std::size_t n = space.size();
  std::size_t low_side = 0;  // types below the threshold
  if (s.threshold.is_pos_inf()) {
    low_side = n;
  } else if (s.threshold.is_finite()) {
    const auto& pts = space.points();
    const Rational& q = s.threshold.value();
    low_side = static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), q) - pts.begin());
    if (low_side < n && pts[low_side] == q) {
      if (s.alpha != 0 && s.alpha != 1) return std::nullopt;
      // The boundary type joins the low side when it plays the low-side action.
      const bool plays_c = s.alpha == 1;
      const bool low_action_is_c = s.orientation == Orientation::CD;
      if (plays_c == low_action_is_c) ++low_side;
    }
  }
  return canonical_class(s.orientation, low_side, n);
}

std::vector<PureClass> all_pure_classes(const DiscreteTypeSpace& space) {
  const std::size_t n = space.size();
  std::vector<PureClass> out;
  out.reserve(2 * n);
  for (std::size_t k = 0; k <= n; ++k) out.push_back({Orientation::DC, k});
  for (std::size_t k = 1; k < n; ++k) out.push_back({Orientation::CD, k});
  return out;
}

ExactStrategy representative(Orientation orientation, std::size_t interval, const DiscreteTypeSpace& space) {
  const auto& pts = space.points();
  const std::size_t n = pts.size();
  if (interval > n) throw InputError("interval index out of range");
  Rational half = n >= 2 ? Rational((pts[1] - pts[0]) / 2) : Rational(1, 2);
  Rational threshold;
  if (interval == 0) {
    threshold = pts.front() - half;
  } else if (interval == n) {
    threshold = pts.back() + half;
  } else {
    threshold = (pts[interval - 1] + pts[interval]) / 2;
  }
  return {Extended<Rational>(threshold), orientation, Rational(1)};
}

ExactStrategy representative(const PureClass& c, const DiscreteTypeSpace& space) {
  return representative(c.orientation, c.cut, space);
}

std::vector<PureClass> response_classes(const BestResponse<Rational>& br, const DiscreteTypeSpace& space) {
  const auto* response = std::get_if<ThresholdResponse<Rational>>(&br);
  if (response == nullptr) return all_pure_classes(space);
  std::vector<PureClass> out;
  for (int alpha : {1, 0}) {
    const ExactStrategy s{response->threshold, response->orientation, Rational(alpha)};
    const PureClass c = *pure_class_of(s, space);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

ExactStrategy strategy_in_class(const BestResponse<Rational>& br, const PureClass& c, const DiscreteTypeSpace& space) {
  if (const auto* response = std::get_if<ThresholdResponse<Rational>>(&br)) {
    for (int alpha : {1, 0}) {
      ExactStrategy s{response->threshold, response->orientation, Rational(alpha)};
      if (pure_class_of(s, space) == c) return s;
    }
  }
  return representative(c, space);
}

}  // namespace multigame
