#include "multigame/continuous_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "multigame/threshold.hpp"

namespace multigame {

StrategyPair<double> ContinuousSolution::strategies() const {
  return {FloatStrategy{Extended<double>(theta1), Orientation::DC, 1.0},
          FloatStrategy{Extended<double>(theta2), Orientation::DC, 1.0}};
}

namespace {

void require_valid(const DgpdParams& params) {
  const ValidityReport report = validate_dgpd(params);
  if (!report.ok()) throw InputError("invalid DGPD parameters: " + report.violations.front());
}

std::string describe(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

}  // namespace

DgpdCoefficients dgpd_coefficients(const DgpdParams& q) {
  return {Rational(q.t - q.r + q.s - q.p).get_d(), Rational(q.p - q.s).get_d(), Rational(q.y - q.s).get_d()};
}

QuadraticRoots dgpd_uniform_roots(const DgpdParams& params) {
  require_valid(params);
  const DgpdCoefficients c = dgpd_coefficients(params);
  QuadraticRoots roots;
  roots.discriminant = (c.e + c.f) * (c.e + c.f) + 4.0 * c.d * c.f;
  if (!(roots.discriminant > 0.0)) {
    throw SolverError("non-positive discriminant " + describe(roots.discriminant));
  }
  const Rational exact_d = params.t - params.r + params.s - params.p;
  if (exact_d == 0) {
    roots.x_plus = c.e / (c.e + c.f);
    roots.x_minus = std::numeric_limits<double>::quiet_NaN();
    return roots;
  }
  const double b = 2.0 * c.d + c.e + c.f;
  const double root = std::sqrt(roots.discriminant);
  // b + root > 0 under the DGPD constraints, so this form of x_plus never cancels.
  roots.x_plus = 2.0 * (c.d + c.e) / (b + root);
  roots.x_minus = (b + root) / (2.0 * c.d);
  return roots;
}

ContinuousSolution solve_dgpd_uniform(const DgpdParams& params) {
  const QuadraticRoots roots = dgpd_uniform_roots(params);
  ContinuousSolution out;
  out.theta1 = out.theta2 = roots.x_plus;
  out.symmetric = true;
  out.residual = std::abs(roots.x_plus - threshold_function_dgpd<double>(1.0 - roots.x_plus, params));
  return out;
}

ContinuousSolution solve_dgpd_general_prior(const DgpdParams& params, const TabulatedCdf& cdf1,
                                            const TabulatedCdf& cdf2, ContinuousOptions options) {
  require_valid(params);
  if (!(options.tol > 0.0)) throw InputError("tolerance must be positive");
  if (!(options.damping > 0.0 && options.damping <= 1.0)) throw InputError("damping must lie in (0,1]");

  const LambdaMu lm = lambda_mu(params);
  const double lo = lm.low().get_d();
  const double hi = lm.high().get_d();
  // theta_1 = RHS1(theta_2) uses agent 2's prior, and the other way round.
  auto rhs1 = [&](double theta2) { return threshold_function_dgpd<double>(1.0 - cdf2.cdf(theta2), params); };
  auto rhs2 = [&](double theta1) { return threshold_function_dgpd<double>(1.0 - cdf1.cdf(theta1), params); };
  auto defect = [&](double theta1) { return theta1 - rhs1(rhs2(theta1)); };

  ContinuousSolution out;
  double best_theta = 0.5 * (lm.lambda.get_d() + lm.mu.get_d());
  double best_defect = std::abs(defect(best_theta));

  double theta = best_theta;
  double previous = std::numeric_limits<double>::infinity();
  while (out.iterations < options.max_iterations) {
    const double g = defect(theta);
    ++out.iterations;
    if (std::abs(g) < best_defect) {
      best_defect = std::abs(g);
      best_theta = theta;
    }
    if (std::abs(g) <= options.tol) break;
    if (std::abs(g) >= previous) break;  // not contracting
    previous = std::abs(g);
    theta -= options.damping * g;
  }

  if (best_defect > options.tol) {
    // The composed map sends [0,1] into [lo,hi], so the defect changes sign on that window.
    out.used_bisection = true;
    double a = lo;
    double b = hi;
    while (out.iterations < options.max_iterations && b - a > 0.0) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double g = defect(mid);
      ++out.iterations;
      if (std::abs(g) < best_defect) {
        best_defect = std::abs(g);
        best_theta = mid;
      }
      if (std::abs(g) <= options.tol) break;
      (g < 0.0 ? a : b) = mid;
    }
  }

  out.theta1 = best_theta;
  out.theta2 = rhs2(best_theta);
  out.residual = std::max(std::abs(out.theta1 - rhs1(out.theta2)), std::abs(out.theta2 - rhs2(out.theta1)));
  out.symmetric = std::abs(out.theta1 - out.theta2) <= options.tol;
  if (out.residual > options.tol) {
    throw SolverError("no fixed point within tolerance after " + std::to_string(out.iterations) +
                      " iterations; best residual " + describe(out.residual) + " at theta1 = " +
                      describe(out.theta1));
  }
  return out;
}

ContinuousSolution solve_continuous(const Multigame& game, ContinuousOptions options) {
  if (!game.is_continuous()) throw InputError("continuous solver needs continuous priors for both agents");
  const std::optional<DgpdParams> params = game.dgpd();
  if (!params) throw InputError("continuous solver handles DGPD payoffs only");
  if (std::holds_alternative<Uniform01>(game.type_space(0)) && std::holds_alternative<Uniform01>(game.type_space(1))) {
    return solve_dgpd_uniform(*params);
  }
  return solve_dgpd_general_prior(*params, as_tabulated(game.type_space(0)), as_tabulated(game.type_space(1)),
                                  options);
}

namespace {

double quadrature_zeta_c(const TypeSpace& prior, const FloatStrategy& s, std::size_t cells) {
  std::vector<double> cuts;
  cuts.reserve(cells + 2);
  for (std::size_t k = 0; k <= cells; ++k) cuts.push_back(static_cast<double>(k) / static_cast<double>(cells));
  if (s.threshold.is_finite() && s.threshold.value() > 0.0 && s.threshold.value() < 1.0) {
    cuts.push_back(s.threshold.value());
    std::sort(cuts.begin(), cuts.end());
  }
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double weight = continuous_cdf(prior, cuts[k + 1]) - continuous_cdf(prior, cuts[k]);
    if (weight <= 0.0) continue;
    total += weight * apply_strategy(s, 0.5 * (cuts[k] + cuts[k + 1])).c;
  }
  return total;
}

}  // namespace

RegretReport<double> sampled_regret(const Multigame& game, const StrategyPair<double>& strategies,
                                    std::size_t samples) {
  if (!game.is_continuous()) throw InputError("sampled regret needs continuous priors for both agents");
  if (game.num_games() != 2) throw InputError("sampled regret requires exactly two local games");
  if (samples == 0) throw InputError("at least one sample is required");
  RegretReport<double> report;
  for (std::size_t agent = 0; agent < 2; ++agent) {
    const double zc = quadrature_zeta_c(game.type_space(opponent_of(agent)), strategies[opponent_of(agent)], samples);
    const PayoffTable& g1 = game.payoff(agent, 0);
    const PayoffTable& g2 = game.payoff(agent, 1);
    const double c1 = local_expected_utility<double>(g1, Action::C, zc);
    const double d1 = local_expected_utility<double>(g1, Action::D, zc);
    const double c2 = local_expected_utility<double>(g2, Action::C, zc);
    const double d2 = local_expected_utility<double>(g2, Action::D, zc);
    for (std::size_t k = 0; k < samples; ++k) {
      const double theta = (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
      const double uc = (1.0 - theta) * c1 + theta * c2;
      const double ud = (1.0 - theta) * d1 + theta * d2;
      const ActionMix<double> played = apply_strategy(strategies[agent], theta);
      const double achieved = played.c * uc + played.d * ud;
      for (Action a : {Action::C, Action::D}) {
        const double gain = (a == Action::C ? uc : ud) - achieved;
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

}  // namespace multigame
