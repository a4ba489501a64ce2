#pragma once

#include <cstddef>

#include "multigame/game_model.hpp"
#include "multigame/oracle.hpp"
#include "multigame/strategy.hpp"

namespace multigame {

struct ContinuousSolution {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double residual = 0.0;  // max |theta_i - RHS_i(theta_-i)|
  bool symmetric = false;
  std::size_t iterations = 0;
  bool used_bisection = false;

  StrategyPair<double> strategies() const;
};

// d = t - r + s - p, e = p - s, f = y - s.
struct DgpdCoefficients {
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;
};

DgpdCoefficients dgpd_coefficients(const DgpdParams& params);

// Roots of -d x^2 + (2d + e + f) x - (d + e) = 0. For d = 0 only x_plus is set and x_minus is NaN.
struct QuadraticRoots {
  double discriminant = 0.0;
  double x_plus = 0.0;
  double x_minus = 0.0;
};

QuadraticRoots dgpd_uniform_roots(const DgpdParams& params);

// Symmetric equilibrium threshold under the uniform prior.
ContinuousSolution solve_dgpd_uniform(const DgpdParams& params);

struct ContinuousOptions {
  double tol = 1e-10;
  std::size_t max_iterations = 10'000;
  double damping = 0.5;
};

// cdf1 and cdf2 are the distributions of agent 1's and agent 2's own types; agent i best
// responds through zeta_i = 1 - F_{-i}(theta_-i). Throws SolverError with the best residual.
ContinuousSolution solve_dgpd_general_prior(const DgpdParams& params, const TabulatedCdf& cdf1,
                                            const TabulatedCdf& cdf2, ContinuousOptions options = {});

// Dispatches on the priors: closed form for two uniform priors, the general solver otherwise.
ContinuousSolution solve_continuous(const Multigame& game, ContinuousOptions options = {});

// Regret estimated on `samples` midpoint types per agent; the opponent's C probability comes
// from CDF-weighted quadrature over the same grid split at the opponent's threshold.
RegretReport<double> sampled_regret(const Multigame& game, const StrategyPair<double>& strategies,
                                    std::size_t samples = 1000);

}  // namespace multigame
