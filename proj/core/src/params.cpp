#include "tbl/params.hpp"

#include <cmath>

#include "tbl/error.hpp"
#include "tbl/staircase.hpp"

namespace tbl {

double StaircaseParams::scale_down(double a, double m) const {
  if (log2_lambda) return std::ldexp(a, -static_cast<int>(m) * *log2_lambda);
  return a / std::pow(lambda, m);
}

double StaircaseParams::scale_up(double v, double m) const {
  if (log2_lambda) return std::ldexp(v, static_cast<int>(m) * *log2_lambda);
  return v * std::pow(lambda, m);
}

static StaircaseParams finish(double lambda, double eta, double beta, double epsilon) {
  if (!(lambda > 1.0) || !std::isfinite(lambda)) fail(Errc::bad_parameters, "lambda must be a finite real > 1");
  if (!(eta > 0.0) || !std::isfinite(eta)) fail(Errc::bad_parameters, "eta must be a finite real > 0");
  if (!(beta > 0.0 && beta < 1.0)) fail(Errc::bad_parameters, "beta must lie in (0,1)");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) fail(Errc::bad_parameters, "epsilon must be >= 0");

  StaircaseParams p;
  p.lambda = lambda;
  p.eta = eta;
  p.beta = beta;
  p.epsilon = epsilon;

  p.s = 1.0 + eta;
  p.inv_s = 1.0 / p.s;
  // tau = 1 - s^-2 = eta (2 + eta) / s^2, no cancellation
  p.tau = eta * (2.0 + eta) / (p.s * p.s);
  p.xi = std::expm1(8.0 * std::log1p(eta));
  p.ln_lambda = std::log(lambda);
  p.inv_ln_lambda = 1.0 / p.ln_lambda;
  p.k = p.ln_lambda / (2.0 * std::log1p(eta));
  // same expression the membership kernels use for residuals, so that a value
  // exactly equal to lambda^m * s compares as a tie and lands InB
  p.log_lambda_s = std::log1p(p.s - 1.0) * p.inv_ln_lambda;
  p.sqrt_lambda = std::sqrt(lambda);
  p.lambda_over_s = lambda / p.s;
  p.eta_over_s = eta / p.s;
  p.riser_slope = (p.lambda_over_s - p.s) / (p.s - p.inv_s);
  p.tread_slope = lambda * (p.s - p.inv_s) / (p.lambda_over_s - p.s);

  if (!(p.s * p.s < lambda))
    fail(Errc::bad_parameters, "need (1+eta)^2 < lambda for the interval families to tile");
  // the pair kernel slides a window of half-width 4*log_lambda(s) around a
  // unit circle; it must stay below a quarter turn
  if (!(4.0 * p.log_lambda_s < 0.25))
    fail(Errc::bad_parameters, "need (1+eta)^16 < lambda, ratio-set windows too wide");

  double l2 = std::log2(lambda);
  double r = std::nearbyint(l2);
  if (r >= 1.0 && std::exp2(r) == lambda) p.log2_lambda = static_cast<int>(r);

  p.paper_valid = (p.tau <= 1e-4) && (epsilon < p.tau * p.tau) && (lambda >= 1.5) &&
                  (2.0 * lambda * lambda * beta + 6.0 * epsilon < 0.125);

  // linear continuation below the threshold keeps oddness, monotonicity and
  // the sandwich t <= phi(t) <= lambda t (the ratio phi(t)/t is bounded away
  // from 1 and lambda everywhere)
  p.underflow_slope = 1.0;      // placeholder so phi() takes the main path
  p.underflow_inv_slope = 1.0;
  double t0 = p.underflow_threshold;
  p.underflow_slope = phi(t0, p) / t0;
  p.underflow_inv_slope = phi_inv(t0, p) / t0;
  return p;
}

StaircaseParams StaircaseParams::paper() {
  StaircaseParams tmp = finish(4.0, 1e-12, 1.0 / 257.0, 0.0);
  return finish(4.0, 1e-12, 1.0 / 257.0, tmp.tau * tmp.tau / 2.0);
}

StaircaseParams StaircaseParams::desk() {
  StaircaseParams tmp = finish(4.0, 1e-5, 1.0 / 257.0, 0.0);
  return finish(4.0, 1e-5, 1.0 / 257.0, tmp.tau * tmp.tau / 2.0);
}

StaircaseParams StaircaseParams::custom(double lambda, double eta, double beta, double epsilon) {
  return finish(lambda, eta, beta, epsilon);
}

}  // namespace tbl
