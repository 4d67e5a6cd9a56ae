#pragma once

#include <optional>
#include <string>

namespace tbl {

/// Scalar parameters of the staircase construction.
///
/// The grid ratio `lambda` and the half-width `eta` (s = 1 + eta) determine the
/// two interval families that tile the positive axis:
///
///   narrow  B_m = [lambda^m / s,  lambda^m * s]
///   wide    A_m = [lambda^m * s,  lambda^(m+1) / s]
///
/// All derived constants are precomputed so the scalar kernels stay cheap.
/// Instances are immutable by convention; copy freely across threads.
struct StaircaseParams {
  // primary
  double lambda = 4.0;   // > 1
  double eta = 1e-5;     // > 0
  double beta = 1.0 / 257.0;
  double epsilon = 0.0;  // expansion radius, >= 0

  // derived
  double s = 0;             // 1 + eta
  double inv_s = 0;         // 1 / s
  double tau = 0;           // 1 - s^-2
  double xi = 0;            // s^8 - 1
  double k = 0;             // ln(lambda) / (2 ln s), kept as a real
  double ln_lambda = 0;
  double inv_ln_lambda = 0;
  double log_lambda_s = 0;  // log_lambda(s); half-width of B in log space
  double sqrt_lambda = 0;
  double lambda_over_s = 0;
  double eta_over_s = 0;    // 1 - 1/s, evaluated without cancellation
  double riser_slope = 0;   // (lambda/s - s) / (s - 1/s)
  double tread_slope = 0;   // lambda (s - 1/s) / (lambda/s - s)

  // below this magnitude phi is extended linearly (the exact staircase would
  // need unboundedly many steps approaching zero)
  double underflow_threshold = 1e-300;
  double underflow_slope = 0;      // phi(t0)/t0 at the threshold
  double underflow_inv_slope = 0;  // phi_inv(t0)/t0

  // when lambda is an exact power of two, scale reductions use ldexp and are
  // exact over the whole double range
  std::optional<int> log2_lambda;

  // true iff the small-parameter hypotheses behind the quantitative results
  // hold: tau <= 1e-4, epsilon < tau^2, lambda >= 3/2, 2 lambda^2 beta + 6 epsilon < 1/8
  bool paper_valid = false;

  double gamma_threshold() const { return 1.0 - 2.0 * lambda * lambda * beta; }
  double gamma_eps_threshold() const { return 2.0 * lambda * lambda * beta + 6.0 * epsilon; }

  /// |t| / lambda^m, exact for power-of-two lambda.
  double scale_down(double a, double m) const;
  /// v * lambda^m, exact for power-of-two lambda.
  double scale_up(double v, double m) const;

  static StaircaseParams paper();  // lambda=4, eta=1e-12, beta=1/257, epsilon=tau^2/2
  static StaircaseParams desk();   // lambda=4, eta=1e-5,  beta=1/257, epsilon=tau^2/2
  static StaircaseParams custom(double lambda, double eta, double beta, double epsilon);
};

}  // namespace tbl
