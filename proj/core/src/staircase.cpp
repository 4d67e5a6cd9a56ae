#include "tbl/staircase.hpp"

#include <cmath>

#include "tbl/error.hpp"

namespace tbl {

namespace {

// |t| = lambda^m * u with u in [1/s, lambda/s).  The coarse pick via a single
// log is reliable to within one tile; the edge repairs below fix the rare
// off-by-one, and either choice agrees at a shared breakpoint because the map
// is continuous there.
struct Tile {
  double m;
  double u;
};

Tile reduce_to_tile(double a, const StaircaseParams& p) {
  double L = std::log(a) * p.inv_ln_lambda;
  double m = std::floor(L + p.log_lambda_s);
  double u = p.scale_down(a, m);
  if (u * p.s < 1.0) {
    m -= 1.0;
    u = p.scale_down(a, m);
  } else if (u * p.s >= p.lambda) {
    m += 1.0;
    u = p.scale_down(a, m);
  }
  return {m, u};
}

}  // namespace

double phi(double t, const StaircaseParams& p) {
  if (t == 0.0 || std::isnan(t)) return t;
  double a = std::fabs(t);
  double out;
  if (std::isinf(a)) {
    out = a;
  } else if (a < p.underflow_threshold) {
    out = p.underflow_slope * a;
  } else {
    auto [m, u] = reduce_to_tile(a, p);
    double v;
    if (u <= p.s) {
      // riser: [1/s, s] -> [s, lambda/s].  The offset u - 1/s is assembled as
      // (u - 1) + (1 - 1/s); both terms are O(eta), so multiplying by the
      // large slope cannot amplify a rounding error of the breakpoint itself.
      v = p.s + ((u - 1.0) + p.eta_over_s) * p.riser_slope;
    } else {
      // tread: [s, lambda/s] -> [lambda/s, lambda s]
      v = p.lambda_over_s + (u - p.s) * p.tread_slope;
    }
    out = p.scale_up(v, m);
  }
  return std::copysign(out, t);
}

double phi_inv(double t, const StaircaseParams& p) {
  if (t == 0.0 || std::isnan(t)) return t;
  double a = std::fabs(t);
  double out;
  if (std::isinf(a)) {
    out = a;
  } else if (a < p.underflow_threshold) {
    out = p.underflow_inv_slope * a;
  } else {
    auto [m, u] = reduce_to_tile(a, p);
    if (u <= p.s) {
      // a narrow-interval value pulls back through the previous wide interval;
      // in normalized coordinates that ramp coincides with the riser
      double v = p.s + ((u - 1.0) + p.eta_over_s) * p.riser_slope;
      out = p.scale_up(v, m - 1.0);
    } else {
      double v = p.inv_s + (u - p.s) / p.riser_slope;
      out = p.scale_up(v, m);
    }
  }
  return std::copysign(out, t);
}

double log_grid_distance(double t, const StaircaseParams& p, double* nearest_m) {
  double a = std::fabs(t);
  double L = std::log(a) * p.inv_ln_lambda;
  double m = std::nearbyint(L);
  double q = p.scale_down(a, m);
  double d = std::log1p(q - 1.0) * p.inv_ln_lambda;
  // the coarse pick is accurate to ~1e-13 of an exponent, so |d| can exceed
  // 1/2 only marginally; fold back to the true nearest integer
  if (d > 0.5) {
    d = 1.0 - d;
    m += 1.0;
  } else if (d < -0.5) {
    d = 1.0 + d;
    m -= 1.0;
  } else {
    d = std::fabs(d);
  }
  if (nearest_m) *nearest_m = m;
  return d;
}

IntervalClass classify(double t, const StaircaseParams& p) {
  if (t == 0.0) return IntervalClass::Zero;
  if (!std::isfinite(t)) return IntervalClass::InA;
  double d = log_grid_distance(t, p);
  return d <= p.log_lambda_s ? IntervalClass::InB : IntervalClass::InA;
}

bool in_ratio_set(double r, int power, const StaircaseParams& p) {
  if (power < 1) fail(Errc::unsupported_power, "ratio-set power must be a positive integer");
  if (r == 0.0 || !std::isfinite(r)) return false;
  double d = log_grid_distance(r, p);
  return d <= static_cast<double>(power) * p.log_lambda_s;
}

}  // namespace tbl
