#pragma once

#include "tbl/params.hpp"

namespace tbl {

enum class IntervalClass { InA, InB, Zero };

/// The odd, strictly increasing, continuous piecewise-linear map whose graph
/// is a staircase: each narrow interval B_m is stretched onto the wide A_m,
/// and A_m is compressed onto B_{m+1}. Satisfies t <= phi(t) <= lambda*t for
/// t >= 0. Below the underflow threshold the map continues linearly.
double phi(double t, const StaircaseParams& p);

/// Inverse of phi: (1/lambda)*t <= phi_inv(t) <= t for t >= 0.
double phi_inv(double t, const StaircaseParams& p);

/// Interval membership of |t|. Boundary points count as InB (the narrow
/// intervals are closed; any consistent rule works, this one is fixed for
/// determinism).
IntervalClass classify(double t, const StaircaseParams& p);

/// True iff |r| lies within multiplicative factor s^power of some integer
/// power of lambda, i.e. dist(log_lambda|r|, Z) <= power * log_lambda(s).
/// power=2 is the ratio set of two B values; power=4 of two B^2 values.
/// Zero and non-finite r are never in the set.
bool in_ratio_set(double r, int power, const StaircaseParams& p);

/// Distance from log_lambda|t| to the nearest integer, in [0, 1/2].
/// Reduction is done in two steps (coarse integer pick, then a log1p residual
/// on the exactly rescaled value) so the result is accurate near the grid even
/// when |log_lambda t| is large. If nearest_m is non-null it receives the
/// nearest integer exponent. t must be nonzero and finite.
double log_grid_distance(double t, const StaircaseParams& p, double* nearest_m = nullptr);

}  // namespace tbl
