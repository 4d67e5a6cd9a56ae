#pragma once

#include <span>
#include <vector>

#include "tbl/params.hpp"
#include "tbl/vector.hpp"

namespace tbl {

enum class PairMassMode { naive, fast };

/// Scratch buffers for the sorted-window pair kernel, reusable across calls.
struct PairMassWorkspace {
  std::vector<double> pos;     // fractional parts of log_lambda|x_i|, sorted
  std::vector<double> weight;  // matching weights
  std::vector<double> pos3;    // three unrolled turns of the circle
  std::vector<double> prefix;  // prefix sums over pos3
  std::vector<std::pair<double, double>> scratch;
};

/// mu_x-mass of the coordinates lying in the narrow intervals B.
/// Zero coordinates carry zero weight. Errc::zero_vector on the zero vector.
double single_in_b_mass(const SphereVector& x, const StaircaseParams& p);

/// (mu_x x mu_x)-mass of ordered pairs (i,j) whose ratio x_i/x_j lies in the
/// power-fold ratio set (power 2: ratios of B values; power 4: of B^2 values).
/// Diagonal pairs are included; pairs touching a zero coordinate count as
/// out-of-set (they carry zero weight regardless).
///
/// naive mode is the O(n^2) reference that classifies each ratio directly;
/// fast mode sorts fractional parts of log_lambda|x_i| and accumulates weights
/// over a circular sliding window, O(n log n). The two agree to ~1e-12.
double pair_in_mass(const SphereVector& x, int power, const StaircaseParams& p,
                    PairMassMode mode = PairMassMode::fast);

/// Same kernel on a raw coordinate span with caller-owned workspace;
/// this is the hot path of the great-circle scan.
double pair_in_mass(std::span<const double> coords, int power, const StaircaseParams& p,
                    PairMassMode mode, PairMassWorkspace& ws);

/// y is in Gamma iff the pair mass of B-ratios is at least 1 - 2 lambda^2 beta.
/// Requires a unit vector (Errc::not_unit).
bool in_gamma(const SphereVector& y, const StaircaseParams& p);

/// x is in Delta iff the mass of coordinates in the wide intervals A is
/// strictly below 1 - beta. Requires a unit vector (Errc::not_unit).
bool in_delta(const SphereVector& x, const StaircaseParams& p);

/// Mass of coordinates within multiplicative factor (1+xi) of an integer
/// power of lambda is at least gamma. xi = 0 means exact powers, read with
/// relative tolerance 1e-12 (exact powers of a general lambda are not
/// representable). Total on all vectors: the zero vector has mass 0.
bool in_delta_gamma_xi(const SphereVector& x, double gamma, double xi, const StaircaseParams& p);

/// Replace every coordinate that is an eta-approximate power of lambda by the
/// nearest exact power (sign preserved); leaves the rest alone. The result x
/// satisfies ||x - y|| <= eta ||y||. Errc::zero_vector.
SphereVector round_to_powers(const SphereVector& y, const StaircaseParams& p);

/// The tennis-ball map: phi applied coordinatewise, then normalized to the
/// unit sphere. Odd, bit-exactly: psi(-x) == -psi(x). Errc::zero_vector.
SphereVector psi(const SphereVector& x, const StaircaseParams& p);

/// Inverse of psi on the unit sphere. Solves the scalar monotone equation
/// ||phi_inv(t y)|| = 1 for t in [1, lambda], then applies phi_inv
/// coordinatewise and renormalizes. Errc::zero_vector.
SphereVector psi_inverse(const SphereVector& y, const StaircaseParams& p);

struct SetMembershipReport {
  double single_in_b_mass = 0;
  double single_in_a_mass = 0;
  double pair_in_mass_2 = 0;
  double pair_in_mass_4 = 0;
  bool in_gamma = false;
  bool in_delta = false;
};

/// Evaluates every membership statistic at once. Requires a unit vector.
SetMembershipReport membership_report(const SphereVector& x, const StaircaseParams& p);

}  // namespace tbl
