#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tbl/measure.hpp"
#include "tbl/params.hpp"
#include "tbl/sampling.hpp"
#include "tbl/vector.hpp"

namespace tbl {

/// Result of scanning one great circle for a witness point with large
/// out-of-ratio-set pair mass.
struct ScanReport {
  std::uint64_t circle_id = 0;
  int theta_grid = 0;
  double best_theta = 0;
  double best_out_mass = 0;      // max over the grid of 1 - pair_in_mass(point, 4)
  bool certified = false;        // best_out_mass >= 1/8
  bool gamma_eps_excluded = false;  // best_out_mass > 2 lambda^2 beta + 6 epsilon
  bool threshold_valid = false;     // 2 lambda^2 beta + 6 epsilon < 1/8
};

/// Evaluates the out-of-set pair mass on a uniform theta grid over [0, pi)
/// (antipodal points give the same statistics) and reports the maximizing
/// grid point. Grid evaluation under-approximates the supremum, so the
/// certificates are sound.
ScanReport scan_circle(const GreatCircle& c, int grid, const StaircaseParams& p,
                       std::uint64_t circle_id = 0);

/// Exact (mu_a x mu_a)-mass of pairs with cos(2(phase_i - phase_j)) <= 1/2;
/// always at least 1/3.
double separated_angle_mass(const GreatCircle& c);

struct CotBoundCheck {
  double empirical_pos = 0;  // fraction with cot(theta) in [a, b]
  double empirical_neg = 0;  // fraction with cot(theta) in [-b, -a]
  double bound = 0;          // (b - a) / (pi (1 + a^2)), valid for either side
  double exact = 0;          // (arccot a - arccot b) / pi
  std::uint64_t trials = 0;
};

/// Monte Carlo check that the cotangent of a uniform angle lands in [a, b]
/// no more often than the closed-form bound allows. Errc::bad_interval
/// unless 0 < a < b.
CotBoundCheck verify_cot_bound(double a, double b, std::uint64_t trials, SeededStream stream);

struct RatioBoundCheck {
  double empirical = 0;
  double bound = 0;  // 4 xi lambda / (pi (lambda - 1)) * (4 + |cot(phase_i - phase_j)|)
  std::uint64_t trials = 0;
};

/// Monte Carlo frequency of a_i sin(theta+phi_i) / (a_j sin(theta+phi_j))
/// landing in the power-4 ratio set, against its closed-form bound.
/// Errc::degenerate_angles when phi_i - phi_j is a multiple of pi.
RatioBoundCheck verify_bad_ratio(double ai, double aj, double phi_i, double phi_j,
                                 const StaircaseParams& p, std::uint64_t trials,
                                 SeededStream stream);

struct EstimateReport {
  std::string quantity;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double estimate = 0;
  double ci_low = 0;   // Wilson 95%
  double ci_high = 0;
  std::uint64_t seed = 0;
};

/// 95% Wilson score interval for hits out of trials.
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials);

/// Fraction of Haar-uniform unit vectors lying in Delta.
EstimateReport estimate_delta_measure(int n, const StaircaseParams& p, std::uint64_t trials,
                                      std::uint64_t seed, int threads = 1);

/// Fraction of Haar points on the frame's unit sphere lying in Delta
/// (target 0 for random frames of small dimension).
EstimateReport subspace_delta_fraction(const SubspaceFrame& frame, const StaircaseParams& p,
                                       std::uint64_t samples, std::uint64_t seed,
                                       int threads = 1);

struct EndToEndSummary {
  int n = 0;
  int d = 0;
  std::uint64_t samples = 0;
  std::uint64_t circles = 0;
  std::uint64_t in_delta_c = 0;         // sampled subspace points outside Delta
  std::uint64_t images_in_gamma = 0;    // their images under psi inside Gamma
  std::uint64_t certified_circles = 0;  // circles with a witness of mass >= 1/8
  std::uint64_t excluded_circles = 0;   // circles certified outside Gamma_epsilon
  std::uint64_t seed = 0;
  bool threshold_valid = false;  // 2 lambda^2 beta + 6 epsilon < 1/8
  bool pass = false;  // every point in Delta^c, every image in Gamma, every circle certified
};

/// The whole pipeline at one scale: sample a random d-frame, check its sphere
/// points stay outside Delta, map them through psi into Gamma, then scan
/// random great circles for witnesses escaping the expanded image set.
EndToEndSummary end_to_end_tennis_ball(int n, int d, const StaircaseParams& p,
                                       std::uint64_t circles, std::uint64_t samples,
                                       std::uint64_t seed, int grid = 4096, int threads = 1);

enum class PartitionClass { R, B };

/// Two-coloring driven by a finite sample of the mapped subspace sphere:
/// B within distance eta of the sample, R otherwise. A finite-sample stand-in
/// for the expanded image set; approximate by construction.
/// Errc::empty_sample when the sample is empty.
PartitionClass antiramsey_classify(const SphereVector& z, std::span<const SphereVector> sample,
                                   double eta);

/// Runs fn(trial) for every trial index, spreading across `threads` workers.
/// Each call owns its own derived stream; callers write into preallocated
/// slots so results never depend on scheduling.
void parallel_trials(std::uint64_t count, int threads,
                     const std::function<void(std::uint64_t)>& fn);

}  // namespace tbl
