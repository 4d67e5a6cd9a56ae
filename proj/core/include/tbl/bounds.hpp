#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tbl {

/// A closed-form bound evaluated in the log domain; the linear value is
/// reported only when it is representable (|log| < 700).
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> inputs;
  double log_value = 0;  // natural log
  std::optional<double> value;
  std::string note;
};

BoundReport make_bound_report(std::string name,
                              std::vector<std::pair<std::string, double>> inputs,
                              double log_value, std::string note = "");

/// (C e)^m bounds the number of positive-integer m-tuples summing to <= C m.
BoundReport simplex_count_bound(double C, int m);

/// (e log_lambda C)^m bounds the number of positive-integer m-tuples with
/// lambda^{a_1} + ... + lambda^{a_m} <= C m. Flagged vacuous when
/// log_lambda C < 1.
BoundReport jensen_count_bound(double lambda, double C, int m);

/// (2 e log_lambda(lambda^2 C / eta))^m bounds the size of an eta-net of the
/// m-dimensional sign-symmetric power grid of radius C sqrt(m).
BoundReport lognet_bound(double lambda, double C, double eta, int m);

/// 2 e n log(n) (1 + 1/delta)^n bounds the size of a delta-net of the unit
/// ball of an n-dimensional normed space (asymptotic, large n).
BoundReport net_bound(int n, double delta);

/// 2 delta^n bounds the chance that a random unit vector falls in a ball of
/// radius delta (asymptotic, large n).
BoundReport cone_bound(int n, double delta);

/// 4 e delta^n n log(n) (1 + sqrt(1 - beta(1-2 eta)) / (delta - eta))^{n-m}
/// bounds the chance that a random unit vector lands within eta of the slice
/// with m frozen power-grid coordinates. Errc::bad_parameters when
/// delta <= eta.
BoundReport ringvolume_bound(int n, int m, double beta, double eta, double delta);

/// The per-dimension rate
///   (2e^2/log4 * delta/theta * log(16 sqrt2/(eta sqrt(theta))))^theta
///   * (delta + delta sqrt(1-beta(1-2 eta))/(delta-eta))^{1-theta}
/// at grid ratio 4. Errc::bad_parameters unless delta > eta and
/// theta in (0, 1].
double badvolume_expression(double theta, double delta, double eta, double beta);

struct BadvolumeMax {
  double max_value = 0;
  double argmax_theta = 0;
  double regime_small_theta = 0;  // max over theta < sqrt(delta)
  double regime_large_theta = 0;  // max over theta >= sqrt(delta)
};

/// Maximizes the expression over a log-uniform theta grid on (1e-12, 1],
/// refined by golden-section around the best grid point. grid >= 1000.
BadvolumeMax badvolume_max(double delta, double eta, double beta, int grid = 8192);

/// -ln(sigma_target) / ln(1 + 1/net_eta): the admissible subspace dimension
/// fraction for a given rate target.
double alpha_constant(double sigma_target, double net_eta);

/// log of 4 e n^2 log(n) * q^n where q = badvolume_max(delta, eta, beta);
/// negative once the exponential factor dominates.
BoundReport badvolume_total(int n, double delta, double eta, double beta);

}  // namespace tbl
