#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "tbl/vector.hpp"

namespace tbl {

/// Deterministic random stream addressed by (seed, stream_id). The same pair
/// yields a bit-identical sequence on every run and thread schedule; Monte
/// Carlo drivers give each trial its own stream_id so results never depend on
/// worker count. Value type: each worker owns its copy.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// A fresh stream for a sub-task; mixes the parent stream_id with sub_id.
  SeededStream derived(std::uint64_t sub_id) const;

  std::uint64_t next_u64();
  double uniform();                    // [0, 1)
  double uniform(double a, double b);  // [a, b)
  double normal();                     // standard normal (Box-Muller, no rejection)

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// d orthonormal columns spanning a random d-dimensional subspace of R^n,
/// orthonormal in the normalized inner product (1/n) sum u_i v_i.
struct SubspaceFrame {
  std::vector<SphereVector> columns;

  int n() const { return columns.empty() ? 0 : columns.front().n(); }
  int d() const { return static_cast<int>(columns.size()); }

  /// Unit vector sum_k c_k * column_k / ||.||; with Gaussian c this samples
  /// the Haar measure on the subspace's sphere.
  SphereVector sphere_point(std::span<const double> coeffs) const;
};

/// The unit circle of a 2-dimensional subspace, parameterized as
/// point(theta) = u cos(theta) + v sin(theta). Coordinate i equals
/// a_i sin(theta + phase_i) with a_i = sqrt(u_i^2 + v_i^2); the amplitude
/// vector satisfies ||a||^2 = 2. Zero-amplitude coordinates take phase 0.
class GreatCircle {
 public:
  GreatCircle(SphereVector u, SphereVector v);  // Errc::not_unit if not orthonormal

  int n() const { return u_.n(); }
  const SphereVector& u() const { return u_; }
  const SphereVector& v() const { return v_; }
  const std::vector<double>& amplitude() const { return amplitude_; }
  const std::vector<double>& phase() const { return phase_; }

  SphereVector point(double theta) const;
  /// Hot path for grid scans: out[i] = u_i * cos_t + v_i * sin_t.
  void point_into(double cos_t, double sin_t, std::span<double> out) const;

 private:
  SphereVector u_, v_;
  std::vector<double> amplitude_;
  std::vector<double> phase_;
};

/// Haar-uniform unit vector of L_2^n (normalized Gaussian).
SphereVector sample_unit(int n, SeededStream& stream);

/// Haar-distributed orthonormal d-frame; Gram-Schmidt with
/// reorthogonalization, redrawn internally on a degenerate draw and
/// Errc::degenerate_draw after three failures.
SubspaceFrame sample_frame(int n, int d, SeededStream& stream);

GreatCircle sample_circle(int n, SeededStream& stream);
GreatCircle circle_from_frame(const SubspaceFrame& frame);  // requires d == 2

}  // namespace tbl
