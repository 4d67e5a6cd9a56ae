#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace tbl {

inline constexpr double kUnitTol = 1e-10;

/// A point of R^n carrying the normalized Euclidean norm
/// ||x||^2 = (1/n) * sum x_i^2, so typical coordinates of unit vectors are
/// O(1). Immutable after construction; cheap to copy, safe to share across
/// threads.
class SphereVector {
 public:
  explicit SphereVector(std::vector<double> coords);

  int n() const { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const { return coords_; }
  std::span<const double> span() const { return coords_; }
  double operator[](int i) const { return coords_[static_cast<size_t>(i)]; }

  double norm_sq() const;
  double norm() const;
  bool is_unit(double tol = kUnitTol) const;
  bool is_zero() const;

  SphereVector normalized() const;  // Errc::zero_vector on the zero vector

 private:
  std::vector<double> coords_;
};

/// (1/n) sum x_i y_i
double dot(const SphereVector& x, const SphereVector& y);
double distance(const SphereVector& x, const SphereVector& y);

/// The probability measure on coordinate indices weighting i by
/// x_i^2 / sum_j x_j^2; the mass of an index set J equals ||P_J x||^2/||x||^2.
struct CoordinateMeasure {
  std::vector<double> weights;

  double mass(std::span<const int> indices) const;
};

/// Errc::zero_vector if every coordinate is zero.
CoordinateMeasure mu(const SphereVector& x);

// --- vector file formats ------------------------------------------------
//
// text:   one vector per line, coordinates separated by single spaces,
//         printed with enough digits to round-trip
// binary: per record, magic "TBL1", a little-endian uint32 dimension n,
//         then n little-endian IEEE-754 doubles

void write_vectors_text(std::ostream& os, std::span<const SphereVector> xs);
std::vector<SphereVector> read_vectors_text(std::istream& is);

void write_vectors_binary(std::ostream& os, std::span<const SphereVector> xs);
std::vector<SphereVector> read_vectors_binary(std::istream& is);

}  // namespace tbl
