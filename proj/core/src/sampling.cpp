#include "tbl/sampling.hpp"

#include <cmath>
#include <numbers>

#include "kahan.hpp"
#include "tbl/error.hpp"

namespace tbl {

namespace {

// splitmix64; decorrelates (seed, stream_id) pairs before seeding the engine
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

SeededStream::SeededStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(mix64(mix64(seed) ^ mix64(~stream_id))) {}

SeededStream SeededStream::derived(std::uint64_t sub_id) const {
  return SeededStream(seed_, mix64(stream_id_) ^ sub_id);
}

std::uint64_t SeededStream::next_u64() { return engine_(); }

double SeededStream::uniform() {
  // top 53 bits; engine output is fully specified by the standard, so the
  // sequence is portable, unlike the library distributions
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededStream::uniform(double a, double b) { return a + (b - a) * uniform(); }

double SeededStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

SphereVector SubspaceFrame::sphere_point(std::span<const double> coeffs) const {
  if (columns.empty()) fail(Errc::bad_parameters, "empty frame");
  if (coeffs.size() != columns.size()) fail(Errc::bad_parameters, "coefficient count mismatch");
  std::vector<double> acc(static_cast<size_t>(n()), 0.0);
  for (size_t k = 0; k < columns.size(); ++k) {
    const auto& col = columns[k].coords();
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += coeffs[k] * col[i];
  }
  return SphereVector(std::move(acc)).normalized();
}

GreatCircle::GreatCircle(SphereVector u, SphereVector v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_.n() != v_.n()) fail(Errc::bad_parameters, "dimension mismatch");
  if (u_.n() < 2) fail(Errc::bad_parameters, "need n >= 2 for a great circle");
  if (!u_.is_unit() || !v_.is_unit() || std::fabs(dot(u_, v_)) > kUnitTol)
    fail(Errc::not_unit, "great circle needs an orthonormal pair");
  amplitude_.reserve(static_cast<size_t>(n()));
  phase_.reserve(static_cast<size_t>(n()));
  for (int i = 0; i < n(); ++i) {
    double a = std::hypot(u_[i], v_[i]);
    amplitude_.push_back(a);
    phase_.push_back(a == 0.0 ? 0.0 : std::atan2(u_[i], v_[i]));
  }
}

SphereVector GreatCircle::point(double theta) const {
  std::vector<double> out(static_cast<size_t>(n()));
  point_into(std::cos(theta), std::sin(theta), out);
  return SphereVector(std::move(out));
}

void GreatCircle::point_into(double cos_t, double sin_t, std::span<double> out) const {
  const auto& uc = u_.coords();
  const auto& vc = v_.coords();
  for (size_t i = 0; i < uc.size(); ++i) out[i] = uc[i] * cos_t + vc[i] * sin_t;
}

SphereVector sample_unit(int n, SeededStream& stream) {
  if (n < 1) fail(Errc::bad_parameters, "need n >= 1");
  std::vector<double> g(static_cast<size_t>(n));
  for (double& c : g) c = stream.normal();
  return SphereVector(std::move(g)).normalized();
}

SubspaceFrame sample_frame(int n, int d, SeededStream& stream) {
  if (d < 1 || d > n) fail(Errc::bad_parameters, "need 1 <= d <= n");
  auto ip = [n](const std::vector<double>& a, const std::vector<double>& b) {
    detail::KahanSum acc;
    for (size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
    return acc.value() / static_cast<double>(n);
  };
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<std::vector<double>> cols;
    cols.reserve(static_cast<size_t>(d));
    bool ok = true;
    for (int kcol = 0; kcol < d; ++kcol) {
      std::vector<double> g(static_cast<size_t>(n));
      for (double& c : g) c = stream.normal();
      // modified Gram-Schmidt, two passes
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : cols) {
          double proj = ip(g, q);
          for (size_t i = 0; i < g.size(); ++i) g[i] -= proj * q[i];
        }
      }
      double nm = std::sqrt(ip(g, g));
      if (!(nm > 1e-8)) {
        ok = false;
        break;
      }
      for (double& c : g) c /= nm;
      cols.push_back(std::move(g));
    }
    if (ok) {
      SubspaceFrame frame;
      frame.columns.reserve(cols.size());
      for (auto& c : cols) frame.columns.emplace_back(std::move(c));
      return frame;
    }
  }
  fail(Errc::degenerate_draw, "repeated degenerate frame draws");
}

GreatCircle sample_circle(int n, SeededStream& stream) {
  if (n < 2) fail(Errc::bad_parameters, "need n >= 2");
  return circle_from_frame(sample_frame(n, 2, stream));
}

GreatCircle circle_from_frame(const SubspaceFrame& frame) {
  if (frame.d() != 2) fail(Errc::bad_parameters, "a great circle needs a 2-frame");
  return GreatCircle(frame.columns[0], frame.columns[1]);
}

}  // namespace tbl
