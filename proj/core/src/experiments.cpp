#include "tbl/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "kahan.hpp"
#include "tbl/error.hpp"
#include "tbl/staircase.hpp"

namespace tbl {

namespace {

constexpr std::uint64_t kStreamPoints = 0x1000000000000ull;   // end-to-end sample phase
constexpr std::uint64_t kStreamCircles = 0x2000000000000ull;  // end-to-end circle phase

}  // namespace

void parallel_trials(std::uint64_t count, int threads,
                     const std::function<void(std::uint64_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned use = std::min<unsigned>(static_cast<unsigned>(threads), hw * 4);
  std::vector<std::thread> pool;
  pool.reserve(use);
  for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

ScanReport scan_circle(const GreatCircle& c, int grid, const StaircaseParams& p,
                       std::uint64_t circle_id) {
  if (grid < 8) fail(Errc::bad_parameters, "need a theta grid of at least 8 points");
  ScanReport r;
  r.circle_id = circle_id;
  r.theta_grid = grid;
  r.threshold_valid = p.gamma_eps_threshold() < 0.125;

  PairMassWorkspace ws;
  std::vector<double> coords(static_cast<size_t>(c.n()));
  double best_out = -1.0, best_theta = 0.0;
  for (int g = 0; g < grid; ++g) {
    double theta = std::numbers::pi * static_cast<double>(g) / static_cast<double>(grid);
    c.point_into(std::cos(theta), std::sin(theta), coords);
    double out = 1.0 - pair_in_mass(coords, 4, p, PairMassMode::fast, ws);
    if (out > best_out) {
      best_out = out;
      best_theta = theta;
    }
  }
  r.best_theta = best_theta;
  r.best_out_mass = best_out;
  r.certified = best_out >= 0.125;
  r.gamma_eps_excluded = best_out > p.gamma_eps_threshold();
  return r;
}

double separated_angle_mass(const GreatCircle& c) {
  const auto& a = c.amplitude();
  const auto& ph = c.phase();
  size_t n = a.size();
  detail::KahanSum denom;
  for (double ai : a) denom.add(ai * ai);
  double total = denom.value();
  if (total == 0.0) fail(Errc::zero_vector, "zero amplitude vector");

  std::vector<double> w(n), c2(n), s2(n);
  for (size_t i = 0; i < n; ++i) {
    w[i] = a[i] * a[i] / total;
    c2[i] = std::cos(2.0 * ph[i]);
    s2[i] = std::sin(2.0 * ph[i]);
  }
  // cos(2(phi_i - phi_j)) = c2_i c2_j + s2_i s2_j
  detail::KahanSum mass;
  for (size_t i = 0; i < n; ++i) {
    if (w[i] == 0.0) continue;
    detail::KahanSum row;
    for (size_t j = 0; j < n; ++j) {
      if (c2[i] * c2[j] + s2[i] * s2[j] <= 0.5) row.add(w[j]);
    }
    mass.add(w[i] * row.value());
  }
  return mass.value();
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;  // 97.5th normal quantile
  double nt = static_cast<double>(trials);
  double ph = static_cast<double>(hits) / nt;
  double z2 = z * z;
  double denom = 1.0 + z2 / nt;
  double center = (ph + z2 / (2.0 * nt)) / denom;
  double half = z * std::sqrt(ph * (1.0 - ph) / nt + z2 / (4.0 * nt * nt)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

CotBoundCheck verify_cot_bound(double a, double b, std::uint64_t trials, SeededStream stream) {
  if (!(a > 0.0) || !(a < b)) fail(Errc::bad_interval, "need 0 < a < b");
  CotBoundCheck r;
  r.trials = trials;
  r.bound = (b - a) / (std::numbers::pi * (1.0 + a * a));
  // arccot is atan of the reciprocal on the positive axis
  r.exact = (std::atan(1.0 / a) - std::atan(1.0 / b)) / std::numbers::pi;
  std::uint64_t pos = 0, neg = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    double theta = stream.uniform(-std::numbers::pi, std::numbers::pi);
    double s = std::sin(theta);
    if (s == 0.0) continue;
    double ct = std::cos(theta) / s;
    if (ct >= a && ct <= b) ++pos;
    if (ct >= -b && ct <= -a) ++neg;
  }
  r.empirical_pos = static_cast<double>(pos) / static_cast<double>(trials);
  r.empirical_neg = static_cast<double>(neg) / static_cast<double>(trials);
  return r;
}

RatioBoundCheck verify_bad_ratio(double ai, double aj, double phi_i, double phi_j,
                                 const StaircaseParams& p, std::uint64_t trials,
                                 SeededStream stream) {
  if (!(ai > 0.0) || !(aj > 0.0)) fail(Errc::bad_parameters, "amplitudes must be positive");
  double diff = phi_i - phi_j;
  double sd = std::sin(diff);
  if (sd == 0.0 || std::fabs(sd) < 1e-300)
    fail(Errc::degenerate_angles, "phase difference is a multiple of pi");
  RatioBoundCheck r;
  r.trials = trials;
  double cot = std::cos(diff) / sd;
  r.bound = 4.0 * p.xi * p.lambda / (std::numbers::pi * (p.lambda - 1.0)) *
            (4.0 + std::fabs(cot));
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    double theta = stream.uniform(0.0, 2.0 * std::numbers::pi);
    double num = ai * std::sin(theta + phi_i);
    double den = aj * std::sin(theta + phi_j);
    if (den == 0.0) continue;
    if (in_ratio_set(num / den, 4, p)) ++hits;
  }
  r.empirical = static_cast<double>(hits) / static_cast<double>(trials);
  return r;
}

EstimateReport estimate_delta_measure(int n, const StaircaseParams& p, std::uint64_t trials,
                                      std::uint64_t seed, int threads) {
  if (trials < 1) fail(Errc::bad_parameters, "need at least one trial");
  std::vector<unsigned char> hit(trials, 0);
  parallel_trials(trials, threads, [&](std::uint64_t t) {
    SeededStream s(seed, t);
    SphereVector x = sample_unit(n, s);
    hit[t] = in_delta(x, p) ? 1 : 0;
  });
  EstimateReport r;
  r.quantity = "delta_measure";
  r.n = n;
  r.trials = trials;
  r.hits = 0;
  for (unsigned char h : hit) r.hits += h;
  r.estimate = static_cast<double>(r.hits) / static_cast<double>(trials);
  auto [lo, hi] = wilson_interval(r.hits, trials);
  r.ci_low = lo;
  r.ci_high = hi;
  r.seed = seed;
  return r;
}

EstimateReport subspace_delta_fraction(const SubspaceFrame& frame, const StaircaseParams& p,
                                       std::uint64_t samples, std::uint64_t seed, int threads) {
  if (samples < 1) fail(Errc::bad_parameters, "need at least one sample");
  std::vector<unsigned char> hit(samples, 0);
  parallel_trials(samples, threads, [&](std::uint64_t t) {
    SeededStream s(seed, kStreamPoints + t);
    std::vector<double> coeffs(static_cast<size_t>(frame.d()));
    for (double& c : coeffs) c = s.normal();
    SphereVector x = frame.sphere_point(coeffs);
    hit[t] = in_delta(x, p) ? 1 : 0;
  });
  EstimateReport r;
  r.quantity = "subspace_delta_fraction";
  r.n = frame.n();
  r.trials = samples;
  r.hits = 0;
  for (unsigned char h : hit) r.hits += h;
  r.estimate = static_cast<double>(r.hits) / static_cast<double>(samples);
  auto [lo, hi] = wilson_interval(r.hits, samples);
  r.ci_low = lo;
  r.ci_high = hi;
  r.seed = seed;
  return r;
}

EndToEndSummary end_to_end_tennis_ball(int n, int d, const StaircaseParams& p,
                                       std::uint64_t circles, std::uint64_t samples,
                                       std::uint64_t seed, int grid, int threads) {
  if (d < 1) fail(Errc::bad_parameters, "need subspace dimension d >= 1");
  if (circles < 1) fail(Errc::bad_parameters, "need at least one circle");
  if (samples < 1) fail(Errc::bad_parameters, "need at least one sample");

  EndToEndSummary s;
  s.n = n;
  s.d = d;
  s.samples = samples;
  s.circles = circles;
  s.seed = seed;
  s.threshold_valid = p.gamma_eps_threshold() < 0.125;

  SeededStream frame_stream(seed, 0);
  SubspaceFrame frame = sample_frame(n, d, frame_stream);

  std::vector<unsigned char> point_ok(samples, 0), image_ok(samples, 0);
  parallel_trials(samples, threads, [&](std::uint64_t t) {
    SeededStream st(seed, kStreamPoints + t);
    std::vector<double> coeffs(static_cast<size_t>(frame.d()));
    for (double& c : coeffs) c = st.normal();
    SphereVector x = frame.sphere_point(coeffs);
    bool delta_c = !in_delta(x, p);
    point_ok[t] = delta_c ? 1 : 0;
    if (delta_c) image_ok[t] = in_gamma(psi(x, p), p) ? 1 : 0;
  });
  for (std::uint64_t t = 0; t < samples; ++t) {
    s.in_delta_c += point_ok[t];
    s.images_in_gamma += image_ok[t];
  }

  std::vector<unsigned char> cert(circles, 0), excl(circles, 0);
  parallel_trials(circles, threads, [&](std::uint64_t t) {
    SeededStream st(seed, kStreamCircles + t);
    GreatCircle c = sample_circle(n, st);
    ScanReport rep = scan_circle(c, grid, p, t);
    cert[t] = rep.certified ? 1 : 0;
    excl[t] = rep.gamma_eps_excluded ? 1 : 0;
  });
  for (std::uint64_t t = 0; t < circles; ++t) {
    s.certified_circles += cert[t];
    s.excluded_circles += excl[t];
  }

  s.pass = (s.in_delta_c == samples) && (s.images_in_gamma == samples) &&
           (s.certified_circles == circles);
  return s;
}

PartitionClass antiramsey_classify(const SphereVector& z, std::span<const SphereVector> sample,
                                   double eta) {
  if (sample.empty()) fail(Errc::empty_sample, "classifier needs a nonempty sample");
  if (!(eta > 0.0)) fail(Errc::bad_parameters, "eta must be positive");
  for (const auto& s : sample) {
    if (distance(z, s) <= eta) return PartitionClass::B;
  }
  return PartitionClass::R;
}

}  // namespace tbl
