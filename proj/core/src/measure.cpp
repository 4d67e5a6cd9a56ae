#include "tbl/measure.hpp"

#include <algorithm>
#include <cmath>

#include "kahan.hpp"
#include "tbl/error.hpp"
#include "tbl/staircase.hpp"

namespace tbl {

namespace {

void require_unit(const SphereVector& x, const char* what) {
  if (!x.is_unit()) fail(Errc::not_unit, std::string(what) + " requires a unit vector");
}

double coordinate_weight_denom(std::span<const double> coords) {
  detail::KahanSum acc;
  for (double c : coords) acc.add(c * c);
  return acc.value();
}

double pair_in_mass_naive(std::span<const double> coords, int power, const StaircaseParams& p) {
  double denom = coordinate_weight_denom(coords);
  if (denom == 0.0) fail(Errc::zero_vector, "pair mass of the zero vector is undefined");
  detail::KahanSum acc;
  size_t n = coords.size();
  for (size_t i = 0; i < n; ++i) {
    double xi = coords[i];
    if (xi == 0.0) continue;
    double wi = xi * xi / denom;
    for (size_t j = 0; j < n; ++j) {
      double xj = coords[j];
      if (xj == 0.0) continue;
      if (in_ratio_set(xi / xj, power, p)) acc.add(wi * (xj * xj / denom));
    }
  }
  return acc.value();
}

double pair_in_mass_fast(std::span<const double> coords, int power, const StaircaseParams& p,
                         PairMassWorkspace& ws) {
  double denom = coordinate_weight_denom(coords);
  if (denom == 0.0) fail(Errc::zero_vector, "pair mass of the zero vector is undefined");

  // positions on the unit circle: fractional part of log_lambda|x_i|
  ws.scratch.clear();
  for (double c : coords) {
    if (c == 0.0) continue;
    double L = std::log(std::fabs(c)) * p.inv_ln_lambda;
    double f = L - std::floor(L);
    if (f >= 1.0) f = 0.0;  // floor rounding at the seam
    ws.scratch.emplace_back(f, c * c / denom);
  }
  size_t k = ws.scratch.size();
  if (k == 0) return 0.0;
  std::sort(ws.scratch.begin(), ws.scratch.end());

  ws.pos.resize(k);
  ws.weight.resize(k);
  for (size_t i = 0; i < k; ++i) {
    ws.pos[i] = ws.scratch[i].first;
    ws.weight[i] = ws.scratch[i].second;
  }

  // three unrolled turns so every window [c+1-h, c+1+h] lies inside the range
  ws.pos3.resize(3 * k);
  ws.prefix.assign(3 * k + 1, 0.0);
  for (size_t i = 0; i < k; ++i) {
    ws.pos3[i] = ws.pos[i];
    ws.pos3[k + i] = ws.pos[i] + 1.0;
    ws.pos3[2 * k + i] = ws.pos[i] + 2.0;
  }
  for (size_t i = 0; i < 3 * k; ++i) ws.prefix[i + 1] = ws.prefix[i] + ws.weight[i % k];

  double h = static_cast<double>(power) * p.log_lambda_s;  // < 1/4 by construction
  detail::KahanSum acc;
  size_t lo = 0, hi = 0;
  for (size_t i = 0; i < k; ++i) {
    double c = ws.pos[i] + 1.0;
    while (hi < 3 * k && ws.pos3[hi] <= c + h) ++hi;
    while (ws.pos3[lo] < c - h) ++lo;
    acc.add(ws.weight[i] * (ws.prefix[hi] - ws.prefix[lo]));
  }
  return acc.value();
}

}  // namespace

double single_in_b_mass(const SphereVector& x, const StaircaseParams& p) {
  double denom = coordinate_weight_denom(x.span());
  if (denom == 0.0) fail(Errc::zero_vector, "mass of the zero vector is undefined");
  detail::KahanSum acc;
  for (double c : x.coords())
    if (classify(c, p) == IntervalClass::InB) acc.add(c * c / denom);
  return acc.value();
}

double pair_in_mass(std::span<const double> coords, int power, const StaircaseParams& p,
                    PairMassMode mode, PairMassWorkspace& ws) {
  if (power != 2 && power != 4)
    fail(Errc::unsupported_power, "pair mass supports powers 2 and 4");
  return mode == PairMassMode::naive ? pair_in_mass_naive(coords, power, p)
                                     : pair_in_mass_fast(coords, power, p, ws);
}

double pair_in_mass(const SphereVector& x, int power, const StaircaseParams& p,
                    PairMassMode mode) {
  PairMassWorkspace ws;
  return pair_in_mass(x.span(), power, p, mode, ws);
}

bool in_gamma(const SphereVector& y, const StaircaseParams& p) {
  require_unit(y, "Gamma membership");
  return pair_in_mass(y, 2, p) >= p.gamma_threshold();
}

bool in_delta(const SphereVector& x, const StaircaseParams& p) {
  require_unit(x, "Delta membership");
  // zero coordinates carry zero weight, so the A-mass is 1 minus the B-mass;
  // strict inequality as in the definition, the boundary is excluded
  double a_mass = 1.0 - single_in_b_mass(x, p);
  return a_mass < 1.0 - p.beta;
}

bool in_delta_gamma_xi(const SphereVector& x, double gamma, double xi, const StaircaseParams& p) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) fail(Errc::bad_parameters, "gamma must lie in [0,1]");
  if (!(xi >= 0.0)) fail(Errc::bad_parameters, "xi must be >= 0");
  double denom = coordinate_weight_denom(x.span());
  if (denom == 0.0) return 0.0 >= gamma;
  // xi = 0 reads as "exact power" with relative tolerance 1e-12
  double xi_eff = std::max(xi, 1e-12);
  double threshold = std::log1p(xi_eff) * p.inv_ln_lambda;
  detail::KahanSum acc;
  if (threshold >= 0.5) {
    return true;  // window covers the whole circle
  }
  for (double c : x.coords()) {
    if (c == 0.0) continue;
    if (log_grid_distance(c, p) <= threshold) acc.add(c * c / denom);
  }
  return acc.value() >= gamma;
}

SphereVector round_to_powers(const SphereVector& y, const StaircaseParams& p) {
  if (y.is_zero()) fail(Errc::zero_vector, "cannot round the zero vector");
  double threshold = std::log1p(p.eta) * p.inv_ln_lambda;
  std::vector<double> out(y.coords());
  for (double& c : out) {
    if (c == 0.0) continue;
    double m;
    if (log_grid_distance(c, p, &m) <= threshold)
      c = std::copysign(p.scale_up(1.0, m), c);
  }
  return SphereVector(std::move(out));
}

SphereVector psi(const SphereVector& x, const StaircaseParams& p) {
  if (x.is_zero()) fail(Errc::zero_vector, "the map is undefined at the origin");
  std::vector<double> mapped(x.coords());
  for (double& c : mapped) c = phi(c, p);
  return SphereVector(std::move(mapped)).normalized();
}

SphereVector psi_inverse(const SphereVector& y, const StaircaseParams& p) {
  if (y.is_zero()) fail(Errc::zero_vector, "the map is undefined at the origin");
  SphereVector yn = y.normalized();

  // ||phi_inv(t * yn)|| is continuous and strictly increasing in t, equals at
  // most t and at least t/lambda; a unit preimage exists for a unique
  // t in [1, lambda]. Bisection is robust across the kinks.
  auto g = [&](double t) {
    detail::KahanSum acc;
    for (double c : yn.coords()) {
      double v = phi_inv(t * c, p);
      acc.add(v * v);
    }
    return acc.value() / static_cast<double>(yn.n());
  };

  double lo = 1.0, hi = p.lambda;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) < 1.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * hi) break;
  }
  double t = 0.5 * (lo + hi);

  std::vector<double> out(yn.coords());
  for (double& c : out) c = phi_inv(t * c, p);
  return SphereVector(std::move(out)).normalized();
}

SetMembershipReport membership_report(const SphereVector& x, const StaircaseParams& p) {
  require_unit(x, "membership report");
  SetMembershipReport r;
  r.single_in_b_mass = single_in_b_mass(x, p);
  r.single_in_a_mass = 1.0 - r.single_in_b_mass;
  r.pair_in_mass_2 = pair_in_mass(x, 2, p);
  r.pair_in_mass_4 = pair_in_mass(x, 4, p);
  r.in_gamma = r.pair_in_mass_2 >= p.gamma_threshold();
  r.in_delta = r.single_in_a_mass < 1.0 - p.beta;
  return r;
}

}  // namespace tbl
