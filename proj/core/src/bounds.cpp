#include "tbl/bounds.hpp"

#include <cmath>
#include <numbers>

#include "tbl/error.hpp"

namespace tbl {

namespace {

constexpr double kE = std::numbers::e;

}  // namespace

BoundReport make_bound_report(std::string name,
                              std::vector<std::pair<std::string, double>> inputs,
                              double log_value, std::string note) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.log_value = log_value;
  if (std::fabs(log_value) < 700.0) r.value = std::exp(log_value);
  r.note = std::move(note);
  return r;
}

BoundReport simplex_count_bound(double C, int m) {
  if (!(C > 1.0)) fail(Errc::bad_parameters, "need C > 1");
  if (m < 0) fail(Errc::bad_parameters, "need m >= 0");
  double lv = static_cast<double>(m) * (std::log(C) + 1.0);
  return make_bound_report("simplex_count_bound", {{"C", C}, {"m", double(m)}}, lv);
}

BoundReport jensen_count_bound(double lambda, double C, int m) {
  if (!(lambda > 1.0) || !(C > 1.0)) fail(Errc::bad_parameters, "need lambda > 1 and C > 1");
  if (m < 0) fail(Errc::bad_parameters, "need m >= 0");
  double loglamC = std::log(C) / std::log(lambda);
  double lv = static_cast<double>(m) * (1.0 + std::log(loglamC));
  std::string note;
  if (loglamC < 1.0) note = "vacuous: log_lambda(C) < 1, base below e";
  return make_bound_report("jensen_count_bound",
                           {{"lambda", lambda}, {"C", C}, {"m", double(m)}}, lv, note);
}

BoundReport lognet_bound(double lambda, double C, double eta, int m) {
  if (!(lambda > 1.0) || !(C >= 1.0)) fail(Errc::bad_parameters, "need lambda > 1 and C >= 1");
  if (!(eta > 0.0 && eta < 1.0)) fail(Errc::bad_parameters, "need eta in (0,1)");
  if (m < 0) fail(Errc::bad_parameters, "need m >= 0");
  double inner = std::log(lambda * lambda * C / eta) / std::log(lambda);
  double lv = static_cast<double>(m) * std::log(2.0 * kE * inner);
  return make_bound_report(
      "lognet_bound", {{"lambda", lambda}, {"C", C}, {"eta", eta}, {"m", double(m)}}, lv);
}

BoundReport net_bound(int n, double delta) {
  if (n < 2) fail(Errc::bad_parameters, "need n >= 2");
  if (!(delta > 0.0)) fail(Errc::bad_parameters, "need delta > 0");
  double nn = static_cast<double>(n);
  double lv = std::log(2.0 * kE * nn * std::log(nn)) + nn * std::log1p(1.0 / delta);
  return make_bound_report("net_bound", {{"n", nn}, {"delta", delta}}, lv,
                           "asymptotic, n sufficiently large");
}

BoundReport cone_bound(int n, double delta) {
  if (n < 2) fail(Errc::bad_parameters, "need n >= 2");
  if (!(delta > 0.0)) fail(Errc::bad_parameters, "need delta > 0");
  double lv = std::log(2.0) + static_cast<double>(n) * std::log(delta);
  return make_bound_report("cone_bound", {{"n", double(n)}, {"delta", delta}}, lv,
                           "asymptotic, n sufficiently large");
}

BoundReport ringvolume_bound(int n, int m, double beta, double eta, double delta) {
  if (n < 2 || m < 0 || m > n) fail(Errc::bad_parameters, "need n >= 2 and 0 <= m <= n");
  if (!(delta > eta) || !(eta > 0.0)) fail(Errc::bad_parameters, "need delta > eta > 0");
  if (!(beta > 0.0 && beta < 1.0)) fail(Errc::bad_parameters, "need beta in (0,1)");
  double nn = static_cast<double>(n);
  double radius = std::sqrt(1.0 - beta * (1.0 - 2.0 * eta));
  double lv = std::log(4.0 * kE) + nn * std::log(delta) + std::log(nn) +
              std::log(std::log(nn)) +
              static_cast<double>(n - m) * std::log1p(radius / (delta - eta));
  return make_bound_report(
      "ringvolume_bound",
      {{"n", nn}, {"m", double(m)}, {"beta", beta}, {"eta", eta}, {"delta", delta}}, lv,
      "asymptotic, n sufficiently large");
}

namespace {

double badvolume_log_expression(double theta, double delta, double eta, double beta) {
  double first = (2.0 * kE * kE / std::log(4.0)) * (delta / theta) *
                 std::log(16.0 * std::sqrt(2.0) / (eta * std::sqrt(theta)));
  double second = delta + delta * std::sqrt(1.0 - beta * (1.0 - 2.0 * eta)) / (delta - eta);
  return theta * std::log(first) + (1.0 - theta) * std::log(second);
}

void check_badvolume_args(double theta, double delta, double eta, double beta) {
  if (!(theta > 0.0 && theta <= 1.0)) fail(Errc::bad_parameters, "need theta in (0,1]");
  if (!(delta > eta) || !(eta > 0.0)) fail(Errc::bad_parameters, "need delta > eta > 0");
  if (!(beta > 0.0 && beta < 1.0)) fail(Errc::bad_parameters, "need beta in (0,1)");
}

}  // namespace

double badvolume_expression(double theta, double delta, double eta, double beta) {
  check_badvolume_args(theta, delta, eta, beta);
  return std::exp(badvolume_log_expression(theta, delta, eta, beta));
}

BadvolumeMax badvolume_max(double delta, double eta, double beta, int grid) {
  check_badvolume_args(1.0, delta, eta, beta);
  if (grid < 1000) fail(Errc::bad_parameters, "need a grid of at least 1000 points");

  const double lo = std::log(1e-12), hi = 0.0;  // theta in (1e-12, 1]
  auto logf = [&](double ltheta) {
    return badvolume_log_expression(std::exp(ltheta), delta, eta, beta);
  };

  BadvolumeMax out;
  double best_l = lo, best_v = -1e308;
  double small_best = -1e308, large_best = -1e308;
  double lsplit = std::log(std::sqrt(delta));
  for (int i = 0; i <= grid; ++i) {
    double l = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid);
    double v = logf(l);
    if (v > best_v) {
      best_v = v;
      best_l = l;
    }
    if (l < lsplit)
      small_best = std::max(small_best, v);
    else
      large_best = std::max(large_best, v);
  }

  // golden-section refinement around the best grid point
  double step = (hi - lo) / static_cast<double>(grid);
  double a = std::max(lo, best_l - step), b = std::min(hi, best_l + step);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = logf(c), fd = logf(d);
  for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = logf(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = logf(d);
    }
  }
  double refined_l = 0.5 * (a + b);
  double refined_v = logf(refined_l);
  if (refined_v > best_v) {
    best_v = refined_v;
    best_l = refined_l;
  }
  if (best_l < lsplit)
    small_best = std::max(small_best, best_v);
  else
    large_best = std::max(large_best, best_v);

  out.max_value = std::exp(best_v);
  out.argmax_theta = std::exp(best_l);
  out.regime_small_theta = std::exp(small_best);
  out.regime_large_theta = std::exp(large_best);
  return out;
}

double alpha_constant(double sigma_target, double net_eta) {
  if (!(sigma_target > 0.0 && sigma_target < 1.0))
    fail(Errc::bad_parameters, "need sigma_target in (0,1)");
  if (!(net_eta > 0.0)) fail(Errc::bad_parameters, "need net_eta > 0");
  return -std::log(sigma_target) / std::log1p(1.0 / net_eta);
}

BoundReport badvolume_total(int n, double delta, double eta, double beta) {
  if (n < 3) fail(Errc::bad_parameters, "need n >= 3");
  double q = badvolume_max(delta, eta, beta).max_value;
  double nn = static_cast<double>(n);
  double lv = std::log(4.0 * kE) + 2.0 * std::log(nn) + std::log(std::log(nn)) +
              nn * std::log(q);
  return make_bound_report(
      "badvolume_total",
      {{"n", nn}, {"delta", delta}, {"eta", eta}, {"beta", beta}, {"max", q}}, lv,
      "asymptotic, n sufficiently large");
}

}  // namespace tbl
