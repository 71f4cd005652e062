#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eitbeam {

// Thrown when adaptive refinement cannot reach the requested tolerance. The
// best available estimate and its error bound ride along for diagnostics.
struct IntegrationError : std::runtime_error {
  std::complex<double> best_estimate;
  double error_bound;

  IntegrationError(const std::string& msg, std::complex<double> best, double bound)
      : std::runtime_error(msg), best_estimate(best), error_bound(bound) {}
};

struct QuadratureResult {
  std::complex<double> value{0.0, 0.0};
  double error_bound = 0.0;
  long evaluations = 0;
};

// A localized structure of the integrand: center and characteristic width.
// Used to seed subdivisions and to size the truncated domain.
struct IntegrandFeature {
  double center = 0.0;
  double width = 1.0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK values).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGK15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGauss7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
  double a = 0.0, b = 0.0;
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
};

template <class F>
Panel evaluate_panel(F&& f, double a, double b, long& evaluations) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::complex<double> kronrod = kGK15Weights[7] * f(mid);
  std::complex<double> gauss = kGauss7Weights[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const std::complex<double> lo = f(mid - half * kGK15Nodes[i]);
    const std::complex<double> hi = f(mid + half * kGK15Nodes[i]);
    kronrod += kGK15Weights[i] * (lo + hi);
    if (i % 2 == 1) gauss += kGauss7Weights[i / 2] * (lo + hi);
  }
  evaluations += 15;
  Panel p;
  p.a = a;
  p.b = b;
  p.value = half * kronrod;
  p.error = std::abs(half * (kronrod - gauss));
  return p;
}

}  // namespace detail

// Adaptive Gauss-Kronrod quadrature of a complex-valued integrand over
// [lo, hi]. Splits the worst panel until the summed error estimate drops
// below rel_tol * |integral|. split_points seed the initial panels (they
// must lie inside the interval; out-of-range entries are ignored).
template <class F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi, double rel_tol,
                                    std::span<const double> split_points = {},
                                    int max_panels = 4000) {
  if (!(hi > lo)) throw std::invalid_argument("integrate_adaptive: empty interval");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tolerance must be positive");

  std::vector<double> edges;
  edges.push_back(lo);
  for (double s : split_points)
    if (s > lo && s < hi) edges.push_back(s);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  QuadratureResult out;
  auto worse = [](const detail::Panel& x, const detail::Panel& y) { return x.error < y.error; };
  std::priority_queue<detail::Panel, std::vector<detail::Panel>, decltype(worse)> heap(worse);
  std::complex<double> total{0.0, 0.0};
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    auto p = detail::evaluate_panel(f, edges[i], edges[i + 1], out.evaluations);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  int panels = static_cast<int>(edges.size()) - 1;
  while (total_err > rel_tol * std::max(std::abs(total), 1e-300) && panels < max_panels) {
    detail::Panel worst = heap.top();
    heap.pop();
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted by rounding
      total += worst.value;
      total_err += worst.error;
      break;
    }
    for (auto p : {detail::evaluate_panel(f, worst.a, mid, out.evaluations),
                   detail::evaluate_panel(f, mid, worst.b, out.evaluations)}) {
      total += p.value;
      total_err += p.error;
      heap.push(p);
    }
    ++panels;
  }

  out.value = total;
  out.error_bound = total_err;
  if (total_err > rel_tol * std::max(std::abs(total), 1e-300)) {
    throw IntegrationError("adaptive quadrature did not converge after " +
                               std::to_string(panels) + " panels (error bound " +
                               std::to_string(total_err) + ")",
                           total, total_err);
  }
  return out;
}

// Integrates f over the whole real line. The finite window starts wide enough
// to cover every feature and doubles until the tail proxy |f(±V)|·V falls
// below a fraction of the requested tolerance. Assumes the integrand decays
// at least as 1/v² outside the features, which holds for Lorentzian and
// Gaussian envelopes alike.
template <class F>
QuadratureResult integrate_real_line(F&& f, double rel_tol,
                                     std::span<const IntegrandFeature> features,
                                     int max_doublings = 48) {
  double v = 0.0;
  double max_width = 0.0;
  std::vector<double> splits;
  for (const auto& feat : features) {
    const double w = std::max(std::abs(feat.width), 1e-12);
    v = std::max(v, std::abs(feat.center) + 40.0 * w);
    max_width = std::max(max_width, w);
    splits.push_back(feat.center - 4.0 * w);
    splits.push_back(feat.center);
    splits.push_back(feat.center + 4.0 * w);
  }
  if (v == 0.0) v = 1.0;

  QuadratureResult total = integrate_adaptive(f, -v, v, rel_tol, splits);
  for (int i = 0; i < max_doublings; ++i) {
    const double tail_proxy = (std::abs(f(v)) + std::abs(f(-v))) * v;
    total.evaluations += 2;
    if (tail_proxy <= 0.25 * rel_tol * std::max(std::abs(total.value), 1e-300)) return total;
    auto left = integrate_adaptive(f, -2.0 * v, -v, rel_tol);
    auto right = integrate_adaptive(f, v, 2.0 * v, rel_tol);
    total.value += left.value + right.value;
    total.error_bound += left.error_bound + right.error_bound;
    total.evaluations += left.evaluations + right.evaluations;
    v *= 2.0;
  }
  throw IntegrationError("real-line quadrature: tail did not decay after domain doubling",
                         total.value, total.error_bound);
}

}  // namespace eitbeam
