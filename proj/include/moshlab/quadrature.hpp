#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "moshlab/specfun.hpp"

namespace moshlab::quadrature {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
struct Result {
  T value{};
  double est_error = 0.0;
  std::size_t evaluations = 0;
};

struct Tolerance {
  double absolute = 1e-12;
  double relative = 0.0;
  std::size_t max_evaluations = 2'000'000;
};

/// Globally adaptive 21-point Gauss-Kronrod integration over the panels
/// given by `breakpoints` (sorted). The worst panel is bisected until the
/// summed error estimate meets max(absolute, relative |I|). Throws
/// ConvergenceError when the evaluation budget runs out first.
template <class T, class Fn>
Result<T> integrate(Fn&& fn, std::span<const double> breakpoints, const Tolerance& tol = {}) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;
  struct Panel {
    double a, b;
    T value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
  };

  std::size_t evaluations = 0;
  auto counted = [&](double x) {
    ++evaluations;
    return fn(x);
  };
  auto rule = [&](double a, double b) {
    double err = 0.0;
    T v = Rule::integrate(counted, a, b, 0, 0.0, &err);
    // The rule reports |K - G| on the reference interval [-1, 1].
    return Panel{a, b, v, err * 0.5 * (b - a)};
  };

  if (breakpoints.size() < 2) throw std::invalid_argument("integrate: need at least two breakpoints");
  std::priority_queue<Panel> heap;
  T total{};
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] == breakpoints[i]) continue;
    Panel p = rule(breakpoints[i], breakpoints[i + 1]);
    total += p.value;
    total_error += p.error;
    heap.push(p);
  }

  auto target = [&] { return std::max(tol.absolute, tol.relative * std::abs(total)); };
  while (!heap.empty() && total_error > target()) {
    if (evaluations > tol.max_evaluations)
      throw ConvergenceError("integrate: evaluation budget exhausted (error estimate " +
                             std::to_string(total_error) + ")");
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval cannot be split further at double precision; keep its estimate.
      total_error -= worst.error;
      continue;
    }
    Panel left = rule(worst.a, mid);
    Panel right = rule(mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the incremental updates.
  T sum{};
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, std::max(err, 0.0), evaluations};
}

template <class T, class Fn>
Result<T> integrate(Fn&& fn, double a, double b, const Tolerance& tol = {}) {
  const double pts[2] = {a, b};
  return integrate<T>(std::forward<Fn>(fn), std::span<const double>(pts), tol);
}

/// Uniform breakpoints a = x_0 < ... < x_n = b.
std::vector<double> uniform_breakpoints(double a, double b, std::size_t panels);

/// Integral over the real line of a function that is structured within
/// [center - core, center + core] and decays at least like |x|^-3 outside.
///
/// The core is split into `core_panels`; each tail is covered by panels of
/// doubling width out to the distance where `tail_bound(distance)` (an upper
/// bound of the remaining integral on one side) drops below the tolerance.
/// Tail panels are subdivided so no piece is wider than `max_panel`.
template <class Fn, class Bound>
Result<double> integrate_real_line(Fn&& fn, double center, double core, std::size_t core_panels, double max_panel,
                                   Bound&& tail_bound, const Tolerance& tol = {}) {
  std::vector<double> pts = uniform_breakpoints(center - core, center + core, core_panels);
  std::vector<double> right;
  double reach = core;
  double bound = tail_bound(reach);
  while (bound > 0.1 * tol.absolute) {
    const double next = 2.0 * reach;
    const auto pieces = static_cast<std::size_t>(std::ceil((next - reach) / max_panel));
    for (std::size_t i = 1; i <= pieces; ++i) right.push_back(reach + (next - reach) * i / pieces);
    reach = next;
    bound = tail_bound(reach);
    if (reach > 1e12 * std::max(core, 1.0)) throw ConvergenceError("integrate_real_line: tail bound does not decay");
  }
  std::vector<double> all;
  all.reserve(pts.size() + 2 * right.size());
  for (auto it = right.rbegin(); it != right.rend(); ++it) all.push_back(center - *it);
  all.insert(all.end(), pts.begin(), pts.end());
  for (double r : right) all.push_back(center + r);

  Result<double> res = integrate<double>(std::forward<Fn>(fn), std::span<const double>(all), tol);
  res.est_error += 2.0 * bound;
  return res;
}

}  // namespace moshlab::quadrature
