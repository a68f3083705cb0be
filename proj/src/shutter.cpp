#include "moshlab/shutter.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

namespace moshlab::shutter {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_time(double t, const char* what) {
  if (!(t > 0.0)) throw std::invalid_argument(std::string(what) + ": t must be positive");
}

Extremum brent(double lo, double hi, bool maximum) {
  auto objective = [maximum](double u) {
    const double d = density_of_u0(u);
    return maximum ? -d : d;
  };
  const auto [u, val] = boost::math::tools::brent_find_minima(objective, lo, hi, 40);
  return {u, maximum ? -val : val};
}

double crossing(double lo, double hi) {
  auto g = [](double u) { return density_of_u0(u) - 1.0; };
  boost::uintmax_t iters = 200;
  const auto [a, b] =
      boost::math::tools::toms748_solve(g, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (a + b);
}

}  // namespace

double u0_of(const ShutterScenario& s, double x, double t) {
  require_positive_time(t, "u0_of");
  return std::sqrt(t / kPi) * (s.p - 0.5 * s.f * t) - x / std::sqrt(kPi * t);
}

double classical_front(const ShutterScenario& s, double t) { return s.p * t - 0.5 * s.f * t * t; }

ComplexValue psi_linear(const ShutterScenario& s, double x, double t) {
  require_positive_time(t, "psi_linear");
  if (s.f == 0.0) return specfun::moshinsky({x, s.p, t});
  const double shifted = x + 0.5 * s.f * t * t;
  const double phase = -(s.f * t * x + s.f * s.f * t * t * t / 6.0);
  return std::polar(1.0, phase) * specfun::moshinsky({shifted, s.p, t});
}

double density(const ShutterScenario& s, double x, double t) { return std::norm(psi_linear(s, x, t)); }

double density_of_u0(double u0) {
  const double c = 0.5 * std::sqrt(kPi) * u0;
  return 0.25 * std::norm(specfun::faddeyeva({-c, -c}));
}

double classical_density(const ShutterScenario& s, double x, double t) {
  return x < classical_front(s, t) ? 1.0 : 0.0;
}

FieldFrame density_map(const ShutterScenario& s, const GridSpec& grid, const SweepOptions& opts) {
  grid.validate();
  FieldFrame frame{Quantity::density, grid.x, grid.t, std::vector<double>(grid.size()), {}};
  frame.meta = {{"p", s.p}, {"f", s.f}};
  sweep(frame.values, grid.t.count, grid.x.count, opts,
        [&](std::size_t r, std::size_t c) { return density(s, grid.x.at(c), grid.t.at(r)); });
  return frame;
}

FieldFrame detector_signal(const ShutterScenario& s, double x_det, const Axis& t_axis, const SweepOptions& opts) {
  GridSpec grid{{x_det, x_det, 1}, t_axis};
  FieldFrame frame = density_map(s, grid, opts);
  frame.meta.emplace_back("x_det", x_det);
  return frame;
}

FringePositions fringe_trajectories(const ShutterScenario& s, double t) {
  require_positive_time(t, "fringe_trajectories");
  const double front = classical_front(s, t);
  const double scale = std::sqrt(kPi * t);
  return {front - scale * kUMax, front - scale * kUMin};
}

double visibility(const ShutterScenario& s, double t) {
  const auto fr = fringe_trajectories(s, t);
  const double pmax = density(s, fr.x_max, t);
  const double pmin = density(s, fr.x_min, t);
  return (pmax - pmin) / (pmax + pmin);
}

double fringe_width(double t) {
  require_positive_time(t, "fringe_width");
  return kFringeWidthFactor * std::sqrt(kPi * t);
}

Extremum refine_first_maximum() { return brent(kUMax - 0.3, kUMax + 0.3, true); }

Extremum refine_first_minimum() { return brent(kUMin - 0.3, kUMin + 0.3, false); }

Crossings classical_crossings() {
  const double umax = refine_first_maximum().u0;
  const double umin = refine_first_minimum().u0;
  return {crossing(0.0, umax), crossing(umax, umin)};
}

double measured_fringe_width(double t) {
  require_positive_time(t, "measured_fringe_width");
  const auto c = classical_crossings();
  return (c.outer - c.inner) * std::sqrt(kPi * t);
}

std::optional<std::size_t> first_maximum_index(std::span<const double> xs, std::span<const double> values,
                                               double front) {
  if (xs.size() != values.size()) throw std::invalid_argument("first_maximum_index: size mismatch");
  std::optional<std::size_t> best;
  const std::size_t n = values.size();
  std::size_t i = 1;
  while (i + 1 < n && xs[i] < front) {
    std::size_t j = i;
    while (j + 1 < n && values[j + 1] == values[i]) ++j;
    if (j + 1 < n && values[i] > values[i - 1] && values[j + 1] < values[i]) best = i;
    i = j + 1;
  }
  return best;
}

double refine_first_maximum_x(const ShutterScenario& s, double t) {
  const auto guess = fringe_trajectories(s, t);
  const double half = 0.25 * std::sqrt(kPi * t);
  auto objective = [&](double x) { return -density(s, x, t); };
  return boost::math::tools::brent_find_minima(objective, guess.x_max - half, guess.x_max + half, 40).first;
}

}  // namespace moshlab::shutter
