#include "moshlab/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace moshlab::wigner {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(2 d dp) / (pi dp) for d > 0, with the dp -> 0 limit.
double sinc_kernel(double d, double dp, double p0) {
  if (std::fabs(dp) < 1e-12 * std::max(1.0, std::fabs(p0))) return 2.0 * d / kPi;
  return std::sin(2.0 * d * dp) / (kPi * dp);
}

}  // namespace

double wigner_initial(double x, double p, double p0) {
  if (!(x < 0.0)) return 0.0;
  return sinc_kernel(-x, p0 - p, p0);
}

double wigner_evolved(const WignerPoint& pt) {
  if (pt.t < 0.0) throw std::invalid_argument("wigner_evolved: t must be >= 0");
  const double x0 = pt.x - pt.p * pt.t - 0.5 * pt.f * pt.t * pt.t;
  const double p_initial = pt.p + pt.f * pt.t;
  return wigner_initial(x0, p_initial, pt.p0);
}

ClassicalWigner wigner_classical(double x, double p, double p0, double f, double t) {
  if (t < 0.0) throw std::invalid_argument("wigner_classical: t must be >= 0");
  const double shell = p0 - f * t;
  if (std::fabs(p - shell) > 1e-9 * std::max(1.0, std::fabs(p0))) return {false, 0.0};
  const double front = p0 * t - 0.5 * f * t * t;
  return {true, x < front ? 1.0 : 0.0};
}

FieldFrame wigner_map(double p0, double f, double t, const PhaseSpaceGrid& grid, const SweepOptions& opts) {
  grid.validate();
  if (t < 0.0) throw std::invalid_argument("wigner_map: t must be >= 0");
  FieldFrame frame{Quantity::wigner, grid.x, grid.p, std::vector<double>(grid.size()), {}};
  frame.meta = {{"p0", p0}, {"f", f}, {"t", t}};
  sweep(frame.values, grid.p.count, grid.x.count, opts, [&](std::size_t r, std::size_t c) {
    return wigner_evolved({grid.x.at(c), grid.p.at(r), p0, f, t});
  });
  return frame;
}

}  // namespace moshlab::wigner
