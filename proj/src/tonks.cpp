#include "moshlab/tonks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace moshlab::tonks {

void TGScenario::validate() const {
  if (N < 1) throw std::invalid_argument("tonks: N must be >= 1");
  mode(1).validate();
}

double tg_density(const TGScenario& s, double x, double t) {
  double rho = 0.0;
  for (int n = 1; n <= s.N; ++n) rho += boxtrap::box_density(s.mode(n), x, t);
  return rho;
}

double tg_initial_density(const TGScenario& s, double x) {
  double rho = 0.0;
  for (int n = 1; n <= s.N; ++n) rho += std::norm(boxtrap::box_eigenstate(s.mode(n), x));
  return rho;
}

FieldFrame tg_density_map(const TGScenario& s, const GridSpec& grid, const SweepOptions& opts) {
  s.validate();
  grid.validate();
  FieldFrame frame{Quantity::density, grid.x, grid.t, std::vector<double>(grid.size()), {}};
  frame.meta = {{"N", static_cast<double>(s.N)}, {"L", s.L}, {"q", s.q}, {"f", s.f}};
  sweep(frame.values, grid.t.count, grid.x.count, opts,
        [&](std::size_t r, std::size_t c) { return tg_density(s, grid.x.at(c), grid.t.at(r)); });
  return frame;
}

int peak_count(std::span<const double> slice, double threshold_fraction) {
  if (slice.empty()) throw std::invalid_argument("peak_count: empty slice");
  if (!(threshold_fraction > 0.0 && threshold_fraction < 1.0))
    throw std::invalid_argument("peak_count: threshold must lie in (0, 1)");
  const double top = *std::max_element(slice.begin(), slice.end());
  const double floor = threshold_fraction * top;
  const std::size_t n = slice.size();
  int count = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && slice[j + 1] == slice[i]) ++j;
    const bool interior = i > 0 && j + 1 < n;
    if (interior && slice[i - 1] < slice[i] && slice[j + 1] < slice[i] && slice[i] > floor) ++count;
    i = j + 1;
  }
  return count;
}

boxtrap::MomentReport tg_norm(const TGScenario& s, double t) {
  s.validate();
  if (!(t > 0.0)) throw std::invalid_argument("tg_norm: t must be positive");
  double weight = 0.0;
  for (int n = 1; n <= s.N; ++n) weight += static_cast<double>(n) * n;
  return boxtrap::integrate_release_profile([&](double x) { return tg_density(s, x, t); },
                                            {s.L, s.N, s.q, s.f, t, weight}, 0, 1e-9);
}

}  // namespace moshlab::tonks
