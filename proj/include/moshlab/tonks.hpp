#pragma once

#include <span>

#include "moshlab/boxtrap.hpp"
#include "moshlab/grid.hpp"
#include "moshlab/sweep.hpp"

// Tonks-Girardeau gas released from the hard-wall trap. By the Fermi-Bose
// map its density is that of N free fermions in the lowest N box modes.
namespace moshlab::tonks {

struct TGScenario {
  int N = 1;
  double L = 1.0;
  double q = 0.0;
  double f = 0.0;

  void validate() const;
  boxtrap::BoxScenario mode(int n) const { return {L, n, q, f}; }
};

/// sum_{n=1..N} |psi_n(x, t)|^2. Requires t > 0.
double tg_density(const TGScenario& s, double x, double t);

/// sum_{n=1..N} (2/L) sin^2(n pi x / L) on [0, L].
double tg_initial_density(const TGScenario& s, double x);

FieldFrame tg_density_map(const TGScenario& s, const GridSpec& grid, const SweepOptions& opts = {});

inline constexpr double kDefaultPeakThreshold = 0.1;

/// Interior local maxima of `slice` above threshold_fraction * max(slice).
/// A run of equal samples counts once; the end samples never count. Throws std::invalid_argument for an empty slice or a threshold
/// outside (0, 1).
int peak_count(std::span<const double> slice, double threshold_fraction = kDefaultPeakThreshold);

/// Integral of tg_density over the real line (N up to quadrature error).
boxtrap::MomentReport tg_norm(const TGScenario& s, double t);

}  // namespace moshlab::tonks
