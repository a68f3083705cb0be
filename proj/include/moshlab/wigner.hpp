#pragma once

#include "moshlab/grid.hpp"
#include "moshlab/sweep.hpp"

// Wigner function of the released cut-off plane wave, hbar = m = 1.
namespace moshlab::wigner {

struct WignerPoint {
  double x = 0.0;
  double p = 0.0;
  double p0 = 0.0;  // beam momentum
  double f = 0.0;   // force constant, V = f x
  double t = 0.0;   // >= 0
};

/// W(x, p; p0, 0+) = sin(-2x (p0 - p)) / (pi (p0 - p)) Theta(-x).
///
/// Uses the limit -2x / pi when |p0 - p| < 1e-12 max(1, |p0|).
double wigner_initial(double x, double p, double p0);

/// Initial Wigner function transported along the classical flow of V = f x:
/// W_t(x, p) = W_0(x - p t - f t^2 / 2, p + f t). Zero outside the classically
/// accessible region p t + f t^2 / 2 > x.
double wigner_evolved(const WignerPoint& pt);

/// hbar -> 0 limit: delta(p0 - f t - p) Theta(p0 t - f t^2 / 2 - x).
struct ClassicalWigner {
  bool on_shell = false;
  double weight = 0.0;
};

/// on_shell iff |p - (p0 - f t)| <= 1e-9 max(1, |p0|); weight is 0 or 1.
ClassicalWigner wigner_classical(double x, double p, double p0, double f, double t);

/// wigner_evolved() on an (x, p) lattice at fixed t.
FieldFrame wigner_map(double p0, double f, double t, const PhaseSpaceGrid& grid, const SweepOptions& opts = {});

}  // namespace moshlab::wigner
