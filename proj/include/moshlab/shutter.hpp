#pragma once

#include <optional>
#include <span>

#include "moshlab/grid.hpp"
#include "moshlab/specfun.hpp"
#include "moshlab/sweep.hpp"

// Cut-off plane wave exp(ipx) Theta(-x) released at t = 0 into the potential
// V(x) = f x. Internal units throughout (hbar = m = 1).
namespace moshlab::shutter {

struct ShutterScenario {
  double p = 0.0;  // beam momentum
  double f = 0.0;  // force constant, V = f x
};

// Universal first-fringe constants of the cut-off plane wave.
inline constexpr double kUMax = 1.2172;
inline constexpr double kUMin = 1.8725;
inline constexpr double kPMax = 1.370;
inline constexpr double kPMin = 0.778;
inline constexpr double kFringeWidthFactor = 0.85;

/// u0 = sqrt(t/pi) (p - f t / 2) - x / sqrt(pi t). Zero on the classical front.
double u0_of(const ShutterScenario& s, double x, double t);

/// Classical front x_cl(t) = p t - f t^2 / 2.
double classical_front(const ShutterScenario& s, double t);

/// Exact wave function, exp(-i(f t x + f^2 t^3 / 6)) M(x + f t^2 / 2, p, t).
///
/// For f == 0 this is moshinsky(x, p, t) itself. Requires t > 0.
ComplexValue psi_linear(const ShutterScenario& s, double x, double t);

/// |psi_linear|^2.
double density(const ShutterScenario& s, double x, double t);

/// The density as a function of u0 alone: |w(-(1+i) sqrt(pi) u0 / 2)|^2 / 4.
double density_of_u0(double u0);

/// Theta(front - x).
double classical_density(const ShutterScenario& s, double x, double t);

FieldFrame density_map(const ShutterScenario& s, const GridSpec& grid, const SweepOptions& opts = {});

/// Density at a fixed detector position; the frame has a single x sample.
FieldFrame detector_signal(const ShutterScenario& s, double x_det, const Axis& t_axis,
                           const SweepOptions& opts = {});

struct FringePositions {
  double x_max = 0.0;
  double x_min = 0.0;
};

/// Positions of the first maximum and first minimum behind the front.
FringePositions fringe_trajectories(const ShutterScenario& s, double t);

/// (P_max - P_min) / (P_max + P_min) from the densities at fringe_trajectories().
double visibility(const ShutterScenario& s, double t);

/// 0.85 sqrt(pi t).
double fringe_width(double t);

struct Extremum {
  double u0 = 0.0;
  double density = 0.0;
};

/// Brent refinement of the first maximum / minimum of density_of_u0 around
/// the tabulated u values.
Extremum refine_first_maximum();
Extremum refine_first_minimum();

/// u0 values where density_of_u0 crosses the classical value 1 on either
/// side of the first maximum.
struct Crossings {
  double inner = 0.0;  // between the front and the first maximum
  double outer = 0.0;  // between the first maximum and the first minimum
};
Crossings classical_crossings();

/// Width of the main fringe from the two classical crossings, in x at time t.
double measured_fringe_width(double t);

/// Index of the first maximum behind the front on a density slice sampled at
/// increasing xs: the local maximum with the largest x below `front`. Ties on
/// plateaus resolve to the smallest x. Empty when no interior maximum exists.
std::optional<std::size_t> first_maximum_index(std::span<const double> xs, std::span<const double> values,
                                               double front);

/// Position of the first maximum at time t refined by Brent's method in x,
/// starting from the analytic trajectory.
double refine_first_maximum_x(const ShutterScenario& s, double t);

}  // namespace moshlab::shutter
