#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <stop_token>
#include <vector>

#include "moshlab/boxtrap.hpp"
#include "moshlab/grid.hpp"
#include "moshlab/shutter.hpp"
#include "moshlab/specfun.hpp"
#include "moshlab/tonks.hpp"

// Independent routes to the closed forms, used by the tests and `validate`.
// None of them shares an evaluation path with the code it checks.
namespace moshlab::oracle {

/// Shutter wave function through the Fresnel integrals:
///
///   psi = exp(i Phi) / sqrt(2i) [(1+i)/2 + C(u0) + i S(u0)],
///   Phi = -f^2 t^3 / 24 - f t x / 2 + k x - k^2 t / 2,  k = p - f t / 2.
ComplexValue fresnel_route_psi(const shutter::ShutterScenario& s, double x, double t);

struct QuadratureReport {
  ComplexValue value;
  double est_error = 0.0;
  std::size_t evaluations = 0;
};

/// Stationary point x* = x - (p - f t / 2) t of the propagator integrand.
double stationary_point(const shutter::ShutterScenario& s, double x, double t);

/// Window reaching `zones` Fresnel zones (sqrt(4 pi t) each) beyond x*.
double default_window(const shutter::ShutterScenario& s, double x, double t, double zones = 1000.0);

/// psi(x, t) = int_{-window}^{0} K_f(x, t; x') exp(i p x') dx' with the
/// linear-potential propagator
///
///   K_f = exp(i[(x - x')^2 / 2t - f t (x + x') / 2 - f^2 t^3 / 24]) / sqrt(2 pi i t).
///
/// Panels are placed on equal-phase steps around x*; the remainder beyond
/// -window is added from its two-term asymptotic expansion, whose next term
/// bounds the truncation error in est_error. Requires the window to extend at
/// least 10 Fresnel zones past x* (std::invalid_argument otherwise). Throws
/// quadrature::ConvergenceError when the evaluation budget is exhausted.
QuadratureReport quadrature_psi(const shutter::ShutterScenario& s, double x, double t, double window);

/// Periodic sampling x_j = x_min + j dx, j < values.size().
struct Wavefunction1D {
  double x_min = 0.0;
  double dx = 0.0;
  std::vector<ComplexValue> values;

  double x(std::size_t j) const { return x_min + dx * static_cast<double>(j); }
  double norm() const;
};

/// Samples fn on [-X, X) with N points.
Wavefunction1D sample(const std::function<ComplexValue(double)>& fn, double X, std::size_t N);

/// Fourier transform int exp(-ikx) exp(iqx) phi_n(x) dx of the box state.
ComplexValue box_fourier_transform(const boxtrap::BoxScenario& s, double k);

/// Band-limited box initial state exp(iqx) phi_n(x) on [-X, X) with N points,
/// synthesised from its exact Fourier transform so the wall kinks carry no
/// sampling error. Bins with |k| > band are left empty (band <= 0: keep all);
/// leave a band margin of at least |f| t when the state will be kicked.
Wavefunction1D project_box_eigenstate(const boxtrap::BoxScenario& s, double X, std::size_t N, double band = 0.0);

class BoundaryContamination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Cancelled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Split-operator propagation under H = p^2 / 2 + f x on the periodic domain
/// of `initial`, with `steps` symmetric (Strang) steps of the potential half
/// kick, exact kinetic multiplier and second half kick. The domain should
/// come from commensurate_half_width() when f != 0. Throws
/// BoundaryContamination when the density in the outer 1% of the domain
/// exceeds 1e-10 afterwards, and Cancelled when `stop` is requested between
/// steps.
Wavefunction1D grid_propagate(const Wavefunction1D& initial, double f, double t, std::size_t steps,
                              std::stop_token stop = {});

/// Half-width X' >= X of a periodic domain on which the half kick
/// exp(-i f x dt / 2), dt = t / steps, is itself periodic, so the potential
/// step shifts Fourier bins exactly. Returns X when f t == 0.
double commensurate_half_width(double f, double t, std::size_t steps, double X);

/// f <phi_k|x|phi_n> / (E_n - E_k) with the matrix element by adaptive quadrature.
double perturbation_matrix_element(int n, int k, double L, double f);

struct WignerDirect {
  double value = 0.0;
  bool near_edge = false;  // the front lies within 2 fringe widths of the window edge
};

/// 50 fringe widths, 50 * 0.85 sqrt(pi t).
double default_wigner_window(double t);

/// (1/pi) int psi*(x+y) psi(x-y) exp(2ipy) dy over |y| < window, using
/// psi_linear and a raised-cosine taper on the outer 20% of the window.
/// t == 0 uses the cut-off plane wave itself.
WignerDirect wigner_direct(double p0, double f, double t, double x, double p, double window);

/// N |Psi|^2 marginal of the Slater determinant of the N lowest released
/// modes at (x, t), summed by brute force over the (N-1)-dimensional product
/// of `lattice` (trapezoid weights). Intended for N = 2 and 3.
double slater_marginal(const tonks::TGScenario& s, double x, double t, const Axis& lattice);

/// Lattice covering the released cloud at t for slater_marginal().
Axis default_marginal_lattice(const tonks::TGScenario& s, double t, std::size_t count);

}  // namespace moshlab::oracle
