#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "moshlab/grid.hpp"
#include "moshlab/specfun.hpp"
#include "moshlab/sweep.hpp"

// Eigenstates of the hard-wall trap [0, L] released at t = 0 into V = f x,
// optionally with a momentum kick q. Internal units (hbar = m = 1).
namespace moshlab::boxtrap {

struct BoxScenario {
  double L = 1.0;
  int n = 1;
  double q = 0.0;
  double f = 0.0;

  /// Throws std::invalid_argument unless L > 0 and n >= 1.
  void validate() const;
};

/// p_alpha = q + alpha n pi / L - f t / 2.
struct BranchMomentum {
  double p_plus = 0.0;
  double p_minus = 0.0;
};
BranchMomentum branch_momenta(const BoxScenario& s, double t);

/// sqrt(2/L) sin(n pi x / L) on [0, L], zero elsewhere.
ComplexValue box_eigenstate(const BoxScenario& s, double x);

/// exp(i q x) times box_eigenstate(): the state right after release.
ComplexValue initial_state(const BoxScenario& s, double x);

/// Released state at t > 0 as four Moshinsky terms:
///
///   sqrt(2/L)/(2i) exp(-i(f t x + f^2 t^3 / 6))
///     sum_{alpha=+-} alpha [exp(i k_a L) M(y - L, k_a, t) - M(y, k_a, t)]
///
/// with y = x + f t^2 / 2 and k_a = q + alpha n pi / L.
ComplexValue psi_box_released(const BoxScenario& s, double x, double t);

/// |psi_box_released|^2, evaluated without the common phase factor.
double box_density(const BoxScenario& s, double x, double t);

/// t_n = L^2 / (2 n pi).
double bifurcation_time(double L, int n);
double bifurcation_time(const BoxScenario& s);

/// Classical centre of mass L/2 + q t - f t^2 / 2.
double classical_center(const BoxScenario& s, double t);

struct MomentReport {
  double value = 0.0;
  double est_error = 0.0;
  std::size_t evaluations = 0;
};

/// Geometry of a released cloud, used to place quadrature windows.
struct ReleaseGeometry {
  double L = 1.0;
  int n_max = 1;             // highest occupied mode
  double q = 0.0;
  double f = 0.0;
  double t = 0.0;
  double mode_weight = 1.0;  // sum of n^2 over occupied modes (far-field tail amplitude)
};

/// Integral of x^power * density(x) over the real line (power 0 or 1).
///
/// Adaptive Gauss-Kronrod on the core [c - 10 sigma, c + 10 sigma] with
/// sigma = max(L, n_max pi t / L), plus doubling tail panels out to where the
/// t^3 / x^4 far-field bound is below the tolerance. Throws
/// quadrature::ConvergenceError on failure.
MomentReport integrate_release_profile(const std::function<double(double)>& density, const ReleaseGeometry& g,
                                       int power, double tolerance = 1e-11);

/// Norm of the released state (1 up to quadrature error).
MomentReport norm(const BoxScenario& s, double t);

/// <x>(t) by quadrature; t == 0 uses the trap eigenstate (L/2).
MomentReport mean_position(const BoxScenario& s, double t);

/// First-order admixture coefficient C_nk = <k|f x|n> / (E_n - E_k),
///
///   C_nk = 8 f L^3 n k [(-1)^{n+k} - 1] / (pi^4 (n^2 - k^2)^3),
///
/// from <k|x|n> = -8 L n k / (pi^2 (n^2 - k^2)^2) for odd n + k.
double perturbation_coefficient(int n, int k, double L, double f);

/// The same coefficient with a single power of (k^2 - n^2) in the
/// denominator, kept only to quantify that form in validation reports.
double printed_perturbation_coefficient(int n, int k, double L, double f);

struct PerturbationCoefficient {
  int k = 0;
  double c = 0.0;
};

/// C_nk for k = 1..k_max, k != n. Requires k_max >= n.
std::vector<PerturbationCoefficient> perturbation_coefficients(const BoxScenario& s, int k_max);

FieldFrame box_density_map(const BoxScenario& s, const GridSpec& grid, const SweepOptions& opts = {});

}  // namespace moshlab::boxtrap
