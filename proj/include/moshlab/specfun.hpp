#pragma once

#include <complex>
#include <optional>
#include <stdexcept>

namespace moshlab {

using ComplexValue = std::complex<double>;

namespace specfun {

/// Raised when exp(-z^2) leaves the double range (deep lower half plane).
class FaddeyevaOverflow : public std::overflow_error {
 public:
  explicit FaddeyevaOverflow(ComplexValue z);
  ComplexValue argument() const { return z_; }

 private:
  ComplexValue z_;
};

/// Faddeyeva function w(z) = exp(-z^2) erfc(-iz).
///
/// The upper half plane is evaluated with a region split: Maclaurin series
/// near the origin, a Taylor expansion whose derivatives come from the
/// Laplace continued fraction in the intermediate annulus, and the continued
/// fraction itself far out. Relative accuracy there is better than 1e-12.
/// Points with Im z < 0 go through w(z) = 2 exp(-z^2) - w(-z), so the error
/// is absolute and scales with |2 exp(-z^2)|.
///
/// Throws FaddeyevaOverflow when exp(-z^2) is not representable and
/// std::invalid_argument for non-finite input.
ComplexValue faddeyeva(ComplexValue z);

/// Same as faddeyeva() but reports overflow as an empty optional.
std::optional<ComplexValue> try_faddeyeva(ComplexValue z);

/// Complementary error function of complex argument, erfc(z) = exp(-z^2) w(iz).
ComplexValue erfc(ComplexValue z);

struct FresnelPair {
  double c = 0.0;
  double s = 0.0;
};

/// Fresnel integrals C(u) and S(u) with the pi u^2 / 2 kernel.
///
/// Computed without reference to faddeyeva(): a power series for |u| <= 1.5
/// and a continued fraction (modified Lentz) beyond. Infinite arguments map
/// to the +-1/2 limits; NaN throws std::invalid_argument.
FresnelPair fresnel(double u);

/// Arguments of the Moshinsky function in hbar = m = 1 units.
struct MoshinskyArgs {
  double x = 0.0;    // position
  double k = 0.0;    // wavenumber p / hbar
  double tau = 0.0;  // hbar t / m, must be > 0
};

/// M(x, k, tau) = exp(i x^2 / (2 tau)) w(-z) / 2,  z = (1+i)/2 sqrt(tau) (k - x/tau).
///
/// Free evolution of the cut-off plane wave exp(ikx) Theta(-x).
ComplexValue moshinsky(const MoshinskyArgs& args);

/// Argument of w in moshinsky(): (1+i)/2 sqrt(tau) (k - x/tau).
ComplexValue moshinsky_z(const MoshinskyArgs& args);

}  // namespace specfun
}  // namespace moshlab
