#include "moshlab/specfun.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>

namespace moshlab::specfun {

namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257390;
constexpr double kInvSqrtPi = 0.56418958354775628695;
// log(DBL_MAX / 2): largest exponent for which 2 exp(.) stays finite.
constexpr double kMaxExponent = 708.7827128933840;

std::string describe(ComplexValue z) {
  std::ostringstream os;
  os.precision(17);
  os << "faddeyeva: exp(-z^2) overflows at z = (" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

// w(x + iy) for x >= 0, y >= 0.
//
// Region split after Gautschi and Poppe & Wijers: rho^2 = (x/6.3)^2 + (y/4.4)^2.
ComplexValue faddeyeva_first_quadrant(double x, double y) {
  if (x > 1e8 || y > 1e8) {
    // Leading asymptotic term; the next one is smaller by 1/(2 z^2) < 1e-16.
    const ComplexValue z{x, y};
    return ComplexValue{0.0, kInvSqrtPi} / z;
  }

  const double sx = x / 6.3;
  const double sy = y / 4.4;
  double rho2 = sx * sx + sy * sy;
  const double re_z2 = (x - y) * (x + y);
  const double im_z2 = 2.0 * x * y;

  if (rho2 < 0.085264) {
    // Maclaurin series of erf(-iz), summed by Horner in z^2.
    const double r = (1.0 - 0.85 * sy) * std::sqrt(rho2);
    const int n = static_cast<int>(std::lround(6.0 + 72.0 * r));
    int j = 2 * n + 1;
    double sum_re = 1.0 / j;
    double sum_im = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double tmp = (sum_re * re_z2 - sum_im * im_z2) / i;
      sum_im = (sum_re * im_z2 + sum_im * re_z2) / i;
      sum_re = tmp + 1.0 / j;
    }
    // erfc(-iz) = 1 + (2i/sqrt(pi)) z S(z^2)
    const double e_re = 1.0 - kTwoOverSqrtPi * (sum_re * y + sum_im * x);
    const double e_im = kTwoOverSqrtPi * (sum_re * x - sum_im * y);
    const double mag = std::exp(-re_z2);
    const double g_re = mag * std::cos(im_z2);
    const double g_im = -mag * std::sin(im_z2);
    return {e_re * g_re - e_im * g_im, e_re * g_im + e_im * g_re};
  }

  double h = 0.0;
  int taylor_terms = 0;
  int cf_terms = 0;
  if (rho2 > 1.0) {
    const double rho = std::sqrt(rho2);
    cf_terms = static_cast<int>(3.0 + 1442.0 / (26.0 * rho + 77.0));
  } else {
    const double r = (1.0 - sy) * std::sqrt(1.0 - rho2);
    h = 1.88 * r;
    taylor_terms = static_cast<int>(std::lround(7.0 + 34.0 * r));
    cf_terms = static_cast<int>(std::lround(16.0 + 26.0 * r));
  }

  const bool taylor = h > 0.0;
  const double h2 = 2.0 * h;
  double lambda = taylor ? std::pow(h2, taylor_terms) : 0.0;
  double r_re = 0.0, r_im = 0.0, s_re = 0.0, s_im = 0.0;
  for (int n = cf_terms; n >= 0; --n) {
    const double np1 = n + 1.0;
    double t_re = y + h + np1 * r_re;
    double t_im = x - np1 * r_im;
    const double c = 0.5 / (t_re * t_re + t_im * t_im);
    r_re = c * t_re;
    r_im = c * t_im;
    if (taylor && n <= taylor_terms) {
      t_re = lambda + s_re;
      s_re = r_re * t_re - r_im * s_im;
      s_im = r_im * t_re + r_re * s_im;
      lambda /= h2;
    }
  }

  double w_re = taylor ? kTwoOverSqrtPi * s_re : kTwoOverSqrtPi * r_re;
  const double w_im = taylor ? kTwoOverSqrtPi * s_im : kTwoOverSqrtPi * r_im;
  if (y == 0.0) w_re = std::exp(-x * x);
  return {w_re, w_im};
}

ComplexValue faddeyeva_upper(double x, double y) {
  const ComplexValue w = faddeyeva_first_quadrant(std::fabs(x), y);
  return x < 0.0 ? std::conj(w) : w;
}

}  // namespace

FaddeyevaOverflow::FaddeyevaOverflow(ComplexValue z) : std::overflow_error(describe(z)), z_(z) {}

std::optional<ComplexValue> try_faddeyeva(ComplexValue z) {
  const double x = z.real();
  const double y = z.imag();
  if (!std::isfinite(x) || !std::isfinite(y))
    throw std::invalid_argument("faddeyeva: non-finite argument");

  if (y >= 0.0) return faddeyeva_upper(x, y);

  // Reflection: w(z) = 2 exp(-z^2) - w(-z).
  const double exponent = (y - x) * (y + x);
  if (exponent > kMaxExponent) return std::nullopt;
  const ComplexValue two_gauss = std::polar(2.0 * std::exp(exponent), -2.0 * x * y);
  const ComplexValue w = two_gauss - faddeyeva_upper(-x, -y);
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
  return w;
}

ComplexValue faddeyeva(ComplexValue z) {
  if (auto w = try_faddeyeva(z)) return *w;
  throw FaddeyevaOverflow(z);
}

ComplexValue erfc(ComplexValue z) {
  if (z.real() < 0.0) return 2.0 - erfc(-z);
  // Re z >= 0 puts iz in the closed upper half plane.
  const double exponent = (z.imag() - z.real()) * (z.imag() + z.real());
  const ComplexValue gauss = std::polar(std::exp(exponent), -2.0 * z.real() * z.imag());
  return gauss * faddeyeva(ComplexValue{-z.imag(), z.real()});
}

FresnelPair fresnel(double u) {
  if (std::isnan(u)) throw std::invalid_argument("fresnel: NaN argument");
  if (std::isinf(u)) return u > 0 ? FresnelPair{0.5, 0.5} : FresnelPair{-0.5, -0.5};

  constexpr double kPi = std::numbers::pi;
  constexpr double kEps = 1e-17;
  const double ax = std::fabs(u);
  FresnelPair out;

  if (ax < 1e-150) {
    out = {ax, 0.0};
  } else if (ax <= 1.5) {
    // term_j = u (pi u^2 / 2)^j / j!; C takes even j, S odd j, each over (2j + 1).
    const double arg = 0.5 * kPi * ax * ax;
    double term = ax;
    double c = ax;
    double s = 0.0;
    for (int j = 1; j < 200; ++j) {
      term *= arg / j;
      const double contrib = term / (2 * j + 1);
      switch (j % 4) {
        case 1: s += contrib; break;
        case 2: c -= contrib; break;
        case 3: s -= contrib; break;
        default: c += contrib; break;
      }
      if (contrib < kEps * std::fabs(j % 2 ? s : c)) break;
    }
    out = {c, s};
  } else {
    // Even continued fraction for erfc at z = sqrt(pi)/2 (1 - i) u, modified Lentz.
    constexpr double kTiny = 1e-300;
    const double pix2 = kPi * ax * ax;
    ComplexValue b{1.0, -pix2};
    ComplexValue cc{1.0 / kTiny, 0.0};
    ComplexValue d = 1.0 / b;
    ComplexValue h = d;
    int n = -1;
    for (int k = 2; k <= 5000; ++k) {
      n += 2;
      const double a = -static_cast<double>(n) * (n + 1);
      b += 4.0;
      d = 1.0 / (a * d + b);
      cc = b + a / cc;
      const ComplexValue del = cc * d;
      h *= del;
      if (std::fabs(del.real() - 1.0) + std::fabs(del.imag()) < 1e-16) break;
    }
    h *= ComplexValue{ax, -ax};
    const ComplexValue phase = std::polar(1.0, 0.5 * pix2);
    const ComplexValue cs = ComplexValue{0.5, 0.5} * (1.0 - phase * h);
    out = {cs.real(), cs.imag()};
  }

  if (u < 0.0) {
    out.c = -out.c;
    out.s = -out.s;
  }
  return out;
}

ComplexValue moshinsky_z(const MoshinskyArgs& args) {
  const double c = 0.5 * std::sqrt(args.tau) * (args.k - args.x / args.tau);
  return {c, c};
}

ComplexValue moshinsky(const MoshinskyArgs& args) {
  if (!(args.tau > 0.0)) throw std::invalid_argument("moshinsky: tau must be positive");
  const ComplexValue z = moshinsky_z(args);
  const double phase = args.x * args.x / (2.0 * args.tau);
  return 0.5 * std::polar(1.0, phase) * faddeyeva(-z);
}

}  // namespace moshlab::specfun
