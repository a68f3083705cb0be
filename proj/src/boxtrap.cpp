#include "moshlab/boxtrap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "moshlab/quadrature.hpp"

namespace moshlab::boxtrap {

namespace {

constexpr double kPi = std::numbers::pi;
const ComplexValue kHalfOnePlusI{0.5, 0.5};

void require_positive_time(double t, const char* what) {
  if (!(t > 0.0)) throw std::invalid_argument(std::string(what) + ": t must be positive");
}

// w(-u) for u = (1+i)/2 sqrt(t) a without the 2 exp(-u^2) part that the
// reflection adds when -u lies in the lower half plane.
ComplexValue reflected_part(double st, double a) {
  const ComplexValue u = kHalfOnePlusI * (st * a);
  return a <= 0.0 ? specfun::faddeyeva(-u) : -specfun::faddeyeva(u);
}

// Bracketed sum of psi_box_released() with exp(i y^2 / 2t) factored out.
//
// The plane-wave parts 2 exp(-u^2) of the two edge terms satisfy
// exp(i theta) exp(-u_L^2) = exp(-u_0^2) exactly, so they are combined
// analytically; in the far tails they would otherwise carry phases of order
// y^2 / t and swamp the density.
ComplexValue branch_sum(const BoxScenario& s, double y, double t) {
  const double st = std::sqrt(t);
  const double kn = s.n * kPi / s.L;
  const double rel = (s.L * s.L - 2.0 * y * s.L) / (2.0 * t);
  ComplexValue sum{};
  for (int alpha : {1, -1}) {
    const double k = s.q + alpha * kn;
    const double aL = k - (y - s.L) / t;
    const double a0 = k - y / t;
    ComplexValue term = std::polar(1.0, k * s.L + rel) * reflected_part(st, aL) - reflected_part(st, a0);
    const int plane = (aL > 0.0 ? 1 : 0) - (a0 > 0.0 ? 1 : 0);
    if (plane != 0) term += 2.0 * plane * std::polar(1.0, -0.5 * t * a0 * a0);
    sum += static_cast<double>(alpha) * term;
  }
  return sum;
}

}  // namespace

void BoxScenario::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("box: L must be positive");
  if (n < 1) throw std::invalid_argument("box: n must be >= 1");
  if (!std::isfinite(q) || !std::isfinite(f)) throw std::invalid_argument("box: q and f must be finite");
}

BranchMomentum branch_momenta(const BoxScenario& s, double t) {
  const double kn = s.n * kPi / s.L;
  const double drift = s.q - 0.5 * s.f * t;
  return {drift + kn, drift - kn};
}

ComplexValue box_eigenstate(const BoxScenario& s, double x) {
  if (x < 0.0 || x > s.L) return 0.0;
  return std::sqrt(2.0 / s.L) * std::sin(s.n * kPi * x / s.L);
}

ComplexValue initial_state(const BoxScenario& s, double x) {
  return std::polar(1.0, s.q * x) * box_eigenstate(s, x);
}

ComplexValue psi_box_released(const BoxScenario& s, double x, double t) {
  require_positive_time(t, "psi_box_released");
  const double y = x + 0.5 * s.f * t * t;
  const double phase = y * y / (2.0 * t) - (s.f * t * x + s.f * s.f * t * t * t / 6.0);
  const ComplexValue pref = std::sqrt(2.0 / s.L) / ComplexValue(0.0, 4.0);
  return pref * std::polar(1.0, phase) * branch_sum(s, y, t);
}

double box_density(const BoxScenario& s, double x, double t) {
  require_positive_time(t, "box_density");
  const double y = x + 0.5 * s.f * t * t;
  return std::norm(branch_sum(s, y, t)) / (8.0 * s.L);
}

double bifurcation_time(double L, int n) {
  if (n < 1) throw std::invalid_argument("bifurcation_time: n must be >= 1");
  return L * L / (2.0 * n * kPi);
}

double bifurcation_time(const BoxScenario& s) { return bifurcation_time(s.L, s.n); }

double classical_center(const BoxScenario& s, double t) { return 0.5 * s.L + s.q * t - 0.5 * s.f * t * t; }

MomentReport integrate_release_profile(const std::function<double(double)>& density, const ReleaseGeometry& g,
                                       int power, double tolerance) {
  if (power != 0 && power != 1) throw std::invalid_argument("integrate_release_profile: power must be 0 or 1");
  const double c = 0.5 * g.L + g.q * g.t - 0.5 * g.f * g.t * g.t;
  const double sigma = std::max(g.L, g.n_max * kPi * g.t / g.L);
  const double core = 10.0 * sigma;
  // Far field: density <= 2 * 4 pi (sum n^2) t^3 / (L^3 d^4) on each side.
  const double amp = 8.0 * kPi * g.mode_weight * g.t * g.t * g.t / (g.L * g.L * g.L);
  auto bound = [&](double d) { return power == 0 ? amp / (3.0 * d * d * d) : amp / (2.0 * d * d); };
  const double max_panel = g.t > 0.0 ? std::max(8.0 * kPi * g.t / g.L, 1e-3 * g.L) : sigma;
  const auto core_panels = static_cast<std::size_t>(20 + 20 * g.n_max);

  quadrature::Tolerance tol;
  tol.absolute = tolerance;
  tol.max_evaluations = 20'000'000;
  auto integrand = [&](double x) { return power == 0 ? density(x) : (x - c) * density(x); };
  const auto r = quadrature::integrate_real_line(integrand, c, core, core_panels, max_panel, bound, tol);
  MomentReport out{r.value, r.est_error, r.evaluations};
  if (power == 1) {
    // Shift back by c times the norm over the same panels.
    const auto n = quadrature::integrate_real_line(density, c, core, core_panels, max_panel,
                                                   [&](double d) { return amp / (3.0 * d * d * d); }, tol);
    out.value += c * n.value;
    out.est_error += std::fabs(c) * n.est_error;
    out.evaluations += n.evaluations;
  }
  return out;
}

MomentReport norm(const BoxScenario& s, double t) {
  s.validate();
  if (t < 0.0) throw std::invalid_argument("norm: t must be >= 0");
  const double n2 = static_cast<double>(s.n) * s.n;
  if (t == 0.0) {
    auto rho = [&](double x) { return std::norm(box_eigenstate(s, x)); };
    const auto pts = quadrature::uniform_breakpoints(0.0, s.L, 2 * static_cast<std::size_t>(s.n));
    const auto r = quadrature::integrate<double>(rho, std::span<const double>(pts));
    return {r.value, r.est_error, r.evaluations};
  }
  return integrate_release_profile([&](double x) { return box_density(s, x, t); }, {s.L, s.n, s.q, s.f, t, n2}, 0,
                                   1e-10);
}

MomentReport mean_position(const BoxScenario& s, double t) {
  s.validate();
  if (t < 0.0) throw std::invalid_argument("mean_position: t must be >= 0");
  const double n2 = static_cast<double>(s.n) * s.n;
  if (t == 0.0) {
    auto rho = [&](double x) { return x * std::norm(box_eigenstate(s, x)); };
    const auto pts = quadrature::uniform_breakpoints(0.0, s.L, 2 * static_cast<std::size_t>(s.n));
    const auto r = quadrature::integrate<double>(rho, std::span<const double>(pts));
    return {r.value, r.est_error, r.evaluations};
  }
  return integrate_release_profile([&](double x) { return box_density(s, x, t); }, {s.L, s.n, s.q, s.f, t, n2}, 1,
                                   1e-7 * s.L);
}

double perturbation_coefficient(int n, int k, double L, double f) {
  if (n < 1 || k < 1) throw std::invalid_argument("perturbation_coefficient: n, k must be >= 1");
  if (n == k) throw std::invalid_argument("perturbation_coefficient: k must differ from n");
  if ((n + k) % 2 == 0) return 0.0;
  const double d = static_cast<double>(n) * n - static_cast<double>(k) * k;
  const double pi4 = kPi * kPi * kPi * kPi;
  return -16.0 * f * L * L * L * n * k / (pi4 * d * d * d);
}

double printed_perturbation_coefficient(int n, int k, double L, double f) {
  if (n < 1 || k < 1) throw std::invalid_argument("printed_perturbation_coefficient: n, k must be >= 1");
  if (n == k) throw std::invalid_argument("printed_perturbation_coefficient: k must differ from n");
  if ((n + k) % 2 == 0) return 0.0;
  const double d = static_cast<double>(k) * k - static_cast<double>(n) * n;
  const double pi4 = kPi * kPi * kPi * kPi;
  return -16.0 * f * L * L * L * n * k / (pi4 * d);
}

std::vector<PerturbationCoefficient> perturbation_coefficients(const BoxScenario& s, int k_max) {
  s.validate();
  if (k_max < s.n) throw std::invalid_argument("perturbation_coefficients: k_max must be >= n");
  std::vector<PerturbationCoefficient> out;
  for (int k = 1; k <= k_max; ++k)
    if (k != s.n) out.push_back({k, perturbation_coefficient(s.n, k, s.L, s.f)});
  return out;
}

FieldFrame box_density_map(const BoxScenario& s, const GridSpec& grid, const SweepOptions& opts) {
  s.validate();
  grid.validate();
  FieldFrame frame{Quantity::density, grid.x, grid.t, std::vector<double>(grid.size()), {}};
  frame.meta = {{"L", s.L}, {"n", static_cast<double>(s.n)}, {"q", s.q}, {"f", s.f}};
  sweep(frame.values, grid.t.count, grid.x.count, opts,
        [&](std::size_t r, std::size_t c) { return box_density(s, grid.x.at(c), grid.t.at(r)); });
  return frame;
}

}  // namespace moshlab::boxtrap
