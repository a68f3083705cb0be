#include "moshlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "moshlab/quadrature.hpp"
#include "moshlab/wigner.hpp"

namespace moshlab::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
const ComplexValue kI{0.0, 1.0};

void require_positive_time(double t, const char* what) {
  if (!(t > 0.0)) throw std::invalid_argument(std::string(what) + ": t must be positive");
}

// FFTW planning is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftPair {
 public:
  explicit FftPair(std::vector<ComplexValue>& data) {
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    const int n = static_cast<int>(data.size());
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_1d(n, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_1d(n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!forward_ || !backward_) throw std::runtime_error("grid_propagate: FFTW planning failed");
  }
  ~FftPair() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }
  FftPair(const FftPair&) = delete;
  FftPair& operator=(const FftPair&) = delete;

  void forward() const { fftw_execute(forward_); }
  void backward() const { fftw_execute(backward_); }

 private:
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

// Wavenumber of FFT bin m on a period of length P.
double bin_wavenumber(std::size_t m, std::size_t N, double P) {
  const auto signed_m = m < (N + 1) / 2 ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(N);
  return 2.0 * kPi * signed_m / P;
}

// sin(a) / a
double sinc(double a) { return std::fabs(a) < 1e-8 ? 1.0 - a * a / 6.0 : std::sin(a) / a; }

}  // namespace

ComplexValue fresnel_route_psi(const shutter::ShutterScenario& s, double x, double t) {
  require_positive_time(t, "fresnel_route_psi");
  const double k = s.p - 0.5 * s.f * t;
  const double u0 = std::sqrt(t / kPi) * k - x / std::sqrt(kPi * t);
  const double phase = -s.f * s.f * t * t * t / 24.0 - 0.5 * s.f * t * x + k * x - 0.5 * k * k * t;
  const auto [c, sv] = specfun::fresnel(u0);
  const ComplexValue bracket{0.5 + c, 0.5 + sv};
  return std::polar(1.0, phase) * bracket / std::sqrt(ComplexValue(0.0, 2.0));
}

double stationary_point(const shutter::ShutterScenario& s, double x, double t) {
  return x - (s.p - 0.5 * s.f * t) * t;
}

double default_window(const shutter::ShutterScenario& s, double x, double t, double zones) {
  require_positive_time(t, "default_window");
  return std::sqrt(4.0 * kPi * t * zones) + stationary_point(s, x, t);
}

QuadratureReport quadrature_psi(const shutter::ShutterScenario& s, double x, double t, double window) {
  require_positive_time(t, "quadrature_psi");
  if (!(window > 0.0)) throw std::invalid_argument("quadrature_psi: window must be positive");
  const double xs = stationary_point(s, x, t);
  const double zone = std::sqrt(4.0 * kPi * t);
  const double reach = window + xs;  // distance from x* to the truncation point
  if (reach < std::sqrt(10.0) * zone)
    throw std::invalid_argument("quadrature_psi: window must extend 10 Fresnel zones beyond the stationary point");

  const double f = s.f;
  const double global = -0.5 * f * t * x - f * f * t * t * t / 24.0;
  auto phi = [&](double xp) { return (x - xp) * (x - xp) / (2.0 * t) - 0.5 * f * t * xp + s.p * xp + global; };
  const ComplexValue pref = std::exp(ComplexValue(0.0, -kPi / 4.0)) / std::sqrt(2.0 * kPi * t);
  auto integrand = [&](double xp) { return pref * std::polar(1.0, phi(xp)); };

  // Breakpoints where the quadratic phase around x* advances by 2 pi.
  std::vector<double> pts{-window, 0.0};
  for (int sign : {-1, 1}) {
    for (double j = 1.0;; j += 1.0) {
      const double b = xs + sign * std::sqrt(4.0 * kPi * t * j);
      if (b <= -window || b >= 0.0) {
        if (sign < 0 && b >= 0.0) continue;  // x* right of the edge: zones still to come
        break;
      }
      pts.push_back(b);
    }
  }
  if (xs > -window && xs < 0.0) pts.push_back(xs);
  std::sort(pts.begin(), pts.end());

  quadrature::Tolerance tol;
  tol.absolute = 1e-10;
  tol.max_evaluations = 20'000'000;
  const auto core = quadrature::integrate<ComplexValue>(integrand, std::span<const double>(pts), tol);

  // int_{-inf}^{a} exp(i phi) ~ exp(i phi(a)) [-i / phi' - phi'' / phi'^3], a = -window.
  const double d1 = (-window - xs) / t;
  const double d2 = 1.0 / t;
  const ComplexValue tail = pref * std::polar(1.0, phi(-window)) * (-kI / d1 - d2 / (d1 * d1 * d1));
  const double next_term = std::abs(pref) * 3.0 * d2 * d2 / std::pow(std::fabs(d1), 5);
  return {core.value + tail, core.est_error + next_term, core.evaluations};
}

double Wavefunction1D::norm() const {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return s * dx;
}

Wavefunction1D sample(const std::function<ComplexValue(double)>& fn, double X, std::size_t N) {
  if (!(X > 0.0) || N < 2) throw std::invalid_argument("sample: need X > 0 and N >= 2");
  Wavefunction1D w{-X, 2.0 * X / static_cast<double>(N), std::vector<ComplexValue>(N)};
  for (std::size_t j = 0; j < N; ++j) w.values[j] = fn(w.x(j));
  return w;
}

ComplexValue box_fourier_transform(const boxtrap::BoxScenario& s, double k) {
  const double kn = s.n * kPi / s.L;
  ComplexValue ft{};
  for (int alpha : {1, -1}) {
    const double b = alpha * kn - (k - s.q);
    ft += static_cast<double>(alpha) * s.L * std::polar(1.0, 0.5 * b * s.L) * sinc(0.5 * b * s.L);
  }
  return std::sqrt(2.0 / s.L) / (2.0 * kI) * ft;
}

Wavefunction1D project_box_eigenstate(const boxtrap::BoxScenario& s, double X, std::size_t N, double band) {
  s.validate();
  if (!(X > s.L) || N < 2) throw std::invalid_argument("project_box_eigenstate: need X > L and N >= 2");
  const double P = 2.0 * X;
  Wavefunction1D w{-X, P / static_cast<double>(N), std::vector<ComplexValue>(N)};
  for (std::size_t m = 0; m < N; ++m) {
    const double k = bin_wavenumber(m, N, P);
    if (band > 0.0 && std::fabs(k) > band) continue;
    // Coefficient of exp(i k (x + X)) in the periodic expansion.
    w.values[m] = box_fourier_transform(s, k) * std::polar(1.0, -k * X) / P;
  }
  FftPair fft(w.values);
  fft.backward();
  return w;
}

double commensurate_half_width(double f, double t, std::size_t steps, double X) {
  if (steps == 0) steps = 1;
  const double half_kick = 0.5 * std::fabs(f) * t / static_cast<double>(steps);
  if (half_kick == 0.0) return X;
  // 2X * half_kick must be a multiple of 2 pi.
  const double unit = kPi / half_kick;
  return unit * std::ceil(X / unit);
}

Wavefunction1D grid_propagate(const Wavefunction1D& initial, double f, double t, std::size_t steps,
                              std::stop_token stop) {
  const std::size_t N = initial.values.size();
  if (N < 2 || !(initial.dx > 0.0)) throw std::invalid_argument("grid_propagate: empty or malformed grid");
  if (t < 0.0) throw std::invalid_argument("grid_propagate: t must be >= 0");
  if (steps == 0) steps = 1;

  Wavefunction1D w = initial;
  const double P = initial.dx * static_cast<double>(N);
  const double dt = t / static_cast<double>(steps);
  std::vector<ComplexValue> half_kick(N), kinetic(N);
  for (std::size_t j = 0; j < N; ++j) half_kick[j] = std::polar(1.0, -0.5 * f * w.x(j) * dt);
  for (std::size_t m = 0; m < N; ++m) {
    const double k = bin_wavenumber(m, N, P);
    kinetic[m] = std::polar(1.0, -0.5 * k * k * dt) / static_cast<double>(N);
  }

  FftPair fft(w.values);
  for (std::size_t s = 0; s < steps; ++s) {
    if (stop.stop_requested()) throw Cancelled("grid_propagate: cancelled");
    for (std::size_t j = 0; j < N; ++j) w.values[j] *= half_kick[j];
    fft.forward();
    for (std::size_t m = 0; m < N; ++m) w.values[m] *= kinetic[m];
    fft.backward();
    for (std::size_t j = 0; j < N; ++j) w.values[j] *= half_kick[j];
  }

  const std::size_t edge = std::max<std::size_t>(1, N / 100);
  double worst = 0.0;
  for (std::size_t j = 0; j < edge; ++j)
    worst = std::max({worst, std::norm(w.values[j]), std::norm(w.values[N - 1 - j])});
  if (worst > 1e-10)
    throw BoundaryContamination("grid_propagate: edge density " + std::to_string(worst) + " exceeds 1e-10");
  return w;
}

double perturbation_matrix_element(int n, int k, double L, double f) {
  if (n == k) throw std::invalid_argument("perturbation_matrix_element: n must differ from k");
  if (n < 1 || k < 1 || !(L > 0.0)) throw std::invalid_argument("perturbation_matrix_element: bad arguments");
  auto integrand = [&](double x) {
    return (2.0 / L) * std::sin(k * kPi * x / L) * x * std::sin(n * kPi * x / L);
  };
  const auto pts = quadrature::uniform_breakpoints(0.0, L, 4 * static_cast<std::size_t>(std::max(n, k)));
  quadrature::Tolerance tol;
  tol.absolute = 1e-14 * L;
  tol.relative = 1e-15;
  const auto element = quadrature::integrate<double>(integrand, std::span<const double>(pts), tol);
  const double En = n * n * kPi * kPi / (2.0 * L * L);
  const double Ek = k * k * kPi * kPi / (2.0 * L * L);
  return f * element.value / (En - Ek);
}

double default_wigner_window(double t) { return 50.0 * shutter::fringe_width(t); }

WignerDirect wigner_direct(double p0, double f, double t, double x, double p, double window) {
  if (t < 0.0) throw std::invalid_argument("wigner_direct: t must be >= 0");
  if (t == 0.0) {
    // Cut-off plane wave: the overlap is exp(-2 i p0 y) on |y| < -x.
    if (!(x < 0.0)) return {0.0, false};
    auto g = [&](double y) { return std::cos(2.0 * (p - p0) * y) / kPi; };
    const double span = -x;
    const auto pieces = static_cast<std::size_t>(8 + std::ceil(2.0 * std::fabs(p - p0) * span / kPi));
    const auto pts = quadrature::uniform_breakpoints(0.0, span, pieces);
    return {2.0 * quadrature::integrate<double>(g, std::span<const double>(pts)).value, false};
  }
  if (!(window > 0.0)) throw std::invalid_argument("wigner_direct: window must be positive");

  const shutter::ShutterScenario sc{p0, f};
  const double taper_start = 0.8 * window;
  auto taper = [&](double y) {
    if (y <= taper_start) return 1.0;
    if (y >= window) return 0.0;
    return 0.5 * (1.0 + std::cos(kPi * (y - taper_start) / (window - taper_start)));
  };
  auto integrand = [&](double y) {
    const ComplexValue v =
        std::conj(shutter::psi_linear(sc, x + y, t)) * shutter::psi_linear(sc, x - y, t) * std::polar(1.0, 2.0 * p * y);
    return v.real() * taper(y);
  };
  const double k_local = std::fabs(p) + std::fabs(p0) + std::fabs(f) * t + 1.0 / std::sqrt(t);
  const double h = std::min(0.25 * std::sqrt(kPi * t), kPi / (2.0 * k_local));
  const auto pieces = static_cast<std::size_t>(std::ceil(window / h));
  std::vector<double> pts = quadrature::uniform_breakpoints(0.0, window, pieces);
  pts.push_back(taper_start);
  std::sort(pts.begin(), pts.end());
  quadrature::Tolerance tol;
  tol.absolute = 1e-10;
  tol.max_evaluations = 20'000'000;
  const auto r = quadrature::integrate<double>(integrand, std::span<const double>(pts), tol);

  const double front = shutter::classical_front(sc, t);
  const bool near_edge = std::fabs(x - front) > window - 2.0 * shutter::fringe_width(t);
  return {2.0 * r.value / kPi, near_edge};
}

Axis default_marginal_lattice(const tonks::TGScenario& s, double t, std::size_t count) {
  const double c = 0.5 * s.L + s.q * t - 0.5 * s.f * t * t;
  const double sigma = std::max(s.L, s.N * kPi * t / s.L);
  return {c - 6.0 * sigma, c + 6.0 * sigma, count};
}

double slater_marginal(const tonks::TGScenario& s, double x, double t, const Axis& lattice) {
  s.validate();
  require_positive_time(t, "slater_marginal");
  const int N = s.N;
  if (N > 4) throw std::invalid_argument("slater_marginal: brute force limited to N <= 4");
  if (lattice.count < 2) throw std::invalid_argument("slater_marginal: lattice needs >= 2 points");
  const std::size_t M = lattice.count;

  // orb[i][j] = psi_{i+1}(lattice_j); orb_x[i] = psi_{i+1}(x)
  std::vector<std::vector<ComplexValue>> orb(N, std::vector<ComplexValue>(M));
  std::vector<ComplexValue> orb_x(N);
  for (int i = 0; i < N; ++i) {
    const auto mode = s.mode(i + 1);
    orb_x[i] = boxtrap::psi_box_released(mode, x, t);
    for (std::size_t j = 0; j < M; ++j) orb[i][j] = boxtrap::psi_box_released(mode, lattice.at(j), t);
  }
  std::vector<double> weight(M, lattice.step());
  weight.front() *= 0.5;
  weight.back() *= 0.5;

  // Leibniz expansion of the N x N determinant with column 0 at x.
  std::vector<int> perm(N);
  auto det = [&](const std::vector<std::size_t>& idx) {
    for (int i = 0; i < N; ++i) perm[i] = i;
    ComplexValue total{};
    do {
      int inversions = 0;
      for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
          if (perm[a] > perm[b]) ++inversions;
      ComplexValue term = orb_x[perm[0]];
      for (int c = 1; c < N; ++c) term *= orb[perm[c]][idx[c - 1]];
      total += (inversions % 2 ? -1.0 : 1.0) * term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  };

  std::vector<std::size_t> idx(static_cast<std::size_t>(N - 1), 0);
  double sum = 0.0;
  if (N == 1) return std::norm(orb_x[0]);
  for (;;) {
    double w = 1.0;
    for (auto j : idx) w *= weight[j];
    sum += w * std::norm(det(idx));
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == M) idx[d++] = 0;
    if (d == idx.size()) break;
  }
  double factorial = 1.0;
  for (int i = 2; i < N; ++i) factorial *= i;
  return sum / factorial;
}

}  // namespace moshlab::oracle
