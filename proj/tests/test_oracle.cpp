#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stop_token>

#include "moshlab/oracle.hpp"

using namespace moshlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("commensurate half width") {
  CHECK(oracle::commensurate_half_width(0.0, 1.0, 4, 10.0) == 10.0);
  const double f = 3.0, t = 0.7;
  const std::size_t steps = 5;
  const double X = oracle::commensurate_half_width(f, t, steps, 10.0);
  CHECK(X >= 10.0);
  // The half kick f (2X) dt / 2 is a whole number of 2 pi.
  const double turns = f * 2.0 * X * (t / steps) / 2.0 / (2.0 * kPi);
  CHECK(turns == doctest::Approx(std::round(turns)).epsilon(1e-12));
}

TEST_CASE("free Gaussian spreading on the grid") {
  const double s0 = 1.0, t = 2.0;
  const auto w0 = oracle::sample([&](double x) { return ComplexValue(std::pow(kPi * s0 * s0, -0.25) * std::exp(-x * x / (2 * s0 * s0))); },
                                 40.0, 4096);
  CHECK(w0.norm() == doctest::Approx(1.0).epsilon(1e-12));
  const auto w = oracle::grid_propagate(w0, 0.0, t, 1);
  const double st2 = s0 * s0 + t * t / (s0 * s0);
  for (std::size_t j = 0; j < w.values.size(); j += 97) {
    const double x = w.x(j);
    const double expect = std::exp(-x * x * s0 * s0 / (s0 * s0 * st2)) / std::sqrt(kPi * st2);
    CHECK(std::norm(w.values[j]) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("linear potential accelerates a Gaussian") {
  const double f = 0.5, t = 3.0;
  const double X = oracle::commensurate_half_width(f, t, 8, 60.0);
  const auto w0 = oracle::sample([](double x) { return ComplexValue(std::pow(kPi, -0.25) * std::exp(-x * x / 2)); }, X, 8192);
  const auto w = oracle::grid_propagate(w0, f, t, 8);
  double mean = 0.0;
  for (std::size_t j = 0; j < w.values.size(); ++j) mean += w.x(j) * std::norm(w.values[j]) * w.dx;
  CHECK(mean == doctest::Approx(-0.5 * f * t * t).epsilon(1e-10));
  CHECK(w.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("boundary contamination and cancellation") {
  const auto wide = oracle::sample([](double x) { return ComplexValue(std::exp(-x * x / 50.0)); }, 10.0, 1024);
  CHECK_THROWS_AS(oracle::grid_propagate(wide, 0.0, 1.0, 1), oracle::BoundaryContamination);
  std::stop_source src;
  src.request_stop();
  const auto narrow = oracle::sample([](double x) { return ComplexValue(std::exp(-x * x)); }, 20.0, 1024);
  CHECK_THROWS_AS(oracle::grid_propagate(narrow, 0.0, 1.0, 3, src.get_token()), oracle::Cancelled);
}

TEST_CASE("box Fourier transform is consistent with the projected state") {
  const boxtrap::BoxScenario s{1.0, 2, 0.0, 0.0};
  CHECK(std::abs(oracle::box_fourier_transform(s, 2 * kPi)) == doctest::Approx(std::sqrt(0.5)));
  const auto w = oracle::project_box_eigenstate(s, 8.0, 8192);
  CHECK(w.norm() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(w.values[4096 + 128]) == doctest::Approx(std::abs(boxtrap::box_eigenstate(s, w.x(4096 + 128)))).epsilon(1e-3));
}

TEST_CASE("propagator quadrature requires enough Fresnel zones") {
  const shutter::ShutterScenario s{2.0, 0.1};
  const double x = 1.0, t = 1.0;
  const double xs = oracle::stationary_point(s, x, t);
  CHECK(xs == doctest::Approx(x - (s.p - s.f * t / 2) * t));
  CHECK_THROWS_AS(oracle::quadrature_psi(s, x, t, -xs + std::sqrt(4 * kPi * t)), std::invalid_argument);
  const auto r = oracle::quadrature_psi(s, x, t, oracle::default_window(s, x, t));
  CHECK(std::abs(r.value - shutter::psi_linear(s, x, t)) < 1e-8);
  CHECK(r.evaluations > 0);
}

TEST_CASE("Slater marginal of a single particle is the mode density") {
  const tonks::TGScenario s{1, 1.0, 0.0, 0.0};
  const Axis lattice = oracle::default_marginal_lattice(s, 0.1, 11);
  CHECK(oracle::slater_marginal(s, 0.4, 0.1, lattice) == doctest::Approx(tonks::tg_density(s, 0.4, 0.1)));
}
