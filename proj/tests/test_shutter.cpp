#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "moshlab/figures.hpp"
#include "moshlab/oracle.hpp"
#include "moshlab/shutter.hpp"

using namespace moshlab;
using shutter::ShutterScenario;

TEST_CASE("f = 0 reduces to the free Moshinsky function") {
  const ShutterScenario s{4.0, 0.0};
  for (double t : {0.3, 2.0, 9.0})
    for (double x : {-10.0, 0.0, 1.5, 30.0}) {
      const auto a = shutter::psi_linear(s, x, t);
      const auto b = specfun::moshinsky({x, s.p, t});
      CHECK(a == b);
    }
}

TEST_CASE("density depends on u0 alone") {
  const auto fig = figures::accelerated_beam();
  const auto& s = fig.scenario;
  for (double t : {0.5 * fig.t, fig.t, 3.0 * fig.t})
    for (double du : {-2.0, -0.5, 0.0, 0.7, 2.5}) {
      const double x = shutter::classical_front(s, t) - du * std::sqrt(std::numbers::pi * t);
      CHECK(shutter::u0_of(s, x, t) == doctest::Approx(du).epsilon(1e-9));
      CHECK(shutter::density(s, x, t) == doctest::Approx(shutter::density_of_u0(du)).epsilon(1e-10));
    }
}

TEST_CASE("density on the front is one quarter") {
  const auto s = figures::fountain().scenario;
  for (double t : {1.0, 5.0, 12.0}) CHECK(shutter::density(s, shutter::classical_front(s, t), t) == doctest::Approx(0.25));
}

TEST_CASE("closed form against the Fresnel route and the propagator integral") {
  const auto s = figures::fountain().scenario;
  for (double t : {2.0, 7.0})
    for (double u : {-2.0, 0.3, 2.0}) {
      const double x = shutter::classical_front(s, t) - u * std::sqrt(std::numbers::pi * t);
      const auto psi = shutter::psi_linear(s, x, t);
      CHECK(std::abs(oracle::fresnel_route_psi(s, x, t) - psi) < 1e-10);
      const auto q = oracle::quadrature_psi(s, x, t, oracle::default_window(s, x, t));
      CHECK(std::fabs(std::norm(q.value) - std::norm(psi)) / std::norm(psi) < 1e-6);
    }
}

TEST_CASE("universal fringe constants") {
  const auto mx = shutter::refine_first_maximum();
  const auto mn = shutter::refine_first_minimum();
  CHECK(mx.u0 == doctest::Approx(shutter::kUMax).epsilon(1e-3));
  CHECK(mn.u0 == doctest::Approx(shutter::kUMin).epsilon(1e-3));
  CHECK(std::fabs(mx.density - shutter::kPMax) < 1e-3);
  CHECK(std::fabs(mn.density - shutter::kPMin) < 1e-3);
  const auto c = shutter::classical_crossings();
  CHECK(c.inner < mx.u0);
  CHECK(c.outer > mx.u0);
  CHECK(c.outer < mn.u0);
}

TEST_CASE("visibility does not depend on time or force") {
  const double v0 = shutter::visibility({5.0, 0.0}, 1.0);
  for (double f : {0.0, 0.3, -0.2})
    for (double t : {1.0, 10.0, 100.0}) CHECK(std::fabs(shutter::visibility({5.0, f}, t) - v0) < 1e-9);
}

TEST_CASE("fringe width within two percent of 0.85 sqrt(pi t)") {
  for (double t : {0.1, 1.0, 10.0}) {
    const double w = shutter::measured_fringe_width(t);
    CHECK(std::fabs(w / shutter::fringe_width(t) - 1.0) < 0.02);
  }
}

TEST_CASE("first maximum trajectory") {
  const auto fig = figures::fountain();
  const auto& s = fig.scenario;
  const double t = 4.0;
  const double x = shutter::refine_first_maximum_x(s, t);
  CHECK(shutter::u0_of(s, x, t) == doctest::Approx(shutter::refine_first_maximum().u0).epsilon(1e-6));
  CHECK(shutter::fringe_trajectories(s, t).x_max == doctest::Approx(x).epsilon(1e-6));
}

TEST_CASE("first_maximum_index picks the maximum nearest the front") {
  const std::vector<double> xs{0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<double> v{1, 2, 1, 3, 3, 1, 0.5, 0.1};
  CHECK(shutter::first_maximum_index(xs, v, 6.5) == 3);
  CHECK(shutter::first_maximum_index(xs, v, 2.5) == 1);
  CHECK_FALSE(shutter::first_maximum_index(xs, std::vector<double>(8, 1.0), 6.5));
}

TEST_CASE("detector signal and classical step") {
  const auto fig = figures::detector_pulse();
  const auto& s = fig.scenario;
  const double t_arrival = (s.p - std::sqrt(s.p * s.p - 2.0 * s.f * fig.x_det)) / s.f;
  const Axis ax{0.9 * t_arrival, 1.1 * t_arrival, 201};
  const auto frame = shutter::detector_signal(s, fig.x_det, ax);
  REQUIRE(frame.values.size() == 201);
  for (std::size_t i = 0; i < ax.count; ++i) {
    CHECK(frame.values[i] == shutter::density(s, fig.x_det, ax.at(i)));
    CHECK(shutter::classical_density(s, fig.x_det, ax.at(i)) == (ax.at(i) > t_arrival ? 1.0 : 0.0));
  }
}
