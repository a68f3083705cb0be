#include <doctest.h>

#include <cmath>
#include <numbers>

#include "moshlab/boxtrap.hpp"
#include "moshlab/figures.hpp"
#include "moshlab/oracle.hpp"

using namespace moshlab;
using boxtrap::BoxScenario;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS((BoxScenario{0.0, 1, 0.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BoxScenario{1.0, 0, 0.0, 0.0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((BoxScenario{1.0, 3, 0.0, 0.0}.validate()));
}

TEST_CASE("eigenstate and kicked initial state") {
  const BoxScenario s{2.0, 3, 1.7, 0.0};
  CHECK(boxtrap::box_eigenstate(s, -0.1) == ComplexValue{});
  CHECK(boxtrap::box_eigenstate(s, 2.1) == ComplexValue{});
  const double x = 0.4;
  const ComplexValue phi = boxtrap::box_eigenstate(s, x);
  CHECK(phi.real() == doctest::Approx(std::sqrt(2.0 / s.L) * std::sin(3 * kPi * x / s.L)));
  CHECK(std::abs(boxtrap::initial_state(s, x) - std::exp(ComplexValue(0.0, s.q * x)) * phi) < 1e-15);
}

TEST_CASE("short-time release approaches the trap eigenstate") {
  const BoxScenario s{1.0, 2, 0.0, 0.0};
  const double t = 1e-6;
  for (double x : {0.13, 0.37, 0.61, 0.88})
    CHECK(boxtrap::box_density(s, x, t) == doctest::Approx(std::norm(boxtrap::box_eigenstate(s, x))).epsilon(1e-2));
}

TEST_CASE("released state against the propagator route on a few points") {
  const BoxScenario s{1.0, 3, 0.0, 25.0};
  const double t = 0.5 * boxtrap::bifurcation_time(s);
  const double X = oracle::commensurate_half_width(s.f, t, 4, 64.0);
  const auto w0 = oracle::project_box_eigenstate(s, X, std::size_t{1} << 17, std::min(kPi * 65536.0 / X - 1.5 * s.f * t, X / t));
  const auto w = oracle::grid_propagate(w0, s.f, t, 4);
  const double c = boxtrap::classical_center(s, t);
  double worst = 0.0;
  for (std::size_t j = 0; j < w.values.size(); j += 7) {
    if (std::fabs(w.x(j) - c) > 3.0) continue;
    worst = std::max(worst, std::fabs(std::norm(w.values[j]) - boxtrap::box_density(s, w.x(j), t)));
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("norm conservation and mean trajectory") {
  const auto fig = figures::falling_box();
  const auto& s = fig.scenario;
  const double tn = boxtrap::bifurcation_time(s);
  CHECK(boxtrap::mean_position(s, 0.0).value == doctest::Approx(0.5));
  for (double m : {0.5, 2.0}) {
    CHECK(std::fabs(boxtrap::norm(s, m * tn).value - 1.0) < 1e-8);
    CHECK(std::fabs(boxtrap::mean_position(s, m * tn).value - boxtrap::classical_center(s, m * tn)) < 1e-3);
  }
}

TEST_CASE("classical centre and branch momenta") {
  const BoxScenario s{2.0, 4, 0.3, 0.8};
  const double t = 1.7;
  CHECK(boxtrap::classical_center(s, t) == doctest::Approx(1.0 + 0.3 * t - 0.4 * t * t));
  const auto b = boxtrap::branch_momenta(s, t);
  CHECK(b.p_plus - b.p_minus == doctest::Approx(2.0 * 4 * kPi / 2.0));
  CHECK(0.5 * (b.p_plus + b.p_minus) == doctest::Approx(0.3 - 0.4 * t));
}

TEST_CASE("bifurcation time") {
  CHECK(boxtrap::bifurcation_time(1.0, 1) == doctest::Approx(1.0 / (2.0 * kPi)));
  CHECK(boxtrap::bifurcation_time(2.0, 4) == doctest::Approx(4.0 / (8.0 * kPi)));
  CHECK(boxtrap::bifurcation_time(BoxScenario{2.0, 4, 0.0, 0.0}) == boxtrap::bifurcation_time(2.0, 4));
}

TEST_CASE("density minimum at the centre after splitting") {
  const auto s = figures::falling_box().scenario;
  const double t = 4.0 * boxtrap::bifurcation_time(s);
  const double c = boxtrap::classical_center(s, t);
  CHECK(boxtrap::box_density(s, c, t) < boxtrap::box_density(s, c + 0.02, t));
  CHECK(boxtrap::box_density(s, c, t) < boxtrap::box_density(s, c - 0.02, t));
}

TEST_CASE("perturbation coefficients") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k) {
      if (n == k) continue;
      const double c = boxtrap::perturbation_coefficient(n, k, 1.3, 0.7);
      if ((n + k) % 2 == 0) {
        CHECK(c == 0.0);
        continue;
      }
      CHECK(c == doctest::Approx(-boxtrap::perturbation_coefficient(k, n, 1.3, 0.7)));
      CHECK(c == doctest::Approx(oracle::perturbation_matrix_element(n, k, 1.3, 0.7)).epsilon(1e-12));
      CHECK(boxtrap::perturbation_coefficient(n, k, 2.6, 0.7) == doctest::Approx(8.0 * c));
    }
  const auto list = boxtrap::perturbation_coefficients({1.0, 3, 0.0, 1.0}, 5);
  REQUIRE(list.size() == 4);
  CHECK(list[0].k == 1);
  CHECK(list[2].k == 4);
  CHECK_THROWS_AS(boxtrap::perturbation_coefficients({1.0, 3, 0.0, 1.0}, 2), std::invalid_argument);
}

TEST_CASE("kick and force act as translations of the density") {
  const BoxScenario b0{1.0, 2, 0.0, 0.0}, bq{1.0, 2, 4.0, 0.0}, bf{1.0, 2, 0.0, 30.0};
  const double t = 0.2;
  for (double x : {-0.5, 0.2, 0.9, 1.6}) {
    const double ref = boxtrap::box_density(b0, x, t);
    CHECK(boxtrap::box_density(bq, x + 4.0 * t, t) == doctest::Approx(ref).epsilon(1e-10));
    CHECK(boxtrap::box_density(bf, x - 15.0 * t * t, t) == doctest::Approx(ref).epsilon(1e-10));
  }
}
