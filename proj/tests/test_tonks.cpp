#include <doctest.h>

#include <cmath>
#include <vector>

#include "moshlab/figures.hpp"
#include "moshlab/oracle.hpp"
#include "moshlab/tonks.hpp"

using namespace moshlab;
using tonks::peak_count;

TEST_CASE("peak_count edge cases") {
  CHECK_THROWS_AS(peak_count(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(peak_count(std::vector<double>{1, 2, 1}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(peak_count(std::vector<double>{1, 2, 1}, 1.0), std::invalid_argument);
  CHECK(peak_count(std::vector<double>{1.0}) == 0);
  CHECK(peak_count(std::vector<double>{0, 0, 0}) == 0);
  CHECK(peak_count(std::vector<double>{3, 2, 1}) == 0);
  CHECK(peak_count(std::vector<double>{0, 1, 0, 1, 0}) == 2);
  CHECK(peak_count(std::vector<double>{0, 1, 1, 1, 0}) == 1);
  CHECK(peak_count(std::vector<double>{0, 1, 1, 2, 0}) == 1);
  CHECK(peak_count(std::vector<double>{0, 1, 0, 0.05, 0}) == 1);
  CHECK(peak_count(std::vector<double>{0, 1, 0, 0.05, 0}, 0.01) == 2);
}

TEST_CASE("initial density and scenario") {
  const tonks::TGScenario s{3, 2.0, 0.0, 0.0};
  double sum = 0.0;
  for (int n = 1; n <= 3; ++n) sum += std::norm(boxtrap::box_eigenstate(s.mode(n), 0.7));
  CHECK(tonks::tg_initial_density(s, 0.7) == doctest::Approx(sum));
  CHECK_THROWS((tonks::TGScenario{0, 1.0, 0.0, 0.0}.validate()));
  CHECK_THROWS((tonks::TGScenario{2, -1.0, 0.0, 0.0}.validate()));
}

TEST_CASE("N = 1 reduces to the single released mode") {
  const tonks::TGScenario s{1, 1.0, 0.5, 3.0};
  for (double x : {-0.3, 0.4, 1.2}) CHECK(tonks::tg_density(s, x, 0.1) == boxtrap::box_density(s.mode(1), x, 0.1));
}

TEST_CASE("normalisation to N") {
  const auto s = figures::falling_tonks().scenario;
  const double tN = boxtrap::bifurcation_time(s.L, s.N);
  CHECK(std::fabs(tonks::tg_norm(s, 0.5 * tN).value - s.N) < 1e-7);
}

TEST_CASE("two-particle density against the determinant marginal") {
  const tonks::TGScenario s{2, 1.0, 0.0, 0.0};
  const double t = boxtrap::bifurcation_time(1.0, 2);
  const auto lattice = oracle::default_marginal_lattice(s, t, 2001);
  for (double x : {0.2, 0.5, 0.9}) {
    const double rho = tonks::tg_density(s, x, t);
    CHECK(std::fabs(oracle::slater_marginal(s, x, t, lattice) - rho) / rho < 1e-3);
  }
}

TEST_CASE("late-time profile has fewer than N peaks") {
  const auto s = figures::falling_tonks().scenario;
  const double t = 2.0 * boxtrap::bifurcation_time(s.L, s.N);
  const double c = boxtrap::classical_center(s.mode(1), t);
  const double half = 0.5 * s.L + s.N * std::numbers::pi * t / s.L + 2.0 * s.L;
  const Axis ax{c - half, c + half, 4001};
  std::vector<double> slice(ax.count);
  for (std::size_t i = 0; i < ax.count; ++i) slice[i] = tonks::tg_density(s, ax.at(i), t);
  CHECK(peak_count(slice) < s.N);
}
