#pragma once

#include <functional>
#include <string>
#include <vector>

#include "moshlab/specfun.hpp"

// Oracle-versus-closed-form comparisons behind `moshlab validate`.
namespace moshlab::validate {

enum class Level { quick, full };

struct Check {
  std::string suite;
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool informational = false;  // reported but never fails the run
  std::string note;
};

struct Report {
  Level level = Level::quick;
  std::vector<Check> checks;
  double elapsed_seconds = 0.0;

  bool passed() const;
};

using FaddeyevaFn = std::function<ComplexValue(ComplexValue)>;

struct Options {
  Level level = Level::quick;
  /// w(z) under test in the special-function suite.
  FaddeyevaFn faddeyeva = [](ComplexValue z) { return specfun::faddeyeva(z); };
};

/// Reflection, conjugation, Maclaurin and Fresnel cross-checks of `w`.
std::vector<Check> specfun_suite(const FaddeyevaFn& w, Level level);
std::vector<Check> shutter_suite(Level level);
std::vector<Check> wigner_suite(Level level);
std::vector<Check> box_suite(Level level);
std::vector<Check> perturbation_suite(Level level);
std::vector<Check> tonks_suite(Level level);

Report run(const Options& opts);

/// w(z) by its Maclaurin series sum (iz)^n / Gamma(n/2 + 1) in long double.
/// Meant for |z| <= 2.
ComplexValue faddeyeva_maclaurin(ComplexValue z);

/// Pretty-printed JSON; key order is fixed.
std::string to_json(const Report& report);

const char* to_string(Level level);

}  // namespace moshlab::validate
