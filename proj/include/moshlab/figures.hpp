#pragma once

#include "moshlab/boxtrap.hpp"
#include "moshlab/shutter.hpp"
#include "moshlab/tonks.hpp"
#include "moshlab/units.hpp"

// Reference scenarios in SI, converted to internal units. Shutter scenarios
// use a 1 um length unit; trap scenarios use the trap length itself.
namespace moshlab::figures {

inline constexpr double kShutterLengthUnit = 1e-6;  // m

struct ShutterSetup {
  units::UnitSystem units;
  shutter::ShutterScenario scenario;
  double t = 0.0;      // representative time (internal), 0 if none
  double x_det = 0.0;  // detector position (internal), 0 if none
};

struct BoxSetup {
  units::UnitSystem units;
  boxtrap::BoxScenario scenario;
};

struct TonksSetup {
  units::UnitSystem units;
  tonks::TGScenario scenario;
};

/// Internal shutter scenario from p/m [m/s] and a = f/m [m/s^2].
ShutterSetup shutter_setup(double mass, double p_over_m, double accel);

/// Fountain: p/m = 1 cm/s against a = 0.1 g.
ShutterSetup fountain();
/// Accelerated beam: p/m = 5 cm/s, a = -0.1 cm/s^2, at t = 10 ms.
ShutterSetup accelerated_beam();
/// Detector pulse: p/m = 10 cm/s, a = 0.05 cm/s^2, detector at 5 mm.
ShutterSetup detector_pulse();
/// Wigner fountain at the turning point: p/m = 1 cm/s, a = 100 cm/s^2, t = 10 ms.
ShutterSetup wigner_fountain();

BoxSetup box_setup(double mass, double L, int n, double q_over_m, double accel);
TonksSetup tonks_setup(double mass, double L, int N, double q_over_m, double accel);

/// n = 10 (or N = 10), L = 80 um, q = 0, a = 0.49 cm/s^2, natural rubidium.
BoxSetup falling_box();
TonksSetup falling_tonks();

}  // namespace moshlab::figures
