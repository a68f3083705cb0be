#include "moshlab/figures.hpp"

namespace moshlab::figures {

using units::Kind;

ShutterSetup shutter_setup(double mass, double p_over_m, double accel) {
  const auto u = units::make_unit_system(mass, kShutterLengthUnit);
  return {u, {u.to_internal(p_over_m, Kind::velocity), u.to_internal(accel, Kind::acceleration)}, 0.0, 0.0};
}

ShutterSetup fountain() { return shutter_setup(units::kMassRb, 0.01, 0.1 * units::kGravity); }

ShutterSetup accelerated_beam() {
  auto s = shutter_setup(units::kMassRb, 0.05, -0.001);
  s.t = s.units.to_internal(0.010, Kind::time);
  return s;
}

ShutterSetup detector_pulse() {
  auto s = shutter_setup(units::kMassRb, 0.10, 0.0005);
  s.x_det = s.units.to_internal(0.005, Kind::length);
  return s;
}

ShutterSetup wigner_fountain() {
  auto s = shutter_setup(units::kMassRb, 0.01, 1.0);
  s.t = s.units.to_internal(0.010, Kind::time);
  return s;
}

BoxSetup box_setup(double mass, double L, int n, double q_over_m, double accel) {
  const auto u = units::make_unit_system(mass, L);
  return {u, {1.0, n, u.to_internal(q_over_m, Kind::velocity), u.to_internal(accel, Kind::acceleration)}};
}

TonksSetup tonks_setup(double mass, double L, int N, double q_over_m, double accel) {
  const auto b = box_setup(mass, L, 1, q_over_m, accel);
  return {b.units, {N, 1.0, b.scenario.q, b.scenario.f}};
}

BoxSetup falling_box() { return box_setup(units::kMassRb, 80e-6, 10, 0.0, 0.0049); }
TonksSetup falling_tonks() { return tonks_setup(units::kMassRb, 80e-6, 10, 0.0, 0.0049); }

}  // namespace moshlab::figures
