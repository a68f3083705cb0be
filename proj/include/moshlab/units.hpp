#pragma once

#include <optional>
#include <string_view>

namespace moshlab::units {

/// Reduced Planck constant, J s.
inline constexpr double kHbar = 1.0545718e-34;
/// Standard gravity for accelerations given in units of g, m/s^2.
inline constexpr double kGravity = 9.8;
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;
/// Standard atomic weight of rubidium (natural isotope mix).
inline constexpr double kMassRb = 85.4678 * kAtomicMassUnit;
inline constexpr double kMassRb87 = 86.909180520 * kAtomicMassUnit;

struct PhysicalConstants {
  double hbar = kHbar;
  double gravity_g = kGravity;
  double mass = kMassRb;
};

/// Named mass presets: "rb" (natural rubidium) and "rb87". Empty for unknown names.
std::optional<PhysicalConstants> preset(std::string_view name);

enum class Kind { length, time, velocity, acceleration, momentum, force };

std::optional<Kind> parse_kind(std::string_view name);
std::string_view to_string(Kind kind);

/// Dimensionless system with hbar = m = 1 and a caller-chosen length unit.
///
/// time_scale = mass * length_scale^2 / hbar follows from the two conditions;
/// all other scales are products of the three base scales.
class UnitSystem {
 public:
  UnitSystem(double mass, double length_scale, double hbar = kHbar);

  double mass_scale() const { return mass_; }
  double length_scale() const { return length_; }
  double time_scale() const { return time_; }
  double energy_scale() const { return mass_ * length_ * length_ / (time_ * time_); }
  double hbar() const { return hbar_; }

  /// SI units per internal unit for the given kind.
  double scale(Kind kind) const;

  double to_internal(double si_value, Kind kind) const { return si_value / scale(kind); }
  double from_internal(double value, Kind kind) const { return value * scale(kind); }

  /// String-keyed variants; throw std::invalid_argument on an unknown kind.
  double to_internal(double si_value, std::string_view kind) const;
  double from_internal(double value, std::string_view kind) const;

 private:
  double mass_;
  double length_;
  double time_;
  double hbar_;
};

/// Throws std::invalid_argument unless mass > 0, length_scale > 0 and hbar > 0.
UnitSystem make_unit_system(double mass, double length_scale, double hbar = kHbar);

}  // namespace moshlab::units
