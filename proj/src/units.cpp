#include "moshlab/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace moshlab::units {

std::optional<PhysicalConstants> preset(std::string_view name) {
  if (name == "rb") return PhysicalConstants{kHbar, kGravity, kMassRb};
  if (name == "rb87") return PhysicalConstants{kHbar, kGravity, kMassRb87};
  return std::nullopt;
}

std::optional<Kind> parse_kind(std::string_view name) {
  if (name == "length") return Kind::length;
  if (name == "time") return Kind::time;
  if (name == "velocity") return Kind::velocity;
  if (name == "acceleration") return Kind::acceleration;
  if (name == "momentum") return Kind::momentum;
  if (name == "force") return Kind::force;
  return std::nullopt;
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::length: return "length";
    case Kind::time: return "time";
    case Kind::velocity: return "velocity";
    case Kind::acceleration: return "acceleration";
    case Kind::momentum: return "momentum";
    case Kind::force: return "force";
  }
  return "unknown";
}

UnitSystem::UnitSystem(double mass, double length_scale, double hbar)
    : mass_(mass), length_(length_scale), time_(0.0), hbar_(hbar) {
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("unit system: mass must be positive");
  if (!(length_scale > 0.0) || !std::isfinite(length_scale))
    throw std::invalid_argument("unit system: length scale must be positive");
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw std::invalid_argument("unit system: hbar must be positive");
  time_ = mass * length_scale * length_scale / hbar;
}

double UnitSystem::scale(Kind kind) const {
  switch (kind) {
    case Kind::length: return length_;
    case Kind::time: return time_;
    case Kind::velocity: return length_ / time_;
    case Kind::acceleration: return length_ / (time_ * time_);
    case Kind::momentum: return mass_ * length_ / time_;
    case Kind::force: return mass_ * length_ / (time_ * time_);
  }
  throw std::invalid_argument("unit system: unknown quantity kind");
}

namespace {
Kind require_kind(std::string_view name) {
  auto kind = parse_kind(name);
  if (!kind) throw std::invalid_argument("unit system: unknown quantity kind '" + std::string(name) + "'");
  return *kind;
}
}  // namespace

double UnitSystem::to_internal(double si_value, std::string_view kind) const {
  return to_internal(si_value, require_kind(kind));
}

double UnitSystem::from_internal(double value, std::string_view kind) const {
  return from_internal(value, require_kind(kind));
}

UnitSystem make_unit_system(double mass, double length_scale, double hbar) {
  return UnitSystem(mass, length_scale, hbar);
}

}  // namespace moshlab::units
