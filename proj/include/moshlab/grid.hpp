#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace moshlab {

/// Uniform sampling of [min, max] with `count` points (count == 1 samples `min`).
struct Axis {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 1;

  double at(std::size_t i) const {
    if (count < 2) return min;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  double step() const { return count < 2 ? 0.0 : (max - min) / static_cast<double>(count - 1); }
};

/// Rectangular (x, t) lattice in internal units.
struct GridSpec {
  Axis x;
  Axis t;

  std::size_t size() const { return x.count * t.count; }

  /// Throws std::invalid_argument on unordered ranges, zero counts, more than
  /// kMaxPoints samples or, for evolution grids, t.min <= 0.
  void validate(bool evolution = true) const;

  static constexpr std::size_t kMaxPoints = 100'000'000;
};

/// Rectangular (x, p) lattice for phase-space quantities.
struct PhaseSpaceGrid {
  Axis x;
  Axis p;

  std::size_t size() const { return x.count * p.count; }
  void validate() const;
};

enum class Quantity { density, classical_density, wigner };

const char* to_string(Quantity q);

/// Scalar field sampled on a lattice. Row-major: the second axis (t or p) is
/// the outer index, x the inner one, so values[row * x.count + col].
struct FieldFrame {
  Quantity quantity = Quantity::density;
  Axis x;
  Axis y;  // time for evolution frames, momentum for Wigner frames
  std::vector<double> values;
  /// Scenario echo in internal units, in insertion order.
  std::vector<std::pair<std::string, double>> meta;

  double at(std::size_t row, std::size_t col) const { return values[row * x.count + col]; }
  std::vector<double> row(std::size_t r) const;
  /// Throws std::logic_error if the value count does not match the axes or a value is not finite.
  void check() const;
};

}  // namespace moshlab
