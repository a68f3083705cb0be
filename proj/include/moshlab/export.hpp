#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moshlab/grid.hpp"
#include "moshlab/units.hpp"

// Plain-text output: CSV with 17 significant digits and '\n' line ends, and a
// JSON sidecar echoing the run. Output depends only on its inputs.
namespace moshlab::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// printf("%.17g").
std::string format_number(double v);

/// One CSV row per (row, col) cell of the frame: x, y, value, each scaled
/// from internal to output units. Header line first.
std::string frame_csv(const FieldFrame& frame, const std::array<std::string, 3>& header,
                      const std::array<double, 3>& scales);

/// Columns of equal length written side by side.
std::string table_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns);

struct ScenarioValue {
  std::string name;
  double si = 0.0;
  std::string unit;
  double internal = 0.0;
};

struct AxisEcho {
  std::string name;
  Axis axis;       // internal units
  double scale = 1.0;  // SI per internal unit
  std::string unit;
};

struct Sidecar {
  std::string command;
  std::vector<ScenarioValue> scenario;
  units::UnitSystem units{1.0, 1.0, 1.0};
  std::vector<AxisEcho> axes;
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::string>> notes;
};

std::string sidecar_json(const Sidecar& s);

/// Sidecar content plus the frame as nested arrays ("values"[row][col]).
std::string frame_json(const FieldFrame& frame, const std::array<double, 3>& scales, const Sidecar& s);

/// Writes `text` to `path`, replacing it. Throws IoError on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace moshlab::io
