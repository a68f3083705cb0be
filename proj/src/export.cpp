#include "moshlab/export.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace moshlab::io {

namespace {

using Json = nlohmann::ordered_json;

Json sidecar_object(const Sidecar& s) {
  Json j;
  j["tool"] = "moshlab";
  j["version"] = MOSHLAB_VERSION;
  j["command"] = s.command;
  Json scen = Json::object();
  for (const auto& v : s.scenario) scen[v.name] = {{"si", v.si}, {"unit", v.unit}, {"internal", v.internal}};
  j["scenario"] = scen;
  j["unit_system"] = {{"hbar_J_s", s.units.hbar()},
                      {"mass_kg", s.units.mass_scale()},
                      {"length_m", s.units.length_scale()},
                      {"time_s", s.units.time_scale()}};
  Json grid = Json::object();
  for (const auto& a : s.axes)
    grid[a.name] = {{"count", a.axis.count},
                    {"min_si", a.axis.min * a.scale},
                    {"max_si", a.axis.max * a.scale},
                    {"unit", a.unit},
                    {"min_internal", a.axis.min},
                    {"max_internal", a.axis.max}};
  j["grid"] = grid;
  j["columns"] = s.columns;
  Json notes = Json::object();
  for (const auto& [k, v] : s.notes) notes[k] = v;
  j["notes"] = notes;
  return j;
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string frame_csv(const FieldFrame& frame, const std::array<std::string, 3>& header,
                      const std::array<double, 3>& scales) {
  std::string out = header[0] + "," + header[1] + "," + header[2] + "\n";
  out.reserve(out.size() + frame.values.size() * 72);
  for (std::size_t r = 0; r < frame.y.count; ++r) {
    const std::string y = format_number(frame.y.at(r) * scales[1]);
    for (std::size_t c = 0; c < frame.x.count; ++c) {
      out += format_number(frame.x.at(c) * scales[0]);
      out += ',';
      out += y;
      out += ',';
      out += format_number(frame.at(r, c) * scales[2]);
      out += '\n';
    }
  }
  return out;
}

std::string table_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size()) throw std::invalid_argument("table_csv: header and column count differ");
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns)
    if (c.size() != rows) throw std::invalid_argument("table_csv: ragged columns");
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      out += format_number(columns[i][r]);
    }
    out += '\n';
  }
  return out;
}

std::string sidecar_json(const Sidecar& s) { return sidecar_object(s).dump(2) + "\n"; }

std::string frame_json(const FieldFrame& frame, const std::array<double, 3>& scales, const Sidecar& s) {
  Json j = sidecar_object(s);
  Json xs = Json::array(), ys = Json::array(), values = Json::array();
  for (std::size_t c = 0; c < frame.x.count; ++c) xs.push_back(frame.x.at(c) * scales[0]);
  for (std::size_t r = 0; r < frame.y.count; ++r) {
    ys.push_back(frame.y.at(r) * scales[1]);
    Json row = Json::array();
    for (std::size_t c = 0; c < frame.x.count; ++c) row.push_back(frame.at(r, c) * scales[2]);
    values.push_back(std::move(row));
  }
  j["x"] = std::move(xs);
  j["y"] = std::move(ys);
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace moshlab::io
