#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "moshlab/export.hpp"

using namespace moshlab;

namespace {

FieldFrame small_frame() {
  FieldFrame f;
  f.x = {0.0, 1.0, 2};
  f.y = {10.0, 20.0, 2};
  f.values = {1.0, 2.0, 3.0, 0.1};
  return f;
}

io::Sidecar small_sidecar() {
  io::Sidecar s{"test", {{"p_over_m", 0.01, "m/s", 13.5}}, units::make_unit_system(1e-25, 1e-6), {}, {"x", "t", "v"}, {}};
  s.axes.push_back({"x", {0.0, 1.0, 2}, 1e-6, "m"});
  s.notes.emplace_back("density", "dimensionless");
  return s;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  CHECK(io::format_number(0.1) == "0.10000000000000001");
  CHECK(io::format_number(-2.0) == "-2");
  CHECK(std::stod(io::format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("frame CSV rows and scaling") {
  const auto csv = io::frame_csv(small_frame(), {"x", "t", "v"}, {2.0, 1.0, 10.0});
  CHECK(csv == "x,t,v\n0,10,10\n2,10,20\n0,20,30\n2,20,1\n");
}

TEST_CASE("table CSV") {
  CHECK(io::table_csv({"a", "b"}, {{1.0, 2.0}, {3.0, 4.5}}) == "a,b\n1,3\n2,4.5\n");
  CHECK_THROWS(io::table_csv({"a", "b"}, {{1.0, 2.0}, {3.0}}));
}

TEST_CASE("JSON output is deterministic and parseable") {
  const auto side = small_sidecar();
  const auto a = io::sidecar_json(side);
  CHECK(a == io::sidecar_json(side));
  const auto j = nlohmann::json::parse(a);
  CHECK(j["command"] == "test");
  CHECK(j["scenario"]["p_over_m"]["internal"] == 13.5);
  const auto fj = nlohmann::json::parse(io::frame_json(small_frame(), {1.0, 1.0, 1.0}, side));
  CHECK(fj["values"][1][0] == 3.0);
  CHECK(fj["x"].size() == 2);
}

TEST_CASE("write_text replaces and reports failures") {
  const auto path = std::filesystem::temp_directory_path() / "moshlab_export_test.txt";
  io::write_text(path, "first\n");
  io::write_text(path, "second\n");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "second\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::write_text("/nonexistent-dir/x.csv", "x"), io::IoError);
}
