// moshlab: density maps, detector signals and Wigner maps for matter waves
// released from a shutter or a hard-wall trap, plus the validation suite.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "moshlab/boxtrap.hpp"
#include "moshlab/export.hpp"
#include "moshlab/shutter.hpp"
#include "moshlab/tonks.hpp"
#include "moshlab/units.hpp"
#include "moshlab/validate.hpp"
#include "moshlab/wigner.hpp"

namespace {

using namespace moshlab;
using units::Kind;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string mass_preset = "rb";
  std::optional<double> mass_kg;
  std::optional<double> p_over_m_cm_s, q_over_m_cm_s;
  std::optional<double> a_over_g, a_cm_s2;
  std::optional<double> L_um;
  std::optional<int> n, N;
  std::optional<double> x_det_mm, t_ms;
  std::optional<double> x_min_um, x_max_um, t_min_ms, t_max_ms, p_min_cm_s, p_max_cm_s;
  std::optional<std::size_t> nx, nt, np;
  std::string format = "csv";
  std::string output;
  int threads = 0;
  bool serial = false;
  std::string level = "quick";
};

double value_or(const std::optional<double>& v, double d) { return v ? *v : d; }

double mass(const RunConfig& c) {
  if (c.mass_kg) {
    if (!(*c.mass_kg > 0.0)) throw ConfigError("mass_kg must be positive");
    return *c.mass_kg;
  }
  const auto p = units::preset(c.mass_preset);
  if (!p) throw ConfigError("unknown mass preset '" + c.mass_preset + "' (use rb or rb87)");
  return p->mass;
}

// a = f/m in m/s^2; a_cm_s2 wins over a_over_g when both are given.
double acceleration(const RunConfig& c, double default_a) {
  if (c.a_cm_s2) return *c.a_cm_s2 * 1e-2;
  if (c.a_over_g) return *c.a_over_g * units::kGravity;
  return default_a;
}

std::size_t count(const std::optional<std::size_t>& v, std::size_t d, const char* name) {
  const std::size_t n = v ? *v : d;
  if (n < 1) throw ConfigError(std::string(name) + " must be >= 1");
  return n;
}

Axis axis(double lo, double hi, std::size_t n, double scale) { return {lo / scale, n > 1 ? hi / scale : lo / scale, n}; }

SweepOptions sweep_options(const RunConfig& c) {
  SweepOptions o{c.serial ? Execution::serial : Execution::parallel, c.threads};
  if (const char* env = std::getenv("MOSHLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw ConfigError("MOSHLAB_THREADS must be a positive integer");
    o.threads = static_cast<int>(v);
  }
  return o;
}

std::filesystem::path output_path(const RunConfig& c, const std::string& stem) {
  if (!c.output.empty()) return c.output;
  return stem + (c.format == "json" ? ".json" : ".csv");
}

std::filesystem::path with_suffix(std::filesystem::path p, const std::string& suffix, const std::string& ext) {
  const auto stem = p.stem().string();
  return p.replace_filename(stem + suffix + ext);
}

io::ScenarioValue echo(const std::string& name, double si, const std::string& unit, double internal) {
  return {name, si, unit, internal};
}

void emit(const RunConfig& c, const std::filesystem::path& path, const FieldFrame& frame,
          const std::array<std::string, 3>& header, const std::array<double, 3>& scales, io::Sidecar side) {
  side.columns.assign(header.begin(), header.end());
  if (c.format == "json") {
    io::write_text(path, io::frame_json(frame, scales, side));
    return;
  }
  io::write_text(path, io::frame_csv(frame, header, scales));
  io::write_text(with_suffix(path, "", ".json"), io::sidecar_json(side));
}

void common_echo(io::Sidecar& side, const units::UnitSystem& u, double a_si, double f) {
  side.scenario.push_back(echo("mass", u.mass_scale(), "kg", 1.0));
  side.scenario.push_back(echo("a_over_m", a_si, "m/s^2", f));
  side.notes.emplace_back("potential", "V = m a x; a > 0 accelerates toward -x, the classical front is v t - a t^2 / 2");
}

int cmd_shutter_density(const RunConfig& c) {
  const double m = mass(c);
  const auto u = units::make_unit_system(m, 1e-6);
  const double v = value_or(c.p_over_m_cm_s, 1.0) * 1e-2;
  const double a = acceleration(c, 0.1 * units::kGravity);
  const shutter::ShutterScenario s{u.to_internal(v, Kind::velocity), u.to_internal(a, Kind::acceleration)};
  GridSpec g{axis(value_or(c.x_min_um, -40.0) * 1e-6, value_or(c.x_max_um, 80.0) * 1e-6, count(c.nx, 400, "nx"),
                  u.scale(Kind::length)),
             axis(value_or(c.t_min_ms, 0.1) * 1e-3, value_or(c.t_max_ms, 25.0) * 1e-3, count(c.nt, 400, "nt"),
                  u.scale(Kind::time))};
  g.validate();
  const auto frame = shutter::density_map(s, g, sweep_options(c));

  io::Sidecar side{"shutter-density", {}, u, {}, {}, {}};
  side.scenario.push_back(echo("p_over_m", v, "m/s", s.p));
  common_echo(side, u, a, s.f);
  side.axes = {{"x", g.x, u.scale(Kind::length), "m"}, {"t", g.t, u.scale(Kind::time), "s"}};
  side.notes.emplace_back("density", "relative to the incident beam intensity");
  emit(c, output_path(c, "shutter_density"), frame, {"x_si", "t_si", "density"},
       {u.scale(Kind::length), u.scale(Kind::time), 1.0}, side);
  return kExitOk;
}

int cmd_detector(const RunConfig& c) {
  const double m = mass(c);
  const auto u = units::make_unit_system(m, 1e-6);
  const double v = value_or(c.p_over_m_cm_s, 10.0) * 1e-2;
  const double a = acceleration(c, 0.05e-2);
  const double xd = value_or(c.x_det_mm, 5.0) * 1e-3;
  const shutter::ShutterScenario s{u.to_internal(v, Kind::velocity), u.to_internal(a, Kind::acceleration)};
  const Axis t_axis = axis(value_or(c.t_min_ms, 45.0) * 1e-3, value_or(c.t_max_ms, 56.0) * 1e-3,
                           count(c.nt, 2000, "nt"), u.scale(Kind::time));
  const double x_det = u.to_internal(xd, Kind::length);
  GridSpec{{x_det, x_det, 1}, t_axis}.validate();
  const auto frame = shutter::detector_signal(s, x_det, t_axis, sweep_options(c));

  io::Sidecar side{"detector", {}, u, {}, {}, {}};
  side.scenario.push_back(echo("p_over_m", v, "m/s", s.p));
  common_echo(side, u, a, s.f);
  side.scenario.push_back(echo("x_det", xd, "m", x_det));
  side.axes = {{"t", t_axis, u.scale(Kind::time), "s"}};
  side.notes.emplace_back("density", "relative to the incident beam intensity");
  side.notes.emplace_back("classical_density", "1 once the classical front has passed the detector, else 0");
  const std::vector<std::string> header{"t_si", "density", "classical_density"};
  side.columns = header;

  std::vector<double> ts(t_axis.count), classical(t_axis.count);
  for (std::size_t i = 0; i < t_axis.count; ++i) {
    ts[i] = t_axis.at(i) * u.scale(Kind::time);
    classical[i] = shutter::classical_density(s, x_det, t_axis.at(i));
  }
  const auto path = output_path(c, "detector");
  if (c.format == "json") {
    io::write_text(path, io::frame_json(frame, {u.scale(Kind::length), u.scale(Kind::time), 1.0}, side));
  } else {
    io::write_text(path, io::table_csv(header, {ts, frame.values, classical}));
    io::write_text(with_suffix(path, "", ".json"), io::sidecar_json(side));
  }
  return kExitOk;
}

int cmd_wigner(const RunConfig& c) {
  const double m = mass(c);
  const auto u = units::make_unit_system(m, 1e-6);
  const double v = value_or(c.p_over_m_cm_s, 1.0) * 1e-2;
  const double a = acceleration(c, 1.0);
  const double t_si = value_or(c.t_ms, 10.0) * 1e-3;
  if (!(t_si >= 0.0)) throw ConfigError("t_ms must be >= 0");
  const double p0 = u.to_internal(v, Kind::velocity);
  const double f = u.to_internal(a, Kind::acceleration);
  const double t = u.to_internal(t_si, Kind::time);
  const double vel = u.scale(Kind::velocity);
  PhaseSpaceGrid g{axis(value_or(c.x_min_um, 30.0) * 1e-6, value_or(c.x_max_um, 55.0) * 1e-6, count(c.nx, 300, "nx"),
                        u.scale(Kind::length)),
                   axis(value_or(c.p_min_cm_s, -0.1) * 1e-2, value_or(c.p_max_cm_s, 0.1) * 1e-2,
                        count(c.np, 300, "np"), vel)};
  g.validate();
  const auto frame = wigner::wigner_map(p0, f, t, g, sweep_options(c));

  io::Sidecar side{"wigner-map", {}, u, {}, {}, {}};
  side.scenario.push_back(echo("p0_over_m", v, "m/s", p0));
  common_echo(side, u, a, f);
  side.scenario.push_back(echo("t", t_si, "s", t));
  side.axes = {{"x", g.x, u.scale(Kind::length), "m"}, {"p_over_m", g.p, vel, "m/s"}};
  side.notes.emplace_back("p_si", "momentum in kg m/s");
  side.notes.emplace_back("w_value", "per (kg m/s) relative to the incident beam intensity");
  side.notes.emplace_back("excluded_region",
                          "cells with x >= p t / m + a t^2 / 2 are classically inaccessible and exactly 0");
  const double p_scale = u.scale(Kind::momentum);
  emit(c, output_path(c, "wigner_map"), frame, {"x_si", "p_si", "w_value"},
       {u.scale(Kind::length), p_scale, 1.0 / p_scale}, side);
  return kExitOk;
}

struct TrapInputs {
  units::UnitSystem u;
  double L_si, v_q, a;
  double q, f;
  GridSpec grid;
};

TrapInputs trap_inputs(const RunConfig& c) {
  const double m = mass(c);
  const double L_si = value_or(c.L_um, 80.0) * 1e-6;
  if (!(L_si > 0.0)) throw ConfigError("L_um must be positive");
  const auto u = units::make_unit_system(m, L_si);
  const double vq = value_or(c.q_over_m_cm_s, 0.0) * 1e-2;
  const double a = acceleration(c, 0.49e-2);
  GridSpec g{axis(value_or(c.x_min_um, -500.0) * 1e-6, value_or(c.x_max_um, 150.0) * 1e-6, count(c.nx, 400, "nx"),
                  u.scale(Kind::length)),
             axis(value_or(c.t_min_ms, 1.0) * 1e-3, value_or(c.t_max_ms, 400.0) * 1e-3, count(c.nt, 400, "nt"),
                  u.scale(Kind::time))};
  g.validate();
  return {u, L_si, vq, a, u.to_internal(vq, Kind::velocity), u.to_internal(a, Kind::acceleration), g};
}

void trap_echo(io::Sidecar& side, const TrapInputs& in) {
  side.scenario.push_back(echo("L", in.L_si, "m", 1.0));
  side.scenario.push_back(echo("q_over_m", in.v_q, "m/s", in.q));
  common_echo(side, in.u, in.a, in.f);
  side.axes = {{"x", in.grid.x, in.u.scale(Kind::length), "m"}, {"t", in.grid.t, in.u.scale(Kind::time), "s"}};
  side.notes.emplace_back("density", "per metre");
}

int cmd_box(const RunConfig& c) {
  const auto in = trap_inputs(c);
  const int n = c.n ? *c.n : 10;
  const boxtrap::BoxScenario s{1.0, n, in.q, in.f};
  s.validate();
  const auto frame = boxtrap::box_density_map(s, in.grid, sweep_options(c));

  io::Sidecar side{"box-density", {}, in.u, {}, {}, {}};
  side.scenario.push_back(echo("n", n, "", n));
  trap_echo(side, in);
  const double tn = boxtrap::bifurcation_time(s);
  side.scenario.push_back(echo("t_n", in.u.from_internal(tn, Kind::time), "s", tn));
  const double Ls = in.u.scale(Kind::length), Ts = in.u.scale(Kind::time);
  const auto path = output_path(c, "box_density");
  emit(c, path, frame, {"x_si", "t_si", "density"}, {Ls, Ts, 1.0 / Ls}, side);

  const Axis& ta = in.grid.t;
  std::vector<double> ts(ta.count), mean(ta.count), tcol(ta.count, tn * Ts);
  for (std::size_t i = 0; i < ta.count; ++i) {
    ts[i] = ta.at(i) * Ts;
    mean[i] = boxtrap::classical_center(s, ta.at(i)) * Ls;
  }
  const std::vector<std::string> header{"t_si", "mean_x_si", "t_n_si"};
  if (c.format == "json") {
    io::Sidecar aux = side;
    aux.columns = header;
    aux.notes.emplace_back("mean_x_si", "classical centre L/2 + q t / m - a t^2 / 2");
    FieldFrame trajectory{Quantity::density, {0.0, 0.0, 1}, ta, mean, {}};
    io::write_text(with_suffix(path, "_trajectory", ".json"), io::frame_json(trajectory, {1.0, Ts, Ls}, aux));
  } else {
    io::write_text(with_suffix(path, "_trajectory", ".csv"), io::table_csv(header, {ts, mean, tcol}));
  }
  return kExitOk;
}

int cmd_tonks(const RunConfig& c) {
  const auto in = trap_inputs(c);
  const int N = c.N ? *c.N : 10;
  const tonks::TGScenario s{N, 1.0, in.q, in.f};
  s.validate();
  const auto frame = tonks::tg_density_map(s, in.grid, sweep_options(c));

  io::Sidecar side{"tonks-density", {}, in.u, {}, {}, {}};
  side.scenario.push_back(echo("N", N, "", N));
  trap_echo(side, in);
  const double tN = boxtrap::bifurcation_time(1.0, N);
  side.scenario.push_back(echo("t_N", in.u.from_internal(tN, Kind::time), "s", tN));
  const double Ls = in.u.scale(Kind::length);
  emit(c, output_path(c, "tonks_density"), frame, {"x_si", "t_si", "density"},
       {Ls, in.u.scale(Kind::time), 1.0 / Ls}, side);
  return kExitOk;
}

int cmd_validate(const RunConfig& c) {
  validate::Options o;
  if (c.level == "quick")
    o.level = validate::Level::quick;
  else if (c.level == "full")
    o.level = validate::Level::full;
  else
    throw ConfigError("level must be quick or full");
  const auto report = validate::run(o);
  for (const auto& ch : report.checks)
    std::printf("%-4s %-13s %-24s max_error %.3e  tolerance %.1e\n",
                ch.informational ? "INFO" : (ch.passed ? "PASS" : "FAIL"), ch.suite.c_str(), ch.name.c_str(),
                ch.max_error, ch.tolerance);
  std::printf("%s in %.1f s\n", report.passed() ? "all checks passed" : "validation FAILED", report.elapsed_seconds);
  const std::filesystem::path path = c.output.empty() ? "validation_report.json" : c.output;
  io::write_text(path, validate::to_json(report));
  return report.passed() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transient matter-wave dynamics: shutter and hard-wall-trap release in a linear potential"};
  app.set_config("--config", "", "INI or TOML file with option values; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  app.add_option("--mass", c.mass_preset, "Mass preset: rb (natural rubidium) or rb87")->capture_default_str();
  app.add_option("--mass_kg", c.mass_kg, "Explicit particle mass in kg");
  app.add_option("--p_over_m_cm_s", c.p_over_m_cm_s, "Beam velocity p/m in cm/s");
  app.add_option("--q_over_m_cm_s", c.q_over_m_cm_s, "Kick velocity q/m in cm/s");
  app.add_option("--a_over_g", c.a_over_g, "Acceleration f/m in units of g");
  app.add_option("--a_cm_s2", c.a_cm_s2, "Acceleration f/m in cm/s^2 (overrides a_over_g)");
  app.add_option("--L_um", c.L_um, "Trap length in micrometres");
  app.add_option("--n", c.n, "Trap eigenstate quantum number");
  app.add_option("--N", c.N, "Tonks-Girardeau particle number");
  app.add_option("--x_det_mm", c.x_det_mm, "Detector position in mm");
  app.add_option("--t_ms", c.t_ms, "Time of the Wigner map in ms");
  app.add_option("--x_min_um", c.x_min_um, "Grid x minimum in um");
  app.add_option("--x_max_um", c.x_max_um, "Grid x maximum in um");
  app.add_option("--nx", c.nx, "Grid x points");
  app.add_option("--t_min_ms", c.t_min_ms, "Grid t minimum in ms");
  app.add_option("--t_max_ms", c.t_max_ms, "Grid t maximum in ms");
  app.add_option("--nt", c.nt, "Grid t points");
  app.add_option("--p_min_cm_s", c.p_min_cm_s, "Wigner grid p/m minimum in cm/s");
  app.add_option("--p_max_cm_s", c.p_max_cm_s, "Wigner grid p/m maximum in cm/s");
  app.add_option("--np", c.np, "Wigner grid p points");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("-o,--output", c.output, "Output path");
  app.add_option("--threads", c.threads, "Worker threads (MOSHLAB_THREADS overrides)");
  app.add_flag("--serial", c.serial, "Use the serial reference sweep");
  app.add_option("--level", c.level, "Validation level: quick or full")->capture_default_str();

  int (*handler)(const RunConfig&) = nullptr;
  auto sub = [&](const char* name, const char* help, int (*fn)(const RunConfig&)) {
    app.add_subcommand(name, help)->callback([&handler, fn] { handler = fn; });
  };
  sub("shutter-density", "Density on an (x, t) grid for the released cut-off plane wave", cmd_shutter_density);
  sub("detector", "Density at a fixed detector versus time, with the classical step", cmd_detector);
  sub("wigner-map", "Wigner function on an (x, p) grid at fixed time", cmd_wigner);
  sub("box-density", "Density of a released hard-wall-trap eigenstate on an (x, t) grid", cmd_box);
  sub("tonks-density", "Tonks-Girardeau gas density on an (x, t) grid", cmd_tonks);
  sub("validate", "Run the oracle comparisons and write a JSON report", cmd_validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    return handler(c);
  } catch (const io::IoError& e) {
    std::cerr << "moshlab: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConfigError& e) {
    std::cerr << "moshlab: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "moshlab: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "moshlab: " << e.what() << "\n";
    return kExitValidation;
  }
}
