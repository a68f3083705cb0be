// Serial reference sweep versus the OpenMP sweep on the figure grids.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include <omp.h>

#include "moshlab/boxtrap.hpp"
#include "moshlab/figures.hpp"
#include "moshlab/shutter.hpp"
#include "moshlab/tonks.hpp"
#include "moshlab/wigner.hpp"

using namespace moshlab;

namespace {

double seconds(const std::function<FieldFrame()>& fn, FieldFrame& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool run(const char* name, const std::function<FieldFrame(const SweepOptions&)>& kernel) {
  FieldFrame serial, parallel;
  const double ts = seconds([&] { return kernel({Execution::serial, 0}); }, serial);
  const double tp = seconds([&] { return kernel({Execution::parallel, 0}); }, parallel);
  const bool same = serial.values.size() == parallel.values.size() &&
                    std::memcmp(serial.values.data(), parallel.values.data(),
                                serial.values.size() * sizeof(double)) == 0;
  std::printf("%-16s %9zu cells  serial %8.3f s  parallel %8.3f s  speedup %5.2f  %s\n", name,
              serial.values.size(), ts, tp, ts / tp, same ? "identical" : "MISMATCH");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 300;
  std::printf("threads %d, grid %zu x %zu\n", omp_get_max_threads(), n, n);
  bool ok = true;

  const auto fs = figures::fountain();
  const GridSpec gs{{-40.0, 80.0, n}, {0.1, 18.0, n}};
  ok &= run("shutter", [&](const SweepOptions& o) { return shutter::density_map(fs.scenario, gs, o); });

  const auto ws = figures::wigner_fountain();
  const double front = shutter::classical_front(ws.scenario, ws.t);
  const PhaseSpaceGrid gw{{front - 25.0, front + 5.0, n}, {ws.scenario.p - 0.5, ws.scenario.p + 0.5, n}};
  ok &= run("wigner", [&](const SweepOptions& o) { return wigner::wigner_map(ws.scenario.p, ws.scenario.f, ws.t, gw, o); });

  const auto fb = figures::falling_box();
  const double tn = boxtrap::bifurcation_time(fb.scenario);
  const GridSpec gb{{-6.0, 2.0, n}, {tn / 100.0, 3.0 * tn, n}};
  ok &= run("box", [&](const SweepOptions& o) { return boxtrap::box_density_map(fb.scenario, gb, o); });

  const auto ft = figures::falling_tonks();
  ok &= run("tonks", [&](const SweepOptions& o) { return tonks::tg_density_map(ft.scenario, gb, o); });

  return ok ? 0 : 1;
}
