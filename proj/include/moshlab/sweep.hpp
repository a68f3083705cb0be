#pragma once

// Grid sweeps: a serial reference loop and an OpenMP loop over the same
// (row, col) index space. Both write each cell by index, so the parallel
// result is bitwise identical to the serial one for any thread count.

#include <cstddef>
#include <exception>
#include <span>

#include <omp.h>

namespace moshlab {

enum class Execution { serial, parallel };

struct SweepOptions {
  Execution execution = Execution::parallel;
  int threads = 0;  // <= 0: OpenMP default
};

template <class Fn>
void sweep_serial(std::span<double> out, std::size_t rows, std::size_t cols, Fn&& fn) {
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r * cols + c] = fn(r, c);
}

template <class Fn>
void sweep_parallel(std::span<double> out, std::size_t rows, std::size_t cols, int threads, Fn&& fn) {
  const auto total = static_cast<long long>(rows * cols);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 256) num_threads(nthreads)
  for (long long i = 0; i < total; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = fn(idx / cols, idx % cols);
    } catch (...) {
#pragma omp critical(moshlab_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }

  if (failure) std::rethrow_exception(failure);
}

template <class Fn>
void sweep(std::span<double> out, std::size_t rows, std::size_t cols, const SweepOptions& opts, Fn&& fn) {
  if (opts.execution == Execution::serial)
    sweep_serial(out, rows, cols, fn);
  else
    sweep_parallel(out, rows, cols, opts.threads, fn);
}

}  // namespace moshlab
