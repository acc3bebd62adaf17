// Benchmark: Stokes-sweep throughput, serial reference vs OpenMP.
// Sweep points are independent CPR evolutions; the parallel runner must
// be bit-identical to the serial one, which this tool also verifies.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <span>
#include <vector>

#include "lambdasim/scenarios.hpp"

using namespace lambdasim;

namespace {

double run_policy(std::span<const double> peaks, const CprParams& params,
                  ExecutionPolicy policy, SweepResult& result) {
  SweepOptions options;
  options.policy = policy;
  options.keep_traces = true;
  const auto t0 = std::chrono::steady_clock::now();
  result = run_stokes_sweep(peaks, params, FwmMedium{}, options);
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool identical(const SweepResult& a, const SweepResult& b) {
  if (a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].peak_signal != b.points[i].peak_signal) return false;
    const auto& ta = a.points[i].trajectory;
    const auto& tb = b.points[i].trajectory;
    if (ta.size() != tb.size()) return false;
    for (std::size_t k = 0; k < ta.size(); ++k)
      if (!(ta.states[k] == tb.states[k])) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int n_points = 12;
  double dt_ns = 1.0;
  if (argc > 1) n_points = std::atoi(argv[1]);
  if (argc > 2) dt_ns = std::atof(argv[2]);
  if (n_points < 1) n_points = 1;

  std::vector<double> peaks(n_points);
  for (int i = 0; i < n_points; ++i)
    peaks[i] = 0.02 + 0.06 * static_cast<double>(i) / static_cast<double>(n_points);

  CprParams params;
  params.dt_ns = dt_ns;

  std::printf("stokes sweep: %d points, dt=%g ns, grid %g ns, threads=%d\n", n_points, dt_ns,
              params.t_end_ns, max_sweep_threads());

  SweepResult serial, parallel;
  const double serial_ms = run_policy(peaks, params, ExecutionPolicy::serial, serial);
  std::printf("  serial   %10.1f ms\n", serial_ms);
  const double parallel_ms = run_policy(peaks, params, ExecutionPolicy::parallel, parallel);
  std::printf("  parallel %10.1f ms   speedup %.2fx\n", parallel_ms, serial_ms / parallel_ms);

  if (!identical(serial, parallel)) {
    std::printf("MISMATCH: parallel sweep differs from serial reference\n");
    return 1;
  }
  std::printf("parallel results bit-identical to serial reference\n");
  return 0;
}
