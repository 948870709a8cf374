// Compares the OpenMP kernels against their serial references and checks
// that both produce identical output.
#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "byzdet/fusion.hpp"
#include "byzdet/simulate.hpp"
#include "byzdet/sweep.hpp"

using namespace byzdet;

namespace {

template <typename F>
double time_ms(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-22s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both paths run serially\n");
#endif

  {
    SimConfig cfg;
    cfg.network = {50, {0.8, 0.1}, {0.4, 0.6}, {0.3, 0.7, 0.6}};
    cfg.rule = majority_rule(cfg.network.n);
    cfg.trials = 2000000;
    cfg.seed = 12345;
    SimResult serial_result, parallel_result;
    const double serial_ms = time_ms([&] { serial_result = simulate_reference(cfg); });
    const double parallel_ms = time_ms([&] { parallel_result = simulate(cfg); });
    report("monte-carlo trials", serial_ms, parallel_ms, serial_result == parallel_result);
  }

  {
    SweepSpec spec;
    spec.base = {15, {0.8, 0.1}, {0.4, 0.6}, {0.35, 0.0, 0.0}};
    spec.axis1 = {SweepParam::P10, 0.0, 1.0, 0.02};
    spec.axis2 = {SweepParam::P01, 0.0, 1.0, 0.02};
    spec.objective = SweepObjective::MinErrorOverRules;
    SweepResult serial_result, parallel_result;
    const double serial_ms = time_ms([&] { serial_result = evaluate_sweep_serial(spec); });
    const double parallel_ms = time_ms([&] { parallel_result = evaluate_sweep(spec); });
    double max_diff = 0.0;
    for (std::size_t i = 0; i < serial_result.values.size(); ++i) {
      max_diff = std::max(max_diff,
                          std::abs(serial_result.values[i] - parallel_result.values[i]));
    }
    report("min-rule-error sweep", serial_ms, parallel_ms, max_diff == 0.0);
  }

  return 0;
}
