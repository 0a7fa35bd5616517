// Times the serial reference path against the OpenMP path on every Monte
// Carlo kernel and checks that the two produce bit-identical results.
// Exits nonzero on any mismatch, so it doubles as a smoke test.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "shadowlab/montecarlo.hpp"

namespace {

using shadowlab::Execution;
using Clock = std::chrono::steady_clock;

double run_timed(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Row {
  std::string kernel;
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  bool identical = false;
};

template <class Fn>
Row bench(const std::string& name, Fn&& fn) {
  Row row;
  row.kernel = name;
  decltype(fn(Execution::serial)) serial_result, parallel_result;
  row.serial_ms = run_timed([&] { serial_result = fn(Execution::serial); });
  row.parallel_ms = run_timed([&] { parallel_result = fn(Execution::parallel); });
  row.identical = std::memcmp(&serial_result, &parallel_result, sizeof(serial_result)) == 0;
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t samples = 4'000'000;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--samples") == 0 && i + 1 < argc) {
      samples = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: bench_montecarlo [--samples N]\n");
      return 2;
    }
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("samples: %llu\n\n", static_cast<unsigned long long>(samples));

  const shadowlab::RandomStream stream{1234, 0};
  const shadowlab::PlanePoint mu{0.5, 0.2};

  std::vector<Row> rows;
  rows.push_back(bench("shadow-mean", [&](Execution exec) {
    return shadowlab::estimate_mean_shadow(mu, samples, stream, exec);
  }));
  rows.push_back(bench("shadow-risk", [&](Execution exec) {
    return shadowlab::estimate_shadow_risk(mu, -0.25, samples, stream, exec);
  }));
  rows.push_back(bench("gof-geometric", [&](Execution exec) {
    return shadowlab::chi_square_gof(mu, samples, 36, shadowlab::GofSource::geometric, stream,
                                     exec);
  }));
  rows.push_back(bench("gof-inverse-cdf", [&](Execution exec) {
    return shadowlab::chi_square_gof(mu, samples / 4, 36, shadowlab::GofSource::inverse_cdf,
                                     stream, exec);
  }));
  rows.push_back(bench("gaussian-variance", [&](Execution exec) {
    return shadowlab::gaussian_variance_experiment(10, 1.0, samples / 10, stream, exec);
  }));

  std::printf("%-18s %12s %12s %9s %10s\n", "kernel", "serial ms", "parallel ms", "speedup",
              "identical");
  bool all_identical = true;
  for (const Row& r : rows) {
    std::printf("%-18s %12.1f %12.1f %8.2fx %10s\n", r.kernel.c_str(), r.serial_ms,
                r.parallel_ms, r.serial_ms / r.parallel_ms, r.identical ? "yes" : "NO");
    all_identical = all_identical && r.identical;
  }
  if (!all_identical) {
    std::fprintf(stderr, "\nserial and parallel results differ\n");
    return 1;
  }
  return 0;
}
