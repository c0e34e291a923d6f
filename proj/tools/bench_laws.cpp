// Compares the serial reference law runner against the OpenMP batch
// runner on the float-mode Wasserstein condition suite and reports the
// speedup. The two runners must produce identical reports; the unit
// tests assert that, this tool just times them.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wasser/harness.hpp"

namespace {

double time_run(const wasser::LawSuite<double>& suite) {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = suite.run("wasserstein");
  auto t1 = std::chrono::steady_clock::now();
  long failures = 0;
  for (const auto& r : reports) failures += r.failures;
  if (failures != 0) std::printf("unexpected failures: %ld\n", failures);
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long trials = argc > 1 ? std::atol(argv[1]) : 500;

  wasser::SuiteConfig serial_cfg;
  serial_cfg.trials = trials;
  serial_cfg.parallel = false;
  wasser::SuiteConfig parallel_cfg = serial_cfg;
  parallel_cfg.parallel = true;

  double ts = time_run(wasser::LawSuite<double>(serial_cfg));
  double tp = time_run(wasser::LawSuite<double>(parallel_cfg));

#ifdef _OPENMP
  std::printf("threads        %d\n", omp_get_max_threads());
#else
  std::printf("threads        1 (no OpenMP)\n");
#endif
  std::printf("trials/law     %ld\n", trials);
  std::printf("serial         %.3f s\n", ts);
  std::printf("parallel       %.3f s\n", tp);
  std::printf("speedup        %.2fx\n", ts / tp);
  return 0;
}
