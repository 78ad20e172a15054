// Timing comparison of the verification sweeps: single-threaded reference
// loop vs the OpenMP work-split path. Also cross-checks that both paths
// emit identical reports.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sfdt/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sfdt;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads available: %d\n", threads);
  std::printf("%-34s %10s %10s %8s %6s\n", "sweep", "serial(s)", "par(s)",
              "speedup", "equal");

  struct Row {
    std::string name;
    std::function<VerifyReport(int jobs)> run;
  };
  std::vector<Row> rows = {
      {"3degenerate nmax=7",
       [](int j) { return verify_corollary_3degenerate(7, j); }},
      {"structure fig3-free-planar nmax=7",
       [](int j) { return verify_structure("fig3-free-planar", 7, j); }},
      {"dp4 fig3-free-planar nmax=5 x10",
       [](int j) { return verify_dp4("fig3-free-planar", 5, 10, 42, 4, j); }},
      {"mr exhaustive nmax=4",
       [](int j) { return verify_theorem_mr(4, 2, 0, 42, j, true); }},
  };

  for (auto& row : rows) {
    VerifyReport serial, parallel;
    double ts = seconds([&] { serial = row.run(1); });
    double tp = seconds([&] { parallel = row.run(threads); });
    bool equal = serial.to_text() == parallel.to_text();
    std::printf("%-34s %10.3f %10.3f %8.2f %6s\n", row.name.c_str(), ts, tp,
                ts / (tp > 0 ? tp : 1e-9), equal ? "yes" : "NO");
    if (!serial.ok()) std::printf("  WARNING: %s reported violations\n",
                                  row.name.c_str());
  }
  return 0;
}
