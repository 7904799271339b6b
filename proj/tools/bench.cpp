// Timing comparison of the serial and OpenMP lanes of the three scan
// kernels: the grid agreement check, the injectivity pair scan, and the
// overlap triple scan.  Both lanes return identical witnesses, so the
// comparison is purely about wall time.

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tribasis/logic.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

using namespace tribasis;

namespace {

double best_ms(const std::function<void()>& work, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    work();
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.2f %10.2f %9.2fx\n", name, serial, parallel, serial / parallel);
}

// A pseudo-triangular family whose transitions are kinked at interval
// midpoints, doubling the segment count of the evenly spaced basis.
FuzzyFamily kinked_basis(int n) {
  std::vector<std::map<Rat, Rat>> pts(static_cast<size_t>(n));
  for (int i = 0; i + 1 < n; ++i) {
    Rat a(i, n - 1), b(i + 1, n - 1);
    Rat mid = (a + b) / 2;
    auto& fall = pts[static_cast<size_t>(i)];
    auto& rise = pts[static_cast<size_t>(i) + 1];
    fall[a] = 1;
    fall[mid] = Rat(1, 3);
    fall[b] = 0;
    rise[a] = 0;
    rise[mid] = Rat(2, 3);
    rise[b] = 1;
  }
  for (int m = 0; m + 2 < n; ++m) pts[static_cast<size_t>(m)][Rat(1)] = 0;
  for (int m = 2; m < n; ++m) pts[static_cast<size_t>(m)][Rat(0)] = 0;
  std::vector<PLFunc> fs;
  for (auto& mp : pts) {
    std::vector<Breakpoint> bp;
    for (auto& [x, y] : mp) bp.push_back({x, y});
    fs.push_back(PLFunc::from_points(std::move(bp)));
  }
  return FuzzyFamily(std::move(fs));
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both lanes run serially\n\n");
#endif
  std::printf("%-28s %10s %10s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

  {
    const int n = 3;
    const long d = 46; // (d+1)^3 = 103823 grid points
    double s = best_ms([&] { (void)oneset_grid_check_serial(n, d); });
    double p = best_ms([&] { (void)oneset_grid_check_parallel(n, d); });
    row("grid agreement (3, d=46)", s, p);
  }

  {
    auto B = kinked_basis(64); // 126 curve segments, ~7.9k pairs
    double s = best_ms([&] { (void)injectivity_check_serial(B); });
    double p = best_ms([&] { (void)injectivity_check_parallel(B); });
    row("injectivity pairs (n=64)", s, p);
  }

  {
    auto B = canonical_basis(40); // 9880 member triples
    double s = best_ms([&] { (void)is_2_overlapping_serial(B); });
    double p = best_ms([&] { (void)is_2_overlapping_parallel(B); });
    row("overlap triples (n=40)", s, p);
  }

  return 0;
}
