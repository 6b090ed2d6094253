// Compares the OpenMP kernels against the serial reference implementations
// on the heavy workloads: derivation-space solves (row reduction of the
// derivation-law system) and full Jacobi scans. Results must be bit-identical;
// timings are informational. Pass --t5 to add the degree-cap-5 solve.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#include "liebra/dercalc.hpp"
#include "liebra/exec.hpp"
#include "liebra/freenilp.hpp"

using namespace liebra;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void bench_derivations(std::size_t t) {
  FreeNilpotent g = build_free_nilpotent(t);
  const auto t0 = Clock::now();
  DerivationSpace serial = derivation_space(g.alg(), Exec::serial);
  const double ts = seconds_since(t0);
  const auto t1 = Clock::now();
  DerivationSpace parallel = derivation_space(g.alg(), Exec::parallel);
  const double tp = seconds_since(t1);
  const bool same = serial.space() == parallel.space();
  if (!same) ++failures;
  std::cout << "derivation-space cap " << t << " (dim " << g.alg().dim() << " -> Der dim "
            << serial.dim() << "): serial " << ts << " s, parallel " << tp << " s, results "
            << (same ? "identical" : "DIFFER") << "\n";
}

void bench_jacobi(std::size_t t) {
  FreeNilpotent g = build_free_nilpotent(t);
  const auto t0 = Clock::now();
  const auto ds = jacobi_defect(g.alg(), Exec::serial);
  const double ts = seconds_since(t0);
  const auto t1 = Clock::now();
  const auto dp = jacobi_defect(g.alg(), Exec::parallel);
  const double tp = seconds_since(t1);
  const bool same = ds.size() == dp.size();
  const bool clean = ds.empty();
  if (!same || !clean) ++failures;
  std::cout << "jacobi-scan cap " << t << " (dim " << g.alg().dim() << "): serial " << ts
            << " s, parallel " << tp << " s, " << (clean ? "no defects" : "DEFECTS FOUND")
            << ", results " << (same ? "identical" : "DIFFER") << "\n";
}

} // namespace

int main(int argc, char** argv) {
  bool t5 = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--t5") == 0) t5 = true;

  std::cout << "threads available to the parallel kernels: " << exec_thread_count() << "\n";

  bench_jacobi(5);
  bench_jacobi(6);
  bench_derivations(4);
  if (t5) bench_derivations(5);

  if (failures) {
    std::cout << failures << " kernel comparison(s) failed\n";
    return 1;
  }
  std::cout << "all kernel comparisons identical\n";
  return 0;
}
