// Parallel kernels against their serial references.
//
//   bench [--trials N] [--workers W]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>

#include "rlc/ensemble.hpp"
#include "rlc/moments.hpp"
#include "rlc/parallel.hpp"

using namespace rlc;

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t trials = 5000;
  int workers = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (!std::strcmp(argv[i], "--trials")) trials = std::strtoull(argv[i + 1], nullptr, 10);
    else if (!std::strcmp(argv[i], "--workers")) workers = std::atoi(argv[i + 1]);
  }
  std::printf("workers %d\n", resolve_workers(workers));

  SamplerConfig s;
  s.q = 2;
  s.n = 64;
  s.k = 24;
  s.trials = trials;
  s.master_seed = 1;
  s.workers = workers;
  EmpiricalCdf a, b;
  const double ts = seconds([&] { a = sample_dmin_serial(s); });
  const double tp = seconds([&] { b = sample_dmin(s); });
  row("sample_dmin q=2 n=64 k=24", ts, tp, a.counts == b.counts);

  CodeLaw la, lb;
  const double es = seconds([&] { la = enumerate_code_law_serial(2, 6, 3, CodeLawMode::all_matrices); });
  const double ep = seconds([&] { lb = enumerate_code_law(2, 6, 3, CodeLawMode::all_matrices); });
  row("code law q=2 n=6 k=3", es, ep, la.counts == lb.counts);

  ZMomentConfig z;
  z.q = 3;
  z.n = 12;
  z.k = 5;
  z.d = 4;
  z.h = 6;
  z.method = ZMethod::monte_carlo;
  z.trials = trials;
  z.seed = 2;
  z.workers = workers;
  MomentVector ma, mb;
  const double zs = seconds([&] { ma = z_moments_serial(z); });
  const double zp = seconds([&] { mb = z_moments(z); });
  row("z_moments q=3 n=12 k=5", zs, zp, ma.value == mb.value);
  return 0;
}
