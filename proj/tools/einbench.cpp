// Benchmark comparing the serial reference path against the OpenMP path on
// the heavy verification kernels.  Both paths must produce identical
// outcomes; the table reports wall times and speedup.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ein/batch.hpp"
#include "ein/centralizer.hpp"
#include "ein/holonomy.hpp"
#include "ein/nilpotency.hpp"

using namespace ein;

namespace {

struct Kernel {
  const char* name;
  int count;
  std::function<batch::Outcome(int)> fn;
};

double run_ms(const Kernel& k, int threads, bool& ok) {
  const auto start = std::chrono::steady_clock::now();
  auto results = batch::run(k.count, k.fn, threads);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  ok = batch::collect(results).ok;
  return ms;
}

}  // namespace

int main(int argc, char** argv) {
  int count = argc > 1 ? std::atoi(argv[1]) : 120;
  const Signature sig(2, 2);
  const std::uint64_t seed = 42;

  std::vector<Kernel> kernels;

  kernels.push_back(Kernel{"degree_bound(2,2)", count, [&](int i) -> batch::Outcome {
                             Rng rng = Rng(seed ^ hash_label("bench.degree")).fork(i);
                             Subalgebra h = random_nilpotent_subalgebra(sig, rng);
                             DegreeBoundReport rep = verify_degree_bound(h);
                             return {rep.degree_ok, {}};
                           }});

  kernels.push_back(Kernel{"centralizer_solve(2,2)", count, [&](int i) -> batch::Outcome {
                             Rng rng = Rng(seed ^ hash_label("bench.cent")).fork(i);
                             Subalgebra h = random_nilpotent_subalgebra(sig, rng);
                             Subalgebra c = centralizer(sig, h.basis);
                             return {c.dim() >= 1, {}};
                           }});

  kernels.push_back(Kernel{"base_factorization(2,3)", count * 4,
                           [&](int i) -> batch::Outcome {
                             const Signature s23(2, 3);
                             Rng rng = Rng(seed ^ hash_label("bench.hol")).fork(i);
                             Rat s = rng.rational();
                             Rat t = rng.rational();
                             if (1 + s * t == 0) return {};
                             return {verify_base_factorization(s23, s, t), {}};
                           }});

  int team = 0;
#ifdef _OPENMP
  team = omp_get_max_threads();
#endif
  std::printf("threads available: %d\n", team > 0 ? team : 1);
  std::printf("%-26s %10s %10s %9s %s\n", "kernel", "serial ms", "omp ms", "speedup",
              "agree");

  for (const auto& k : kernels) {
    bool ok_serial = false, ok_parallel = false;
    const double serial = run_ms(k, 1, ok_serial);
    const double parallel = run_ms(k, 0, ok_parallel);
    std::printf("%-26s %10.1f %10.1f %8.2fx %s\n", k.name, serial, parallel,
                serial / parallel,
                ok_serial == ok_parallel && ok_serial ? "yes" : "MISMATCH");
    if (!(ok_serial && ok_parallel)) return 1;
  }
  return 0;
}
