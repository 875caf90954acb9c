// Serial vs OpenMP solve_rect on the quadratic and cascade-chain families.
//   bench_rect [--reps R] [--sizes 100,200,400]

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "stabber/gen.hpp"
#include "stabber/solvers.hpp"

using namespace stabber;

namespace {

template <class F>
double best_of(int reps, F&& fn, std::size_t& count) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    count = fn().size();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solve_rect: serial vs parallel"};
  int reps = 3;
  std::vector<std::size_t> sizes{100, 200, 400};
  app.add_option("--reps", reps);
  app.add_option("--sizes", sizes)->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  std::printf("threads=%d\n%-10s %6s %8s %10s %10s %8s\n", omp_get_max_threads(), "family", "n", "classes",
              "serial_s", "parallel_s", "speedup");
  for (std::size_t n : sizes) {
    std::vector<std::pair<std::string, Instance>> cases;
    cases.emplace_back("qrect", gen_quadratic_rect(n - n % 4));
    cases.emplace_back("chain", gen_cascade_chain(n));
    for (const auto& [family, inst] : cases) {
      std::size_t cs = 0, cp = 0;
      const double ts = best_of(reps, [&] { return solve_rect_serial(inst); }, cs);
      const double tp = best_of(reps, [&] { return solve_rect(inst); }, cp);
      if (cs != cp) {
        std::fprintf(stderr, "class counts differ on %s n=%zu: %zu vs %zu\n", family.c_str(), n, cs, cp);
        return 1;
      }
      std::printf("%-10s %6zu %8zu %10.4f %10.4f %8.2f\n", family.c_str(), inst.size(), cs, ts, tp, ts / tp);
    }
  }
  return 0;
}
