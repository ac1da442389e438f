// Serial vs OpenMP skeleton enumeration, and coset enumeration timings.
#include <chrono>
#include <cstdio>
#include <functional>

#include "sextic/enumerate.hpp"
#include "sextic/vankampen.hpp"

using namespace sextic;
using clock_type = std::chrono::steady_clock;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = clock_type::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(clock_type::now() - t0).count());
  }
  return best;
}

void enumeration(int total, enumerate::Distinguish mode, const char* label) {
  std::size_t count_s = 0, count_p = 0;
  auto run = [&](enumerate::Backend backend, std::size_t& count) {
    count = 0;
    for (const auto& spec : enumerate::specs_for_total(total, mode == enumerate::Distinguish::White ? 1 : 0))
      count += enumerate::enumerate_skeletons(spec, mode, backend).skeletons.size();
  };
  const double s = best_of(3, [&] { run(enumerate::Backend::Serial, count_s); });
  const double p = best_of(3, [&] { run(enumerate::Backend::Parallel, count_p); });
  std::printf("%-28s %8zu %10.1f %10.1f %7.2fx%s\n", label, count_s, s, p, s / p,
              count_s == count_p ? "" : "  MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", enumerate::max_threads());
  std::printf("%-28s %8s %10s %10s %8s\n", "enumeration", "maps", "serial ms", "omp ms", "speedup");
  enumeration(4, enumerate::Distinguish::None, "sigma2 census (total 4)");
  enumeration(8, enumerate::Distinguish::White, "insertions (total 8, u)");

  std::printf("\n%-28s %8s %10s\n", "coset enumeration", "order", "ms");
  struct Case {
    const char* label;
    std::function<std::size_t()> run;
  };
  const Case cases[] = {
      {"size(5,4,3)", [] { return vankampen::size(5, 4, 3); }},
      {"size2(4,3,-)", [] { return vankampen::size2(4, 3, 0); }},
      {"size(8,3,3)", [] { return vankampen::size(8, 3, 3); }},
      {"G6 short form", [] { return vankampen::size({5, 4, 3, {}, {}, true}); }},
  };
  for (const auto& c : cases) {
    std::size_t order = 0;
    const double ms = best_of(5, [&] { order = c.run(); });
    std::printf("%-28s %8zu %10.2f\n", c.label, order, ms);
  }
}
