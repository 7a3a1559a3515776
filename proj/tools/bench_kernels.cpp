// Compares the serial reference kernels against the OpenMP ones on two
// workloads: a brute-force subset scan and the full Benders cut loop.
// Both kernels must agree exactly; the point of the serial path is that
// the parallel one has something trustworthy to be checked against.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "mongedomp/benders.hpp"
#include "mongedomp/generator.hpp"
#include "mongedomp/oracles.hpp"
#include "mongedomp/subsets.hpp"

namespace md = mongedomp;

namespace {

double best_of_ms(int reps, double (*run)(const md::DompInstance&, md::Exec),
                  const md::DompInstance& inst, md::Exec exec) {
  double best = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    run(inst, exec);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

double run_subset_scan(const md::DompInstance& inst, md::Exec exec) {
  const auto subsets = md::all_p_subsets(inst.n, inst.p);
  const auto [value, at] = md::min_scan<md::Money>(
      subsets.size(),
      [&](std::size_t s) { return md::ordered_median_value(inst, subsets[s]); },
      exec);
  return static_cast<double>(value.scaled()) + static_cast<double>(at);
}

double run_cut_loop(const md::DompInstance& inst, md::Exec exec) {
  const md::BendersLog log =
      md::solve_benders(inst, md::Orientation::kB1, {}, exec);
  return static_cast<double>(log.incumbent.scaled());
}

void report(const char* name, const md::DompInstance& inst,
            double (*run)(const md::DompInstance&, md::Exec), int reps) {
  const double serial = best_of_ms(reps, run, inst, md::Exec::kSerial);
  const double parallel = best_of_ms(reps, run, inst, md::Exec::kParallel);
  const bool agree =
      run(inst, md::Exec::kSerial) == run(inst, md::Exec::kParallel);
  std::printf("%-12s %10.2f %12.2f %8.2fx  %s\n", name, serial, parallel,
              serial / parallel, agree ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  const int scan_n = argc > 1 ? std::atoi(argv[1]) : 20;
  const int loop_n = argc > 2 ? std::atoi(argv[2]) : 14;
  const int reps = 3;

  const md::DompInstance scan_inst =
      md::generate_instance(scan_n, scan_n / 2, 1, md::LambdaFamily::kKRange);
  const md::DompInstance loop_inst =
      md::generate_instance(loop_n, loop_n / 2, 3, md::LambdaFamily::kRandom);

  std::printf("subset scan: n=%d p=%d (%llu subsets); cut loop: n=%d p=%d\n",
              scan_n, scan_n / 2,
              static_cast<unsigned long long>(md::binomial(scan_n, scan_n / 2)),
              loop_n, loop_n / 2);
  std::printf("%-12s %10s %12s %9s  %s\n", "kernel", "serial_ms",
              "parallel_ms", "speedup", "agree");
  report("subset-scan", scan_inst, run_subset_scan, reps);
  report("cut-loop", loop_inst, run_cut_loop, reps);
  return 0;
}
