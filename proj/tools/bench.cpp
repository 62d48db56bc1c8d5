// Benchmark comparing the OpenMP kernels against their serial references.
// Each case is run on a cold LR cache, checked for identical results, and
// timed with wall clocks.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "tenscat/category.hpp"
#include "tenscat/lrcalc.hpp"
#include "tenscat/weightcalc.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double run_ms(const std::function<void()>& body) {
  const auto start = Clock::now();
  body();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n",
              name.c_str(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tenscat-bench: serial reference vs OpenMP kernels"};
  int threads = 0;
  int ext_boxes = 5;
  int mixed_degree = 6;
  int weight_degree = 4;
  int weight_trunc = 6;
  app.add_option("--threads", threads, "OpenMP thread count (default: runtime choice)");
  app.add_option("--ext-boxes", ext_boxes, "label box bound for the Ext table case");
  app.add_option("--mixed-degree", mixed_degree, "tensor degree for the mixed JH case");
  app.add_option("--weight-degree", weight_degree, "tensor degree for the weight case");
  app.add_option("--weight-trunc", weight_trunc, "truncation for the weight case");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP, parallel kernels run serially\n");
#endif

  {
    tenscat::lr_cache_clear();
    std::vector<tenscat::ExtTableEntry> serial, parallel;
    const double t_serial = run_ms([&] { serial = tenscat::ext_table_serial(ext_boxes); });
    tenscat::lr_cache_clear();
    const double t_parallel = run_ms([&] { parallel = tenscat::ext_table(ext_boxes); });
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i)
      equal = serial[i].src == parallel[i].src && serial[i].tgt == parallel[i].tgt &&
              serial[i].degree == parallel[i].degree && serial[i].dim == parallel[i].dim;
    report("ext-table(" + std::to_string(ext_boxes) + ")", t_serial, t_parallel, equal);
  }

  {
    tenscat::lr_cache_clear();
    tenscat::LabelMultiset serial, parallel;
    const double t_serial = run_ms(
        [&] { serial = tenscat::jh_mixed_tensor_serial(mixed_degree, mixed_degree); });
    tenscat::lr_cache_clear();
    const double t_parallel =
        run_ms([&] { parallel = tenscat::jh_mixed_tensor(mixed_degree, mixed_degree); });
    report("jh-mixed(" + std::to_string(mixed_degree) + "," + std::to_string(mixed_degree) + ")",
           t_serial, t_parallel, serial == parallel);
  }

  {
    tenscat::WeightMultiplicities brute, fast;
    const double t_brute = run_ms([&] {
      brute = tenscat::enumerate_weights_brute(weight_degree, weight_degree, weight_trunc,
                                               weight_trunc);
    });
    const double t_fast = run_ms([&] {
      fast = tenscat::enumerate_weights(weight_degree, weight_degree, weight_trunc,
                                        weight_trunc);
    });
    report("weights(" + std::to_string(weight_degree) + "^2," + std::to_string(weight_trunc) +
               "^2) brute/conv",
           t_brute, t_fast, brute == fast);
  }

  return 0;
}
