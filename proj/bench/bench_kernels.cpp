// Times the OpenMP kernels against their serial references on larger windows.
// Usage: bench_kernels [repetitions]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include <omp.h>

#include "divgraph/connectivity.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/models.hpp"
#include "divgraph/topology.hpp"

using namespace divgraph;

namespace {

double best_of(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    best = std::min(best, d.count());
  }
  return best;
}

void row(const char* kernel, const std::string& window, int reps, const std::function<void()>& serial,
         const std::function<void()>& parallel) {
  const double s = best_of(reps, serial);
  const double p = best_of(reps, parallel);
  std::printf("%-16s %-22s %10.4f %10.4f %7.2fx\n", kernel, window.c_str(), s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-16s %-22s %10s %10s %8s\n", "kernel", "window", "serial s", "omp s", "speedup");

  NumericalMonoidModel n({3, 5, 7});
  const auto wn = n.enumerate_window({"numerical", {{"max_value", 400}}, false, {}});
  const std::string nl = "<3,5,7> to 400 (" + std::to_string(wn.size()) + ")";
  row("build_graph", nl, reps, [&] { serial::build_graph(n, wn); }, [&] { build_graph(n, wn); });
  const DivGraph gn = build_graph(n, wn);
  row("window_poset", nl, reps, [&] { serial::window_poset(n, gn); }, [&] { window_poset(n, gn); });

  RankTwoModel d2(RankTwoModel::Variant::Integer);
  const auto w2 = d2.enumerate_window({"d2", {{"max_k", 6}, {"max_abs", 6}}, false, {}});
  const std::string l2 = "D2 k<=6 (" + std::to_string(w2.size()) + ")";
  row("build_graph", l2, reps, [&] { serial::build_graph(d2, w2); }, [&] { build_graph(d2, w2); });
  row("almost_atomic", l2, reps, [&] { serial::is_almost_atomic(d2, w2, 8); },
      [&] { is_almost_atomic(d2, w2, 8); });

  RankTwoModel d1(RankTwoModel::Variant::Rational);
  const auto w1 = d1.enumerate_window({"d1", {{"max_k", 4}, {"max_abs", 2}, {"max_den", 6}}, false, {}});
  const std::string l1 = "D1 k<=4 (" + std::to_string(w1.size()) + ")";
  row("quasi_atomic", l1, reps, [&] { serial::is_quasi_atomic(d1, w1, 8); },
      [&] { is_quasi_atomic(d1, w1, 8); });
  return 0;
}
