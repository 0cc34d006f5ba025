// Compares the serial reference elimination against the OpenMP variant on
// exact rational matrices, and checks that they produce identical output.
#include "zz/linalg.hpp"
#include "zz/zigzag.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace zz;

namespace {
Mat random_mat(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> coef(-9, 9);
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rat(coef(rng), 1 + (i * 7 + j) % 5);
  return m;
}

template <class F> long long time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}
} // namespace

int main() {
  std::mt19937 rng(42);
  std::printf("%8s %12s %12s %8s\n", "size", "serial(ms)", "openmp(ms)", "equal");
  for (int n : {40, 80, 120, 160}) {
    Mat m = random_mat(rng, n, n + 20);
    Rref a, b;
    long long ts = time_ms([&] { a = rref_serial(m); });
    long long tp = time_ms([&] { b = rref_parallel(m); });
    bool eq = a.r == b.r && a.pivots == b.pivots;
    std::printf("%4dx%-4d %12lld %12lld %8s\n", n, n + 20, ts, tp, eq ? "yes" : "NO");
    if (!eq) return 1;
  }
  // a workload from the artifact itself: the degreewise path quotient
  for (const char* name : {"affD4", "affE6"}) {
    int order = std::string(name) == "affD4" ? 12 : 8;
    Graph g = Graph::named(name);
    long long t = time_ms([&] { quadratic_dual_dims(g, order); });
    std::printf("quadratic_dual_dims(%s, %d): %lld ms\n", name, order, t);
  }
  return 0;
}
