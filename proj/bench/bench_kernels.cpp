// Times the OpenMP kernels against the serial reference implementations on
// training-shaped problems, plus the compressed multiply against its dense
// equivalent. Best-of-R wall time per op; a checksum of every result feeds a
// volatile sink so the optimizer cannot drop the work.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "nmsparse/kernels.hpp"
#include "nmsparse/reference.hpp"
#include "nmsparse/rng.hpp"
#include "nmsparse/sparsity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace nmsparse;

namespace {

volatile double g_sink = 0.0;

MatrixF random_matrix(std::size_t r, std::size_t c, SplitMix64& g) {
  MatrixF m(r, c);
  for (std::size_t i = 0; i < m.size(); ++i) {
    m.data()[i] = static_cast<float>(g.normal());
  }
  return m;
}

double checksum(const MatrixF& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m.data()[i];
  return s;
}

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    g_sink = g_sink + f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s,
            double flops) {
  std::printf("%-28s serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx",
              name, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s);
  if (flops > 0.0) {
    std::printf("  (%6.2f GFLOP/s parallel)", flops / parallel_s * 1e-9);
  }
  std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
#ifdef _OPENMP
  std::printf("OpenMP max threads: %d, reps: %d\n\n", omp_get_max_threads(),
              reps);
#else
  std::printf("built without OpenMP, reps: %d\n\n", reps);
#endif

  SplitMix64 g(42);

  {  // layer-0 forward shape: (64 x 784) * (784 x 256)
    MatrixF a = random_matrix(64, 784, g);
    MatrixF b = random_matrix(784, 256, g);
    const double flops = 2.0 * 64 * 784 * 256;
    double ts = best_of(reps, [&] { return checksum(reference::matmul(a, b)); });
    double tp = best_of(reps, [&] { return checksum(matmul(a, b)); });
    report("matmul 64x784x256", ts, tp, flops);
  }
  {  // square
    MatrixF a = random_matrix(512, 512, g);
    MatrixF b = random_matrix(512, 512, g);
    const double flops = 2.0 * 512 * 512 * 512;
    double ts = best_of(reps, [&] { return checksum(reference::matmul(a, b)); });
    double tp = best_of(reps, [&] { return checksum(matmul(a, b)); });
    report("matmul 512x512x512", ts, tp, flops);
  }
  {  // transpose runs every forward (act * W^T), so it gets its own row
    MatrixF a = random_matrix(256, 784, g);
    double ts = best_of(reps, [&] { return checksum(reference::transpose(a)); });
    double tp = best_of(reps, [&] { return checksum(transpose(a)); });
    report("transpose 256x784", ts, tp, 0.0);
  }
  {  // projection of a layer-0 weight matrix
    MatrixF w = random_matrix(256, 784, g);
    const SparsityPattern p(2, 4);
    double ts = best_of(reps, [&] {
      return checksum(reference::project(w, p.n, p.m));
    });
    double tp = best_of(reps, [&] { return checksum(project(w, p).first); });
    report("project 256x784 2:4", ts, tp, 0.0);
  }
  {  // compressed multiply vs. the dense multiply it replaces
    MatrixF w = random_matrix(256, 784, g);
    const SparsityPattern p(2, 4);
    MatrixF wt = project(w, p).first;
    NMCompressed c = compress(wt, p);
    MatrixF x = random_matrix(784, 64, g);
    double td = best_of(reps, [&] { return checksum(matmul(wt, x)); });
    double tsp = best_of(reps, [&] { return checksum(spmm(c, x)); });
    std::printf("%-28s dense  %8.3f ms  spmm     %8.3f ms  speedup %5.2fx\n",
                "spmm 256x784 2:4, nb=64", td * 1e3, tsp * 1e3, td / tsp);
  }
  {
    MatrixF a = random_matrix(1024, 1024, g);
    MatrixF b = random_matrix(1024, 1024, g);
    double ts = best_of(reps, [&] { return checksum(reference::hadamard(a, b)); });
    double tp = best_of(reps, [&] { return checksum(hadamard(a, b)); });
    report("hadamard 1024x1024", ts, tp, 0.0);
  }

  std::printf("\nsink %g\n", g_sink);
  return 0;
}
