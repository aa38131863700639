#include "fracvoigt/kernels.hpp"

#include <omp.h>

#include <cassert>

namespace fracvoigt::kernels {

namespace {

inline double convolve_point(const fracops::ConvolutionWeights& w, const double* f, int j) {
  if (j == 0) {
    return 0.0;
  }
  const double* interior = w.interior.data();
  double acc = w.first[static_cast<std::size_t>(j)] * f[0];
  for (int k = 1; k < j; ++k) {
    acc += interior[j - k] * f[k];
  }
  return acc + w.diagonal * f[j];
}

}  // namespace

void convolve_serial(const fracops::ConvolutionWeights& w, std::span<const double> f,
                     std::span<double> out) {
  const int n = w.n();
  assert(f.size() == static_cast<std::size_t>(n) + 1 && out.size() == f.size());
  for (int j = 0; j <= n; ++j) {
    out[static_cast<std::size_t>(j)] = convolve_point(w, f.data(), j);
  }
}

void convolve_parallel(const fracops::ConvolutionWeights& w, std::span<const double> f,
                       std::span<double> out) {
  const int n = w.n();
  assert(f.size() == static_cast<std::size_t>(n) + 1 && out.size() == f.size());
  const double* fp = f.data();
  double* op = out.data();
  // Row j costs O(j); dynamic chunks balance the triangle.
#pragma omp parallel for schedule(dynamic, 32)
  for (int j = 0; j <= n; ++j) {
    op[j] = convolve_point(w, fp, j);
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace fracvoigt::kernels
