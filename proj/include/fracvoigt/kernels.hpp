#pragma once

#include <span>

#include "fracvoigt/weights.hpp"

namespace fracvoigt::kernels {

// Dense O(n^2) application of convolution weights to samples f (n + 1
// values), writing n + 1 outputs.  The serial version is the reference; the
// OpenMP version parallelises over output points and sums each point in the
// same order, so both produce bit-identical results.
void convolve_serial(const fracops::ConvolutionWeights& w, std::span<const double> f,
                     std::span<double> out);
void convolve_parallel(const fracops::ConvolutionWeights& w, std::span<const double> f,
                       std::span<double> out);

// Number of OpenMP threads the parallel kernels will use.
int max_threads();

}  // namespace fracvoigt::kernels
