#pragma once

#include <cstddef>
#include <string_view>

// Hot loops of the finite-volume solver and the error norms. Every kernel
// has a scalar reference and, where the CPU allows it, an AVX2 variant that
// must round identically (flux, reconstruction) or agree to summation-order
// roundoff (reductions).
namespace swb::kernels {

// Interface arrays for n interfaces. hl/ul/zl are the reconstructed values on
// the left of each interface, hr/ur/zr on the right. Outputs: mass flux,
// momentum flux seen by the left cell and by the right cell (hydrostatic
// corrections included), and the largest wave speed.
struct FluxArgs {
  const double* hl;
  const double* ul;
  const double* zl;
  const double* hr;
  const double* ur;
  const double* zr;
  double* fh;
  double* fq_left;
  double* fq_right;
  double* smax;
};

using FluxFn = void (*)(const FluxArgs& a, std::size_t n);
// minus/plus face values of a minmod-limited linear reconstruction. The first
// and last entries get a zero slope.
using MusclFn = void (*)(const double* v, std::size_t n, double* minus, double* plus);
using ReduceFn = double (*)(const double* a, const double* b, std::size_t n);

struct KernelSet {
  std::string_view name;
  FluxFn interface_flux;
  MusclFn muscl;
  ReduceFn sum_abs_diff;  // sum |a - b|
  ReduceFn sum_sq_diff;   // sum (a - b)^2
  ReduceFn max_abs_diff;  // max |a - b|
};

const KernelSet& scalar();
// nullptr when not compiled in or the CPU lacks AVX2.
const KernelSet* avx2();
// AVX2 when available unless SWBENCH_SIMD=scalar is set in the environment.
const KernelSet& active();

}  // namespace swb::kernels
