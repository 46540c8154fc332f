#include <algorithm>
#include <cmath>

#include "reference.hpp"

namespace swb::kernels {

namespace {

void flux(const FluxArgs& a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) ref::interface_flux(a, i);
}

void muscl(const double* v, std::size_t n, double* minus, double* plus) {
  if (n == 0) return;
  minus[0] = plus[0] = v[0];
  for (std::size_t i = 1; i + 1 < n; ++i) ref::muscl_cell(v, i, minus, plus);
  minus[n - 1] = plus[n - 1] = v[n - 1];
}

double sum_abs(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

double sum_sq(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double max_abs(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

const KernelSet& scalar() {
  static const KernelSet set{"scalar", flux, muscl, sum_abs, sum_sq, max_abs};
  return set;
}

}  // namespace swb::kernels
