#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "swbench/core/constants.hpp"
#include "swbench/kernels.hpp"

// Scalar reference formulas. The AVX2 variants mirror these operation by
// operation, including the operand order of min/max.
namespace swb::kernels::ref {

inline constexpr double kHalfG = 0.5 * kGravity;

inline void interface_flux(const FluxArgs& a, std::size_t i) {
  const double hl = a.hl[i], ul = a.ul[i], zl = a.zl[i];
  const double hr = a.hr[i], ur = a.ur[i], zr = a.zr[i];
  // Hydrostatic reconstruction.
  const double zm = std::max(zl, zr);
  const double hls = std::max(hl + zl - zm, 0.0);
  const double hrs = std::max(hr + zr - zm, 0.0);
  const bool dry_l = hls <= kDryThreshold;
  const bool dry_r = hrs <= kDryThreshold;

  double fh = 0.0, fq = 0.0, smax = 0.0;
  if (!(dry_l && dry_r)) {
    const double cl = std::sqrt(kGravity * hls);
    const double cr = std::sqrt(kGravity * hrs);
    const double ql = hls * ul, qr = hrs * ur;
    const double fl1 = ql, fl2 = ql * ul + kHalfG * hls * hls;
    const double fr1 = qr, fr2 = qr * ur + kHalfG * hrs * hrs;
    double sl, sr;
    if (dry_l) {
      sl = ur - 2.0 * cr;
      sr = ur + cr;
    } else if (dry_r) {
      sl = ul - cl;
      sr = ul + 2.0 * cl;
    } else {
      sl = std::min(ul - cl, ur - cr);
      sr = std::max(ul + cl, ur + cr);
    }
    if ((hls == hrs && ul == ur) || sl >= 0.0) {
      fh = fl1;
      fq = fl2;
    } else if (sr <= 0.0) {
      fh = fr1;
      fq = fr2;
    } else {
      const double inv = 1.0 / (sr - sl);
      const double ss = sl * sr;
      fh = (sr * fl1 - sl * fr1 + ss * (hrs - hls)) * inv;
      fq = (sr * fl2 - sl * fr2 + ss * (qr - ql)) * inv;
    }
    smax = std::max(std::fabs(sl), std::fabs(sr));
  }
  a.fh[i] = fh;
  a.fq_left[i] = fq + kHalfG * (hl * hl - hls * hls);
  a.fq_right[i] = fq + kHalfG * (hr * hr - hrs * hrs);
  a.smax[i] = smax;
}

inline double minmod(double a, double b) {
  if (!(a * b > 0.0)) return 0.0;
  return a > 0.0 ? std::min(a, b) : std::max(a, b);
}

inline void muscl_cell(const double* v, std::size_t i, double* minus, double* plus) {
  const double s = minmod(v[i] - v[i - 1], v[i + 1] - v[i]);
  minus[i] = v[i] - 0.5 * s;
  plus[i] = v[i] + 0.5 * s;
}

}  // namespace swb::kernels::ref
