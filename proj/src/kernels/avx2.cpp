// Built with -mavx2 only; reached through kernels::avx2() after a CPU check.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "reference.hpp"

namespace swb::kernels {

namespace {

// _mm256_max_pd(b, a) returns exactly what std::max(a, b) returns (including
// the signed-zero tie), and likewise for min.
inline __m256d max_like_std(__m256d a, __m256d b) { return _mm256_max_pd(b, a); }
inline __m256d min_like_std(__m256d a, __m256d b) { return _mm256_min_pd(b, a); }

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

void flux(const FluxArgs& a, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d g = _mm256_set1_pd(kGravity);
  const __m256d half_g = _mm256_set1_pd(ref::kHalfG);
  const __m256d dry = _mm256_set1_pd(kDryThreshold);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d hl = _mm256_loadu_pd(a.hl + i), ul = _mm256_loadu_pd(a.ul + i), zl = _mm256_loadu_pd(a.zl + i);
    const __m256d hr = _mm256_loadu_pd(a.hr + i), ur = _mm256_loadu_pd(a.ur + i), zr = _mm256_loadu_pd(a.zr + i);

    const __m256d zm = max_like_std(zl, zr);
    const __m256d hls = max_like_std(_mm256_sub_pd(_mm256_add_pd(hl, zl), zm), zero);
    const __m256d hrs = max_like_std(_mm256_sub_pd(_mm256_add_pd(hr, zr), zm), zero);
    const __m256d dry_l = _mm256_cmp_pd(hls, dry, _CMP_LE_OQ);
    const __m256d dry_r = _mm256_cmp_pd(hrs, dry, _CMP_LE_OQ);

    const __m256d cl = _mm256_sqrt_pd(_mm256_mul_pd(g, hls));
    const __m256d cr = _mm256_sqrt_pd(_mm256_mul_pd(g, hrs));
    const __m256d ql = _mm256_mul_pd(hls, ul), qr = _mm256_mul_pd(hrs, ur);
    const __m256d fl1 = ql;
    const __m256d fl2 = _mm256_add_pd(_mm256_mul_pd(ql, ul), _mm256_mul_pd(_mm256_mul_pd(half_g, hls), hls));
    const __m256d fr1 = qr;
    const __m256d fr2 = _mm256_add_pd(_mm256_mul_pd(qr, ur), _mm256_mul_pd(_mm256_mul_pd(half_g, hrs), hrs));

    __m256d sl = min_like_std(_mm256_sub_pd(ul, cl), _mm256_sub_pd(ur, cr));
    __m256d sr = max_like_std(_mm256_add_pd(ul, cl), _mm256_add_pd(ur, cr));
    sl = _mm256_blendv_pd(sl, _mm256_sub_pd(ul, cl), dry_r);
    sr = _mm256_blendv_pd(sr, _mm256_add_pd(ul, _mm256_mul_pd(two, cl)), dry_r);
    sl = _mm256_blendv_pd(sl, _mm256_sub_pd(ur, _mm256_mul_pd(two, cr)), dry_l);
    sr = _mm256_blendv_pd(sr, _mm256_add_pd(ur, cr), dry_l);

    const __m256d inv = _mm256_div_pd(one, _mm256_sub_pd(sr, sl));
    const __m256d ss = _mm256_mul_pd(sl, sr);
    __m256d fh = _mm256_mul_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(sr, fl1), _mm256_mul_pd(sl, fr1)),
                      _mm256_mul_pd(ss, _mm256_sub_pd(hrs, hls))),
        inv);
    __m256d fq = _mm256_mul_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(sr, fl2), _mm256_mul_pd(sl, fr2)),
                      _mm256_mul_pd(ss, _mm256_sub_pd(qr, ql))),
        inv);
    const __m256d right = _mm256_cmp_pd(sr, zero, _CMP_LE_OQ);
    fh = _mm256_blendv_pd(fh, fr1, right);
    fq = _mm256_blendv_pd(fq, fr2, right);
    const __m256d left = _mm256_or_pd(
        _mm256_and_pd(_mm256_cmp_pd(hls, hrs, _CMP_EQ_OQ), _mm256_cmp_pd(ul, ur, _CMP_EQ_OQ)),
        _mm256_cmp_pd(sl, zero, _CMP_GE_OQ));
    fh = _mm256_blendv_pd(fh, fl1, left);
    fq = _mm256_blendv_pd(fq, fl2, left);
    __m256d smax = max_like_std(vabs(sl), vabs(sr));

    const __m256d both_dry = _mm256_and_pd(dry_l, dry_r);
    fh = _mm256_blendv_pd(fh, zero, both_dry);
    fq = _mm256_blendv_pd(fq, zero, both_dry);
    smax = _mm256_blendv_pd(smax, zero, both_dry);

    const __m256d corr_l = _mm256_mul_pd(half_g, _mm256_sub_pd(_mm256_mul_pd(hl, hl), _mm256_mul_pd(hls, hls)));
    const __m256d corr_r = _mm256_mul_pd(half_g, _mm256_sub_pd(_mm256_mul_pd(hr, hr), _mm256_mul_pd(hrs, hrs)));
    _mm256_storeu_pd(a.fh + i, fh);
    _mm256_storeu_pd(a.fq_left + i, _mm256_add_pd(fq, corr_l));
    _mm256_storeu_pd(a.fq_right + i, _mm256_add_pd(fq, corr_r));
    _mm256_storeu_pd(a.smax + i, smax);
  }
  for (; i < n; ++i) ref::interface_flux(a, i);
}

void muscl(const double* v, std::size_t n, double* minus, double* plus) {
  if (n == 0) return;
  minus[0] = plus[0] = v[0];
  const __m256d zero = _mm256_setzero_pd();
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 1;
  for (; i + 4 < n; i += 4) {
    const __m256d c = _mm256_loadu_pd(v + i);
    const __m256d da = _mm256_sub_pd(c, _mm256_loadu_pd(v + i - 1));
    const __m256d db = _mm256_sub_pd(_mm256_loadu_pd(v + i + 1), c);
    const __m256d same = _mm256_cmp_pd(_mm256_mul_pd(da, db), zero, _CMP_GT_OQ);
    const __m256d pos = _mm256_cmp_pd(da, zero, _CMP_GT_OQ);
    const __m256d pick = _mm256_blendv_pd(max_like_std(da, db), min_like_std(da, db), pos);
    const __m256d s = _mm256_mul_pd(half, _mm256_and_pd(same, pick));
    _mm256_storeu_pd(minus + i, _mm256_sub_pd(c, s));
    _mm256_storeu_pd(plus + i, _mm256_add_pd(c, s));
  }
  for (; i + 1 < n; ++i) ref::muscl_cell(v, i, minus, plus);
  if (n > 1) minus[n - 1] = plus[n - 1] = v[n - 1];
}

inline double hsum(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return (t[0] + t[1]) + (t[2] + t[3]);
}

double sum_abs(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, vabs(_mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i))));
  double s = hsum(acc);
  for (; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

double sum_sq(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double max_abs(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = max_like_std(acc, vabs(_mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i))));
  }
  alignas(32) double t[4];
  _mm256_store_pd(t, acc);
  double m = std::max(std::max(t[0], t[1]), std::max(t[2], t[3]));
  for (; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

const KernelSet& avx2_set() {
  static const KernelSet set{"avx2", flux, muscl, sum_abs, sum_sq, max_abs};
  return set;
}

}  // namespace swb::kernels
