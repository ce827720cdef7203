// Copyright 2026-present the opuc project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2 -mfma; only reached through the dispatch table after a
// CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "opuc/kernels.hpp"

namespace opuc::kernels::detail {
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void szego_batch_avx2(const cplx* alpha, std::size_t n_alpha, const double* zre,
                      const double* zim, std::size_t m, double* phi_re, double* phi_im,
                      double* star_re, double* star_im) {
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d zr = _mm256_loadu_pd(zre + i);
        const __m256d zi = _mm256_loadu_pd(zim + i);
        __m256d pr = _mm256_set1_pd(1.0);
        __m256d pi = _mm256_setzero_pd();
        __m256d sr = _mm256_set1_pd(1.0);
        __m256d si = _mm256_setzero_pd();
        for (std::size_t k = 0; k < n_alpha; ++k) {
            const __m256d ar = _mm256_set1_pd(alpha[k].real());
            const __m256d ai = _mm256_set1_pd(alpha[k].imag());
            // q = z * phi
            const __m256d qr = _mm256_fmsub_pd(zr, pr, _mm256_mul_pd(zi, pi));
            const __m256d qi = _mm256_fmadd_pd(zr, pi, _mm256_mul_pd(zi, pr));
            // phi = q - conj(a) * star
            pr = _mm256_sub_pd(qr, _mm256_fmadd_pd(ar, sr, _mm256_mul_pd(ai, si)));
            pi = _mm256_sub_pd(qi, _mm256_fmsub_pd(ar, si, _mm256_mul_pd(ai, sr)));
            // star = star - a * q
            sr = _mm256_sub_pd(sr, _mm256_fmsub_pd(ar, qr, _mm256_mul_pd(ai, qi)));
            si = _mm256_sub_pd(si, _mm256_fmadd_pd(ar, qi, _mm256_mul_pd(ai, qr)));
        }
        _mm256_storeu_pd(phi_re + i, pr);
        _mm256_storeu_pd(phi_im + i, pi);
        _mm256_storeu_pd(star_re + i, sr);
        _mm256_storeu_pd(star_im + i, si);
    }
    if (i < m) {
        scalar_table().szego_batch(alpha, n_alpha, zre + i, zim + i, m - i, phi_re + i,
                                   phi_im + i, star_re + i, star_im + i);
    }
}

// Winding-count form of the phase lift: the running product of the unit
// factors (1 - alpha_k b_k)/|.| is tracked together with the number of times
// it crosses the negative real axis, so only one atan2 per lane is needed.
void pop_phase_batch_avx2(const cplx* alpha, std::size_t n_alpha, double beta_arg,
                          const double* theta, std::size_t m, double* eta) {
    const double n = static_cast<double>(n_alpha + 1);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d three_half = _mm256_set1_pd(1.5);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        alignas(32) double c[4];
        alignas(32) double s[4];
        for (int l = 0; l < 4; ++l) {
            c[l] = std::cos(theta[i + l]);
            s[l] = std::sin(theta[i + l]);
        }
        const __m256d zr = _mm256_load_pd(c);
        const __m256d zi = _mm256_load_pd(s);
        __m256d br = zr;
        __m256d bi = zi;
        __m256d pr = one;
        __m256d pim = zero;
        __m256d wind = zero;
        for (std::size_t k = 0; k < n_alpha; ++k) {
            const __m256d ar = _mm256_set1_pd(alpha[k].real());
            const __m256d ai = _mm256_set1_pd(alpha[k].imag());
            // f = 1 - a b, u = f / |f|
            const __m256d fr = _mm256_sub_pd(one, _mm256_fmsub_pd(ar, br, _mm256_mul_pd(ai, bi)));
            const __m256d fi = _mm256_sub_pd(zero, _mm256_fmadd_pd(ar, bi, _mm256_mul_pd(ai, br)));
            const __m256d finv =
                _mm256_div_pd(one, _mm256_sqrt_pd(_mm256_fmadd_pd(fr, fr, _mm256_mul_pd(fi, fi))));
            const __m256d ur = _mm256_mul_pd(fr, finv);
            const __m256d ui = _mm256_mul_pd(fi, finv);
            // P <- P u with a crossing count of the negative real axis
            const __m256d nr = _mm256_fmsub_pd(pr, ur, _mm256_mul_pd(pim, ui));
            const __m256d ni = _mm256_fmadd_pd(pr, ui, _mm256_mul_pd(pim, ur));
            const __m256d left = _mm256_cmp_pd(nr, zero, _CMP_LT_OQ);
            const __m256d was_up = _mm256_cmp_pd(pim, zero, _CMP_GE_OQ);
            const __m256d now_up = _mm256_cmp_pd(ni, zero, _CMP_GE_OQ);
            const __m256d ccw = _mm256_and_pd(left, _mm256_andnot_pd(now_up, was_up));
            const __m256d cw = _mm256_and_pd(left, _mm256_andnot_pd(was_up, now_up));
            wind = _mm256_add_pd(wind, _mm256_and_pd(ccw, one));
            wind = _mm256_sub_pd(wind, _mm256_and_pd(cw, one));
            const __m256d pscale =
                _mm256_fnmadd_pd(half, _mm256_fmadd_pd(nr, nr, _mm256_mul_pd(ni, ni)), three_half);
            pr = _mm256_mul_pd(nr, pscale);
            pim = _mm256_mul_pd(ni, pscale);
            // b <- z b conj(u)^2
            const __m256d cr = _mm256_fmsub_pd(ur, ur, _mm256_mul_pd(ui, ui));
            const __m256d ci = _mm256_mul_pd(_mm256_set1_pd(-2.0), _mm256_mul_pd(ur, ui));
            const __m256d tr = _mm256_fmsub_pd(br, cr, _mm256_mul_pd(bi, ci));
            const __m256d ti = _mm256_fmadd_pd(br, ci, _mm256_mul_pd(bi, cr));
            const __m256d vr = _mm256_fmsub_pd(zr, tr, _mm256_mul_pd(zi, ti));
            const __m256d vi = _mm256_fmadd_pd(zr, ti, _mm256_mul_pd(zi, tr));
            const __m256d bscale =
                _mm256_fnmadd_pd(half, _mm256_fmadd_pd(vr, vr, _mm256_mul_pd(vi, vi)), three_half);
            br = _mm256_mul_pd(vr, bscale);
            bi = _mm256_mul_pd(vi, bscale);
        }
        alignas(32) double w[4];
        alignas(32) double fr[4];
        alignas(32) double fi[4];
        _mm256_store_pd(w, wind);
        _mm256_store_pd(fr, pr);
        _mm256_store_pd(fi, pim);
        for (int l = 0; l < 4; ++l) {
            const double sum = kTwoPi * w[l] + std::atan2(fi[l], fr[l]);
            eta[i + l] = beta_arg + n * theta[i + l] - 2.0 * sum;
        }
    }
    if (i < m) {
        scalar_table().pop_phase_batch(alpha, n_alpha, beta_arg, theta + i, m - i, eta + i);
    }
}

inline void aberth_range(const double* re, const double* im, std::size_t lo, std::size_t hi,
                         double xr, double xi, __m256d& vr, __m256d& vi, double& sr,
                         double& si) {
    const __m256d x_r = _mm256_set1_pd(xr);
    const __m256d x_i = _mm256_set1_pd(xi);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t j = lo;
    for (; j + 4 <= hi; j += 4) {
        const __m256d dr = _mm256_sub_pd(x_r, _mm256_loadu_pd(re + j));
        const __m256d di = _mm256_sub_pd(x_i, _mm256_loadu_pd(im + j));
        const __m256d inv = _mm256_div_pd(one, _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di)));
        vr = _mm256_fmadd_pd(dr, inv, vr);
        vi = _mm256_fnmadd_pd(di, inv, vi);
    }
    for (; j < hi; ++j) {
        const double dr = xr - re[j];
        const double di = xi - im[j];
        const double inv = 1.0 / (dr * dr + di * di);
        sr += dr * inv;
        si -= di * inv;
    }
}

cplx aberth_sum_avx2(const double* re, const double* im, std::size_t n, std::size_t i) {
    __m256d vr = _mm256_setzero_pd();
    __m256d vi = _mm256_setzero_pd();
    double sr = 0.0;
    double si = 0.0;
    aberth_range(re, im, 0, i, re[i], im[i], vr, vi, sr, si);
    aberth_range(re, im, i + 1, n, re[i], im[i], vr, vi, sr, si);
    return {hsum(vr) + sr, hsum(vi) + si};
}

void sturm_count_batch_avx2(const double* diag, const double* off2, std::size_t n,
                            const double* x, std::size_t m, int* counts) {
    double emax = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        emax = std::max(emax, off2[k]);
    }
    const double pivmin_s = std::numeric_limits<double>::min() * emax;
    const __m256d pivmin = _mm256_set1_pd(pivmin_s);
    const __m256d neg_pivmin = _mm256_set1_pd(-pivmin_s);
    const __m256d sign = _mm256_set1_pd(-0.0);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        __m256d cnt = zero;
        __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), xv);
        __m256d small = _mm256_cmp_pd(_mm256_andnot_pd(sign, q), pivmin, _CMP_LT_OQ);
        q = _mm256_blendv_pd(q, neg_pivmin, small);
        cnt = _mm256_add_pd(cnt, _mm256_and_pd(_mm256_cmp_pd(q, zero, _CMP_LT_OQ), one));
        for (std::size_t k = 1; k < n; ++k) {
            const __m256d t = _mm256_div_pd(_mm256_set1_pd(off2[k - 1]), q);
            q = _mm256_sub_pd(_mm256_sub_pd(_mm256_set1_pd(diag[k]), xv), t);
            small = _mm256_cmp_pd(_mm256_andnot_pd(sign, q), pivmin, _CMP_LT_OQ);
            q = _mm256_blendv_pd(q, neg_pivmin, small);
            cnt = _mm256_add_pd(cnt, _mm256_and_pd(_mm256_cmp_pd(q, zero, _CMP_LT_OQ), one));
        }
        alignas(32) double c[4];
        _mm256_store_pd(c, cnt);
        for (int l = 0; l < 4; ++l) {
            counts[i + l] = static_cast<int>(c[l]);
        }
    }
    if (i < m) {
        scalar_table().sturm_count_batch(diag, off2, n, x + i, m - i, counts + i);
    }
}

}  // namespace

const Table* avx2_table() {
    static const Table t{szego_batch_avx2, pop_phase_batch_avx2, aberth_sum_avx2,
                         sturm_count_batch_avx2};
    return &t;
}

}  // namespace opuc::kernels::detail
