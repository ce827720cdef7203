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

#include <algorithm>
#include <cmath>
#include <limits>

#include "opuc/kernels.hpp"

namespace opuc::kernels::detail {
namespace {

void szego_batch_scalar(const cplx* alpha, std::size_t n_alpha, const double* zre,
                        const double* zim, std::size_t m, double* phi_re, double* phi_im,
                        double* star_re, double* star_im) {
    for (std::size_t i = 0; i < m; ++i) {
        const cplx z(zre[i], zim[i]);
        cplx phi(1.0, 0.0);
        cplx star(1.0, 0.0);
        for (std::size_t k = 0; k < n_alpha; ++k) {
            const cplx zphi = z * phi;
            phi = zphi - std::conj(alpha[k]) * star;
            star = star - alpha[k] * zphi;
        }
        phi_re[i] = phi.real();
        phi_im[i] = phi.imag();
        star_re[i] = star.real();
        star_im[i] = star.imag();
    }
}

void pop_phase_batch_scalar(const cplx* alpha, std::size_t n_alpha, double beta_arg,
                            const double* theta, std::size_t m, double* eta) {
    const double n = static_cast<double>(n_alpha + 1);
    for (std::size_t i = 0; i < m; ++i) {
        const cplx z = std::polar(1.0, theta[i]);
        cplx b = z;
        double s = 0.0;
        for (std::size_t k = 0; k < n_alpha; ++k) {
            const cplx f = 1.0 - alpha[k] * b;
            s += std::atan2(f.imag(), f.real());
            const cplx u = std::conj(f) / f;
            b = z * b * u;
            b /= std::abs(b);
        }
        eta[i] = beta_arg + n * theta[i] - 2.0 * s;
    }
}

cplx aberth_sum_scalar(const double* re, const double* im, std::size_t n, std::size_t i) {
    double sr = 0.0;
    double si = 0.0;
    const double xr = re[i];
    const double xi = im[i];
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) {
            continue;
        }
        const double dr = xr - re[j];
        const double di = xi - im[j];
        const double inv = 1.0 / (dr * dr + di * di);
        sr += dr * inv;
        si -= di * inv;
    }
    return {sr, si};
}

void sturm_count_batch_scalar(const double* diag, const double* off2, std::size_t n,
                              const double* x, std::size_t m, int* counts) {
    double emax = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        emax = std::max(emax, off2[k]);
    }
    const double pivmin = std::numeric_limits<double>::min() * emax;
    for (std::size_t i = 0; i < m; ++i) {
        int c = 0;
        double q = diag[0] - x[i];
        if (std::abs(q) < pivmin) {
            q = -pivmin;
        }
        c += q < 0.0;
        for (std::size_t k = 1; k < n; ++k) {
            q = diag[k] - x[i] - off2[k - 1] / q;
            if (std::abs(q) < pivmin) {
                q = -pivmin;
            }
            c += q < 0.0;
        }
        counts[i] = c;
    }
}

}  // namespace

const Table& scalar_table() {
    static const Table t{szego_batch_scalar, pop_phase_batch_scalar, aberth_sum_scalar,
                         sturm_count_batch_scalar};
    return t;
}

}  // namespace opuc::kernels::detail
