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

#pragma once

#include <cstddef>

#include "opuc/common.hpp"

// Inner loops shared by the zero finders. Each entry point has a scalar
// reference and, on x86-64, an AVX2/FMA variant chosen at first use from
// CPUID. OPUC_KERNELS=scalar|avx2 in the environment overrides the choice.
namespace opuc::kernels {

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);
bool avx2_available();
Backend active_backend();
/// Throws invalid_parameter if the backend is not available on this CPU.
void set_backend(Backend b);

/**
 * Pointwise Szego recursion at m points z_i = (zre[i], zim[i]).
 * On return (phi, star) hold (Phi_n(z_i), Phi_n^*(z_i)) with n = n_alpha.
 */
void szego_batch(const cplx* alpha, std::size_t n_alpha, const double* zre, const double* zim,
                 std::size_t m, double* phi_re, double* phi_im, double* star_re,
                 double* star_im);

/**
 * Lifted paraorthogonal phase eta(theta) = arg(beta) + n theta - 2 S(theta),
 * where S is the continuous sum of arg(1 - alpha_k b_k) along the Prufer-type
 * orbit b_0 = e^{i theta}, b_{k+1} = e^{i theta} b_k (1 - conj(alpha_k b_k)) /
 * (1 - alpha_k b_k). n_alpha = n - 1 coefficients are consumed.
 */
void pop_phase_batch(const cplx* alpha, std::size_t n_alpha, double beta_arg,
                     const double* theta, std::size_t m, double* eta);

/// sum_{j != i} 1 / (z_i - z_j) over the split re/im arrays.
cplx aberth_sum(const double* re, const double* im, std::size_t n, std::size_t i);

/**
 * Sturm counts: counts[i] = number of eigenvalues of the symmetric
 * tridiagonal matrix (diag, off^2) strictly below x[i].
 */
void sturm_count_batch(const double* diag, const double* off2, std::size_t n, const double* x,
                       std::size_t m, int* counts);

namespace detail {

struct Table {
    void (*szego_batch)(const cplx*, std::size_t, const double*, const double*, std::size_t,
                        double*, double*, double*, double*);
    void (*pop_phase_batch)(const cplx*, std::size_t, double, const double*, std::size_t,
                            double*);
    cplx (*aberth_sum)(const double*, const double*, std::size_t, std::size_t);
    void (*sturm_count_batch)(const double*, const double*, std::size_t, const double*,
                              std::size_t, int*);
};

const Table& scalar_table();
const Table* avx2_table();  // nullptr when not compiled in

}  // namespace detail

}  // namespace opuc::kernels
