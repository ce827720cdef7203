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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "opuc/kernels.hpp"

namespace opuc::kernels {

namespace detail {
#ifndef OPUC_HAVE_AVX2
const Table* avx2_table() { return nullptr; }
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(OPUC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() {
    const bool avx2 = cpu_has_avx2() && detail::avx2_table() != nullptr;
    if (const char* env = std::getenv("OPUC_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) {
            return Backend::Scalar;
        }
    }
    return avx2 ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<const detail::Table*>& current() {
    static std::atomic<const detail::Table*> table{initial_backend() == Backend::Avx2
                                                       ? detail::avx2_table()
                                                       : &detail::scalar_table()};
    return table;
}

const detail::Table& table() { return *current().load(std::memory_order_relaxed); }

}  // namespace

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() { return cpu_has_avx2() && detail::avx2_table() != nullptr; }

Backend active_backend() {
    return current().load() == &detail::scalar_table() ? Backend::Scalar : Backend::Avx2;
}

void set_backend(Backend b) {
    if (b == Backend::Avx2) {
        if (!avx2_available()) {
            throw Error(Errc::invalid_parameter, "AVX2 kernels are not available on this CPU");
        }
        current().store(detail::avx2_table());
    } else {
        current().store(&detail::scalar_table());
    }
}

void szego_batch(const cplx* alpha, std::size_t n_alpha, const double* zre, const double* zim,
                 std::size_t m, double* phi_re, double* phi_im, double* star_re,
                 double* star_im) {
    table().szego_batch(alpha, n_alpha, zre, zim, m, phi_re, phi_im, star_re, star_im);
}

void pop_phase_batch(const cplx* alpha, std::size_t n_alpha, double beta_arg,
                     const double* theta, std::size_t m, double* eta) {
    table().pop_phase_batch(alpha, n_alpha, beta_arg, theta, m, eta);
}

cplx aberth_sum(const double* re, const double* im, std::size_t n, std::size_t i) {
    return table().aberth_sum(re, im, n, i);
}

void sturm_count_batch(const double* diag, const double* off2, std::size_t n, const double* x,
                       std::size_t m, int* counts) {
    table().sturm_count_batch(diag, off2, n, x, m, counts);
}

}  // namespace opuc::kernels
