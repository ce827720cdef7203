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
#include <span>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/seq.hpp"

namespace opuc {

/// phi_n^*(z) as an approximation of D(z)^{-1}, with |phi_n^* - phi_{n/2}^*|
/// as the reported uncertainty.
struct DInverse {
    cplx value;
    double error_estimate = 0.0;
    std::size_t n_used = 0;
};

/**
 * Decay rate b used for domain checks: exact for Constant and BLS, the
 * running root estimate over the second half of an Explicit list, and 1 for
 * the random and power-decay families.
 */
double analyticity_b(const VerblunskySeq& seq);

/// Relative margin: d_inverse requires b |z| <= 1 - kDInverseMargin.
inline constexpr double kDInverseMargin = 0.02;

DInverse d_inverse(const VerblunskySeq& seq, cplx z, std::size_t n);
/// No domain check; n = alphas.size().
DInverse d_inverse(std::span<const cplx> alphas, cplx z);

struct Annulus {
    double r_min;
    double r_max;
};

struct NevaiTotikZero {
    cplx z;
    int multiplicity;
};

/**
 * Zeros of z -> conj(D^{-1}(1/conj z)) in the annulus, from phi_n^*.
 * Polar grid (radial step 0.005, 720 angles), argument winding per cell,
 * then Newton with the detected multiplicity in w = 1/conj z.
 */
std::vector<NevaiTotikZero> nevai_totik_zeros(const VerblunskySeq& seq, Annulus annulus,
                                              std::size_t n);
std::vector<NevaiTotikZero> nevai_totik_zeros(std::span<const cplx> alphas, Annulus annulus);

/**
 * (1 - b w) D^{-1}(w) for alpha_j ~ C b^j, valid past |w| = 1/b.
 * The terms are truncated at the n where (b |w|)^n reaches 1e6.
 */
cplx d_inverse_pole_free(std::span<const cplx> alphas, cplx C, double b, cplx w);

/// Annulus for g, in units of b.
inline constexpr double kGInner = 0.8;
inline constexpr double kGOuter = 1.25;

/**
 * g(z) = conj(C) conj(D(1/conj z)) / (D(z) (b - z)), regular at z = b where
 * it equals 1. Requires a BLS sequence; n coefficients are used.
 */
cplx g_function(const VerblunskySeq& seq, cplx z, std::size_t n = 400);
cplx g_function(std::span<const cplx> alphas, cplx C, double b, cplx z);

}  // namespace opuc
