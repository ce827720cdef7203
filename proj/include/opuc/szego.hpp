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

/// Monic pair (Phi_n, Phi_n^*) with ascending coefficients and the norm
/// ||Phi_n|| = prod_{j<n} rho_j.
struct PolyPair {
    std::size_t n = 0;
    CoeffVec phi;
    CoeffVec phi_star;
    double norm = 1.0;
};

struct PointValue {
    cplx phi;
    cplx phi_star;
};

/// Coefficient-space Szego recursion up to degree n.
PolyPair recurse(const VerblunskySeq& seq, std::size_t n);
PolyPair recurse(std::span<const cplx> alphas);

PointValue eval(const PolyPair& pair, cplx z);

/// O(n) time, O(1) memory evaluation of (Phi_n(z), Phi_n^*(z)).
PointValue recurse_pointwise(const VerblunskySeq& seq, std::size_t n, cplx z);
PointValue recurse_pointwise(std::span<const cplx> alphas, cplx z);

struct PointDerivative {
    PointValue value;
    cplx dphi;
    cplx dphi_star;
};

/// Pointwise recursion carrying d/dz alongside the values.
PointDerivative recurse_pointwise_derivative(std::span<const cplx> alphas, cplx z);

/// Batched pointwise recursion (SIMD kernel); returns values for every z.
std::vector<PointValue> recurse_pointwise_batch(std::span<const cplx> alphas,
                                                std::span<const cplx> zs);

double orthonormal_scale(const PolyPair& pair);
/// prod_{j<n} rho_j from the coefficients directly.
double norm_product(std::span<const cplx> alphas);

/// z^n conj(p(1/conj z)) for a degree-n coefficient vector.
CoeffVec reverse_poly(const CoeffVec& p);

/// Plain Horner evaluation.
cplx horner(const CoeffVec& p, cplx z);

/// sum_k |c_k|.
double l1_norm(const CoeffVec& p);

}  // namespace opuc
