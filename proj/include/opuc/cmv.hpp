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
#include <optional>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/seq.hpp"

namespace opuc {

/// Upper-left N x N block of the CMV matrix, dense row-major.
struct CmvTruncation {
    std::size_t N = 0;
    std::vector<cplx> entries;

    cplx at(std::size_t row, std::size_t col) const { return entries[row * N + col]; }
};

/**
 * C^(N) = L^(N) M^(N) with L = diag(Theta_0, Theta_2, ...) and
 * M = diag(1, Theta_1, Theta_3, ...), Theta_j = [[conj a_j, rho_j], [rho_j, -a_j]].
 * A block cut by the truncation contributes only its (0,0) entry.
 * If last_override is set it replaces alpha_{N-1}; a unimodular value gives the
 * paraorthogonal (unitary) truncation.
 */
CmvTruncation build_truncation(const VerblunskySeq& seq, std::size_t N,
                               std::optional<cplx> last_override = std::nullopt);

inline constexpr std::size_t kCharPolyMaxN = 64;

/// det(zI - C) via Hessenberg reduction and the Hessenberg determinant recursion.
CoeffVec char_poly(const CmvTruncation& trunc);

/// m_k = Tr(C^k) / N for k = 1..k_max.
std::vector<cplx> normalized_moments(const CmvTruncation& trunc, std::size_t k_max);

/// Eigenvalues of the truncation (dense solver; cross-validation path).
std::vector<cplx> cmv_eigenvalues(const CmvTruncation& trunc);

}  // namespace opuc
