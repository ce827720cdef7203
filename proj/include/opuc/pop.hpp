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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/seq.hpp"

namespace opuc {

/// Base sequence plus the boundary parameter beta (|beta| = 1). With a
/// beta_seed, beta_n is drawn uniformly on the circle per degree n.
struct PopSpec {
    VerblunskySeq base;
    cplx beta{1.0, 0.0};
    std::optional<std::uint64_t> beta_seed;

    PopSpec(VerblunskySeq seq, cplx beta_value);
    static PopSpec random_beta(VerblunskySeq seq, std::uint64_t seed);

    cplx beta_for(std::size_t n) const;
};

/// Phi_n^(beta) = z Phi_{n-1} - conj(beta) Phi_{n-1}^*.
CoeffVec pop_poly(const PopSpec& spec, std::size_t n);

/// Continuous phase eta_n on the grid; grid must be sorted in [0, 2pi) with
/// at least 4n points.
std::vector<double> eta_phase(const PopSpec& spec, std::size_t n,
                              std::span<const double> theta_grid);

/// eta_n(2pi) - eta_n(0).
double eta_winding(const PopSpec& spec, std::size_t n);

/// The n zero angles in [0, 2pi), increasing, each bracketed to 1e-12.
std::vector<double> pop_zeros_by_phase(const PopSpec& spec, std::size_t n);

/// Same, from explicit alpha_0..alpha_{n-2} and beta.
std::vector<double> pop_zeros_by_phase(std::span<const cplx> alphas, cplx beta);

}  // namespace opuc
