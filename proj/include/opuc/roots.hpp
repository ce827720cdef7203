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
#include <vector>

#include "opuc/common.hpp"
#include "opuc/szego.hpp"

namespace opuc {

struct RootOptions {
    double tol = 1e-12;             // residual tolerance relative to ||p||_1
    int max_iter = 200;
    double cluster_radius = 1e-6;
};

/**
 * Zeros of a polynomial sorted by principal argument in [0, 2pi), ties by
 * modulus. clusters lists index groups closer than the cluster radius; they
 * are reported, never merged.
 */
struct ZeroSet {
    std::vector<cplx> zeros;
    std::vector<double> residuals;  // |p(z)| / max(1, |z|)^n
    std::vector<std::vector<std::size_t>> clusters;
    double coeff_norm = 0.0;
    int iterations = 0;

    std::size_t size() const { return zeros.size(); }
    double max_residual() const;
    double modulus(std::size_t i) const;
    double argument(std::size_t i) const;  // in [0, 2pi)
};

/// Principal argument mapped to [0, 2pi).
double arg_2pi(cplx z);

struct CompensatedValue {
    cplx value;     // p(z) with compensated (doubled-precision) Horner
    cplx deriv;     // p'(z), plain Horner
    double absbound;  // sum |c_k| |z|^k
};

CompensatedValue horner_compensated(const CoeffVec& p, cplx z);

/// Aberth-Ehrlich simultaneous iteration on a monic polynomial.
ZeroSet find_roots(const CoeffVec& coeffs, const RootOptions& opts = {});

/// Newton polish with linear-convergence (multiple root) detection.
cplx refine_root(const CoeffVec& coeffs, cplx z0, int max_iter = 100);

/// Zeros of Phi_n with the OPUC containment check |z| < 1 + 1e-9.
ZeroSet opuc_zeros(const PolyPair& pair, const RootOptions& opts = {});

/// Coefficients of prod (z - z_j).
CoeffVec expand_roots(const std::vector<cplx>& zeros);

/// Hausdorff distance between two finite point sets.
double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace opuc
