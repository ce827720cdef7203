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

// Shared by the double-precision Szego-function evaluators and the
// multiprecision asymptotics checks. Cx is std::complex<double> or the
// multiprecision complex in detail/mp_complex.hpp; Real is its scalar type.

#include <cstddef>
#include <vector>

namespace opuc::detail {

template <class Cx>
struct OrthoValue {
    Cx phi;       // phi_n(z) (orthonormal)
    Cx phi_star;  // phi_n^*(z)
};

/// Orthonormal (phi_n, phi_n^*) at z; rho[k] = sqrt(1 - |alpha_k|^2) supplied.
template <class Cx, class Real>
OrthoValue<Cx> ortho_point(const std::vector<Cx>& alpha, const std::vector<Real>& rho,
                           std::size_t n, const Cx& z) {
    Cx phi(1);
    Cx star(1);
    for (std::size_t k = 0; k < n; ++k) {
        const Cx zphi = z * phi;
        const Cx next = (zphi - conj(alpha[k]) * star) / rho[k];
        star = (star - alpha[k] * zphi) / rho[k];
        phi = next;
    }
    return {phi, star};
}

/// Same, recording phi_n(z) for every n in `at` (ascending).
template <class Cx, class Real>
std::vector<Cx> ortho_phi_at(const std::vector<Cx>& alpha, const std::vector<Real>& rho,
                             const std::vector<std::size_t>& at, const Cx& z) {
    std::vector<Cx> out;
    out.reserve(at.size());
    Cx phi(1);
    Cx star(1);
    std::size_t next_at = 0;
    for (std::size_t k = 0; next_at < at.size(); ++k) {
        while (next_at < at.size() && at[next_at] == k) {
            out.push_back(phi);
            ++next_at;
        }
        if (next_at == at.size()) {
            break;
        }
        const Cx zphi = z * phi;
        const Cx nphi = (zphi - conj(alpha[k]) * star) / rho[k];
        star = (star - alpha[k] * zphi) / rho[k];
        phi = nphi;
    }
    return out;
}

/**
 * (1 - b w) D(w)^{-1} for alpha_k ~ C b^k, continued past |w| = 1/b.
 *
 * The increments phi_{k+1}^*(w) - phi_k^*(w) are, to leading order,
 * -C w conj(D^{-1}(1/conj w)) (b w)^k; summing that geometric tail in closed
 * form removes the pole at w = 1/b. The remainder is O((b^2 |w|)^n) for the
 * unperturbed family and O((b Delta |w|)^n) with a perturbation.
 */
template <class Cx, class Real>
Cx pole_free_d_inverse(const std::vector<Cx>& alpha, const std::vector<Real>& rho,
                       std::size_t n, const Cx& C, const Real& b, const Cx& w) {
    const Cx u = Cx(1) / conj(w);
    const Cx head = ortho_point(alpha, rho, n, w).phi_star;
    const Cx inner = ortho_point(alpha, rho, n, u).phi_star;
    Cx bw = w * b;
    Cx pw(1);
    // (b w)^n by repeated squaring
    std::size_t e = n;
    Cx base = bw;
    while (e > 0) {
        if (e & 1U) {
            pw = pw * base;
        }
        base = base * base;
        e >>= 1U;
    }
    return (Cx(1) - bw) * head - C * w * conj(inner) * pw;
}

}  // namespace opuc::detail
