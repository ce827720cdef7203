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

#include "opuc/szego.hpp"

#include <cmath>

#include "opuc/kernels.hpp"

namespace opuc {

namespace {

void check_alpha(cplx a, std::size_t j) {
    if (!(std::abs(a) < 1.0)) {
        throw Error(Errc::invalid_parameter,
                    "|alpha_" + std::to_string(j) + "| >= 1 in Szego recursion");
    }
}

}  // namespace

PolyPair recurse(std::span<const cplx> alphas) {
    const std::size_t n = alphas.size();
    PolyPair out;
    out.n = n;
    out.phi.assign(n + 1, cplx(0.0));
    out.phi_star.assign(n + 1, cplx(0.0));
    out.phi[0] = 1.0;
    out.phi_star[0] = 1.0;
    CoeffVec next(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = alphas[k];
        check_alpha(a, k);
        const cplx ac = std::conj(a);
        // Phi_{k+1} = z Phi_k - conj(a) Phi_k^*; the reversed polynomial is
        // then rebuilt from the conjugate-reversal identity, which keeps it
        // exact rather than accumulating its own rounding.
        next[0] = -ac * out.phi_star[0];
        for (std::size_t i = 1; i <= k; ++i) {
            next[i] = out.phi[i - 1] - ac * out.phi_star[i];
        }
        next[k + 1] = 1.0;
        for (std::size_t i = 0; i <= k + 1; ++i) {
            out.phi[i] = next[i];
        }
        for (std::size_t i = 0; i <= k + 1; ++i) {
            out.phi_star[i] = std::conj(out.phi[k + 1 - i]);
        }
    }
    out.norm = norm_product(alphas);
    return out;
}

PolyPair recurse(const VerblunskySeq& seq, std::size_t n) {
    const auto a = seq.alphas(n);
    return recurse(std::span<const cplx>(a));
}

cplx horner(const CoeffVec& p, cplx z) {
    cplx s(0.0);
    for (std::size_t k = p.size(); k-- > 0;) {
        s = s * z + p[k];
    }
    return s;
}

double l1_norm(const CoeffVec& p) {
    double s = 0.0;
    for (const auto& c : p) {
        s += std::abs(c);
    }
    return s;
}

PointValue eval(const PolyPair& pair, cplx z) { return {horner(pair.phi, z), horner(pair.phi_star, z)}; }

PointValue recurse_pointwise(std::span<const cplx> alphas, cplx z) {
    cplx phi(1.0);
    cplx star(1.0);
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        const cplx a = alphas[k];
        check_alpha(a, k);
        const cplx zphi = z * phi;
        phi = zphi - std::conj(a) * star;
        star = star - a * zphi;
    }
    return {phi, star};
}

PointValue recurse_pointwise(const VerblunskySeq& seq, std::size_t n, cplx z) {
    cplx phi(1.0);
    cplx star(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = seq.alpha(k);
        const cplx zphi = z * phi;
        phi = zphi - std::conj(a) * star;
        star = star - a * zphi;
    }
    return {phi, star};
}

PointDerivative recurse_pointwise_derivative(std::span<const cplx> alphas, cplx z) {
    cplx phi(1.0), star(1.0), dphi(0.0), dstar(0.0);
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        const cplx a = alphas[k];
        check_alpha(a, k);
        const cplx zphi = z * phi;
        const cplx dzphi = phi + z * dphi;
        phi = zphi - std::conj(a) * star;
        dphi = dzphi - std::conj(a) * dstar;
        star = star - a * zphi;
        dstar = dstar - a * dzphi;
    }
    return {{phi, star}, dphi, dstar};
}

std::vector<PointValue> recurse_pointwise_batch(std::span<const cplx> alphas,
                                                std::span<const cplx> zs) {
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        check_alpha(alphas[k], k);
    }
    const std::size_t m = zs.size();
    std::vector<double> zr(m), zi(m), pr(m), pi(m), sr(m), si(m);
    for (std::size_t i = 0; i < m; ++i) {
        zr[i] = zs[i].real();
        zi[i] = zs[i].imag();
    }
    kernels::szego_batch(alphas.data(), alphas.size(), zr.data(), zi.data(), m, pr.data(),
                         pi.data(), sr.data(), si.data());
    std::vector<PointValue> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = {{pr[i], pi[i]}, {sr[i], si[i]}};
    }
    return out;
}

double norm_product(std::span<const cplx> alphas) {
    // sum of log(1 - |a|^2)/2 via log1p keeps tiny alphas exact
    double s = 0.0;
    for (const auto& a : alphas) {
        s += 0.5 * std::log1p(-std::norm(a));
    }
    return std::exp(s);
}

double orthonormal_scale(const PolyPair& pair) { return pair.norm; }

CoeffVec reverse_poly(const CoeffVec& p) {
    const std::size_t n = p.size();
    CoeffVec r(n);
    for (std::size_t k = 0; k < n; ++k) {
        r[k] = std::conj(p[n - 1 - k]);
    }
    return r;
}

}  // namespace opuc
