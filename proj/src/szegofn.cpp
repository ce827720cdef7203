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

#include "opuc/szegofn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail/continuation.hpp"
#include "opuc/szego.hpp"

namespace opuc {

namespace {

constexpr double kRadialStep = 0.005;
constexpr std::size_t kAngles = 720;
constexpr double kTailCap = 1e6;

std::vector<double> rhos(std::span<const cplx> alphas) {
    std::vector<double> rho(alphas.size());
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        const double a = std::abs(alphas[k]);
        if (!(a < 1.0)) {
            throw Error(Errc::invalid_parameter, "|alpha_" + std::to_string(k) + "| >= 1");
        }
        rho[k] = std::sqrt((1.0 - a) * (1.0 + a));
    }
    return rho;
}

void check_disk(const VerblunskySeq& seq, cplx z) {
    const double b = analyticity_b(seq);
    if (b * std::abs(z) > 1.0 - kDInverseMargin) {
        std::ostringstream os;
        os << "|z| = " << std::abs(z) << " outside the analyticity disk for b = " << b;
        throw Error(Errc::domain_error, os.str());
    }
}

}  // namespace

double analyticity_b(const VerblunskySeq& seq) {
    switch (seq.family()) {
        case Family::Constant:
            return seq.C() == cplx(0.0) ? 0.0 : 1.0;
        case Family::BLS:
            return seq.b();
        case Family::Explicit: {
            const auto& v = seq.values();
            double best = 0.0;
            for (std::size_t j = std::max<std::size_t>(1, v.size() / 2); j < v.size(); ++j) {
                const double a = std::abs(v[j]);
                if (a > 0.0) {
                    best = std::max(best, std::pow(a, 1.0 / static_cast<double>(j)));
                }
            }
            return best;
        }
        default:
            return 1.0;
    }
}

DInverse d_inverse(std::span<const cplx> alphas, cplx z) {
    const auto rho = rhos(alphas);
    const std::size_t n = alphas.size();
    const std::size_t half = n / 2;
    cplx phi(1.0);
    cplx star(1.0);
    cplx star_half(1.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == half) {
            star_half = star;
        }
        const cplx zphi = z * phi;
        const cplx next = (zphi - std::conj(alphas[k]) * star) / rho[k];
        star = (star - alphas[k] * zphi) / rho[k];
        phi = next;
    }
    if (half == n) {
        star_half = star;
    }
    return {star, std::abs(star - star_half), n};
}

DInverse d_inverse(const VerblunskySeq& seq, cplx z, std::size_t n) {
    check_disk(seq, z);
    const auto a = seq.alphas(n);
    return d_inverse(std::span<const cplx>(a), z);
}

std::vector<NevaiTotikZero> nevai_totik_zeros(std::span<const cplx> alphas, Annulus annulus) {
    if (!(annulus.r_min > 0.0) || !(annulus.r_max > annulus.r_min)) {
        throw Error(Errc::invalid_parameter, "annulus must satisfy 0 < r_min < r_max");
    }
    const auto nr = static_cast<std::size_t>(
                        std::floor((annulus.r_max - annulus.r_min) / kRadialStep + 1e-9)) +
                    1;
    std::vector<double> radii(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        radii[i] = annulus.r_min + kRadialStep * static_cast<double>(i);
    }
    if (radii.back() < annulus.r_max - 1e-12) {
        radii.push_back(annulus.r_max);
    }
    // Half-step angular offset keeps grid nodes off the real axis, where
    // zeros of real-coefficient families sit.
    std::vector<cplx> w;
    w.reserve(radii.size() * kAngles);
    for (double r : radii) {
        for (std::size_t j = 0; j < kAngles; ++j) {
            const double phi = kTwoPi * (static_cast<double>(j) + 0.5) / kAngles;
            w.push_back(std::polar(1.0 / r, phi));
        }
    }
    const auto vals = recurse_pointwise_batch(alphas, w);
    auto F = [&](std::size_t i, std::size_t j) { return vals[i * kAngles + j % kAngles].phi_star; };

    std::vector<NevaiTotikZero> out;
    for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
        for (std::size_t j = 0; j < kAngles; ++j) {
            const cplx c[4] = {F(i, j), F(i, j + 1), F(i + 1, j + 1), F(i + 1, j)};
            double turn = 0.0;
            for (int e = 0; e < 4; ++e) {
                turn += std::arg(c[(e + 1) % 4] / c[e]);
            }
            // The corner path runs counterclockwise in w = 1/conj z (|w|
            // shrinks as r grows), so a zero of order m of phi^* winds +m.
            const int m = static_cast<int>(std::lround(turn / kTwoPi));
            if (m <= 0) {
                continue;
            }
            const double rc = 0.5 * (radii[i] + radii[i + 1]);
            const double pc = kTwoPi * (static_cast<double>(j) + 1.0) / kAngles;
            cplx wk = std::polar(1.0 / rc, pc);
            for (int it = 0; it < 60; ++it) {
                const auto d = recurse_pointwise_derivative(alphas, wk);
                if (d.dphi_star == cplx(0.0)) {
                    break;
                }
                const cplx step = static_cast<double>(m) * d.value.phi_star / d.dphi_star;
                wk -= step;
                if (std::abs(step) <= 4e-16 * std::abs(wk)) {
                    break;
                }
            }
            const cplx z = 1.0 / std::conj(wk);
            const bool dup = std::any_of(out.begin(), out.end(), [&](const NevaiTotikZero& q) {
                return std::abs(q.z - z) < 1e-8;
            });
            if (!dup) {
                out.push_back({z, m});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const NevaiTotikZero& a, const NevaiTotikZero& b) {
        return std::arg(a.z) < std::arg(b.z) ||
               (std::arg(a.z) == std::arg(b.z) && std::abs(a.z) < std::abs(b.z));
    });
    return out;
}

std::vector<NevaiTotikZero> nevai_totik_zeros(const VerblunskySeq& seq, Annulus annulus,
                                              std::size_t n) {
    const double b = analyticity_b(seq);
    if (!(annulus.r_min > b) || !(annulus.r_max < 1.0)) {
        std::ostringstream os;
        os << "annulus (" << annulus.r_min << ", " << annulus.r_max << ") not inside (" << b
           << ", 1)";
        throw Error(Errc::domain_error, os.str());
    }
    const auto a = seq.alphas(n);
    return nevai_totik_zeros(std::span<const cplx>(a), annulus);
}

cplx d_inverse_pole_free(std::span<const cplx> alphas, cplx C, double b, cplx w) {
    std::size_t n = alphas.size();
    const double growth = b * std::abs(w);
    if (growth > 1.0) {
        n = std::min(n, static_cast<std::size_t>(std::log(kTailCap) / std::log(growth)));
    }
    const std::vector<cplx> a(alphas.begin(), alphas.begin() + static_cast<std::ptrdiff_t>(n));
    const auto rho = rhos(a);
    return detail::pole_free_d_inverse(a, rho, n, C, b, w);
}

cplx g_function(std::span<const cplx> alphas, cplx C, double b, cplx z) {
    const double ratio = std::abs(z) / b;
    if (!(ratio >= kGInner && ratio <= kGOuter)) {
        std::ostringstream os;
        os << "|z|/b = " << ratio << " outside [" << kGInner << ", " << kGOuter << "]";
        throw Error(Errc::domain_error, os.str());
    }
    // With w = 1/conj z and P(w) = (1 - b w) D^{-1}(w):
    // g(z) = -conj(C) D^{-1}(z) / (z conj(P(w))).
    const cplx w = 1.0 / std::conj(z);
    const cplx P = d_inverse_pole_free(alphas, C, b, w);
    const cplx dz = d_inverse(alphas, z).value;
    return -std::conj(C) * dz / (z * std::conj(P));
}

cplx g_function(const VerblunskySeq& seq, cplx z, std::size_t n) {
    if (seq.family() != Family::BLS) {
        throw Error(Errc::precondition, "g_function needs a BLS sequence");
    }
    const auto a = seq.alphas(n);
    return g_function(std::span<const cplx>(a), seq.C(), seq.b(), z);
}

}  // namespace opuc
