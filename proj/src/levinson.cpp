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

#include "opuc/levinson.hpp"

#include <cmath>
#include <sstream>

#include "opuc/szego.hpp"

namespace opuc {

WeightSpec WeightSpec::uniform() { return WeightSpec(); }

WeightSpec WeightSpec::rational(std::vector<RationalFactor> zeros,
                                std::vector<RationalFactor> poles) {
    for (const auto* list : {&zeros, &poles}) {
        for (const auto& f : *list) {
            if (!(std::abs(f.point) > 1.0) || f.order < 1) {
                throw Error(Errc::invalid_parameter,
                            "rational weight factors need |point| > 1 and order >= 1");
            }
        }
    }
    WeightSpec w;
    w.kind_ = Kind::Rational;
    w.zeros_ = std::move(zeros);
    w.poles_ = std::move(poles);
    return w;
}

WeightSpec WeightSpec::bernstein_szego(std::vector<cplx> alphas) {
    for (const auto& a : alphas) {
        if (!(std::abs(a) < 1.0)) {
            throw Error(Errc::invalid_parameter, "Bernstein-Szego weight needs |alpha| < 1");
        }
    }
    WeightSpec w;
    w.kind_ = Kind::BernsteinSzego;
    w.alphas_ = std::move(alphas);
    return w;
}

WeightSpec WeightSpec::sampled(std::vector<double> values) {
    if (values.empty()) {
        throw Error(Errc::invalid_parameter, "sampled weight is empty");
    }
    WeightSpec w;
    w.kind_ = Kind::Sampled;
    w.values_ = std::move(values);
    return w;
}

std::vector<double> WeightSpec::sample(std::size_t M) const {
    std::vector<double> out(M);
    if (kind_ == Kind::Sampled) {
        if (values_.size() != M) {
            throw Error(Errc::resolution, "sampled weight has " + std::to_string(values_.size()) +
                                              " points, grid needs " + std::to_string(M));
        }
        out = values_;
    } else if (kind_ == Kind::Uniform) {
        std::fill(out.begin(), out.end(), 1.0);
    } else if (kind_ == Kind::BernsteinSzego) {
        const double norm2 = std::pow(norm_product(alphas_), 2);
        for (std::size_t m = 0; m < M; ++m) {
            const cplx z = std::polar(1.0, kTwoPi * static_cast<double>(m) / M);
            out[m] = norm2 / std::norm(recurse_pointwise(alphas_, z).phi);
        }
    } else {
        for (std::size_t m = 0; m < M; ++m) {
            const cplx z = std::polar(1.0, kTwoPi * static_cast<double>(m) / M);
            double v = 1.0;
            for (const auto& f : zeros_) {
                v *= std::pow(std::norm(z - f.point), f.order);
            }
            for (const auto& f : poles_) {
                v /= std::pow(std::norm(z - f.point), f.order);
            }
            out[m] = v;
        }
    }
    for (std::size_t m = 0; m < M; ++m) {
        if (!(out[m] > 0.0) || !std::isfinite(out[m])) {
            throw Error(Errc::positivity_failure,
                        "weight not positive at grid point " + std::to_string(m));
        }
    }
    return out;
}

std::vector<cplx> moments(const WeightSpec& spec, std::size_t k_max, std::size_t M) {
    if (M < 8 * k_max || M == 0) {
        std::ostringstream os;
        os << "grid M = " << M << " too small for k_max = " << k_max << " (need M >= 8 k_max)";
        throw Error(Errc::resolution, os.str());
    }
    const auto w = spec.sample(M);
    double mean = 0.0;
    for (double v : w) {
        mean += v;
    }
    mean /= static_cast<double>(M);
    // Summing the mean-free part keeps c_k (k >= 1) exactly zero for a
    // constant weight instead of leaving roots-of-unity rounding behind.
    std::vector<double> dev(M);
    for (std::size_t m = 0; m < M; ++m) {
        dev[m] = w[m] - mean;
    }
    std::vector<cplx> twiddle(M);
    for (std::size_t m = 0; m < M; ++m) {
        twiddle[m] = std::polar(1.0, -kTwoPi * static_cast<double>(m) / M);
    }
    std::vector<cplx> c(k_max + 1);
    c[0] = 1.0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        cplx s(0.0);
        for (std::size_t m = 0; m < M; ++m) {
            s += dev[m] * twiddle[(k * m) % M];
        }
        c[k] = s / (static_cast<double>(M) * mean);
    }
    return c;
}

std::vector<cplx> verblunsky_from_moments(std::span<const cplx> c, std::size_t n) {
    if (c.size() < n + 1) {
        throw Error(Errc::invalid_parameter, "need moments c_0..c_n");
    }
    if (!(c[0].real() > 0.0)) {
        throw Error(Errc::positivity_failure, "c_0 must be positive");
    }
    std::vector<cplx> alpha(n);
    CoeffVec phi{1.0};
    double E = c[0].real();
    for (std::size_t k = 0; k < n; ++k) {
        cplx s(0.0);
        for (std::size_t j = 0; j <= k; ++j) {
            s += phi[j] * std::conj(c[j + 1]);
        }
        const cplx a = std::conj(s / E);
        const double a2 = std::norm(a);
        if (!(a2 < 1.0)) {
            std::ostringstream os;
            os << "|alpha_" << k << "| = " << std::sqrt(a2) << " (moment matrix not positive)";
            throw Error(Errc::positivity_failure, os.str());
        }
        alpha[k] = a;
        CoeffVec next(k + 2, cplx(0.0));
        for (std::size_t j = 0; j <= k; ++j) {
            next[j + 1] += phi[j];
            next[j] -= std::conj(a) * std::conj(phi[k - j]);
        }
        phi = std::move(next);
        E *= (1.0 - a2);
        if (!(E > 0.0)) {
            throw Error(Errc::positivity_failure, "prediction error vanished at step " +
                                                      std::to_string(k));
        }
    }
    return alpha;
}

VerblunskySeq levinson_sequence(const WeightSpec& spec, std::size_t n, std::size_t M) {
    const auto c = moments(spec, n, M);
    return VerblunskySeq::explicit_list(verblunsky_from_moments(c, n));
}

WeightSpec prescribed_singularities(double b, std::vector<RationalFactor> d_inverse_zeros) {
    if (!(b > 0.0 && b < 1.0)) {
        throw Error(Errc::invalid_parameter, "b must lie in (0, 1)");
    }
    // f = D: its zeros are poles of D^{-1} and vice versa.
    return WeightSpec::rational({{cplx(1.0 / b, 0.0), 1}}, std::move(d_inverse_zeros));
}

cplx estimate_bls_constant(std::span<const cplx> alphas, double b, std::size_t tail) {
    if (alphas.empty() || tail == 0) {
        throw Error(Errc::invalid_parameter, "need at least one coefficient");
    }
    tail = std::min(tail, alphas.size());
    cplx s(0.0);
    for (std::size_t j = alphas.size() - tail; j < alphas.size(); ++j) {
        s += alphas[j] * std::pow(b, -static_cast<double>(j));
    }
    return s / static_cast<double>(tail);
}

}  // namespace opuc
