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

#include "opuc/oprl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "opuc/kernels.hpp"

namespace opuc {

namespace {

void check_jacobi_domain(double alpha, double beta) {
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        std::ostringstream os;
        os << "Jacobi parameters need alpha, beta > -1 (got " << alpha << ", " << beta << ")";
        throw Error(Errc::domain_error, os.str());
    }
}

// Monic Jacobi recurrence: P_{n+1} = (x - A_n) P_n - B_n P_{n-1}.
double jacobi_A(double al, double be, std::size_t n) {
    const double s = al + be;
    if (n == 0) {
        return (be - al) / (s + 2.0);
    }
    const double t = 2.0 * static_cast<double>(n) + s;
    return (be * be - al * al) / (t * (t + 2.0));
}

double jacobi_B(double al, double be, std::size_t n) {
    const double s = al + be;
    if (n == 1) {
        return 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    }
    const double nn = static_cast<double>(n);
    const double t = 2.0 * nn + s;
    return 4.0 * nn * (nn + al) * (nn + be) * (nn + s) / (t * t * (t + 1.0) * (t - 1.0));
}

double theta_of(double x, ThetaScale scale) {
    return std::acos(scale == ThetaScale::TwoCos ? x / 2.0 : x);
}

ThetaZeros split(const std::vector<double>& eig, ThetaScale scale) {
    const double edge = scale == ThetaScale::TwoCos ? 2.0 : 1.0;
    ThetaZeros out;
    out.scale = scale;
    for (auto it = eig.rbegin(); it != eig.rend(); ++it) {
        if (std::abs(*it) <= edge) {
            out.theta.push_back(theta_of(*it, scale));
        } else {
            out.outside.push_back(*it);
        }
    }
    std::sort(out.outside.begin(), out.outside.end());
    return out;
}

std::vector<double> sturm_eigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& off2) {
    const std::size_t n = diag.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t k = 0; k < n; ++k) {
        double r = 0.0;
        if (k > 0) {
            r += std::sqrt(off2[k - 1]);
        }
        if (k + 1 < n) {
            r += std::sqrt(off2[k]);
        }
        lo = std::min(lo, diag[k] - r);
        hi = std::max(hi, diag[k] + r);
    }
    const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    lo -= pad;
    hi += pad;
    std::vector<double> l(n, lo);
    std::vector<double> h(n, hi);
    std::vector<double> mid(n);
    std::vector<int> cnt(n);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double floor_abs = 1e-3 * eps * std::max(std::abs(lo), std::abs(hi));
    for (int it = 0; it < 200; ++it) {
        bool done = true;
        for (std::size_t k = 0; k < n; ++k) {
            mid[k] = 0.5 * (l[k] + h[k]);
            if (h[k] - l[k] > 2.0 * eps * std::max(std::abs(l[k]), std::abs(h[k])) + floor_abs &&
                mid[k] > l[k] && mid[k] < h[k]) {
                done = false;
            }
        }
        if (done) {
            break;
        }
        kernels::sturm_count_batch(diag.data(), off2.data(), n, mid.data(), n, cnt.data());
        for (std::size_t k = 0; k < n; ++k) {
            if (cnt[k] <= static_cast<int>(k)) {
                l[k] = mid[k];
            } else {
                h[k] = mid[k];
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t k = 0; k < n; ++k) {
        eig[k] = 0.5 * (l[k] + h[k]);
    }
    return eig;
}

}  // namespace

JacobiParams JacobiParams::free() { return JacobiParams(); }

JacobiParams JacobiParams::chebyshev_first() { return free().with_a(1, std::sqrt(2.0)); }

JacobiParams JacobiParams::jacobi(double alpha, double beta) {
    check_jacobi_domain(alpha, beta);
    JacobiParams p;
    p.base_ = Base::Jacobi;
    p.ja_ = alpha;
    p.jb_ = beta;
    p.scale_ = ThetaScale::Cos;
    return p;
}

JacobiParams JacobiParams::with_a(std::size_t n, double value) const {
    if (n == 0 || !(value > 0.0)) {
        throw Error(Errc::invalid_parameter, "a_n needs n >= 1 and a_n > 0");
    }
    JacobiParams p = *this;
    p.a_over_[n] = value;
    return p;
}

JacobiParams JacobiParams::with_b(std::size_t n, double value) const {
    if (n == 0 || !std::isfinite(value)) {
        throw Error(Errc::invalid_parameter, "b_n needs n >= 1 and a finite value");
    }
    JacobiParams p = *this;
    p.b_over_[n] = value;
    return p;
}

double JacobiParams::a(std::size_t n) const {
    if (n == 0) {
        throw Error(Errc::index_out_of_range, "a_n is indexed from 1");
    }
    if (auto it = a_over_.find(n); it != a_over_.end()) {
        return it->second;
    }
    return base_ == Base::Free ? 1.0 : std::sqrt(jacobi_B(ja_, jb_, n));
}

double JacobiParams::b(std::size_t n) const {
    if (n == 0) {
        throw Error(Errc::index_out_of_range, "b_n is indexed from 1");
    }
    if (auto it = b_over_.find(n); it != b_over_.end()) {
        return it->second;
    }
    return base_ == Base::Free ? 0.0 : jacobi_A(ja_, jb_, n - 1);
}

double JacobiParams::perturbation_sum(std::size_t n_max) const {
    double s = 0.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        s += static_cast<double>(n) * (std::abs(a(n) - 1.0) + std::abs(b(n)));
    }
    return s;
}

std::vector<double> oprl_recurse(const JacobiParams& params, std::size_t n) {
    std::vector<double> prev;      // P_{k-1}
    std::vector<double> cur{1.0};  // P_k
    for (std::size_t k = 0; k < n; ++k) {
        const double bk = params.b(k + 1);
        std::vector<double> next(k + 2, 0.0);
        for (std::size_t j = 0; j <= k; ++j) {
            next[j + 1] += cur[j];
            next[j] -= bk * cur[j];
        }
        if (k > 0) {
            const double a2 = params.a(k) * params.a(k);
            if (!(a2 > 0.0)) {
                throw Error(Errc::invalid_parameter, "a_n must be positive");
            }
            for (std::size_t j = 0; j < prev.size(); ++j) {
                next[j] -= a2 * prev[j];
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<double> jacobi_eigenvalues(const JacobiParams& params, std::size_t n) {
    if (n == 0) {
        throw Error(Errc::invalid_parameter, "n must be at least 1");
    }
    std::vector<double> diag(n);
    std::vector<double> off2(n > 1 ? n - 1 : 0);
    for (std::size_t k = 0; k < n; ++k) {
        diag[k] = params.b(k + 1);
        if (k + 1 < n) {
            const double a = params.a(k + 1);
            if (!(a > 0.0)) {
                throw Error(Errc::invalid_parameter, "a_n must be positive");
            }
            off2[k] = a * a;
        }
    }
    return sturm_eigenvalues(diag, off2);
}

ThetaZeros oprl_zeros(const JacobiParams& params, std::size_t n) {
    return split(jacobi_eigenvalues(params, n), params.scale());
}

ResonanceFit resonance_scaling(const JacobiParams& params, std::span<const std::size_t> n_list) {
    if (n_list.size() < 2) {
        throw Error(Errc::invalid_parameter, "resonance fit needs at least two n values");
    }
    ResonanceFit fit{};
    // Normal equations for y = L + c u with u = 1/n.
    double su = 0.0, suu = 0.0, sy = 0.0, suy = 0.0;
    for (std::size_t n : n_list) {
        const auto z = oprl_zeros(params, n);
        if (z.theta.empty()) {
            throw Error(Errc::inconclusive, "no zeros inside the spectral window");
        }
        const double y = static_cast<double>(n) * z.theta.front();
        const double u = 1.0 / static_cast<double>(n);
        fit.n_theta1.push_back(y);
        su += u;
        suu += u * u;
        sy += y;
        suy += u * y;
    }
    const double m = static_cast<double>(n_list.size());
    const double det = m * suu - su * su;
    fit.slope = (m * suy - su * sy) / det;
    fit.limit = (sy - fit.slope * su) / m;
    if (!(fit.limit >= kPi / 2 - 0.3 && fit.limit <= kPi + 0.3)) {
        std::ostringstream os;
        os << "fitted limit " << fit.limit << " outside [pi/2 - 0.3, pi + 0.3]";
        throw Error(Errc::inconclusive, os.str());
    }
    const bool res = std::abs(fit.limit - kPi / 2) < std::abs(fit.limit - kPi);
    fit.classification = res ? Resonance::Resonant : Resonance::Nonresonant;
    fit.margin = res ? std::abs(fit.limit - kPi) : std::abs(fit.limit - kPi / 2);
    return fit;
}

ThetaZeros jacobi_poly_zeros(double alpha, double beta, std::size_t n) {
    return oprl_zeros(JacobiParams::jacobi(alpha, beta), n);
}

double jacobi_poly_value(double alpha, double beta, std::size_t n, double x) {
    check_jacobi_domain(alpha, beta);
    double p0 = 1.0;
    if (n == 0) {
        return p0;
    }
    double p1 = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
    const double a2b2 = alpha * alpha - beta * beta;
    for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double t = 2.0 * kk + alpha + beta;
        const double c0 = 2.0 * kk * (kk + alpha + beta) * (t - 2.0);
        const double c1 = (t - 1.0) * (t * (t - 2.0) * x + a2b2);
        const double c2 = 2.0 * (kk + alpha - 1.0) * (kk + beta - 1.0) * t;
        const double p2 = (c1 * p1 - c2 * p0) / c0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double darboux_k(double alpha, double beta, double theta) {
    return std::pow(std::sin(theta / 2.0), -alpha - 0.5) *
           std::pow(std::cos(theta / 2.0), -beta - 0.5) / std::sqrt(kPi);
}

double darboux_gamma(double alpha, double beta, double theta) {
    return 0.5 * (alpha + beta + 1.0) * theta - (alpha + 0.5) * kPi / 2.0;
}

DarbouxValue darboux_eval(double alpha, double beta, double theta, std::size_t n, double eps) {
    check_jacobi_domain(alpha, beta);
    if (!(theta >= eps && theta <= kPi - eps)) {
        std::ostringstream os;
        os << "theta = " << theta << " outside [" << eps << ", pi - " << eps << "]";
        throw Error(Errc::window_violation, os.str());
    }
    const double nn = static_cast<double>(n);
    return {jacobi_poly_value(alpha, beta, n, std::cos(theta)),
            darboux_k(alpha, beta, theta) / std::sqrt(nn) *
                std::cos(nn * theta + darboux_gamma(alpha, beta, theta))};
}

}  // namespace opuc
