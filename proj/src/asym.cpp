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

#include "opuc/asym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "detail/continuation.hpp"
#include "detail/mp_complex.hpp"
#include "opuc/szegofn.hpp"

namespace opuc {

namespace {

using detail::mpcx;
using detail::mpreal;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Largest (b|w|)^N allowed in the continued evaluation; the working precision
// leaves ~330 digits below it.
constexpr double kLogGrowthCap = 150.0 * 2.302585092994046;
constexpr double kNearPole = 0.05;   // circle radius around z = b, in units of b
constexpr int kCirclePoints = 32;

// Multiprecision copy of a BLS sequence (or the zero sequence).
struct MpModel {
    std::vector<mpcx> alpha;
    std::vector<mpreal> rho;
    mpcx C;
    mpreal b;
    double bd = 0.0;
    cplx Cd;
};

MpModel make_model(const VerblunskySeq& seq, std::size_t count) {
    MpModel m;
    if (seq.family() == Family::Constant && seq.C() == cplx(0.0)) {
        m.C = mpcx(0);
        m.b = 0;
    } else if (seq.family() == Family::BLS) {
        m.C = mpcx(seq.C());
        m.b = mpreal(seq.b());
        m.bd = seq.b();
        m.Cd = seq.C();
    } else {
        throw Error(Errc::precondition, "asymptotics checks need a BLS or zero sequence");
    }
    m.alpha.resize(count);
    m.rho.resize(count);
    mpreal bj(1);
    std::optional<mpcx> K;
    mpreal bdj(1);
    mpreal bdelta(0);
    if (seq.perturbation()) {
        K = mpcx(seq.perturbation()->K);
        bdelta = m.b * mpreal(seq.perturbation()->delta);
    }
    for (std::size_t j = 0; j < count; ++j) {
        mpcx a = m.C * bj;
        if (K) {
            a = a + *K * bdj;
            bdj *= bdelta;
        }
        bj *= m.b;
        m.alpha[j] = a;
        m.rho[j] = sqrt(mpreal(1) - detail::norm(a));
    }
    return m;
}

// (1 - b w) D^{-1}(w), truncated where (b|w|)^N would exceed the growth cap.
mpcx pole_free(const MpModel& m, const mpcx& w) {
    std::size_t N = m.alpha.size();
    const double growth = m.bd * std::abs(w.to_double());
    if (growth > 1.0) {
        N = std::min(N, static_cast<std::size_t>(kLogGrowthCap / std::log(growth)));
    }
    return detail::pole_free_d_inverse(m.alpha, m.rho, N, m.C, m.b, w);
}

mpcx d_inv(const MpModel& m, const mpcx& z) {
    const double bz = m.bd * std::abs(z.to_double());
    if (bz == 0.0 ||
        static_cast<double>(m.alpha.size()) * std::log(bz) < -400.0 * 2.302585092994046) {
        return detail::ortho_point(m.alpha, m.rho, m.alpha.size(), z).phi_star;
    }
    return pole_free(m, z) / (mpcx(1) - z * m.b);
}

double mp_log(const mpreal& x) {
    if (x == 0) {
        return kNegInf;
    }
    return static_cast<double>(log(x));
}

std::vector<std::size_t> checked_n_list(std::span<const std::size_t> n_list) {
    std::vector<std::size_t> ns(n_list.begin(), n_list.end());
    if (ns.size() < 2 || !std::is_sorted(ns.begin(), ns.end()) ||
        std::adjacent_find(ns.begin(), ns.end()) != ns.end() || ns.front() == 0) {
        throw Error(Errc::invalid_parameter, "n_list must be strictly increasing, positive, size >= 2");
    }
    return ns;
}

void finish(PointSeries& ps, const std::vector<std::size_t>& ns, const AsymOptions& opts) {
    const std::size_t m = ns.size();
    const std::size_t first = m / 2;
    std::vector<double> x;
    std::vector<double> y;
    bool all_zero = true;
    for (std::size_t i = first; i < m; ++i) {
        if (std::isfinite(ps.log_error[i])) {
            all_zero = false;
            x.push_back(static_cast<double>(ns[i]));
            y.push_back(ps.log_error[i]);
        }
    }
    if (all_zero) {
        ps.slope = kNegInf;
        ps.rate = 0.0;
    } else if (x.size() < 2) {
        ps.slope = 0.0;
        ps.rate = 1.0;
    } else {
        ps.slope = ls_slope(x, y);
        ps.rate = std::exp(ps.slope);
    }
    ps.monotone_tail = true;
    for (std::size_t i = m / 3; i + 1 < m; ++i) {
        const double a = ps.log_error[i];
        const double c = ps.log_error[i + 1];
        if (!(c < a) && !(std::isinf(a) && std::isinf(c))) {
            ps.monotone_tail = false;
        }
    }
    ps.pass = ps.slope < opts.slope_threshold && ps.rate < ps.rate_bound && ps.monotone_tail;
}

std::string where(cplx z) {
    std::ostringstream os;
    os << "z = " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
       << "i (|z| = " << std::abs(z) << ")";
    return os.str();
}

}  // namespace

const char* region_name(Region r) {
    switch (r) {
        case Region::Outer:
            return "outer";
        case Region::Inner:
            return "inner";
        case Region::Critical:
            return "critical";
    }
    return "?";
}

bool AsymReport::pass() const {
    return !points.empty() &&
           std::all_of(points.begin(), points.end(), [](const PointSeries& p) { return p.pass; });
}

double ls_slope(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

AsymReport verify_outer(const VerblunskySeq& seq, std::span<const cplx> points,
                        std::span<const std::size_t> n_list, const AsymOptions& opts) {
    const auto ns = checked_n_list(n_list);
    const MpModel m = make_model(seq, opts.reference_n);
    AsymReport rep;
    rep.region = Region::Outer;
    rep.b = m.bd;
    rep.n_list = ns;
    for (cplx zd : points) {
        const double r = std::abs(zd);
        if (!(r > m.bd + opts.eps) || r > 1.0 + 1e-12) {
            throw Error(Errc::region_violation, where(zd) + " not in b + eps < |z| <= 1");
        }
        const mpcx z(zd);
        const mpcx w = mpcx(1) / conj(z);
        const mpcx ref = conj(d_inv(m, w));
        const auto phis = detail::ortho_phi_at(m.alpha, m.rho, ns, z);
        PointSeries ps;
        ps.z = zd;
        ps.rate_bound = (m.bd + opts.eps) / r * (1.0 + opts.slack);
        const mpcx zinv = mpcx(1) / z;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const mpcx e = phis[i] * detail::mp_pow(zinv, ns[i]) - ref;
            ps.log_error.push_back(mp_log(detail::abs(e)));
        }
        finish(ps, ns, opts);
        rep.points.push_back(std::move(ps));
    }
    return rep;
}

AsymReport verify_inner(const VerblunskySeq& seq, std::span<const cplx> points,
                        std::span<const std::size_t> n_list, const AsymOptions& opts) {
    const auto ns = checked_n_list(n_list);
    if (seq.family() != Family::BLS || seq.C() == cplx(0.0)) {
        throw Error(Errc::precondition, "inner asymptotics need a BLS sequence with C != 0");
    }
    const MpModel m = make_model(seq, opts.reference_n);
    AsymReport rep;
    rep.region = Region::Inner;
    rep.b = m.bd;
    rep.n_list = ns;
    const mpreal binv = mpreal(1) / m.b;
    for (cplx zd : points) {
        if (!(std::abs(zd) < m.bd - opts.eps)) {
            throw Error(Errc::region_violation, where(zd) + " not in |z| < b - eps");
        }
        const mpcx z(zd);
        const mpcx limit = conj(m.C) / (z - mpcx(m.b)) * d_inv(m, z);
        const auto phis = detail::ortho_phi_at(m.alpha, m.rho, ns, z);
        PointSeries ps;
        ps.z = zd;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const mpcx e = phis[i] * pow(binv, static_cast<long>(ns[i])) - limit;
            ps.log_error.push_back(mp_log(detail::abs(e)));
        }
        finish(ps, ns, opts);
        rep.points.push_back(std::move(ps));
    }
    return rep;
}

AsymReport verify_critical(const VerblunskySeq& seq, std::span<const cplx> points,
                           std::span<const std::size_t> n_list, const AsymOptions& opts) {
    const auto ns = checked_n_list(n_list);
    if (seq.family() != Family::BLS || seq.C() == cplx(0.0)) {
        throw Error(Errc::precondition, "critical asymptotics need a BLS sequence with C != 0");
    }
    const MpModel m = make_model(seq, opts.reference_n);
    AsymReport rep;
    rep.region = Region::Critical;
    rep.b = m.bd;
    rep.n_list = ns;
    const mpreal binv = mpreal(1) / m.b;

    // Remainder / b^n at one point, for every n in ns.
    auto remainder = [&](const mpcx& z) {
        const mpcx w = mpcx(1) / conj(z);
        // conj(D^{-1}(w)) = conj(P(w)) z / (z - b)
        const mpcx zb = z - mpcx(m.b);
        const mpcx outer = conj(pole_free(m, w)) * z / zb;
        const mpcx inner = conj(m.C) * d_inv(m, z) / zb;
        const auto phis = detail::ortho_phi_at(m.alpha, m.rho, ns, z);
        std::vector<mpcx> out;
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const mpreal scale = pow(binv, static_cast<long>(ns[i]));
            const mpcx zn = detail::mp_pow(z, ns[i]);
            out.push_back((phis[i] - outer * zn) * scale - inner);
        }
        return out;
    };

    for (cplx zd : points) {
        const double ratio = std::abs(zd) / m.bd;
        if (!(ratio >= kGInner && ratio <= kGOuter)) {
            throw Error(Errc::region_violation, where(zd) + " not in 0.8 b <= |z| <= 1.25 b");
        }
        std::vector<mpcx> e(ns.size());
        if (std::abs(zd - m.bd) < kNearPole * m.bd) {
            const mpreal r = mpreal(kNearPole * m.bd);
            for (int k = 0; k < kCirclePoints; ++k) {
                const double t = kTwoPi * k / kCirclePoints;
                const mpcx zk = mpcx(zd) + mpcx(r * mpreal(std::cos(t)), r * mpreal(std::sin(t)));
                const auto v = remainder(zk);
                for (std::size_t i = 0; i < ns.size(); ++i) {
                    e[i] = e[i] + v[i];
                }
            }
            for (auto& x : e) {
                x = x / mpreal(kCirclePoints);
            }
        } else {
            e = remainder(mpcx(zd));
        }
        PointSeries ps;
        ps.z = zd;
        for (const auto& x : e) {
            ps.log_error.push_back(mp_log(detail::abs(x)));
        }
        finish(ps, ns, opts);
        rep.points.push_back(std::move(ps));
    }
    return rep;
}

ZeroSet model_zeros(cplx K, int k, std::size_t n) {
    if (K == cplx(0.0)) {
        throw Error(Errc::degenerate_input, "K must be nonzero");
    }
    if (k < 1 || n <= static_cast<std::size_t>(k)) {
        throw Error(Errc::invalid_parameter, "need k >= 1 and n > k");
    }
    // z^n - K (1 - z)^k, binomial expansion of (1 - z)^k.
    CoeffVec p(n + 1, cplx(0.0));
    p[n] = 1.0;
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        p[static_cast<std::size_t>(j)] -= K * (sign * binom);
        binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
    return find_roots(p);
}

ModelCheck check_model_zeros(const ZeroSet& zs, cplx K, int k, std::size_t n) {
    ModelCheck mc;
    const double nn = static_cast<double>(n);
    const double logn = std::log(nn);
    const double kk = static_cast<double>(k);
    mc.M = std::max(0.0, 2.0 * std::log(std::abs(K) * std::pow(2.0, kk))) + 1.0;
    const double inner = 1.0 - 2.0 * kk * logn / nn;
    const double near_one = 0.5 * kk * logn / nn;
    for (const cplx& z : zs.zeros) {
        const double r = std::abs(z);
        mc.observed_M = std::max(mc.observed_M, nn * (r - 1.0));
        mc.outer_violations += r >= 1.0 + mc.M / nn;
        mc.inner_violations += r <= inner;
        mc.near_one_violations += std::abs(z - 1.0) <= near_one;
    }
    const double window = 2.0 * kk * logn / nn;
    const double target = kTwoPi / nn;
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
        const double a0 = zs.argument(i);
        const double a1 = zs.argument(i + 1);
        const auto interior = [&](double a) { return a > window && a < kTwoPi - window; };
        if (!interior(a0) || !interior(a1)) {
            continue;
        }
        mc.max_gap_scaled = std::max(mc.max_gap_scaled, std::abs(a1 - a0 - target) * nn * logn);
        ++mc.interior_gaps;
    }
    return mc;
}

}  // namespace opuc
