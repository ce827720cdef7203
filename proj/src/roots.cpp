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

#include "opuc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "opuc/kernels.hpp"

namespace opuc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

struct NewtonStep {
    cplx ratio;        // p(z) / p'(z)
    double residual;   // |p(z)|
    double noise;      // attainable accuracy of the compensated value
    bool exact_zero;
};

// For |z| > 1 the reversed polynomial is evaluated at 1/z to keep the
// magnitudes bounded.
NewtonStep newton_step(const CoeffVec& p, const CoeffVec& rev, cplx z) {
    const double n = static_cast<double>(p.size() - 1);
    const double gamma = 2.0 * n * kEps;
    NewtonStep st{};
    if (std::abs(z) <= 1.0) {
        const auto cv = horner_compensated(p, z);
        st.residual = std::abs(cv.value);
        st.noise = 4.0 * gamma * gamma * cv.absbound;
        st.exact_zero = cv.value == cplx(0.0);
        st.ratio = cv.value / cv.deriv;
    } else {
        const cplx w = 1.0 / z;
        const auto cv = horner_compensated(rev, w);
        const double scale = std::pow(std::abs(z), n);
        st.residual = std::abs(cv.value) * scale;
        st.noise = 4.0 * gamma * gamma * cv.absbound * scale;
        st.exact_zero = cv.value == cplx(0.0);
        st.ratio = z * cv.value / (n * cv.value - w * cv.deriv);
    }
    return st;
}

// |p(z)| / max(1, |z|)^n: a backward-error residual comparable to ||p||_1.
double residual_at(const CoeffVec& p, const CoeffVec& rev, cplx z) {
    const double scale = std::pow(std::max(1.0, std::abs(z)), static_cast<double>(p.size() - 1));
    return newton_step(p, rev, z).residual / scale;
}

std::vector<std::vector<std::size_t>> find_clusters(const std::vector<cplx>& z, double radius) {
    const std::size_t n = z.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return z[a].real() < z[b].real(); });
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::size_t i = order[a];
            const std::size_t j = order[b];
            if (z[j].real() - z[i].real() > radius) {
                break;
            }
            if (std::abs(z[i] - z[j]) <= radius) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) {
        groups[find(i)].push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& g : groups) {
        if (g.size() > 1) {
            out.push_back(std::move(g));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

double arg_2pi(cplx z) {
    double a = std::arg(z);
    if (a < 0.0) {
        a += kTwoPi;
    }
    if (a >= kTwoPi) {
        a = 0.0;
    }
    return a;
}

double ZeroSet::max_residual() const {
    double m = 0.0;
    for (double r : residuals) {
        m = std::max(m, r);
    }
    return m;
}

double ZeroSet::modulus(std::size_t i) const { return std::abs(zeros.at(i)); }

double ZeroSet::argument(std::size_t i) const { return arg_2pi(zeros.at(i)); }

CompensatedValue horner_compensated(const CoeffVec& p, cplx z) {
    const std::size_t n = p.size() - 1;
    const double zr = z.real();
    const double zi = z.imag();
    const double az = std::abs(z);
    double sr = p[n].real();
    double si = p[n].imag();
    double cr = 0.0;
    double ci = 0.0;
    cplx d(0.0);
    double ab = std::abs(p[n]);
    for (std::size_t k = n; k-- > 0;) {
        d = d * z + cplx(sr, si);
        double p1, e1, p2, e2, p3, e3, p4, e4, tr, e5, ti, e6, nr, e7, ni, e8;
        two_prod(sr, zr, p1, e1);
        two_prod(si, zi, p2, e2);
        two_sum(p1, -p2, tr, e5);
        two_prod(sr, zi, p3, e3);
        two_prod(si, zr, p4, e4);
        two_sum(p3, p4, ti, e6);
        two_sum(tr, p[k].real(), nr, e7);
        two_sum(ti, p[k].imag(), ni, e8);
        const double er = e1 - e2 + e5 + e7;
        const double ei = e3 + e4 + e6 + e8;
        const double ncr = cr * zr - ci * zi + er;
        const double nci = cr * zi + ci * zr + ei;
        cr = ncr;
        ci = nci;
        sr = nr;
        si = ni;
        ab = ab * az + std::abs(p[k]);
    }
    return {cplx(sr + cr, si + ci), d, ab};
}

ZeroSet find_roots(const CoeffVec& coeffs, const RootOptions& opts) {
    if (coeffs.size() < 2) {
        throw Error(Errc::degenerate_input, "polynomial of degree 0 has no zeros");
    }
    const cplx lead = coeffs.back();
    if (std::abs(lead - 1.0) > 1e-12) {
        throw Error(Errc::precondition, "find_roots expects a monic polynomial");
    }
    CoeffVec p(coeffs.begin(), coeffs.end());
    for (auto& c : p) {
        c /= lead;
    }
    const std::size_t n = p.size() - 1;

    ZeroSet out;
    out.coeff_norm = l1_norm(p);

    // Exact zeros at the origin are split off first.
    std::size_t m0 = 0;
    while (m0 < n && p[m0] == cplx(0.0)) {
        ++m0;
    }
    CoeffVec q(p.begin() + static_cast<std::ptrdiff_t>(m0), p.end());
    const std::size_t d = q.size() - 1;

    std::vector<double> re(d), im(d);
    int iterations = 0;
    if (d > 0) {
        CoeffVec qrev(q.rbegin(), q.rend());
        const double r0 = std::pow(std::abs(q[0]), 1.0 / static_cast<double>(d));
        const double offset = 0.6180339887498949;
        for (std::size_t k = 0; k < d; ++k) {
            const double t = kTwoPi * (static_cast<double>(k) + offset) / static_cast<double>(d);
            re[k] = r0 * std::cos(t);
            im[k] = r0 * std::sin(t);
        }
        std::vector<char> done(d, 0);
        std::vector<double> last_step(d, std::numeric_limits<double>::infinity());
        std::size_t remaining = d;
        while (remaining > 0 && iterations < opts.max_iter) {
            ++iterations;
            for (std::size_t i = 0; i < d; ++i) {
                if (done[i]) {
                    continue;
                }
                const cplx z(re[i], im[i]);
                const auto st = newton_step(q, qrev, z);
                if (st.exact_zero || st.residual <= st.noise) {
                    done[i] = 1;
                    --remaining;
                    continue;
                }
                const cplx s = kernels::aberth_sum(re.data(), im.data(), d, i);
                cplx w = st.ratio / (1.0 - st.ratio * s);
                if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                    // p'(z) vanished or z collided with a neighbour: nudge.
                    w = cplx(1e-3, 1e-3) * std::max(std::abs(z), 1.0);
                }
                const cplx zn = z - w;
                re[i] = zn.real();
                im[i] = zn.imag();
                const double step = std::abs(w);
                const double zmag = std::max(std::abs(zn), std::numeric_limits<double>::min());
                // Converged, or stuck at the rounding floor with no progress.
                if (step <= 2.0 * kEps * zmag ||
                    (step >= 0.9 * last_step[i] && step <= 1e-8 * zmag)) {
                    done[i] = 1;
                    --remaining;
                }
                last_step[i] = step;
            }
        }
        out.zeros.reserve(n);
    }

    std::vector<cplx> zs;
    zs.reserve(n);
    for (std::size_t k = 0; k < m0; ++k) {
        zs.emplace_back(0.0, 0.0);
    }
    for (std::size_t k = 0; k < d; ++k) {
        zs.emplace_back(re[k], im[k]);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> args(n), mods(n);
    for (std::size_t k = 0; k < n; ++k) {
        args[k] = arg_2pi(zs[k]);
        mods[k] = std::abs(zs[k]);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (args[a] != args[b]) {
            return args[a] < args[b];
        }
        return mods[a] < mods[b];
    });
    const CoeffVec prev(p.rbegin(), p.rend());
    out.zeros.resize(n);
    out.residuals.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.zeros[k] = zs[order[k]];
        out.residuals[k] = residual_at(p, prev, out.zeros[k]);
    }
    out.iterations = iterations;
    out.clusters = find_clusters(out.zeros, opts.cluster_radius);

    const double worst = out.max_residual();
    if (!(worst <= opts.tol * out.coeff_norm)) {
        std::ostringstream os;
        os << "worst residual " << worst << " exceeds " << opts.tol << " * " << out.coeff_norm
           << " after " << iterations << " iterations";
        throw Error(Errc::non_convergence, os.str());
    }
    return out;
}

cplx refine_root(const CoeffVec& coeffs, cplx z0, int max_iter) {
    if (coeffs.size() < 2) {
        throw Error(Errc::degenerate_input, "polynomial of degree 0");
    }
    const double norm = l1_norm(coeffs);
    const CoeffVec rev(coeffs.rbegin(), coeffs.rend());
    CoeffVec dp(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        dp[k - 1] = coeffs[k] * static_cast<double>(k);
    }
    const auto d0 = horner_compensated(dp, z0);
    if (!(std::abs(d0.value) > 8.0 * kEps * d0.absbound) || d0.value == cplx(0.0)) {
        throw Error(Errc::derivative_underflow, "|p'(z0)| is at the rounding floor");
    }
    cplx z = z0;
    double prev_step = std::numeric_limits<double>::infinity();
    int linear = 0;
    for (int it = 0; it < max_iter; ++it) {
        const auto st = newton_step(coeffs, rev, z);
        if (st.exact_zero) {
            return z;
        }
        const cplx w = st.ratio;
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
            throw Error(Errc::derivative_underflow, "p'(z) vanished during Newton polish");
        }
        const double step = std::abs(w);
        const double ratio = step / prev_step;
        if (ratio > 0.3 && ratio < 1.0 && st.residual > 1e-13 * norm) {
            if (++linear >= 4) {
                std::ostringstream os;
                os << "Newton converges linearly (ratio " << ratio << ", multiplicity about "
                   << std::lround(1.0 / (1.0 - ratio)) << ")";
                throw Error(Errc::stall, os.str());
            }
        } else {
            linear = 0;
        }
        z -= w;
        prev_step = step;
        if (step <= 4.0 * kEps * std::max(std::abs(z), 1e-300)) {
            break;
        }
    }
    const double res = residual_at(coeffs, rev, z);
    if (!(res <= 1e-13 * norm)) {
        std::ostringstream os;
        os << "residual " << res << " above 1e-13 * " << norm;
        throw Error(Errc::stall, os.str());
    }
    return z;
}

ZeroSet opuc_zeros(const PolyPair& pair, const RootOptions& opts) {
    auto zs = find_roots(pair.phi, opts);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (zs.modulus(i) > 1.0 + 1e-9) {
            std::ostringstream os;
            os << "OPUC zero of modulus " << zs.modulus(i) << " outside the disk";
            throw Error(Errc::domain_error, os.str());
        }
    }
    return zs;
}

CoeffVec expand_roots(const std::vector<cplx>& zeros) {
    CoeffVec c{cplx(1.0)};
    for (const auto& z : zeros) {
        CoeffVec next(c.size() + 1, cplx(0.0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= z * c[k];
        }
        c = std::move(next);
    }
    return c;
}

double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    auto directed = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
        double worst = 0.0;
        for (const auto& p : x) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : y) {
                best = std::min(best, std::abs(p - q));
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    if (a.empty() || b.empty()) {
        return a.empty() && b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace opuc
