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

#include "opuc/harness/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "opuc/asym.hpp"
#include "opuc/cmv.hpp"
#include "opuc/harness/report.hpp"
#include "opuc/levinson.hpp"
#include "opuc/oprl.hpp"
#include "opuc/pop.hpp"
#include "opuc/roots.hpp"
#include "opuc/seq.hpp"
#include "opuc/stats.hpp"
#include "opuc/szego.hpp"

namespace opuc::harness {

namespace {

// Tolerances and budgets of the acceptance criteria.
constexpr double kDetTol = 1e-8;
constexpr std::size_t kDetSequences = 20;
constexpr std::size_t kDetMaxN = 30;
constexpr double kFig1Radius = 0.6;
constexpr double kFig1Target = 0.84;
constexpr double kFig1Dist = 0.02;
constexpr double kClockFinal = 0.5;
constexpr double kCircleTol = 1e-6;
constexpr double kPopExactTol = 1e-12;
constexpr double kWindingTol = 1e-6;
constexpr double kTvFull = 0.05;
constexpr double kTvQuick = 0.1;
constexpr double kTvControl = 0.2;
constexpr double kThetaTol = 1e-10;
constexpr double kResonanceTol = 0.1;
constexpr double kJacobiEps = 0.3;
constexpr double kDarbouxLo = -1.9;
constexpr double kDarbouxHi = -1.1;
constexpr double kSlopeMax = -0.01;
constexpr double kModelGapCap = 10.0;
constexpr double kLevinsonTol = 1e-8;
constexpr std::size_t kQuickCap = 200;
constexpr std::size_t kQuickTrials = 500;

struct Ctx {
    SuiteLevel level;
    const SuiteHooks& hooks;
    std::uint64_t seed;
    unsigned threads;

    bool quick() const { return level == SuiteLevel::Quick; }
    std::size_t cap(std::size_t n) const { return quick() ? std::min(n, kQuickCap) : n; }
    std::vector<std::size_t> capped(std::vector<std::size_t> ns) const {
        if (quick()) {
            ns.erase(std::remove_if(ns.begin(), ns.end(), [](std::size_t n) { return n > kQuickCap; }),
                     ns.end());
        }
        return ns;
    }
};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::pair<std::string, double>> metrics;

    void metric(const std::string& name, double v) { metrics.emplace_back(name, v); }
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[fail] " << what << "; ";
        }
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

double bulk_radial_sup(const ZeroSet& zs, double b, double cut) {
    double s = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (zs.modulus(i) <= cut) {
            s = std::max(s, std::abs(zs.modulus(i) - b));
        }
    }
    return s;
}

double circ_dist(double a, double b) {
    const double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

void determinant_identity(const Ctx& ctx, Outcome& o) {
    double worst = 0.0;
    std::size_t checked = 0;
    for (std::size_t s = 0; s < kDetSequences; ++s) {
        const std::uint64_t seed = ctx.seed + 1000 + s;
        const double rho = 0.5 + 0.45 * static_cast<double>(s % 4) / 3.0;
        const VerblunskySeq seq = s % 5 == 4 ? VerblunskySeq::random_real(rho, seed)
                                             : VerblunskySeq::random_disk(rho, seed);
        const auto alphas = seq.alphas(kDetMaxN);
        for (std::size_t N = 1; N <= kDetMaxN; ++N) {
            const auto cp = char_poly(build_truncation(seq, N));
            const auto phi =
                ctx.hooks.phi_coefficients(std::span<const cplx>(alphas.data(), N));
            double d = 0.0;
            if (phi.size() != cp.size()) {
                d = 1.0;
            } else {
                for (std::size_t k = 0; k < cp.size(); ++k) {
                    d = std::max(d, std::abs(cp[k] - phi[k]));
                }
            }
            worst = std::max(worst, d);
            ++checked;
        }
    }
    o.metric("max_coeff_diff", worst);
    o.metric("pairs_checked", static_cast<double>(checked));
    o.require(worst <= kDetTol, "max |det - Phi_N| = " + fmt(worst) + " > 1e-8");
    o.detail << checked << " (sequence, N) pairs, max coefficient diff " << fmt(worst);
}

void bls_outlier(const Ctx& ctx, Outcome& o) {
    const auto seq = VerblunskySeq::bls(0.5, 0.5);
    const double b = 0.5;
    const auto z100 = opuc_zeros(recurse(seq, 100));
    const double K = bulk_radial_sup(z100, b, kFig1Radius) * 100.0 / std::log(100.0);
    o.metric("K_fitted_n100", K);
    for (std::size_t n : ctx.capped({200, 400})) {
        const auto zs = opuc_zeros(recurse(seq, n));
        std::vector<cplx> out;
        for (std::size_t i = 0; i < zs.size(); ++i) {
            if (zs.modulus(i) > kFig1Radius) {
                out.push_back(zs.zeros[i]);
            }
        }
        const double rad = bulk_radial_sup(zs, b, kFig1Radius);
        const double bound = K * std::log(static_cast<double>(n)) / static_cast<double>(n);
        const std::string tag = "n" + std::to_string(n);
        o.metric("radial_sup_" + tag, rad);
        o.metric("radial_bound_" + tag, bound);
        o.metric("outliers_" + tag, static_cast<double>(out.size()));
        o.require(rad <= bound, tag + " radial sup " + fmt(rad) + " > K log n / n = " + fmt(bound));
        if (n == 200) {
            o.require(out.size() == 1, "n=200 has " + std::to_string(out.size()) +
                                           " zeros with |z| > 0.6, expected 1");
            if (!out.empty()) {
                const double d = std::abs(out[0] - cplx(kFig1Target, 0.0));
                o.metric("outlier_re", out[0].real());
                o.metric("outlier_im", out[0].imag());
                o.require(d <= kFig1Dist, "outlier " + fmt(out[0].real()) + " is " + fmt(d) +
                                              " from 0.84");
                o.detail << "outlier at " << fmt(out[0].real()) << (out[0].imag() < 0 ? "" : "+")
                         << fmt(out[0].imag()) << "i; ";
            }
        }
    }
    o.detail << "K = " << fmt(K);
}

void clock_trend(const Ctx& ctx, Outcome& o) {
    const auto seq = VerblunskySeq::bls(0.5, 0.5);
    const auto ns = ctx.capped({50, 100, 200, 400});
    std::vector<double> sup;
    ClockReport last;
    for (std::size_t n : ns) {
        ClockOptions opts;
        opts.convention = ClockConvention::PinnedAtZero;
        last = clock_metrics(opuc_zeros(recurse(seq, n)), 0.5, opts);
        sup.push_back(last.sup_dev);
        o.metric("sup_dev_n" + std::to_string(n), last.sup_dev);
    }
    for (std::size_t i = 0; i + 1 < sup.size(); ++i) {
        o.require(sup[i + 1] < sup[i], "sup_dev not decreasing at n=" + std::to_string(ns[i + 1]));
    }
    o.require(sup.back() < kClockFinal, "final sup_dev " + fmt(sup.back()) + " >= 0.5");
    const double ratio = last.gap_at_zero / (2.0 * last.period);
    o.metric("gap_at_zero_over_2period", ratio);
    o.require(last.gap_at_zero_ok, "gap across arg 0 is " + fmt(ratio) + " x 2(2pi/n)");
    o.detail << "sup_dev";
    for (double s : sup) {
        o.detail << " " << fmt(s);
    }
    o.detail << "; gap at 0 = " << fmt(ratio) << " x 2(2pi/n) at n=" << ns.back();
}

void all_on_circle(const Ctx&, Outcome& o) {
    const auto zs = opuc_zeros(recurse(VerblunskySeq::bls(-0.5, 0.5), 200));
    double dev = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        dev = std::max(dev, std::abs(zs.modulus(i) - 0.5));
    }
    o.metric("max_radial_dev", dev);
    o.require(dev <= kCircleTol, "max ||z| - 1/2| = " + fmt(dev));
    o.detail << "max ||z| - 1/2| = " << fmt(dev) << " over " << zs.size() << " zeros";
}

void pop_exactness(const Ctx&, Outcome& o) {
    constexpr std::size_t n = 64;
    double worst_pos = 0.0;
    double worst_gap = 0.0;
    for (double t : {0.0, kPi / 2, 0.7, -2.1, 3.0}) {
        const cplx beta = std::polar(1.0, t);
        const auto th = pop_zeros_by_phase(PopSpec(VerblunskySeq::constant(0.0), beta), n);
        if (th.size() != n) {
            o.require(false, "wrong zero count");
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const double e = (-t + kTwoPi * static_cast<double>(j)) / static_cast<double>(n);
            double best = kTwoPi;
            for (double x : th) {
                best = std::min(best, circ_dist(x, e));
            }
            worst_pos = std::max(worst_pos, best);
            const double gap = (j + 1 < n ? th[j + 1] : th[0] + kTwoPi) - th[j];
            worst_gap = std::max(worst_gap, std::abs(gap - kTwoPi / static_cast<double>(n)));
        }
    }
    o.metric("max_position_error", worst_pos);
    o.metric("max_spacing_deviation", worst_gap);
    o.require(worst_pos <= kPopExactTol, "position error " + fmt(worst_pos));
    o.require(worst_gap <= kPopExactTol, "spacing deviation " + fmt(worst_gap));
    o.detail << "5 values of beta: position error " << fmt(worst_pos) << ", spacing deviation "
             << fmt(worst_gap);
}

std::vector<VerblunskySeq> phase_families(std::uint64_t seed) {
    return {VerblunskySeq::bls(0.5, 0.5),
            VerblunskySeq::bls(-0.5, 0.5),
            VerblunskySeq::bls(cplx(0.3, 0.4), 0.8, BlsPerturbation{cplx(0.1, -0.05), 0.5}),
            VerblunskySeq::random_disk(0.5, seed + 1),
            VerblunskySeq::random_disk(0.95, seed + 2),
            VerblunskySeq::random_real(0.5, seed + 3),
            VerblunskySeq::power_decay(cplx(0.6, 0.2), 1.5),
            VerblunskySeq::constant(cplx(0.0, 0.7)),
            VerblunskySeq::constant(0.0),
            VerblunskySeq::explicit_list({0.9, cplx(-0.5, 0.5), 0.99, cplx(0.0, -0.8), 0.3, -0.95,
                                          0.5, cplx(0.6, 0.6), 0.1, -0.2, 0.7, 0.0, 0.4, -0.6,
                                          cplx(0.2, 0.9), 0.05, -0.3, 0.8, 0.25})};
}

void pop_phase(const Ctx& ctx, Outcome& o) {
    const auto fams = phase_families(ctx.seed);
    double worst_wind = 0.0;
    double min_diff = 1e300;
    for (std::size_t f = 0; f < fams.size(); ++f) {
        const std::size_t n = fams[f].length() ? *fams[f].length() + 1 : 100;
        const PopSpec spec(fams[f], std::polar(1.0, 0.3 + static_cast<double>(f)));
        std::vector<double> grid(8 * n);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(grid.size());
        }
        try {
            const auto eta = eta_phase(spec, n, grid);
            for (std::size_t i = 0; i + 1 < eta.size(); ++i) {
                min_diff = std::min(min_diff, eta[i + 1] - eta[i]);
            }
            const double w = eta_winding(spec, n);
            worst_wind = std::max(worst_wind, std::abs(w - kTwoPi * static_cast<double>(n)));
        } catch (const Error& e) {
            o.require(false, fams[f].describe() + ": " + e.what());
        }
    }
    o.metric("max_winding_error", worst_wind);
    o.metric("min_finite_difference", min_diff);
    o.require(worst_wind <= kWindingTol, "winding error " + fmt(worst_wind));
    o.require(min_diff > 0.0, "non-positive finite difference " + fmt(min_diff));
    o.detail << fams.size() << " families: winding error " << fmt(worst_wind)
             << ", min finite difference " << fmt(min_diff);
}

void poisson(const Ctx& ctx, Outcome& o) {
    const std::size_t n = 300;
    const std::size_t trials = ctx.quick() ? kQuickTrials : 2000;
    const double thr = ctx.quick() ? kTvQuick : kTvFull;
    const std::vector<IntervalSpec> iv{{0.0, 0.0, 1.0}};
    PoissonOptions po;
    po.threads = ctx.threads;
    const auto rep = poisson_experiment(VerblunskySeq::random_disk(0.5, ctx.seed), n, trials, iv,
                                        ctx.seed, po);
    po.keep_spacings = false;
    const auto ctl = poisson_experiment(VerblunskySeq::constant(0.0), n, trials, iv, ctx.seed, po);
    const double tv = rep.intervals[0].tv;
    const double tvc = ctl.intervals[0].tv;
    const double ks = ks_to_exponential(spacing_cdf(rep.spacings));
    o.metric("tv_random", tv);
    o.metric("tv_control", tvc);
    o.metric("ks_spacing_exponential", ks);
    o.metric("mean_eta_derivative_over_n", rep.mean_eta_derivative / static_cast<double>(n));
    o.require(tv <= thr, "TV " + fmt(tv) + " > " + fmt(thr));
    o.require(tvc >= kTvControl, "control TV " + fmt(tvc) + " < 0.2");
    o.detail << "n=" << n << ", trials=" << trials << ": TV " << fmt(tv) << " (<= " << fmt(thr)
             << "), control TV " << fmt(tvc) << ", spacing KS " << fmt(ks);
}

void oprl_chebyshev(const Ctx& ctx, Outcome& o) {
    const std::size_t n = ctx.cap(500);
    const double nn = static_cast<double>(n);
    double e2 = 0.0;
    double e1 = 0.0;
    const auto free_z = oprl_zeros(JacobiParams::free(), n);
    const auto cheb_z = oprl_zeros(JacobiParams::chebyshev_first(), n);
    if (free_z.theta.size() != n || cheb_z.theta.size() != n) {
        o.require(false, "zeros outside [-2, 2]");
        return;
    }
    for (std::size_t j = 1; j <= n; ++j) {
        const double jj = static_cast<double>(j);
        e2 = std::max(e2, std::abs(free_z.theta[j - 1] - kPi * jj / (nn + 1.0)));
        e1 = std::max(e1, std::abs(cheb_z.theta[j - 1] - kPi * (jj - 0.5) / nn));
    }
    o.metric("free_theta_error", e2);
    o.metric("chebyshev_first_theta_error", e1);
    o.require(e2 <= kThetaTol, "free theta error " + fmt(e2));
    o.require(e1 <= kThetaTol, "a_1 = sqrt 2 theta error " + fmt(e1));
    const std::vector<std::size_t> ns = ctx.capped({50, 100, 200, 400});
    const auto rf = resonance_scaling(JacobiParams::free(), ns);
    const auto rc = resonance_scaling(JacobiParams::chebyshev_first(), ns);
    o.metric("free_limit", rf.limit);
    o.metric("chebyshev_first_limit", rc.limit);
    o.require(rf.classification == Resonance::Nonresonant && std::abs(rf.limit - kPi) <= kResonanceTol,
              "free family limit " + fmt(rf.limit));
    o.require(rc.classification == Resonance::Resonant &&
                  std::abs(rc.limit - kPi / 2) <= kResonanceTol,
              "a_1 = sqrt 2 limit " + fmt(rc.limit));
    o.detail << "n=" << n << ": theta errors " << fmt(e2) << ", " << fmt(e1) << "; limits "
             << fmt(rf.limit) << " (nonresonant), " << fmt(rc.limit) << " (resonant)";
}

void jacobi_clock(const Ctx&, Outcome& o) {
    const double al = 1.0;
    const double be = 0.0;
    std::vector<double> stat;
    for (std::size_t n : {25, 50, 100, 200}) {
        const auto z = jacobi_poly_zeros(al, be, n);
        stat.push_back(interval_clock_sup(z.theta, n, kPi / static_cast<double>(n), kJacobiEps,
                                          kPi - kJacobiEps));
        o.metric("clock_stat_n" + std::to_string(n), stat.back());
    }
    for (std::size_t i = 0; i + 1 < stat.size(); ++i) {
        o.require(stat[i + 1] < stat[i], "clock statistic not decreasing");
    }
    std::vector<double> ln;
    std::vector<double> lr;
    for (std::size_t n : {50, 100, 200, 400}) {
        double r = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double th = kJacobiEps + (kPi - 2 * kJacobiEps) * i / 200.0;
            const auto d = darboux_eval(al, be, th, n, kJacobiEps);
            r = std::max(r, std::abs(d.lhs - d.rhs));
        }
        ln.push_back(std::log(static_cast<double>(n)));
        lr.push_back(std::log(r));
        o.metric("darboux_residual_n" + std::to_string(n), r);
    }
    const double slope = ls_slope(ln, lr);
    o.metric("darboux_slope", slope);
    o.require(slope >= kDarbouxLo && slope <= kDarbouxHi, "Darboux slope " + fmt(slope));
    o.detail << "clock statistic";
    for (double s : stat) {
        o.detail << " " << fmt(s);
    }
    o.detail << "; Darboux residual slope " << fmt(slope);
}

void asymptotics(const Ctx& ctx, Outcome& o) {
    const auto seq = VerblunskySeq::bls(0.5, 0.5);
    const auto ns = ctx.quick() ? std::vector<std::size_t>{50, 75, 100, 150, 200}
                                : std::vector<std::size_t>{50, 100, 150, 200, 300, 400};
    const std::vector<cplx> outer{0.9, std::polar(0.7, 1.0), std::polar(1.0, 2.0),
                                  std::polar(0.65, -2.5)};
    const std::vector<cplx> inner{0.0, cplx(0.0, 0.25), -0.3};
    const std::vector<cplx> crit{0.5, std::polar(0.5, kTwoPi * 0.3), 0.45, std::polar(0.55, 2.0)};
    const AsymReport reps[3] = {verify_outer(seq, outer, ns), verify_inner(seq, inner, ns),
                                verify_critical(seq, crit, ns)};
    double worst = -1e300;
    for (const auto& r : reps) {
        for (const auto& p : r.points) {
            worst = std::max(worst, p.slope);
            o.require(p.pass, std::string(region_name(r.region)) + " point " + fmt(p.z.real()) +
                                  (p.z.imag() < 0 ? "" : "+") + fmt(p.z.imag()) + "i slope " +
                                  fmt(p.slope) + (p.monotone_tail ? "" : " (not monotone)"));
        }
    }
    o.metric("worst_slope", worst);
    // Critical remainder / b^n along n = 100, 200, 400.
    std::vector<std::size_t> idx;
    for (std::size_t want : ctx.capped({100, 200, 400})) {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            if (ns[i] == want) {
                idx.push_back(i);
            }
        }
    }
    for (const auto& p : reps[2].points) {
        for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
            o.require(p.log_error[idx[k + 1]] < p.log_error[idx[k]],
                      "critical remainder / b^n not decreasing at z = " + fmt(p.z.real()));
        }
    }
    const auto& pb = reps[2].points[0];
    o.metric("critical_log_remainder_at_b_first", pb.log_error.front());
    o.metric("critical_log_remainder_at_b_last", pb.log_error.back());
    o.detail << "11 points over 3 regions, worst slope " << fmt(worst)
             << "; log(remainder/b^n) at z=b from " << fmt(pb.log_error.front()) << " to "
             << fmt(pb.log_error.back());
}

void model_problem(const Ctx& ctx, Outcome& o) {
    const std::size_t n = ctx.cap(500);
    const auto zs = model_zeros(1.0, 1, n);
    const auto mc = check_model_zeros(zs, 1.0, 1, n);
    o.metric("M", mc.M);
    o.metric("observed_M", mc.observed_M);
    o.metric("outer_violations", static_cast<double>(mc.outer_violations));
    o.metric("inner_violations", static_cast<double>(mc.inner_violations));
    o.metric("near_one_violations", static_cast<double>(mc.near_one_violations));
    o.metric("max_gap_scaled", mc.max_gap_scaled);
    o.require(mc.exclusions_hold(), "exclusion zones violated");
    o.require(mc.max_gap_scaled <= kModelGapCap, "max |gap - 2pi/n| n log n = " +
                                                      fmt(mc.max_gap_scaled) + " > 10");
    o.detail << "n=" << n << ": observed M " << fmt(mc.observed_M) << " (bound " << fmt(mc.M)
             << "), " << mc.interior_gaps << " interior gaps, max |gap - 2pi/n| n log n = "
             << fmt(mc.max_gap_scaled);
}

void levinson_roundtrip(const Ctx&, Outcome& o) {
    constexpr std::size_t n = 20;
    const auto bs = verblunsky_from_moments(moments(WeightSpec::bernstein_szego({0.5}), n), n);
    double tail = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        tail = std::max(tail, std::abs(bs[j]));
    }
    const double head = std::abs(bs[0] - 0.5);
    const auto flat = verblunsky_from_moments(moments(WeightSpec::uniform(), n), n);
    const bool exact_zero = std::all_of(flat.begin(), flat.end(),
                                        [](cplx a) { return a == cplx(0.0, 0.0); });
    o.metric("alpha0_error", head);
    o.metric("tail_max", tail);
    o.require(head <= kLevinsonTol, "alpha_0 error " + fmt(head));
    o.require(tail <= kLevinsonTol, "tail " + fmt(tail));
    o.require(exact_zero, "uniform weight did not give alpha = 0 exactly");
    o.detail << "alpha_0 error " << fmt(head) << ", tail " << fmt(tail)
             << (exact_zero ? ", uniform weight gives alpha = 0 exactly" : "");
}

struct CriterionDef {
    const char* id;
    const char* title;
    double budget_full;
    double budget_quick;
    void (*fn)(const Ctx&, Outcome&);
};

const std::vector<CriterionDef>& defs() {
    static const std::vector<CriterionDef> d{
        {"determinant_identity", "CMV determinant identity, 20 sequences, N <= 30", 10, 10,
         determinant_identity},
        {"bls_outlier", "alpha_n = (1/2)^{n+1}: one outlier near 0.84, radial O(log n / n)", 30,
         30, bls_outlier},
        {"clock_trend", "alpha_n = (1/2)^{n+1}: clock deviation decreasing, double gap at arg 0", 60,
         60, clock_trend},
        {"all_on_circle", "alpha_n = -(1/2)^{n+1}: all zeros on |z| = 1/2", 20, 20, all_on_circle},
        {"pop_exactness", "alpha = 0 paraorthogonal zeros are rotated roots of unity", 1, 1,
         pop_exactness},
        {"pop_phase", "phase winding 2 pi n and monotonicity, 10 families", 30, 30, pop_phase},
        {"poisson", "disk-uniform rho = 1/2 counts vs Poisson(1), clock control", 600, 120,
         poisson},
        {"oprl_chebyshev", "Chebyshev zeros and resonance classification", 30, 30, oprl_chebyshev},
        {"jacobi_clock", "Jacobi (1, 0) interior clock and Darboux error order", 60, 60,
         jacobi_clock},
        {"asymptotics", "outer, inner and critical asymptotic errors decay", 60, 60, asymptotics},
        {"model_problem", "z^n - (1 - z): exclusion zones and spacing", 10, 10, model_problem},
        {"levinson_roundtrip", "Bernstein-Szego and uniform weight roundtrip", 5, 5,
         levinson_roundtrip},
    };
    return d;
}

}  // namespace

const char* level_name(SuiteLevel level) { return level == SuiteLevel::Quick ? "quick" : "full"; }

bool SuiteSummary::all_pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.pass; });
}

std::vector<std::string> criterion_ids() {
    std::vector<std::string> ids;
    for (const auto& d : defs()) {
        ids.emplace_back(d.id);
    }
    return ids;
}

SuiteSummary verify_suite(const SuiteOptions& opts) {
    SuiteHooks hooks = opts.hooks;
    if (!hooks.phi_coefficients) {
        hooks.phi_coefficients = [](std::span<const cplx> a) { return recurse(a).phi; };
    }
    const Ctx ctx{opts.level, hooks, opts.seed, opts.threads};
    SuiteSummary summary;
    summary.level = opts.level;
    for (const auto& d : defs()) {
        if (!opts.only.empty() &&
            std::find(opts.only.begin(), opts.only.end(), d.id) == opts.only.end()) {
            continue;
        }
        CriterionResult r;
        r.id = d.id;
        r.title = d.title;
        r.budget_seconds = opts.level == SuiteLevel::Quick ? d.budget_quick : d.budget_full;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            d.fn(ctx, o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "[error] " << e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.seconds > r.budget_seconds) {
            o.require(false, "runtime " + fmt(r.seconds) + " s over budget " +
                                 fmt(r.budget_seconds) + " s");
        }
        r.pass = o.pass;
        r.detail = o.detail.str();
        r.metrics = std::move(o.metrics);
        if (opts.on_result) {
            opts.on_result(r);
        }
        summary.results.push_back(std::move(r));
    }
    return summary;
}

std::string format_result_line(const CriterionResult& r) {
    char head[160];
    std::snprintf(head, sizeof(head), "%s %-22s (%.2f s / %.0f s) ", r.pass ? "PASS" : "FAIL",
                  r.id.c_str(), r.seconds, r.budget_seconds);
    return head + r.detail;
}

std::string suite_report_json(const SuiteSummary& s, std::uint64_t seed) {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["experiment"] = "verify";
    j["level"] = level_name(s.level);
    j["seed"] = seed;
    j["config_hash"] = hex64(fnv1a64(std::string("verify:") + level_name(s.level) + ":" +
                                     std::to_string(seed)));
    j["status"] = s.all_pass() ? "pass" : "fail";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : s.results) {
        nlohmann::json c;
        c["id"] = r.id;
        c["title"] = r.title;
        c["pass"] = r.pass;
        c["detail"] = r.detail;
        c["budget_seconds"] = r.budget_seconds;
        nlohmann::json m = nlohmann::json::object();
        for (const auto& [k, v] : r.metrics) {
            m[k] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(format_number(v));
        }
        c["metrics"] = m;
        arr.push_back(c);
    }
    j["criteria"] = arr;
    return j.dump(2) + "\n";
}

}  // namespace opuc::harness
