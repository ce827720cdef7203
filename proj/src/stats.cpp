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

#include "opuc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "opuc/kernels.hpp"
#include "opuc/parallel.hpp"
#include "opuc/pop.hpp"
#include "opuc/rng.hpp"

namespace opuc {

namespace {

double wrap_2pi(double t) {
    t = std::fmod(t, kTwoPi);
    return t < 0.0 ? t + kTwoPi : t;
}

}  // namespace

ClockReport clock_metrics(const ZeroSet& zeros, double b, const ClockOptions& opts) {
    if (zeros.size() == 0) {
        throw Error(Errc::empty_bulk, "zero set is empty");
    }
    ClockReport rep;
    rep.n = zeros.size();
    rep.b = b;
    rep.radius_margin = opts.radius_margin < 0.0 ? 0.1 * (1.0 - b) : opts.radius_margin;
    const double nn = static_cast<double>(rep.n);
    rep.period = opts.period > 0.0 ? opts.period : kTwoPi / nn;

    std::vector<std::pair<double, double>> bulk;  // (argument, modulus)
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const double r = zeros.modulus(i);
        if (r > b + rep.radius_margin) {
            rep.outliers.push_back(zeros.zeros[i]);
        } else {
            bulk.emplace_back(zeros.argument(i), r);
        }
    }
    if (bulk.empty()) {
        throw Error(Errc::empty_bulk, "every zero is classified as an outlier");
    }
    std::sort(bulk.begin(), bulk.end());
    std::vector<double> moduli;
    for (const auto& [t, r] : bulk) {
        rep.bulk_arguments.push_back(t);
        moduli.push_back(r);
    }
    const auto& th = rep.bulk_arguments;
    std::vector<double> gaps;
    if (opts.convention == ClockConvention::PinnedAtZero) {
        gaps.push_back(th.front());
    }
    for (std::size_t i = 0; i + 1 < th.size(); ++i) {
        gaps.push_back(th[i + 1] - th[i]);
    }
    if (opts.convention == ClockConvention::PinnedAtZero) {
        gaps.push_back(kTwoPi - th.back());
    } else {
        gaps.push_back(th.front() + kTwoPi - th.back());
    }
    for (double g : gaps) {
        rep.sup_dev = std::max(rep.sup_dev, nn * std::abs(g - rep.period));
    }
    rep.gap_at_zero = th.front() + kTwoPi - th.back();
    rep.gap_at_zero_ok =
        std::abs(rep.gap_at_zero - 2.0 * rep.period) <= kGapTolerance * 2.0 * rep.period;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        rep.radial_sup = std::max(rep.radial_sup, std::abs(moduli[i] - b));
        if (i + 1 < moduli.size()) {
            rep.ratio_sup = std::max(rep.ratio_sup, std::abs(moduli[i + 1] / moduli[i] - 1.0));
        }
    }
    return rep;
}

double interval_clock_sup(std::span<const double> theta, std::size_t n, double period, double lo,
                          double hi) {
    double sup = 0.0;
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i + 1 < theta.size(); ++i) {
        if (theta[i] >= lo && theta[i + 1] <= hi) {
            sup = std::max(sup, nn * std::abs(theta[i + 1] - theta[i] - period));
        }
    }
    return sup;
}

bool Arc::contains(double theta) const { return wrap_2pi(theta - start) < length; }

std::vector<Arc> canonical_intervals(std::size_t n, std::span<const IntervalSpec> spec) {
    if (n == 0) {
        throw Error(Errc::invalid_parameter, "n must be positive");
    }
    std::map<double, std::vector<IntervalSpec>> by_anchor;
    for (const auto& s : spec) {
        if (!(s.b > s.a)) {
            throw Error(Errc::interval_order, "each interval needs a < b");
        }
        if (s.b - s.a >= static_cast<double>(n)) {
            throw Error(Errc::interval_order, "interval longer than the full circle");
        }
        by_anchor[wrap_2pi(s.theta_anchor)].push_back(s);
    }
    for (auto& [anchor, list] : by_anchor) {
        std::sort(list.begin(), list.end(),
                  [](const IntervalSpec& x, const IntervalSpec& y) { return x.a < y.a; });
        for (std::size_t j = 0; j + 1 < list.size(); ++j) {
            if (!(list[j].b < list[j + 1].a)) {
                std::ostringstream os;
                os << "intervals at anchor " << anchor << " need b_j < a_{j+1} (" << list[j].b
                   << " vs " << list[j + 1].a << ")";
                throw Error(Errc::interval_order, os.str());
            }
        }
    }
    std::vector<Arc> arcs;
    const double unit = kTwoPi / static_cast<double>(n);
    for (const auto& s : spec) {
        Arc a;
        a.start = wrap_2pi(s.theta_anchor + unit * s.a);
        a.length = unit * (s.b - s.a);
        a.lambda = s.b - s.a;
        arcs.push_back(a);
    }
    return arcs;
}

double poisson_pmf(double lambda, std::size_t l) {
    const double ld = static_cast<double>(l);
    return std::exp(-lambda + ld * std::log(lambda) - std::lgamma(ld + 1.0));
}

double tv_to_poisson(std::span<const std::size_t> histogram, std::size_t total, double lambda) {
    double diff = 0.0;
    double covered = 0.0;
    for (std::size_t l = 0; l < histogram.size(); ++l) {
        const double p = poisson_pmf(lambda, l);
        covered += p;
        diff += std::abs(static_cast<double>(histogram[l]) / static_cast<double>(total) - p);
    }
    return 0.5 * (diff + std::max(0.0, 1.0 - covered));
}

std::vector<double> normalized_spacings(std::span<const double> a) {
    std::vector<double> out;
    if (a.empty()) {
        return out;
    }
    const double nn = static_cast<double>(a.size());
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        out.push_back(nn * (a[i + 1] - a[i]) / kTwoPi);
    }
    out.push_back(nn * (a.front() + kTwoPi - a.back()) / kTwoPi);
    return out;
}

std::vector<double> spacing_cdf(std::vector<double> spacings) {
    if (spacings.size() < kMinPooledGaps) {
        throw Error(Errc::precondition, "spacing CDF needs at least 10000 pooled gaps, got " +
                                            std::to_string(spacings.size()));
    }
    std::sort(spacings.begin(), spacings.end());
    return spacings;
}

double ks_to_exponential(std::span<const double> s) {
    const double N = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double F = 1.0 - std::exp(-std::max(0.0, s[i]));
        d = std::max({d, std::abs(F - static_cast<double>(i) / N),
                      std::abs(F - static_cast<double>(i + 1) / N)});
    }
    return d;
}

PoissonReport poisson_experiment(const VerblunskySeq& family, std::size_t n, std::size_t trials,
                                 std::span<const IntervalSpec> intervals, std::uint64_t seed,
                                 const PoissonOptions& opts) {
    if (trials < opts.min_trials) {
        throw Error(Errc::precondition, "Poisson experiment needs at least " +
                                            std::to_string(opts.min_trials) + " trials");
    }
    if (n < 2) {
        throw Error(Errc::invalid_parameter, "n must be at least 2");
    }
    const auto arcs = canonical_intervals(n, intervals);
    const std::size_t m = arcs.size();

    struct Trial {
        std::vector<std::size_t> counts;
        double deta = 0.0;
        std::vector<double> spacings;
    };
    std::vector<Trial> out(trials);
    parallel_for(trials, opts.threads ? opts.threads : default_threads(), [&](std::size_t i) {
        const std::uint64_t ts = rng::trial_seed(seed, i);
        VerblunskySeq s = family.is_random() ? family.with_seed(ts) : family;
        const auto alphas = s.alphas(n - 1);
        const PopSpec spec = PopSpec::random_beta(std::move(s), ts);
        const cplx beta = spec.beta_for(n);
        const auto angles = pop_zeros_by_phase(alphas, beta);
        Trial& t = out[i];
        t.counts.assign(m, 0);
        for (double th : angles) {
            for (std::size_t k = 0; k < m; ++k) {
                t.counts[k] += arcs[k].contains(th);
            }
        }
        constexpr double h = 1e-6;
        const double grid[2] = {1.0 - h, 1.0 + h};
        double eta[2];
        kernels::pop_phase_batch(alphas.data(), alphas.size(), std::arg(beta), grid, 2, eta);
        t.deta = (eta[1] - eta[0]) / (2.0 * h);
        if (opts.keep_spacings) {
            t.spacings = normalized_spacings(angles);
        }
    });

    PoissonReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;
    const double T = static_cast<double>(trials);
    for (std::size_t k = 0; k < m; ++k) {
        IntervalCounts ic;
        ic.arc = arcs[k];
        std::size_t max_count = 0;
        for (const auto& t : out) {
            max_count = std::max(max_count, t.counts[k]);
        }
        ic.histogram.assign(max_count + 1, 0);
        double sum = 0.0;
        for (const auto& t : out) {
            ++ic.histogram[t.counts[k]];
            sum += static_cast<double>(t.counts[k]);
        }
        ic.mean = sum / T;
        for (std::size_t l = 0; l <= max_count; ++l) {
            ic.pmf.push_back(poisson_pmf(arcs[k].lambda, l));
        }
        ic.tv = tv_to_poisson(ic.histogram, trials, arcs[k].lambda);
        rep.intervals.push_back(std::move(ic));
    }
    rep.correlation.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
            const double mp = rep.intervals[p].mean;
            const double mq = rep.intervals[q].mean;
            double cpq = 0.0, vp = 0.0, vq = 0.0;
            for (const auto& t : out) {
                const double dp = static_cast<double>(t.counts[p]) - mp;
                const double dq = static_cast<double>(t.counts[q]) - mq;
                cpq += dp * dq;
                vp += dp * dp;
                vq += dq * dq;
            }
            rep.correlation[p][q] = (vp > 0.0 && vq > 0.0) ? cpq / std::sqrt(vp * vq) : 0.0;
        }
    }
    if (m >= 2) {
        rep.joint.assign(rep.intervals[0].histogram.size(),
                         std::vector<std::size_t>(rep.intervals[1].histogram.size(), 0));
        for (const auto& t : out) {
            ++rep.joint[t.counts[0]][t.counts[1]];
        }
    }
    double deta = 0.0;
    for (const auto& t : out) {
        deta += t.deta;
        rep.spacings.insert(rep.spacings.end(), t.spacings.begin(), t.spacings.end());
    }
    rep.mean_eta_derivative = deta / T;
    return rep;
}

}  // namespace opuc
