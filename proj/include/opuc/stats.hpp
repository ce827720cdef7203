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
#include <cstdint>
#include <span>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/roots.hpp"
#include "opuc/seq.hpp"

namespace opuc {

/**
 * How the bulk gaps close up.
 * Wraparound: theta_{last+1} = theta_first + 2 pi (paraorthogonal zeros).
 * PinnedAtZero: a virtual point at arg 0 stands in for the zero that BLS
 * families lack near z = b, so the gap across arg 0 is measured separately.
 */
enum class ClockConvention { Wraparound, PinnedAtZero };

struct ClockOptions {
    double radius_margin = -1.0;  // outliers have |z| > b + margin; < 0 means 0.1 (1 - b)
    ClockConvention convention = ClockConvention::Wraparound;
    double period = 0.0;          // target gap; 0 means 2 pi / n
};

struct ClockReport {
    std::size_t n = 0;
    double b = 0.0;
    double period = 0.0;
    double radius_margin = 0.0;
    double sup_dev = 0.0;      // sup_j n |theta_{j+1} - theta_j - period|
    double radial_sup = 0.0;   // sup_j ||z_j| - b| over the bulk
    double ratio_sup = 0.0;    // sup_j ||z_{j+1}| / |z_j| - 1| over argument neighbours
    double gap_at_zero = 0.0;  // bulk arc gap containing arg 0
    bool gap_at_zero_ok = false;  // within 25% of 2 period
    std::vector<cplx> outliers;
    std::vector<double> bulk_arguments;
};

/// Bulk/outlier split and clock statistics; throws empty_bulk.
ClockReport clock_metrics(const ZeroSet& zeros, double b, const ClockOptions& opts = {});

inline constexpr double kGapTolerance = 0.25;

/// sup n |theta_{j+1} - theta_j - period| over sorted angles in [lo, hi], no wraparound.
double interval_clock_sup(std::span<const double> theta, std::size_t n, double period,
                          double lo, double hi);

/// One canonical interval: [theta_anchor + 2 pi a / n, theta_anchor + 2 pi b / n].
struct IntervalSpec {
    double theta_anchor = 0.0;
    double a = 0.0;
    double b = 1.0;
};

/// Half-open arc [start, start + length) on the circle, start in [0, 2 pi).
struct Arc {
    double start = 0.0;
    double length = 0.0;
    double lambda = 0.0;  // b - a, the expected count
    bool contains(double theta) const;
};

/// Throws interval_order when same-anchor intervals violate b_j < a_{j+1}.
std::vector<Arc> canonical_intervals(std::size_t n, std::span<const IntervalSpec> spec);

/// e^{-lambda} lambda^l / l!
double poisson_pmf(double lambda, std::size_t l);

/// Total variation between a count histogram and Poisson(lambda), with the
/// Poisson tail beyond the histogram counted in full.
double tv_to_poisson(std::span<const std::size_t> histogram, std::size_t total, double lambda);

struct IntervalCounts {
    Arc arc;
    std::vector<std::size_t> histogram;  // histogram[l] = trials with l zeros in the arc
    std::vector<double> pmf;             // Poisson(lambda) at the same l
    double tv = 0.0;
    double mean = 0.0;
};

struct PoissonReport {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<IntervalCounts> intervals;
    std::vector<std::vector<double>> correlation;  // Pearson, between interval counts
    /// joint[i][j]: trials with i zeros in the first arc and j in the second.
    std::vector<std::vector<std::size_t>> joint;
    double mean_eta_derivative = 0.0;  // ensemble mean of d eta / d theta at theta = 1
    std::vector<double> spacings;      // pooled n gap / 2 pi, trial order
};

struct PoissonOptions {
    std::size_t min_trials = 200;
    unsigned threads = 0;  // 0: default_threads()
    bool keep_spacings = true;
};

/**
 * Paraorthogonal zeros for `trials` independent draws. Trial i reseeds a
 * random family with rng::trial_seed(seed, i) and draws beta uniformly from
 * the same trial seed; deterministic families only get the random beta.
 */
PoissonReport poisson_experiment(const VerblunskySeq& family, std::size_t n,
                                 std::size_t trials, std::span<const IntervalSpec> intervals,
                                 std::uint64_t seed, const PoissonOptions& opts = {});

/// Sorted normalized spacings n (theta_{j+1} - theta_j) / 2 pi with wraparound.
std::vector<double> normalized_spacings(std::span<const double> sorted_angles);

/// Empirical CDF sample: sorted spacings; needs >= 1e4 values.
std::vector<double> spacing_cdf(std::vector<double> spacings);

inline constexpr std::size_t kMinPooledGaps = 10000;

/// Kolmogorov distance from a sorted sample to 1 - e^{-s}.
double ks_to_exponential(std::span<const double> sorted);

}  // namespace opuc
