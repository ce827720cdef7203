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
#include <span>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/roots.hpp"
#include "opuc/seq.hpp"

namespace opuc {

enum class Region { Outer, Inner, Critical };
const char* region_name(Region r);

/// Error curve at one point. Errors are kept as natural logs because the
/// interesting values fall far below the double range.
struct PointSeries {
    cplx z;
    std::vector<double> log_error;  // -inf when the error is exactly zero
    double slope = 0.0;             // d log(error) / dn over the last half of n_list
    double rate = 0.0;              // exp(slope)
    double rate_bound = 1.0;        // admissible per-step rate
    bool monotone_tail = false;     // decreasing after the first third of n_list
    bool pass = false;
};

struct AsymReport {
    Region region = Region::Outer;
    double b = 0.0;
    std::vector<std::size_t> n_list;
    std::vector<PointSeries> points;
    bool pass() const;
};

struct AsymOptions {
    double eps = 0.1;             // region margin around |z| = b
    double slack = 0.5;           // outer rate bound (b + eps) / |z| (1 + slack)
    std::size_t reference_n = 1500;
    double slope_threshold = -0.01;
};

/**
 * Outer region b + eps < |z| <= 1:
 * |z^{-n} phi_n(z) - conj(D^{-1}(1/conj z))|.
 * Accepts BLS sequences and the zero sequence.
 */
AsymReport verify_outer(const VerblunskySeq& seq, std::span<const cplx> points,
                        std::span<const std::size_t> n_list, const AsymOptions& opts = {});

/// Inner region |z| < b - eps: |b^{-n} phi_n(z) - conj(C) (z - b)^{-1} D^{-1}(z)|. Needs C != 0.
AsymReport verify_inner(const VerblunskySeq& seq, std::span<const cplx> points,
                        std::span<const std::size_t> n_list, const AsymOptions& opts = {});

/**
 * Critical annulus 0.8 b <= |z| <= 1.25 b: the two-term remainder
 * |phi_n - conj(D^{-1}(1/conj z)) z^n - conj(C) (z - b)^{-1} D^{-1}(z) b^n| / b^n.
 * Near z = b the remainder is averaged over a small circle (it is analytic
 * there; the two poles cancel).
 */
AsymReport verify_critical(const VerblunskySeq& seq, std::span<const cplx> points,
                           std::span<const std::size_t> n_list, const AsymOptions& opts = {});

/// Least-squares slope of y against x.
double ls_slope(std::span<const double> x, std::span<const double> y);

/// Zeros of f_n(z) = z^n - K (1 - z)^k.
ZeroSet model_zeros(cplx K, int k, std::size_t n);

struct ModelCheck {
    double M = 0.0;                 // exclusion |z| >= 1 + M/n uses M = 2 log(|K| 2^k) + 1
    double observed_M = 0.0;        // n max(|z_j| - 1, 0)
    std::size_t outer_violations = 0;
    std::size_t inner_violations = 0;   // |z| <= 1 - 2k log n / n
    std::size_t near_one_violations = 0;  // |z - 1| <= (k/2) log n / n
    double max_gap_scaled = 0.0;    // max interior |gap - 2 pi/n| n log n
    std::size_t interior_gaps = 0;
    bool exclusions_hold() const {
        return outer_violations == 0 && inner_violations == 0 && near_one_violations == 0;
    }
};

/**
 * Interior gaps are consecutive argument gaps between zeros with
 * |arg z| > 2k log n / n (away from the slip region around z = 1).
 */
ModelCheck check_model_zeros(const ZeroSet& zeros, cplx K, int k, std::size_t n);

}  // namespace opuc
