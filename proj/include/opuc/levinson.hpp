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
#include <utility>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/seq.hpp"

namespace opuc {

/// A factor (z - point)^order.
struct RationalFactor {
    cplx point;
    int order = 1;
};

/**
 * Weight on the circle, either w = |f(e^{i theta})|^2 with
 * f(z) = prod (z - zeros)^order / prod (z - poles)^order (all points off the
 * closed disk), or samples on a uniform grid theta_m = 2 pi m / M.
 * Normalization to unit mass happens in moments().
 */
class WeightSpec {
public:
    static WeightSpec uniform();
    static WeightSpec rational(std::vector<RationalFactor> zeros,
                               std::vector<RationalFactor> poles);
    /// Bernstein-Szego weight 1 / |phi_N(e^{i theta})|^2 for alpha_0..alpha_{N-1}.
    static WeightSpec bernstein_szego(std::vector<cplx> alphas);
    static WeightSpec sampled(std::vector<double> values);

    /// Weight values on the M-point grid; throws positivity_failure if any <= 0.
    std::vector<double> sample(std::size_t M) const;

    const std::vector<RationalFactor>& zeros() const { return zeros_; }
    const std::vector<RationalFactor>& poles() const { return poles_; }

private:
    enum class Kind { Uniform, Rational, BernsteinSzego, Sampled };
    Kind kind_ = Kind::Uniform;
    std::vector<RationalFactor> zeros_;
    std::vector<RationalFactor> poles_;
    std::vector<cplx> alphas_;
    std::vector<double> values_;
};

inline constexpr std::size_t kDefaultGrid = 4096;

/**
 * c_k = int e^{-ik theta} w dtheta / 2pi for k = 0..k_max by the M-point
 * rectangle rule, scaled so c_0 = 1. Needs M >= 8 k_max.
 */
std::vector<cplx> moments(const WeightSpec& spec, std::size_t k_max,
                          std::size_t M = kDefaultGrid);

/**
 * alpha_0..alpha_{n-1} from c_0..c_n by the Szego recursion run against the
 * moment functional: conj(alpha_k) = sum_j Phi_k[j] conj(c_{j+1}) / E_k.
 * Throws positivity_failure when E_k stops being positive.
 */
std::vector<cplx> verblunsky_from_moments(std::span<const cplx> c, std::size_t n);

/// Moments then coefficients, wrapped as an Explicit sequence.
VerblunskySeq levinson_sequence(const WeightSpec& spec, std::size_t n,
                                std::size_t M = kDefaultGrid);

/**
 * Weight f = (z - 1/b) / prod (z - z_j)^{k_j}: D^{-1} has a single pole at 1/b
 * and zeros of order k_j at z_j, so alpha_j is BLS with rate b.
 */
WeightSpec prescribed_singularities(double b, std::vector<RationalFactor> d_inverse_zeros);

/// C ~ alpha_j b^{-j}, averaged over the last `tail` indices.
cplx estimate_bls_constant(std::span<const cplx> alphas, double b, std::size_t tail = 4);

}  // namespace opuc
