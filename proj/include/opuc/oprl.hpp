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
#include <map>
#include <span>
#include <vector>

#include "opuc/common.hpp"

namespace opuc {

/// x = 2 cos(theta) for Jacobi matrices near the free one, x = cos(theta)
/// for the Jacobi polynomials on [-1, 1].
enum class ThetaScale { TwoCos, Cos };

/**
 * Recurrence x P_n = P_{n+1} + b_{n+1} P_n + a_n^2 P_{n-1}, indices from 1.
 * A base family supplies a_n, b_n; individual entries can be overridden.
 */
class JacobiParams {
public:
    /// a_n = 1, b_n = 0.
    static JacobiParams free();
    /// Free with a_1 = sqrt(2): monic Chebyshev polynomials of the first kind.
    static JacobiParams chebyshev_first();
    /// Monic Jacobi polynomials for the weight (1-x)^alpha (1+x)^beta on [-1, 1].
    static JacobiParams jacobi(double alpha, double beta);

    JacobiParams with_a(std::size_t n, double value) const;
    JacobiParams with_b(std::size_t n, double value) const;

    double a(std::size_t n) const;
    double b(std::size_t n) const;
    ThetaScale scale() const { return scale_; }

    /// sum_{n <= n_max} n (|a_n - 1| + |b_n|).
    double perturbation_sum(std::size_t n_max) const;

private:
    enum class Base { Free, Jacobi };
    Base base_ = Base::Free;
    double ja_ = 0.0;
    double jb_ = 0.0;
    ThetaScale scale_ = ThetaScale::TwoCos;
    std::map<std::size_t, double> a_over_;
    std::map<std::size_t, double> b_over_;
};

/// Ascending real coefficients of the monic P_n.
std::vector<double> oprl_recurse(const JacobiParams& params, std::size_t n);

/// Zeros split by the spectral window: theta ascending in (0, pi) for x
/// inside [-2, 2] (or [-1, 1]), the rest as raw x values.
struct ThetaZeros {
    std::vector<double> theta;
    std::vector<double> outside;
    ThetaScale scale = ThetaScale::TwoCos;
};

/// Eigenvalues of the n x n truncation, ascending, by Sturm bisection.
std::vector<double> jacobi_eigenvalues(const JacobiParams& params, std::size_t n);
ThetaZeros oprl_zeros(const JacobiParams& params, std::size_t n);

enum class Resonance { Resonant, Nonresonant };

struct ResonanceFit {
    double limit;      // fitted lim n theta_1
    double slope;      // coefficient of 1/n in the fit
    double margin;     // distance from the limit to the other class value
    Resonance classification;
    std::vector<double> n_theta1;
};

/// Least-squares fit n theta_1 = L + c/n; L near pi is nonresonant, near pi/2
/// resonant. Throws inconclusive if L is outside [pi/2 - 0.3, pi + 0.3].
ResonanceFit resonance_scaling(const JacobiParams& params, std::span<const std::size_t> n_list);

ThetaZeros jacobi_poly_zeros(double alpha, double beta, std::size_t n);

/// P_n^(alpha,beta)(x) in the classical normalization P_n(1) = binom(n + alpha, n).
double jacobi_poly_value(double alpha, double beta, std::size_t n, double x);

/// k(theta) = pi^{-1/2} sin(theta/2)^{-alpha-1/2} cos(theta/2)^{-beta-1/2}.
double darboux_k(double alpha, double beta, double theta);
/// gamma(theta) = (alpha + beta + 1) theta / 2 - (alpha + 1/2) pi / 2.
double darboux_gamma(double alpha, double beta, double theta);

struct DarbouxValue {
    double lhs;  // P_n(cos theta)
    double rhs;  // n^{-1/2} k(theta) cos(n theta + gamma(theta))
};

/// Requires theta in [eps, pi - eps].
DarbouxValue darboux_eval(double alpha, double beta, double theta, std::size_t n,
                          double eps = 0.1);

}  // namespace opuc
