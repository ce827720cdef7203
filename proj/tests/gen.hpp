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

// Hand-rolled generators and helpers shared by the unit tests.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "opuc/common.hpp"

namespace gen {

using opuc::cplx;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Uniform in the disk of radius rho.
inline cplx in_disk(std::mt19937_64& g, double rho) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(rho * std::sqrt(u(g)), 2.0 * opuc::kPi * u(g));
}

inline cplx unimodular(std::mt19937_64& g) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * opuc::kPi);
    return std::polar(1.0, u(g));
}

/// n coefficients with radius drawn per sequence from (0.05, rho_max).
inline std::vector<cplx> alphas(std::mt19937_64& g, std::size_t n, double rho_max = 0.95) {
    std::uniform_real_distribution<double> r(0.05, rho_max);
    const double rho = r(g);
    std::vector<cplx> a(n);
    for (auto& x : a) {
        x = in_disk(g, rho);
    }
    return a;
}

inline std::size_t size_in(std::mt19937_64& g, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(g);
}

inline double real_in(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

/// Runs f and reports whether it threw opuc::Error with the given code.
inline bool throws_code(const std::function<void()>& f, opuc::Errc code) {
    try {
        f();
    } catch (const opuc::Error& e) {
        return e.code() == code;
    }
    return false;
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    REQUIRE(a.size() == b.size());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

}  // namespace gen
