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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gen.hpp"
#include "opuc/cmv.hpp"
#include "opuc/pop.hpp"
#include "opuc/roots.hpp"

using namespace opuc;

namespace {

std::vector<double> sorted_args(const std::vector<cplx>& z) {
    std::vector<double> a;
    for (cplx x : z) {
        a.push_back(arg_2pi(x));
    }
    std::sort(a.begin(), a.end());
    return a;
}

double circ(double a, double b) {
    const double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

}  // namespace

TEST_SUITE("pop") {
    TEST_CASE("alpha = 0: zeros solve z^n = conj(beta)") {
        const cplx beta = std::polar(1.0, 0.9);
        const std::size_t n = 16;
        const auto th = pop_zeros_by_phase(PopSpec(VerblunskySeq::constant(0.0), beta), n);
        REQUIRE(th.size() == n);
        for (double t : th) {
            CHECK(std::abs(std::polar(1.0, double(n) * t) - std::conj(beta)) < 1e-12);
        }
    }

    TEST_CASE("pop_poly is z Phi_{n-1} - conj(beta) Phi_{n-1}^*") {
        const auto seq = VerblunskySeq::bls(0.5, 0.5);
        const cplx beta = std::polar(1.0, -1.3);
        const auto p = pop_poly(PopSpec(seq, beta), 5);
        const auto q = recurse(seq, 4);
        for (std::size_t k = 0; k <= 5; ++k) {
            const cplx zp = k > 0 ? q.phi[k - 1] : 0.0;
            const cplx st = k < 5 ? q.phi_star[k] : 0.0;
            CHECK(std::abs(p[k] - (zp - std::conj(beta) * st)) < 1e-15);
        }
    }

    TEST_CASE("property: phase zeros match Aberth roots and CMV eigenvalues") {
        auto g = gen::rng(41);
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t n = gen::size_in(g, 3, 60);
            // The CMV truncation reads alpha_{n-1}, then overrides it with beta.
            const auto al = gen::alphas(g, n, 0.97);
            const cplx beta = gen::unimodular(g);
            const auto seq = VerblunskySeq::explicit_list(al);
            const auto th = pop_zeros_by_phase(PopSpec(seq, beta), n);
            REQUIRE(th.size() == n);
            const auto ab = sorted_args(find_roots(pop_poly(PopSpec(seq, beta), n)).zeros);
            const auto ev = sorted_args(cmv_eigenvalues(build_truncation(seq, n, beta)));
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(circ(th[j], ab[j]) < 1e-9);
                CHECK(circ(th[j], ev[j]) < 1e-9);
            }
        }
    }

    TEST_CASE("property: winding is 2 pi n and eta increases") {
        auto g = gen::rng(42);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = gen::size_in(g, 2, 150);
            const PopSpec spec(VerblunskySeq::explicit_list(gen::alphas(g, n - 1, 0.99)),
                               gen::unimodular(g));
            CHECK(std::abs(eta_winding(spec, n) - kTwoPi * double(n)) < 1e-6);
            std::vector<double> grid(8 * n);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                grid[i] = kTwoPi * double(i) / double(grid.size());
            }
            const auto eta = eta_phase(spec, n, grid);
            for (std::size_t i = 0; i + 1 < eta.size(); ++i) {
                CHECK(eta[i + 1] > eta[i]);
            }
        }
    }

    TEST_CASE("random beta is reproducible per (seed, n)") {
        const auto s = PopSpec::random_beta(VerblunskySeq::constant(0.0), 9);
        CHECK(s.beta_for(10) == s.beta_for(10));
        CHECK(s.beta_for(10) != s.beta_for(11));
        CHECK(std::abs(std::abs(s.beta_for(10)) - 1.0) < 1e-15);
    }

    TEST_CASE("errors") {
        CHECK(gen::throws_code([] { PopSpec(VerblunskySeq::constant(0.0), 0.0); },
                               Errc::invalid_parameter));
        const PopSpec s(VerblunskySeq::constant(0.0), 1.0);
        CHECK(gen::throws_code([&] { pop_poly(s, 0); }, Errc::precondition));
        const std::vector<double> coarse{0.0, 1.0};
        CHECK(gen::throws_code([&] { eta_phase(s, 4, coarse); }, Errc::precondition));
    }
}
