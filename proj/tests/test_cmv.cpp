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
#include "opuc/roots.hpp"
#include "opuc/szego.hpp"

using namespace opuc;

TEST_SUITE("cmv") {
    TEST_CASE("1 x 1 truncation is conj(alpha_0)") {
        const auto t = build_truncation(VerblunskySeq::constant(cplx(0.3, 0.4)), 1);
        CHECK(std::abs(t.at(0, 0) - cplx(0.3, -0.4)) < 1e-15);
        const auto cp = char_poly(t);
        CHECK(std::abs(cp[0] + cplx(0.3, -0.4)) < 1e-15);
    }

    TEST_CASE("2 x 2 truncation by hand") {
        const cplx a0(0.2, 0.1);
        const cplx a1(-0.4, 0.3);
        const auto t = build_truncation(VerblunskySeq::explicit_list({a0, a1}), 2);
        const double r0 = std::sqrt(1.0 - std::norm(a0));
        CHECK(std::abs(t.at(0, 0) - std::conj(a0)) < 1e-15);
        CHECK(std::abs(t.at(0, 1) - r0 * std::conj(a1)) < 1e-15);
        CHECK(std::abs(t.at(1, 0) - r0) < 1e-15);
        CHECK(std::abs(t.at(1, 1) + a0 * std::conj(a1)) < 1e-15);
    }

    TEST_CASE("property: det(zI - C^(N)) equals Phi_N") {
        auto g = gen::rng(21);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t N = gen::size_in(g, 1, 30);
            const auto al = gen::alphas(g, N);
            const auto seq = VerblunskySeq::explicit_list(al);
            const auto cp = char_poly(build_truncation(seq, N));
            CHECK(gen::max_abs_diff(cp, recurse(al).phi) < 1e-10);
        }
    }

    TEST_CASE("property: unimodular last coefficient gives eigenvalues on the circle") {
        auto g = gen::rng(22);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t N = gen::size_in(g, 4, 40);
            const auto seq = VerblunskySeq::explicit_list(gen::alphas(g, N));
            const auto ev = cmv_eigenvalues(build_truncation(seq, N, gen::unimodular(g)));
            for (cplx z : ev) {
                CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
            }
        }
    }

    TEST_CASE("eigenvalues agree with the zeros of Phi_N") {
        auto g = gen::rng(23);
        const auto al = gen::alphas(g, 25, 0.8);
        const auto seq = VerblunskySeq::explicit_list(al);
        const auto ev = cmv_eigenvalues(build_truncation(seq, 25));
        const auto zs = find_roots(recurse(al).phi);
        CHECK(hausdorff(ev, zs.zeros) < 1e-8);
    }

    TEST_CASE("normalized moments are power sums of the zeros") {
        const auto seq = VerblunskySeq::bls(0.5, 0.5);
        const std::size_t N = 12;
        const auto m = normalized_moments(build_truncation(seq, N), 4);
        const auto zs = find_roots(recurse(seq, N).phi);
        for (std::size_t k = 1; k <= 4; ++k) {
            cplx s = 0.0;
            for (cplx z : zs.zeros) {
                s += std::pow(z, double(k));
            }
            CHECK(std::abs(m[k - 1] - s / double(N)) < 1e-12);
        }
    }

    TEST_CASE("errors") {
        const auto seq = VerblunskySeq::constant(0.1);
        CHECK(gen::throws_code([&] { build_truncation(seq, 0); }, Errc::precondition));
        CHECK(gen::throws_code([&] { char_poly(build_truncation(seq, 65)); }, Errc::size_limit));
        CHECK(gen::throws_code([&] { build_truncation(seq, 4, cplx(1.5)); },
                               Errc::invalid_parameter));
    }
}
