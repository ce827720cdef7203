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

#include <cmath>

#include "doctest.h"
#include "gen.hpp"
#include "opuc/levinson.hpp"
#include "opuc/szegofn.hpp"

using namespace opuc;

TEST_SUITE("levinson") {
    TEST_CASE("uniform weight gives alpha = 0 exactly") {
        const auto a = verblunsky_from_moments(moments(WeightSpec::uniform(), 16), 16);
        for (cplx x : a) {
            CHECK(x == cplx(0.0));
        }
    }

    TEST_CASE("property: Bernstein-Szego roundtrip") {
        auto g = gen::rng(51);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t N = gen::size_in(g, 1, 6);
            const auto al = gen::alphas(g, N, 0.7);
            const auto back =
                verblunsky_from_moments(moments(WeightSpec::bernstein_szego(al), 12), 12);
            for (std::size_t j = 0; j < 12; ++j) {
                const cplx want = j < N ? al[j] : 0.0;
                CHECK(std::abs(back[j] - want) < 1e-9);
            }
        }
    }

    TEST_CASE("single pole at 1/a is the one-coefficient weight") {
        const cplx a(0.3, 0.4);
        const auto w = WeightSpec::rational({}, {{1.0 / a, 1}});
        const auto al = verblunsky_from_moments(moments(w, 8), 8);
        CHECK(std::abs(al[0] - a) < 1e-12);
        for (std::size_t j = 1; j < 8; ++j) {
            CHECK(std::abs(al[j]) < 1e-12);
        }
    }

    TEST_CASE("prescribed singularities give BLS decay and the expected D") {
        const auto w = prescribed_singularities(0.5, {{3.0, 1}});
        // Beyond j ~ 30 the coefficients sink under the moment rounding.
        const auto al = levinson_sequence(w, 30).alphas(30);
        CHECK(std::abs(al[21] / al[20] - 0.5) < 1e-3);
        const cplx C = estimate_bls_constant(al, 0.5);
        CHECK(std::abs(al[20] / std::pow(0.5, 20.0) - C) < 1e-2 * std::abs(C));
        // D^{-1}(z) is proportional to (z - 3) / (z - 2).
        const cplx z(0.3, 0.2);
        const cplx ratio = d_inverse(al, z).value / d_inverse(al, 0.0).value;
        CHECK(std::abs(ratio - (2.0 / 3.0) * (z - 3.0) / (z - 2.0)) < 1e-10);
    }

    TEST_CASE("errors") {
        CHECK(gen::throws_code([] { moments(WeightSpec::uniform(), 100, 256); },
                               Errc::resolution));
        CHECK(gen::throws_code([] { WeightSpec::sampled({1.0, -1.0, 1.0, 1.0}).sample(4); },
                               Errc::positivity_failure));
        const std::vector<cplx> bad{1.0, 2.0, 0.0};
        CHECK(gen::throws_code([&] { verblunsky_from_moments(bad, 2); },
                               Errc::positivity_failure));
        CHECK(gen::throws_code([] { WeightSpec::rational({}, {{0.5, 1}}); },
                               Errc::invalid_parameter));
    }
}
