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
#include "opuc/roots.hpp"

using namespace opuc;

TEST_SUITE("roots") {
    TEST_CASE("roots of unity") {
        for (std::size_t n : {1, 2, 7, 64, 200}) {
            CoeffVec p(n + 1, 0.0);
            p[0] = -1.0;
            p[n] = 1.0;
            const auto zs = find_roots(p);
            REQUIRE(zs.size() == n);
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(std::abs(zs.argument(j) - kTwoPi * double(j) / double(n)) < 1e-12);
                CHECK(std::abs(zs.modulus(j) - 1.0) < 1e-13);
            }
        }
    }

    TEST_CASE("property: expand then solve recovers the zeros") {
        auto g = gen::rng(31);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = gen::size_in(g, 1, 40);
            std::vector<cplx> z(n);
            for (auto& x : z) {
                x = gen::in_disk(g, 1.0);
            }
            const auto zs = find_roots(expand_roots(z));
            CHECK(hausdorff(zs.zeros, z) < 1e-7);
            CHECK(zs.max_residual() <= 1e-12 * zs.coeff_norm);
        }
    }

    TEST_CASE("output is sorted by argument") {
        auto g = gen::rng(32);
        std::vector<cplx> z(30);
        for (auto& x : z) {
            x = gen::in_disk(g, 2.0);
        }
        const auto zs = find_roots(expand_roots(z));
        for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
            CHECK(zs.argument(i) <= zs.argument(i + 1));
        }
    }

    TEST_CASE("double root is reported as a cluster") {
        const auto zs = find_roots(expand_roots({0.5, 0.5, cplx(0.0, -0.7)}));
        REQUIRE(zs.clusters.size() >= 1);
        bool found = false;
        for (const auto& c : zs.clusters) {
            found = found || c.size() == 2;
        }
        CHECK(found);
    }

    TEST_CASE("compensated Horner beats the plain sum on (z - 1)^8 near 1") {
        const auto p = expand_roots(std::vector<cplx>(8, 1.0));
        const cplx z(1.0 + 1e-3, 0.0);
        const auto c = horner_compensated(p, z);
        const double exact = std::pow(z.real() - 1.0, 8.0);  // z - 1 is exact here
    CHECK(std::abs(c.value - exact) < 1e-3 * exact);
    CHECK(c.absbound > 1e20 * exact);
    }

    TEST_CASE("Newton polish") {
        const auto p = expand_roots({0.3, cplx(0.1, 0.9)});
        CHECK(std::abs(refine_root(p, cplx(0.31, 0.01)) - 0.3) < 1e-14);
    }

    TEST_CASE("errors") {
        CHECK(gen::throws_code([] { find_roots({1.0}); }, Errc::degenerate_input));
        CHECK(gen::throws_code([] { find_roots({1.0, 2.0}); }, Errc::precondition));
    }
}
