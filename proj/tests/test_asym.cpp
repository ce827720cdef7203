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
#include "opuc/asym.hpp"

using namespace opuc;

TEST_SUITE("asym") {
    TEST_CASE("least-squares slope of an exact line") {
        const std::vector<double> x{1, 2, 3, 4, 5};
        const std::vector<double> y{2.5, 2.0, 1.5, 1.0, 0.5};
        CHECK(ls_slope(x, y) == doctest::Approx(-0.5));
    }

    TEST_CASE("outer errors of a BLS sequence decay geometrically") {
        const auto s = VerblunskySeq::bls(0.5, 0.5);
        const std::vector<cplx> pts{0.9, std::polar(0.8, 2.0)};
        const std::vector<std::size_t> ns{20, 40, 60, 80};
        const auto r = verify_outer(s, pts, ns);
        CHECK(r.pass());
        for (const auto& p : r.points) {
            CHECK(p.rate < p.rate_bound);
            for (std::size_t k = 0; k + 1 < ns.size(); ++k) {
                CHECK(p.log_error[k + 1] < p.log_error[k]);
            }
        }
    }

    TEST_CASE("inner and critical regions pass on a BLS sequence") {
        const auto s = VerblunskySeq::bls(cplx(0.3, 0.2), 0.5);
        const std::vector<std::size_t> ns{20, 40, 60, 80};
        const std::vector<cplx> inner{0.0, cplx(0.1, 0.2)};
        const std::vector<cplx> crit{0.5, std::polar(0.55, 1.0)};
        CHECK(verify_inner(s, inner, ns).pass());
        CHECK(verify_critical(s, crit, ns).pass());
    }

    TEST_CASE("region and family checks") {
        const auto s = VerblunskySeq::bls(0.5, 0.5);
        const std::vector<std::size_t> ns{20, 40};
        const std::vector<cplx> near_b{0.55};
        CHECK(gen::throws_code([&] { verify_outer(s, near_b, ns); }, Errc::region_violation));
        CHECK(gen::throws_code([&] { verify_inner(s, near_b, ns); }, Errc::region_violation));
        const std::vector<cplx> zero{0.0};
        CHECK(gen::throws_code([&] { verify_inner(VerblunskySeq::constant(0.0), zero, ns); },
                               Errc::precondition));
        CHECK(gen::throws_code(
            [&] { verify_outer(VerblunskySeq::random_disk(0.5, 1), zero, ns); },
            Errc::precondition));
    }

    TEST_CASE("model zeros solve z^n = K (1 - z)^k") {
        for (int k : {1, 2}) {
            const std::size_t n = 120;
            const auto zs = model_zeros(1.0, k, n);
            REQUIRE(zs.size() == n);
            for (cplx z : zs.zeros) {
                const cplx lhs = std::pow(z, double(n));
                const cplx rhs = std::pow(1.0 - z, double(k));
                CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
            }
        }
    }

    TEST_CASE("model exclusions hold for large n") {
        const std::size_t n = 300;
        const auto mc = check_model_zeros(model_zeros(1.0, 1, n), 1.0, 1, n);
        CHECK(mc.exclusions_hold());
        CHECK(mc.observed_M <= mc.M);
        CHECK(mc.interior_gaps > 0);
        CHECK(gen::throws_code([] { model_zeros(0.0, 1, 10); }, Errc::degenerate_input));
    }
}
