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
#include "opuc/roots.hpp"
#include "opuc/szego.hpp"
#include "opuc/szegofn.hpp"

using namespace opuc;

TEST_SUITE("szegofn") {
    TEST_CASE("alpha = 0 gives D = 1") {
        const auto d = d_inverse(VerblunskySeq::constant(0.0), cplx(0.4, 0.7), 50);
        CHECK(std::abs(d.value - 1.0) < 1e-15);
    }

    TEST_CASE("one-coefficient Bernstein-Szego: D^{-1}(z) = (1 - a z) / rho") {
        const cplx a(0.4, -0.3);
        std::vector<cplx> al(30, 0.0);
        al[0] = a;
        const double rho = std::sqrt(1.0 - std::norm(a));
        for (cplx z : {cplx(0.0), cplx(0.5, 0.5), cplx(-0.9, 0.1)}) {
            CHECK(std::abs(d_inverse(al, z).value - (1.0 - a * z) / rho) < 1e-14);
        }
    }

    TEST_CASE("analyticity rate per family") {
        CHECK(analyticity_b(VerblunskySeq::bls(0.5, 0.3)) == 0.3);
        CHECK(analyticity_b(VerblunskySeq::constant(0.0)) == 0.0);
        CHECK(analyticity_b(VerblunskySeq::constant(0.2)) == 1.0);
        CHECK(analyticity_b(VerblunskySeq::random_disk(0.5, 1)) == 1.0);
    }

    TEST_CASE("domain check past |z| = 1/b") {
        const auto s = VerblunskySeq::bls(0.5, 0.5);
        CHECK_NOTHROW(d_inverse(s, 1.9, 200));
        CHECK(gen::throws_code([&] { d_inverse(s, 1.99, 200); }, Errc::domain_error));
    }

    TEST_CASE("d_inverse error estimate shrinks with n") {
        const auto s = VerblunskySeq::bls(0.5, 0.5);
        const auto a = d_inverse(s, 1.5, 40);
        const auto b = d_inverse(s, 1.5, 160);
        CHECK(b.error_estimate < a.error_estimate);
        CHECK(std::abs(a.value - b.value) <= 2.0 * a.error_estimate + 1e-14);
    }

    TEST_CASE("pole-free form agrees with (1 - b w) phi_n^* inside |w| < 1/b") {
        const auto s = VerblunskySeq::bls(0.5, 0.5);
        const auto al = s.alphas(300);
        for (cplx w : {cplx(0.3, 0.2), cplx(1.2, -0.5), cplx(-1.6, 0.0)}) {
            const cplx ref = (1.0 - 0.5 * w) * d_inverse(al, w).value;
            CHECK(std::abs(d_inverse_pole_free(al, 0.5, 0.5, w) - ref) < 1e-9);
        }
    }

    TEST_CASE("Nevai-Totik zero matches the outlier zero of phi_n") {
        const auto s = VerblunskySeq::bls(0.5, 0.5);
        const auto nt = nevai_totik_zeros(s, Annulus{0.6, 0.95}, 400);
        REQUIRE(nt.size() == 1);
        CHECK(nt[0].multiplicity == 1);
        CHECK(std::abs(nt[0].z - 0.859863) < 1e-5);
        const auto zs = opuc_zeros(recurse(s, 200));
        double best = 1.0;
        for (cplx z : zs.zeros) {
            best = std::min(best, std::abs(z - nt[0].z));
        }
        CHECK(best < 1e-6);
    }

    TEST_CASE("annulus inside the analyticity disk is rejected") {
        const auto s = VerblunskySeq::bls(0.5, 0.5);
        CHECK(gen::throws_code([&] { nevai_totik_zeros(s, Annulus{0.4, 0.9}, 200); },
                               Errc::domain_error));
    }

    TEST_CASE("g is regular at z = b with g(b) = 1") {
        const auto s = VerblunskySeq::bls(cplx(0.3, 0.2), 0.5);
        CHECK(std::abs(g_function(s, 0.5) - 1.0) < 1e-10);
        const double h = 1e-4;
        for (cplx dz : {cplx(h), cplx(-h), cplx(0.0, h)}) {
            CHECK(std::abs(g_function(s, 0.5 + dz) - 1.0) < 100 * h);
        }
        CHECK(gen::throws_code([] { g_function(VerblunskySeq::constant(0.1), 0.5); },
                               Errc::precondition));
    }
}
