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
#include "opuc/seq.hpp"

using namespace opuc;

TEST_SUITE("seq") {
    TEST_CASE("bls values are C b^j") {
        const auto s = VerblunskySeq::bls(cplx(0.3, -0.4), 0.5);
        for (std::size_t j = 0; j < 40; ++j) {
            CHECK(std::abs(s.alpha(j) - cplx(0.3, -0.4) * std::pow(0.5, double(j))) < 1e-15);
        }
    }

    TEST_CASE("all-on-circle family at j = 3") {
        const auto s = VerblunskySeq::bls(-0.5, 0.5);
        CHECK(s.alpha(3).real() == doctest::Approx(-0.0625).epsilon(1e-15));
        CHECK(s.alpha(0).real() == doctest::Approx(-0.5));
    }

    TEST_CASE("bls perturbation adds K (b delta)^j") {
        const auto s = VerblunskySeq::bls(0.5, 0.5, BlsPerturbation{cplx(0.0, 0.2), 0.25});
        CHECK(std::abs(s.alpha(2) - (0.125 + cplx(0.0, 0.2) * 0.015625)) < 1e-15);
    }

    TEST_CASE("power decay") {
        const auto s = VerblunskySeq::power_decay(0.8, 1.5);
        CHECK(std::abs(s.alpha(2) - 0.8 * std::pow(4.0, -1.5)) < 1e-15);
    }

    TEST_CASE("random families are pure functions of (seed, j)") {
        const auto a = VerblunskySeq::random_disk(0.5, 42);
        const auto b = VerblunskySeq::random_disk(0.5, 42);
        const auto c = VerblunskySeq::random_disk(0.5, 43);
        const auto va = a.alphas(100);
        CHECK(va == b.alphas(100));
        CHECK(va != c.alphas(100));
        // Out-of-order access gives the same value.
        CHECK(a.alpha(77) == va[77]);
        CHECK(a.with_seed(43).alphas(100) == c.alphas(100));
    }

    TEST_CASE("random_disk is area uniform in the disk") {
        const auto s = VerblunskySeq::random_disk(0.5, 7);
        const auto v = s.alphas(20000);
        double m2 = 0.0;
        cplx mean = 0.0;
        for (cplx a : v) {
            CHECK(std::abs(a) <= 0.5);
            m2 += std::norm(a);
            mean += a;
        }
        m2 /= double(v.size());
        mean /= double(v.size());
        // E|a|^2 = rho^2 / 2 for area measure.
        CHECK(m2 == doctest::Approx(0.125).epsilon(0.03));
        CHECK(std::abs(mean) < 0.01);
    }

    TEST_CASE("random_real stays real and within the half width") {
        const auto v = VerblunskySeq::random_real(0.5, 3).alphas(5000);
        double mx = 0.0;
        for (cplx a : v) {
            CHECK(a.imag() == 0.0);
            mx = std::max(mx, std::abs(a.real()));
        }
        CHECK(mx <= 0.5);
        CHECK(mx > 0.49);
    }

    TEST_CASE("invalid constants are rejected") {
        using gen::throws_code;
        CHECK(throws_code([] { VerblunskySeq::constant(1.0); }, Errc::invalid_parameter));
        CHECK(throws_code([] { VerblunskySeq::bls(1.0, 0.5); }, Errc::invalid_parameter));
        CHECK(throws_code([] { VerblunskySeq::bls(0.5, 1.0); }, Errc::invalid_parameter));
        CHECK(throws_code([] { VerblunskySeq::random_disk(1.0, 1); }, Errc::invalid_parameter));
        CHECK(throws_code([] { VerblunskySeq::random_real(0.0, 1); }, Errc::invalid_parameter));
        CHECK(throws_code([] { VerblunskySeq::explicit_list({0.5, cplx(0.0, 1.0)}); },
                          Errc::invalid_parameter));
    }

    TEST_CASE("explicit list has a fixed length") {
        const auto s = VerblunskySeq::explicit_list({0.5, -0.25});
        CHECK(s.length() == 2u);
        CHECK(s.alpha(1) == cplx(-0.25));
        CHECK(gen::throws_code([&] { (void)s.alpha(2); }, Errc::index_out_of_range));
    }

    TEST_CASE("root asymptotics of a BLS sequence") {
        const auto r = classify_root_asymptotics(VerblunskySeq::bls(0.5, 0.5), 200);
        CHECK(r.b_estimate == doctest::Approx(0.5).epsilon(0.01));
        CHECK(r.b_running == doctest::Approx(0.5).epsilon(0.02));
    }
}
