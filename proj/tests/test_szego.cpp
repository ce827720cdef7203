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

using namespace opuc;

TEST_SUITE("szego") {
    TEST_CASE("degree one and two by hand") {
        const cplx a0(0.3, 0.2);
        const cplx a1(-0.1, 0.5);
        const std::vector<cplx> al{a0, a1};
        const auto p1 = recurse(std::span<const cplx>(al.data(), 1));
        CHECK(std::abs(p1.phi[0] + std::conj(a0)) < 1e-15);
        CHECK(p1.phi[1] == cplx(1.0));
        const auto p2 = recurse(al);
        REQUIRE(p2.phi.size() == 3);
        CHECK(std::abs(p2.phi[0] + std::conj(a1)) < 1e-15);
        CHECK(std::abs(p2.phi[1] - (a0 * std::conj(a1) - std::conj(a0))) < 1e-15);
        CHECK(p2.phi[2] == cplx(1.0));
        CHECK(p2.norm == doctest::Approx(std::sqrt((1 - std::norm(a0)) * (1 - std::norm(a1)))));
    }

    TEST_CASE("alpha = 0 gives z^n") {
        const auto p = recurse(VerblunskySeq::constant(0.0), 12);
        for (std::size_t k = 0; k < 12; ++k) {
            CHECK(p.phi[k] == cplx(0.0));
        }
        CHECK(p.phi[12] == cplx(1.0));
    }

    TEST_CASE("property: Phi_n(0) = -conj(alpha_{n-1}), star is the reversal") {
        auto g = gen::rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            const auto al = gen::alphas(g, gen::size_in(g, 1, 40));
            const auto p = recurse(al);
            CHECK(std::abs(p.phi[0] + std::conj(al.back())) < 1e-14);
            CHECK(gen::max_abs_diff(p.phi_star, [&] {
                      CoeffVec r(p.phi.rbegin(), p.phi.rend());
                      for (auto& c : r) {
                          c = std::conj(c);
                      }
                      return r;
                  }()) == 0.0);
        }
    }

    TEST_CASE("property: pointwise recursion matches coefficient evaluation") {
        auto g = gen::rng(12);
        for (int trial = 0; trial < 50; ++trial) {
            const auto al = gen::alphas(g, gen::size_in(g, 1, 60));
            const auto p = recurse(al);
            const cplx z = gen::in_disk(g, 1.2);
            const auto v = recurse_pointwise(al, z);
            const auto e = eval(p, z);
            const double scale = 1.0 + std::abs(e.phi) + std::abs(e.phi_star);
            CHECK(std::abs(v.phi - e.phi) < 1e-11 * scale);
            CHECK(std::abs(v.phi_star - e.phi_star) < 1e-11 * scale);
        }
    }

    TEST_CASE("property: |Phi_n| = |Phi_n^*| on the circle and zeros inside the disk") {
        auto g = gen::rng(13);
        for (int trial = 0; trial < 30; ++trial) {
            const auto al = gen::alphas(g, gen::size_in(g, 2, 30), 0.9);
            const auto p = recurse(al);
            const cplx z = gen::unimodular(g);
            const auto v = eval(p, z);
            CHECK(std::abs(std::abs(v.phi) - std::abs(v.phi_star)) < 1e-12);
            const auto zs = find_roots(p.phi);
            for (std::size_t i = 0; i < zs.size(); ++i) {
                CHECK(zs.modulus(i) < 1.0);
            }
        }
    }

    TEST_CASE("batch evaluation matches single points") {
        auto g = gen::rng(14);
        const auto al = gen::alphas(g, 50);
        std::vector<cplx> zs(37);
        for (auto& z : zs) {
            z = gen::in_disk(g, 1.0);
        }
        const auto batch = recurse_pointwise_batch(al, zs);
        for (std::size_t i = 0; i < zs.size(); ++i) {
            const auto v = recurse_pointwise(al, zs[i]);
            CHECK(std::abs(batch[i].phi - v.phi) < 1e-13);
            CHECK(std::abs(batch[i].phi_star - v.phi_star) < 1e-13);
        }
    }

    TEST_CASE("derivative matches a central difference") {
        auto g = gen::rng(15);
        const auto al = gen::alphas(g, 20);
        const cplx z(0.3, -0.4);
        const double h = 1e-6;
        const auto d = recurse_pointwise_derivative(al, z);
        const cplx fd = (recurse_pointwise(al, z + h).phi - recurse_pointwise(al, z - h).phi) /
                        (2.0 * h);
        CHECK(std::abs(d.dphi - fd) < 1e-6 * (1.0 + std::abs(fd)));
    }

    TEST_CASE("norm product") {
        const std::vector<cplx> al{0.5, cplx(0.0, 0.6)};
        CHECK(norm_product(al) == doctest::Approx(std::sqrt(0.75 * 0.64)));
    }

    TEST_CASE("coefficient outside the disk is rejected") {
        const std::vector<cplx> al{0.5, 1.0};
        CHECK(gen::throws_code([&] { recurse(al); }, Errc::invalid_parameter));
    }
}
