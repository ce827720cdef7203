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

// Scalar and AVX2 kernels must agree; the AVX2 cases skip when the CPU or
// build lacks it.

#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "gen.hpp"
#include "opuc/kernels.hpp"

using namespace opuc;
namespace k = opuc::kernels;

namespace {

const k::detail::Table* simd() {
    return k::avx2_available() ? k::detail::avx2_table() : nullptr;
}

double rel(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

}  // namespace

TEST_SUITE("kernels") {
    TEST_CASE("backend selection") {
        const auto before = k::active_backend();
        k::set_backend(k::Backend::Scalar);
        CHECK(k::active_backend() == k::Backend::Scalar);
        if (k::avx2_available()) {
            k::set_backend(k::Backend::Avx2);
            CHECK(k::active_backend() == k::Backend::Avx2);
        }
        k::set_backend(before);
        CHECK(std::string(k::backend_name(k::Backend::Scalar)) == "scalar");
    }

    TEST_CASE("szego_batch equivalence") {
        const auto* t = simd();
        if (!t) {
            MESSAGE("AVX2 not available, skipped");
            return;
        }
        auto g = gen::rng(71);
        for (int trial = 0; trial < 20; ++trial) {
            const auto al = gen::alphas(g, gen::size_in(g, 0, 300));
            const std::size_t m = gen::size_in(g, 1, 37);
            std::vector<double> zr(m), zi(m);
            for (std::size_t i = 0; i < m; ++i) {
                const cplx z = gen::in_disk(g, 1.3);
                zr[i] = z.real();
                zi[i] = z.imag();
            }
            std::vector<double> a(4 * m), b(4 * m);
            k::detail::scalar_table().szego_batch(al.data(), al.size(), zr.data(), zi.data(), m,
                                                  &a[0], &a[m], &a[2 * m], &a[3 * m]);
            t->szego_batch(al.data(), al.size(), zr.data(), zi.data(), m, &b[0], &b[m],
                           &b[2 * m], &b[3 * m]);
            for (std::size_t i = 0; i < 4 * m; ++i) {
                CHECK(rel(b[i], a[i]) < 1e-11);
            }
        }
    }

    TEST_CASE("pop_phase_batch equivalence") {
        const auto* t = simd();
        if (!t) {
            MESSAGE("AVX2 not available, skipped");
            return;
        }
        auto g = gen::rng(72);
        for (int trial = 0; trial < 20; ++trial) {
            const auto al = gen::alphas(g, gen::size_in(g, 0, 300), 0.99);
            const std::size_t m = gen::size_in(g, 1, 41);
            std::vector<double> th(m);
            for (auto& x : th) {
                x = gen::real_in(g, 0.0, kTwoPi);
            }
            const double ba = gen::real_in(g, -kPi, kPi);
            std::vector<double> a(m), b(m);
            k::detail::scalar_table().pop_phase_batch(al.data(), al.size(), ba, th.data(), m,
                                                      a.data());
            t->pop_phase_batch(al.data(), al.size(), ba, th.data(), m, b.data());
            for (std::size_t i = 0; i < m; ++i) {
                CHECK(std::abs(a[i] - b[i]) < 1e-9);
            }
        }
    }

    TEST_CASE("aberth_sum equivalence") {
        const auto* t = simd();
        if (!t) {
            MESSAGE("AVX2 not available, skipped");
            return;
        }
        auto g = gen::rng(73);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = gen::size_in(g, 2, 100);
            std::vector<double> re(n), im(n);
            for (std::size_t i = 0; i < n; ++i) {
                const cplx z = gen::in_disk(g, 1.0);
                re[i] = z.real();
                im[i] = z.imag();
            }
            for (std::size_t i = 0; i < n; i += 7) {
                const cplx a = k::detail::scalar_table().aberth_sum(re.data(), im.data(), n, i);
                const cplx b = t->aberth_sum(re.data(), im.data(), n, i);
                CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(a)));
            }
        }
    }

    TEST_CASE("sturm_count_batch equivalence") {
        const auto* t = simd();
        if (!t) {
            MESSAGE("AVX2 not available, skipped");
            return;
        }
        auto g = gen::rng(74);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = gen::size_in(g, 1, 200);
            std::vector<double> d(n), o2(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = gen::real_in(g, -1.0, 1.0);
                if (i + 1 < n) {
                    const double a = gen::real_in(g, 0.2, 1.5);
                    o2[i] = a * a;
                }
            }
            const std::size_t m = gen::size_in(g, 1, 33);
            std::vector<double> x(m);
            for (auto& v : x) {
                v = gen::real_in(g, -4.0, 4.0);
            }
            std::vector<int> a(m), b(m);
            k::detail::scalar_table().sturm_count_batch(d.data(), o2.data(), n, x.data(), m,
                                                        a.data());
            t->sturm_count_batch(d.data(), o2.data(), n, x.data(), m, b.data());
            CHECK(a == b);
        }
    }

    TEST_CASE("Sturm counts on a diagonal matrix") {
        const std::vector<double> d{-1.0, 0.5, 2.0};
        const std::vector<double> o2{0.0, 0.0, 0.0};
        const std::vector<double> x{-2.0, 0.0, 1.0, 3.0};
        std::vector<int> c(4);
        k::sturm_count_batch(d.data(), o2.data(), 3, x.data(), 4, c.data());
        CHECK(c == std::vector<int>{0, 1, 2, 3});
    }
}
