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
#include "opuc/stats.hpp"

using namespace opuc;

namespace {

ZeroSet ring(std::size_t n, double r, double shift) {
    ZeroSet zs;
    for (std::size_t j = 0; j < n; ++j) {
        zs.zeros.push_back(std::polar(r, shift + kTwoPi * double(j) / double(n)));
        zs.residuals.push_back(0.0);
    }
    return zs;
}

}  // namespace

TEST_SUITE("stats") {
    TEST_CASE("Poisson pmf") {
        CHECK(poisson_pmf(1.0, 0) == doctest::Approx(0.36788).epsilon(1e-5));
        CHECK(poisson_pmf(2.0, 3) == doctest::Approx(8.0 / 6.0 * std::exp(-2.0)));
    }

    TEST_CASE("TV distance") {
        std::vector<std::size_t> h;
        std::size_t total = 0;
        for (std::size_t l = 0; l < 12; ++l) {
            h.push_back(static_cast<std::size_t>(std::llround(1e7 * poisson_pmf(1.0, l))));
            total += h.back();
        }
        CHECK(tv_to_poisson(h, total, 1.0) < 1e-6);
        const std::vector<std::size_t> point{0, 100};
        // All mass at l = 1: TV = 1 - pmf(1).
        CHECK(tv_to_poisson(point, 100, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)));
    }

    TEST_CASE("exact clock has zero deviation") {
        const auto r = clock_metrics(ring(64, 0.5, 0.1), 0.5);
        CHECK(r.sup_dev < 1e-10);
        CHECK(r.radial_sup < 1e-15);
        CHECK(r.outliers.empty());
    }

    TEST_CASE("outlier split and pinned gap at zero") {
        auto zs = ring(40, 0.5, kTwoPi / 80.0);
        zs.zeros.push_back(0.9);
        zs.residuals.push_back(0.0);
        ClockOptions o;
        o.convention = ClockConvention::PinnedAtZero;
        const auto r = clock_metrics(zs, 0.5, o);
        REQUIRE(r.outliers.size() == 1);
        CHECK(std::abs(r.outliers[0] - 0.9) < 1e-15);
        CHECK(r.bulk_arguments.size() == 40);
        // Half-step offset: the gap across arg 0 is one full period.
        CHECK(r.gap_at_zero == doctest::Approx(kTwoPi / 40.0));
        CHECK_FALSE(r.gap_at_zero_ok);
    }

    TEST_CASE("a missing zero at arg 0 doubles the gap") {
        ZeroSet zs;
        for (std::size_t j = 1; j < 50; ++j) {
            zs.zeros.push_back(std::polar(0.5, kTwoPi * double(j) / 50.0));
        }
        ClockOptions o;
        o.convention = ClockConvention::PinnedAtZero;
        o.period = kTwoPi / 50.0;
        const auto r = clock_metrics(zs, 0.5, o);
        CHECK(r.gap_at_zero == doctest::Approx(2.0 * kTwoPi / 50.0));
        CHECK(r.gap_at_zero_ok);
    }

    TEST_CASE("empty bulk") {
        ZeroSet zs;
        zs.zeros = {0.95};
        CHECK(gen::throws_code([&] { clock_metrics(zs, 0.5); }, Errc::empty_bulk));
    }

    TEST_CASE("canonical intervals") {
        const std::vector<IntervalSpec> ok{{0.0, 0.0, 1.0}, {0.0, 2.0, 3.5}};
        const auto arcs = canonical_intervals(100, ok);
        CHECK(arcs[1].lambda == doctest::Approx(1.5));
        CHECK(arcs[0].length == doctest::Approx(kTwoPi / 100.0));
        CHECK(arcs[0].contains(0.01));
        CHECK_FALSE(arcs[0].contains(0.1));
        const std::vector<IntervalSpec> bad{{0.0, 0.0, 1.0}, {0.0, 0.5, 2.0}};
        CHECK(gen::throws_code([&] { canonical_intervals(100, bad); }, Errc::interval_order));
    }

    TEST_CASE("spacings and KS") {
        std::vector<double> th;
        for (std::size_t j = 0; j < 20; ++j) {
            th.push_back(kTwoPi * double(j) / 20.0);
        }
        for (double s : normalized_spacings(th)) {
            CHECK(s == doctest::Approx(1.0));
        }
        const std::size_t N = 20000;
        std::vector<double> q(N);
        for (std::size_t i = 0; i < N; ++i) {
            q[i] = -std::log(1.0 - (double(i) + 0.5) / double(N));
        }
        CHECK(ks_to_exponential(spacing_cdf(q)) <= 1.0 / double(N));
        CHECK(gen::throws_code([] { spacing_cdf(std::vector<double>(100, 1.0)); },
                               Errc::precondition));
    }

    TEST_CASE("alpha = 0 control is a clock") {
        const std::vector<IntervalSpec> iv{{0.0, 0.0, 1.0}};
        PoissonOptions po;
        po.keep_spacings = false;
        const auto r = poisson_experiment(VerblunskySeq::constant(0.0), 50, 200, iv, 5, po);
        // Exactly one zero in every arc of one period (up to arcs ending on a zero).
        CHECK(r.intervals[0].histogram.size() >= 2);
        CHECK(r.intervals[0].mean == doctest::Approx(1.0).epsilon(0.02));
        CHECK(r.intervals[0].tv > 0.5);
    }

    TEST_CASE("trials are reproducible and independent of thread count") {
        const std::vector<IntervalSpec> iv{{0.0, 0.0, 1.0}, {1.0, 0.0, 2.0}};
        PoissonOptions a;
        a.threads = 1;
        PoissonOptions b;
        b.threads = 3;
        const auto fam = VerblunskySeq::random_disk(0.5, 1);
        const auto r1 = poisson_experiment(fam, 60, 200, iv, 77, a);
        const auto r2 = poisson_experiment(fam, 60, 200, iv, 77, b);
        CHECK(r1.intervals[0].histogram == r2.intervals[0].histogram);
        CHECK(r1.joint == r2.joint);
        CHECK(r1.spacings == r2.spacings);
        CHECK(gen::throws_code([&] { poisson_experiment(fam, 60, 10, iv, 77, a); },
                               Errc::precondition));
    }
}
