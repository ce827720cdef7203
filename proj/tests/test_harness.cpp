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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gen.hpp"
#include "opuc/harness/config.hpp"
#include "opuc/harness/report.hpp"
#include "opuc/harness/run.hpp"
#include "opuc/harness/suite.hpp"
#include "opuc/szego.hpp"

using namespace opuc;
using namespace opuc::harness;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("opuc_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string config_error(const std::string& text) {
    try {
        parse_config(text, "cfg");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::config);
        return e.what();
    }
    return "";
}

const char* kZeros = R"({
  "experiment": "zeros",
  "seed": 5,
  "family": {"type": "bls", "C": 0.5, "b": 0.5},
  "n_list": [10, 20]
})";

}  // namespace

TEST_SUITE("harness") {
    TEST_CASE("valid config") {
        const auto cfg = parse_config(kZeros);
        CHECK(cfg.kind == ExperimentKind::Zeros);
        CHECK(cfg.n_list == std::vector<std::size_t>{10, 20});
        CHECK(cfg.family->family() == Family::BLS);
        CHECK(cfg.seed == 5);
    }

    TEST_CASE("complex values as pairs") {
        const auto cfg = parse_config(
            R"({"experiment": "zeros", "family": {"type": "constant", "value": [0.1, -0.2]}, "n": 4})");
        CHECK(cfg.family->alpha(0) == cplx(0.1, -0.2));
    }

    TEST_CASE("rejections name the field") {
        CHECK(config_error(R"({"experiment": "zeros", "n": 4, "bogus": 1})").find("bogus") !=
              std::string::npos);
        CHECK(config_error(R"({"experiment": "nope"})").find("experiment") != std::string::npos);
        CHECK(config_error(R"({"experiment": "zeros", "n": 4,
                "family": {"type": "bls", "C": 2.0, "b": 0.5}})")
                  .find("family") != std::string::npos);
        CHECK(config_error(R"({"experiment": "poisson", "n": 50, "trials": 10,
                "family": {"type": "random_disk", "rho": 0.5}})")
                  .find("trials") != std::string::npos);
        CHECK(config_error(R"({"experiment": "zeros", "n": 4, "tolerances": {"tv_max": 1}})")
                  .find("tv_max") != std::string::npos);
        CHECK(config_error(R"({"experiment": "zeros", "n": -3})").find("n") != std::string::npos);
    }

    TEST_CASE("syntax errors report line and column") {
        const auto msg = config_error("{\n  \"experiment\": \"zeros\",\n  \"n\": ,\n}");
        CHECK(msg.find("line 3") != std::string::npos);
    }

    TEST_CASE("seed override reseeds unpinned random families") {
        const char* text = R"({"experiment": "zeros", "seed": 1, "n": 10,
            "family": {"type": "random_disk", "rho": 0.5}})";
        auto a = parse_config(text);
        auto b = parse_config(text);
        override_seed(b, 2);
        CHECK(b.seed == 2);
        CHECK(a.family->alphas(5) != b.family->alphas(5));
        CHECK(a.canonical != b.canonical);
        const char* pinned = R"({"experiment": "zeros", "seed": 1, "n": 10,
            "family": {"type": "random_disk", "rho": 0.5, "seed": 9}})";
        auto c = parse_config(pinned);
        const auto before = c.family->alphas(5);
        override_seed(c, 3);
        CHECK(c.family->alphas(5) == before);
    }

    TEST_CASE("number formatting round-trips") {
        for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) {
            CHECK(std::stod(format_number(v)) == v);
        }
        CHECK(format_number(1.0) == "1");
    }

    TEST_CASE("FNV-1a reference values") {
        CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
        CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
        CHECK(hex64(0xabcULL) == "0000000000000abc");
    }

    TEST_CASE("zeros run: CSV and report are byte-identical across runs") {
        auto cfg = parse_config(kZeros);
        const auto d1 = scratch("zeros1");
        const auto d2 = scratch("zeros2");
        cfg.out_dir = d1.string();
        const auto r1 = run_experiment(cfg);
        cfg.out_dir = d2.string();
        const auto r2 = run_experiment(cfg);
        CHECK(r1.pass());
        CHECK(r1.exit_code() == kExitPass);
        REQUIRE(r1.files == r2.files);
        for (const auto& f : r1.files) {
            CHECK(slurp(d1 / f) == slurp(d2 / f));
        }
        CHECK(slurp(d1 / "report.json") == slurp(d2 / "report.json"));
        const auto csv = slurp(d1 / "zeros.csv");
        CHECK(csv.rfind("n,index,re,im,modulus,argument\n", 0) == 0);
        // 10 + 20 zeros plus the header.
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 31);
        CHECK(slurp(d1 / "report.json").find(hex64(fnv1a64(cfg.canonical))) !=
              std::string::npos);
    }

    TEST_CASE("failing check gives exit code 2") {
        auto cfg = parse_config(R"({"experiment": "model", "model": {"K": 1, "k": 1}, "n": 200,
            "tolerances": {"gap_cap": 1e-9}})");
        cfg.out_dir = scratch("model").string();
        const auto r = run_experiment(cfg);
        CHECK_FALSE(r.pass());
        CHECK(r.exit_code() == kExitCheckFailed);
    }

    TEST_CASE("clock run on the paraorthogonal alpha = 0 family") {
        auto cfg = parse_config(R"({"experiment": "clock", "n_list": [20, 40],
            "family": {"type": "constant", "value": 0}, "pop": {"beta": 1},
            "tolerances": {"sup_dev_max": 1e-9}})");
        cfg.out_dir = scratch("clock").string();
        const auto r = run_experiment(cfg);
        bool saw = false;
        for (const auto& c : r.checks) {
            if (c.name == "sup_dev_final") {
                saw = true;
                CHECK(c.pass);
            }
        }
        CHECK(saw);
    }

    TEST_CASE("CSV table") {
        CsvTable t({"a", "b"});
        t.add_row({CsvTable::num(0.5), CsvTable::num(std::size_t{3})});
        CHECK(t.str() == "a,b\n0.5,3\n");
        CHECK(gen::throws_code([&] { t.add_row({"x"}); }, Errc::invalid_parameter));
    }

    TEST_CASE("determinant criterion passes with Szego and fails with a corrupted sign") {
        SuiteOptions opts;
        opts.level = SuiteLevel::Quick;
        opts.only = {"determinant_identity"};
        const auto good = verify_suite(opts);
        REQUIRE(good.results.size() == 1);
        CHECK(good.results[0].pass);
        opts.hooks.phi_coefficients = [](std::span<const cplx> a) {
            auto p = recurse(a).phi;
            p[0] = -p[0];
            return p;
        };
        const auto bad = verify_suite(opts);
        CHECK_FALSE(bad.results[0].pass);
        CHECK(format_result_line(bad.results[0]).rfind("FAIL determinant_identity", 0) == 0);
        CHECK(suite_report_json(bad, 1).find("\"status\": \"fail\"") != std::string::npos);
    }

    TEST_CASE("criterion ids are unique") {
        auto ids = criterion_ids();
        CHECK(ids.size() == 12);
        std::sort(ids.begin(), ids.end());
        CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    }
}
