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

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "opuc/common.hpp"
#include "opuc/harness/config.hpp"
#include "opuc/harness/report.hpp"
#include "opuc/harness/run.hpp"
#include "opuc/harness/suite.hpp"

namespace h = opuc::harness;

namespace {

struct ExperimentArgs {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
};

int run_kind(h::ExperimentKind kind, const ExperimentArgs& args) {
    h::ExperimentConfig cfg = h::load_config(args.config);
    if (cfg.kind != kind) {
        throw opuc::Error(opuc::Errc::config,
                          args.config + ": experiment is \"" + h::experiment_name(cfg.kind) +
                              "\", expected \"" + h::experiment_name(kind) + "\"");
    }
    if (args.seed) {
        h::override_seed(cfg, *args.seed);
    }
    if (args.out) {
        cfg.out_dir = *args.out;
    }
    const auto res = h::run_experiment(cfg);
    for (const auto& c : res.checks) {
        if (c.relation == "holds") {
            std::printf("%s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str());
        } else {
            std::printf("%s %s: %.6g %s %.6g\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                        c.value, c.relation.c_str(), c.threshold);
        }
    }
    std::printf("report: %s\n", res.report_path.string().c_str());
    return res.exit_code();
}

struct VerifyArgs {
    std::string level = "quick";
    std::uint64_t seed = 20260415;
    std::optional<std::string> out;
    std::vector<std::string> only;
    unsigned threads = 0;
};

int run_verify(const VerifyArgs& args) {
    h::SuiteOptions opts;
    opts.level = args.level == "full" ? h::SuiteLevel::Full : h::SuiteLevel::Quick;
    opts.seed = args.seed;
    opts.threads = args.threads;
    opts.only = args.only;
    opts.on_result = [](const h::CriterionResult& r) {
        std::printf("%s\n", h::format_result_line(r).c_str());
        std::fflush(stdout);
    };
    const auto summary = h::verify_suite(opts);
    if (args.out) {
        const std::filesystem::path dir(*args.out);
        h::write_text_file(dir / "report.json", h::suite_report_json(summary, args.seed));
        h::CsvTable t({"id", "pass", "seconds", "budget_seconds"});
        for (const auto& r : summary.results) {
            t.add_row({r.id, r.pass ? "1" : "0", h::CsvTable::num(r.seconds),
                       h::CsvTable::num(r.budget_seconds)});
        }
        t.write(dir / "timings.csv");
    }
    std::size_t passed = 0;
    for (const auto& r : summary.results) {
        passed += r.pass ? 1 : 0;
    }
    std::printf("%zu/%zu criteria passed (%s)\n", passed, summary.results.size(),
                h::level_name(summary.level));
    return summary.all_pass() ? h::kExitPass : h::kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeros of orthogonal polynomials on the unit circle: experiments and checks"};
    app.require_subcommand(1);

    ExperimentArgs ex;
    int code = h::kExitPass;
    for (auto kind : {h::ExperimentKind::Zeros, h::ExperimentKind::Clock,
                      h::ExperimentKind::Poisson, h::ExperimentKind::Asymptotics,
                      h::ExperimentKind::Oprl, h::ExperimentKind::Model,
                      h::ExperimentKind::Figdata}) {
        auto* sub = app.add_subcommand(h::experiment_name(kind),
                                       std::string("Run a ") + h::experiment_name(kind) +
                                           " experiment from a JSON config");
        sub->add_option("-c,--config", ex.config, "JSON config file")->required()->check(
            CLI::ExistingFile);
        sub->add_option("--seed", ex.seed, "Override the run seed");
        sub->add_option("-o,--out", ex.out, "Override the output directory");
        sub->callback([&, kind] { code = run_kind(kind, ex); });
    }

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
    verify->add_option("--level", va.level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--seed", va.seed, "Base seed for random families");
    verify->add_option("-o,--out", va.out, "Write report.json and timings.csv here");
    verify->add_option("--only", va.only, "Run only these criterion ids")
        ->check(CLI::IsMember(h::criterion_ids()));
    verify->add_option("--threads", va.threads, "Worker threads (0: OPUC_THREADS or hardware)");
    verify->callback([&] { code = run_verify(va); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? h::kExitPass : h::kExitError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return h::kExitError;
    }
    return code;
}
