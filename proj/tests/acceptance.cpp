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

// Acceptance battery: one PASS/FAIL line per criterion, exit 0 only if all pass.

#include <cstdio>
#include <cstring>
#include <string>

#include "opuc/harness/suite.hpp"

int main(int argc, char** argv) {
    opuc::harness::SuiteOptions opts;
    opts.level = opuc::harness::SuiteLevel::Full;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--level") == 0 && i + 1 < argc) {
            const std::string v = argv[++i];
            if (v != "quick" && v != "full") {
                std::fprintf(stderr, "--level must be quick or full\n");
                return 1;
            }
            opts.level = v == "quick" ? opuc::harness::SuiteLevel::Quick
                                      : opuc::harness::SuiteLevel::Full;
        } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            opts.only.emplace_back(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--level quick|full] [--only id]...\n", argv[0]);
            return 1;
        }
    }
    opts.on_result = [](const opuc::harness::CriterionResult& r) {
        std::printf("%s\n", opuc::harness::format_result_line(r).c_str());
        std::fflush(stdout);
    };
    const auto summary = opuc::harness::verify_suite(opts);
    std::size_t passed = 0;
    for (const auto& r : summary.results) {
        passed += r.pass ? 1 : 0;
    }
    std::printf("%zu/%zu criteria passed (%s)\n", passed, summary.results.size(),
                opuc::harness::level_name(summary.level));
    return summary.all_pass() ? 0 : 1;
}
