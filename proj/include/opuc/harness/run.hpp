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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "opuc/harness/config.hpp"

namespace opuc::harness {

/// Exit codes shared by the CLI and run_experiment.
inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCheckFailed = 2;

struct Check {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
    std::string relation;  // "<=", ">=", "<", "==" or "holds"
};

struct RunResult {
    std::vector<Check> checks;
    std::vector<std::string> files;  // relative to the output directory
    std::filesystem::path report_path;
    bool pass() const;
    int exit_code() const { return pass() ? kExitPass : kExitCheckFailed; }
};

/**
 * Runs one configured experiment and writes report.json plus its CSV files
 * into cfg.out_dir. Report bytes depend only on the canonical config.
 */
RunResult run_experiment(const ExperimentConfig& cfg);

}  // namespace opuc::harness
