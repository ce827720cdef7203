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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opuc/common.hpp"

namespace opuc::harness {

enum class SuiteLevel { Quick, Full };
const char* level_name(SuiteLevel level);

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;
    std::vector<std::pair<std::string, double>> metrics;
};

/// Replaceable pieces, so tests can check that a broken component makes the
/// matching criterion fail.
struct SuiteHooks {
    /// Coefficients of Phi_N from alpha_0..alpha_{N-1}; default is szego recurse().
    std::function<CoeffVec(std::span<const cplx>)> phi_coefficients;
};

struct SuiteOptions {
    SuiteLevel level = SuiteLevel::Full;
    SuiteHooks hooks;
    std::uint64_t seed = 20260415;
    unsigned threads = 0;
    /// Criterion ids to run; empty runs all.
    std::vector<std::string> only;
    /// Called after each criterion finishes.
    std::function<void(const CriterionResult&)> on_result;
};

struct SuiteSummary {
    SuiteLevel level = SuiteLevel::Full;
    std::vector<CriterionResult> results;
    bool all_pass() const;
};

/// Ids in execution order.
std::vector<std::string> criterion_ids();

/**
 * Runs the acceptance battery. Failures (including exceptions inside a
 * criterion) are recorded, never thrown. Quick caps n at 200 and trials at
 * 500 with the looser Poisson threshold.
 */
SuiteSummary verify_suite(const SuiteOptions& opts = {});

/// One "PASS|FAIL id (seconds) detail" line.
std::string format_result_line(const CriterionResult& r);

/// report.json text for a suite run.
std::string suite_report_json(const SuiteSummary& summary, std::uint64_t seed);

}  // namespace opuc::harness
