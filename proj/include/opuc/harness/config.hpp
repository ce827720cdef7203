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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/oprl.hpp"
#include "opuc/seq.hpp"
#include "opuc/stats.hpp"

namespace opuc::harness {

enum class ExperimentKind { Zeros, Clock, Poisson, Asymptotics, Oprl, Figdata, Model };
const char* experiment_name(ExperimentKind k);
std::optional<ExperimentKind> parse_experiment_name(const std::string& s);

/// Paraorthogonal variant: fixed beta, or beta_n drawn from the run seed.
struct PopChoice {
    std::optional<cplx> beta;
    bool random_beta = false;
};

struct OprlChoice {
    std::string family = "free";  // free | chebyshev_first | jacobi
    double alpha = 0.0;
    double beta = 0.0;
    std::map<std::size_t, double> a_override;
    std::map<std::size_t, double> b_override;
    double epsilon = 0.3;
    JacobiParams params() const;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Zeros;
    std::optional<VerblunskySeq> family;
    bool family_seed_pinned = false;
    std::vector<std::size_t> n_list;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::optional<PopChoice> pop;
    ClockConvention convention = ClockConvention::Wraparound;
    double radius_margin = -1.0;
    std::vector<IntervalSpec> intervals;
    bool control = true;
    std::map<std::string, std::vector<cplx>> regions;  // outer / inner / critical
    std::size_t reference_n = 1500;
    OprlChoice oprl;
    cplx model_K{1.0, 0.0};
    int model_k = 1;
    std::map<std::string, double> tolerances;
    std::string out_dir = "out";
    /// Normalized JSON text of the validated config; hashed into reports.
    std::string canonical;

    double tolerance(const std::string& name, double fallback) const;
};

/**
 * Parses and fully validates a JSON config. Unknown keys, wrong types and
 * out-of-range values throw Error(Errc::config) naming the field path (and
 * line/column for syntax errors). `origin` labels messages.
 */
ExperimentConfig parse_config(const std::string& text, const std::string& origin = "config");
ExperimentConfig load_config(const std::string& path);

/// Replaces the run seed (and the family seed unless the config pinned one),
/// keeping `canonical` in step.
void override_seed(ExperimentConfig& cfg, std::uint64_t seed);

}  // namespace opuc::harness
