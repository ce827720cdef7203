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

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace opuc {

using cplx = std::complex<double>;

/// Ascending-power coefficient vector: c[k] multiplies z^k.
using CoeffVec = std::vector<cplx>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Errc {
    invalid_parameter,
    index_out_of_range,
    degenerate_input,
    non_convergence,
    derivative_underflow,
    stall,
    size_limit,
    domain_error,
    unwrap_failure,
    count_mismatch,
    resolution,
    positivity_failure,
    window_violation,
    region_violation,
    precondition,
    inconclusive,
    empty_bulk,
    interval_order,
    config,
    io,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace opuc
