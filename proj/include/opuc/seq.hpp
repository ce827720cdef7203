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
#include <optional>
#include <string>
#include <vector>

#include "opuc/common.hpp"

namespace opuc {

enum class Family { Constant, BLS, RandomUniformDisk, RandomUniformReal, PowerDecay, Explicit };

const char* family_name(Family f);

/// Geometric correction for BLS sequences: alpha_j = C b^j + K (b delta)^j.
struct BlsPerturbation {
    cplx K;
    double delta;  // in (0, 1)
};

/**
 * Verblunsky coefficient sequence alpha_0, alpha_1, ... with family metadata.
 *
 * Values are generated on demand. Random families are pure functions of
 * (seed, j). Construction validates the family constants; alpha() throws
 * invalid_parameter if a particular index still lands outside the disk.
 */
class VerblunskySeq {
public:
    static VerblunskySeq constant(cplx value);
    /// alpha_j = C b^j (+ perturbation).
    static VerblunskySeq bls(cplx C, double b, std::optional<BlsPerturbation> pert = {});
    /// alpha_j uniform in the disk of radius rho (area measure).
    static VerblunskySeq random_disk(double rho, std::uint64_t seed);
    /// alpha_j real, uniform on [-halfwidth, halfwidth].
    static VerblunskySeq random_real(double halfwidth, std::uint64_t seed);
    /// alpha_j = C (j + 2)^(-beta).
    static VerblunskySeq power_decay(cplx C, double beta);
    static VerblunskySeq explicit_list(std::vector<cplx> values);

    cplx alpha(std::size_t j) const;
    std::vector<cplx> alphas(std::size_t count) const;

    Family family() const { return family_; }
    bool is_random() const {
        return family_ == Family::RandomUniformDisk || family_ == Family::RandomUniformReal;
    }
    /// Number of stored values for Explicit; empty otherwise.
    std::optional<std::size_t> length() const;

    cplx C() const { return c_; }
    double b() const { return b_; }
    const std::optional<BlsPerturbation>& perturbation() const { return pert_; }
    double rho() const { return scale_; }
    double halfwidth() const { return scale_; }
    double beta() const { return scale_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<cplx>& values() const { return values_; }

    /// Same family and constants with a different seed (random families).
    VerblunskySeq with_seed(std::uint64_t seed) const;

    std::string describe() const;

private:
    VerblunskySeq() = default;

    Family family_ = Family::Constant;
    cplx c_{0.0, 0.0};
    double b_ = 0.0;
    double scale_ = 0.0;
    std::uint64_t seed_ = 0;
    std::uint64_t key_ = 0;
    std::optional<BlsPerturbation> pert_;
    std::vector<cplx> values_;
};

struct RootAsymptotics {
    double b_estimate;   // |alpha_{n_max}|^{1/n_max}
    double b_running;    // max over the last quarter of |alpha_j|^{1/j}
    double cesaro_mean;  // (1/n) sum_{j<n} |alpha_j|
};

RootAsymptotics classify_root_asymptotics(const VerblunskySeq& seq, std::size_t n_max);

}  // namespace opuc
