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

#include "opuc/seq.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "opuc/rng.hpp"

namespace opuc {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_parameter: return "invalid-parameter";
        case Errc::index_out_of_range: return "index-out-of-range";
        case Errc::degenerate_input: return "degenerate-input";
        case Errc::non_convergence: return "non-convergence";
        case Errc::derivative_underflow: return "derivative-underflow";
        case Errc::stall: return "stall";
        case Errc::size_limit: return "size-limit";
        case Errc::domain_error: return "domain-error";
        case Errc::unwrap_failure: return "unwrap-failure";
        case Errc::count_mismatch: return "count-mismatch";
        case Errc::resolution: return "resolution";
        case Errc::positivity_failure: return "positivity-failure";
        case Errc::window_violation: return "window-violation";
        case Errc::region_violation: return "region-violation";
        case Errc::precondition: return "precondition";
        case Errc::inconclusive: return "inconclusive";
        case Errc::empty_bulk: return "empty-bulk";
        case Errc::interval_order: return "interval-order";
        case Errc::config: return "config";
        case Errc::io: return "io";
    }
    return "unknown";
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Constant: return "constant";
        case Family::BLS: return "bls";
        case Family::RandomUniformDisk: return "random_disk";
        case Family::RandomUniformReal: return "random_real";
        case Family::PowerDecay: return "power_decay";
        case Family::Explicit: return "explicit";
    }
    return "unknown";
}

namespace {

void require_in_disk(cplx a, const char* what) {
    if (!(std::abs(a) < 1.0)) {
        std::ostringstream os;
        os << what << " gives |alpha| = " << std::abs(a) << " >= 1";
        throw Error(Errc::invalid_parameter, os.str());
    }
}

}  // namespace

VerblunskySeq VerblunskySeq::constant(cplx value) {
    require_in_disk(value, "constant family");
    VerblunskySeq s;
    s.family_ = Family::Constant;
    s.c_ = value;
    return s;
}

VerblunskySeq VerblunskySeq::bls(cplx C, double b, std::optional<BlsPerturbation> pert) {
    if (!(b > 0.0 && b < 1.0)) {
        throw Error(Errc::invalid_parameter, "BLS requires b in (0,1)");
    }
    if (pert) {
        if (!(pert->delta > 0.0 && pert->delta < 1.0)) {
            throw Error(Errc::invalid_parameter, "BLS perturbation requires delta in (0,1)");
        }
        // |alpha_j| <= |C| b^j + |K| (b delta)^j is maximal at j = 0.
        if (!(std::abs(C) + std::abs(pert->K) < 1.0)) {
            throw Error(Errc::invalid_parameter, "BLS with |C| + |K| >= 1 leaves the disk at j=0");
        }
    }
    require_in_disk(C, "BLS constant C at j=0");
    VerblunskySeq s;
    s.family_ = Family::BLS;
    s.c_ = C;
    s.b_ = b;
    s.pert_ = pert;
    return s;
}

VerblunskySeq VerblunskySeq::random_disk(double rho, std::uint64_t seed) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw Error(Errc::invalid_parameter, "random disk radius must lie in (0,1)");
    }
    VerblunskySeq s;
    s.family_ = Family::RandomUniformDisk;
    s.scale_ = rho;
    s.seed_ = seed;
    s.key_ = rng::derive(seed, rng::kStreamAlpha);
    return s;
}

VerblunskySeq VerblunskySeq::random_real(double halfwidth, std::uint64_t seed) {
    if (!(halfwidth > 0.0 && halfwidth < 1.0)) {
        throw Error(Errc::invalid_parameter, "random real halfwidth must lie in (0,1)");
    }
    VerblunskySeq s;
    s.family_ = Family::RandomUniformReal;
    s.scale_ = halfwidth;
    s.seed_ = seed;
    s.key_ = rng::derive(seed, rng::kStreamAlpha);
    return s;
}

VerblunskySeq VerblunskySeq::power_decay(cplx C, double beta) {
    if (!(beta > 0.0)) {
        throw Error(Errc::invalid_parameter, "power decay exponent must be positive");
    }
    // Largest modulus is at j = 0: |C| 2^-beta.
    require_in_disk(C * std::pow(2.0, -beta), "power decay at j=0");
    VerblunskySeq s;
    s.family_ = Family::PowerDecay;
    s.c_ = C;
    s.scale_ = beta;
    return s;
}

VerblunskySeq VerblunskySeq::explicit_list(std::vector<cplx> values) {
    for (const auto& v : values) {
        require_in_disk(v, "explicit value");
    }
    VerblunskySeq s;
    s.family_ = Family::Explicit;
    s.values_ = std::move(values);
    return s;
}

VerblunskySeq VerblunskySeq::with_seed(std::uint64_t seed) const {
    switch (family_) {
        case Family::RandomUniformDisk: return random_disk(scale_, seed);
        case Family::RandomUniformReal: return random_real(scale_, seed);
        default: return *this;
    }
}

std::optional<std::size_t> VerblunskySeq::length() const {
    if (family_ == Family::Explicit) {
        return values_.size();
    }
    return std::nullopt;
}

cplx VerblunskySeq::alpha(std::size_t j) const {
    cplx a;
    switch (family_) {
        case Family::Constant:
            return c_;
        case Family::BLS: {
            const double bj = std::pow(b_, static_cast<double>(j));
            a = c_ * bj;
            if (pert_) {
                a += pert_->K * std::pow(b_ * pert_->delta, static_cast<double>(j));
            }
            break;
        }
        case Family::RandomUniformDisk: {
            const double r = scale_ * std::sqrt(rng::uniform(key_, 2 * j));
            const double t = kTwoPi * rng::uniform(key_, 2 * j + 1);
            a = std::polar(r, t);
            break;
        }
        case Family::RandomUniformReal:
            a = cplx(scale_ * (2.0 * rng::uniform(key_, j) - 1.0), 0.0);
            break;
        case Family::PowerDecay:
            a = c_ * std::pow(static_cast<double>(j) + 2.0, -scale_);
            break;
        case Family::Explicit:
            if (j >= values_.size()) {
                throw Error(Errc::index_out_of_range,
                            "explicit sequence has " + std::to_string(values_.size()) +
                                " values, index " + std::to_string(j) + " requested");
            }
            return values_[j];
    }
    if (!(std::abs(a) < 1.0)) {
        throw Error(Errc::invalid_parameter, "alpha_" + std::to_string(j) + " outside the disk");
    }
    return a;
}

std::vector<cplx> VerblunskySeq::alphas(std::size_t count) const {
    std::vector<cplx> out(count);
    for (std::size_t j = 0; j < count; ++j) {
        out[j] = alpha(j);
    }
    return out;
}

std::string VerblunskySeq::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << family_name(family_);
    switch (family_) {
        case Family::Constant: os << "(value=" << c_ << ")"; break;
        case Family::BLS:
            os << "(C=" << c_ << ", b=" << b_;
            if (pert_) {
                os << ", K=" << pert_->K << ", delta=" << pert_->delta;
            }
            os << ")";
            break;
        case Family::RandomUniformDisk: os << "(rho=" << scale_ << ", seed=" << seed_ << ")"; break;
        case Family::RandomUniformReal:
            os << "(halfwidth=" << scale_ << ", seed=" << seed_ << ")";
            break;
        case Family::PowerDecay: os << "(C=" << c_ << ", beta=" << scale_ << ")"; break;
        case Family::Explicit: os << "(length=" << values_.size() << ")"; break;
    }
    return os.str();
}

RootAsymptotics classify_root_asymptotics(const VerblunskySeq& seq, std::size_t n_max) {
    if (n_max < 10) {
        throw Error(Errc::precondition, "classify_root_asymptotics needs n_max >= 10");
    }
    RootAsymptotics r{0.0, 0.0, 0.0};
    double sum = 0.0;
    for (std::size_t j = 0; j < n_max; ++j) {
        sum += std::abs(seq.alpha(j));
    }
    r.cesaro_mean = sum / static_cast<double>(n_max);
    auto root = [&](std::size_t j) {
        const double m = std::abs(seq.alpha(j));
        return m == 0.0 ? 0.0 : std::pow(m, 1.0 / static_cast<double>(j));
    };
    r.b_estimate = root(n_max);
    for (std::size_t j = n_max - n_max / 4; j <= n_max; ++j) {
        r.b_running = std::max(r.b_running, root(j));
    }
    return r;
}

}  // namespace opuc
