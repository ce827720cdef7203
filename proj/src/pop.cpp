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

#include "opuc/pop.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "opuc/kernels.hpp"
#include "opuc/rng.hpp"
#include "opuc/szego.hpp"

namespace opuc {

namespace {

constexpr double kThetaTol = 1e-12;

cplx normalize_beta(cplx beta) {
    const double m = std::abs(beta);
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw Error(Errc::invalid_parameter, "beta must be a nonzero finite complex number");
    }
    return beta / m;
}

std::vector<double> eval_eta(std::span<const cplx> alphas, double beta_arg,
                             std::span<const double> theta) {
    std::vector<double> eta(theta.size());
    kernels::pop_phase_batch(alphas.data(), alphas.size(), beta_arg, theta.data(), theta.size(),
                             eta.data());
    return eta;
}

struct Bracket {
    double level;
    double lo, hi;
    double flo, fhi;
    double checkpoint;
    int side = 0;
    int since_check = 0;
};

}  // namespace

PopSpec::PopSpec(VerblunskySeq seq, cplx beta_value)
    : base(std::move(seq)), beta(normalize_beta(beta_value)) {}

PopSpec PopSpec::random_beta(VerblunskySeq seq, std::uint64_t seed) {
    PopSpec s(std::move(seq), cplx(1.0));
    s.beta_seed = seed;
    return s;
}

cplx PopSpec::beta_for(std::size_t n) const {
    if (!beta_seed) {
        return beta;
    }
    const std::uint64_t key = rng::derive(*beta_seed, rng::kStreamBeta);
    return std::polar(1.0, kTwoPi * rng::uniform(key, n));
}

CoeffVec pop_poly(const PopSpec& spec, std::size_t n) {
    if (n < 1) {
        throw Error(Errc::precondition, "pop_poly needs n >= 1");
    }
    const auto pair = recurse(spec.base, n - 1);
    const cplx bc = std::conj(spec.beta_for(n));
    CoeffVec p(n + 1, cplx(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        p[k + 1] += pair.phi[k];
        p[k] -= bc * pair.phi_star[k];
    }
    p[n] = 1.0;
    return p;
}

std::vector<double> eta_phase(const PopSpec& spec, std::size_t n,
                              std::span<const double> theta_grid) {
    if (n < 1) {
        throw Error(Errc::precondition, "eta_phase needs n >= 1");
    }
    if (theta_grid.size() < 4 * n) {
        throw Error(Errc::precondition, "eta_phase grid must have at least 4n points");
    }
    for (std::size_t i = 0; i < theta_grid.size(); ++i) {
        if (!(theta_grid[i] >= 0.0 && theta_grid[i] < kTwoPi) ||
            (i > 0 && !(theta_grid[i] > theta_grid[i - 1]))) {
            throw Error(Errc::precondition, "eta_phase grid must be increasing in [0, 2pi)");
        }
    }
    const auto alphas = spec.base.alphas(n - 1);
    auto eta = eval_eta(alphas, std::arg(spec.beta_for(n)), theta_grid);
    for (std::size_t i = 1; i < eta.size(); ++i) {
        if (eta[i] < eta[i - 1] - 1e-9) {
            std::ostringstream os;
            os << "phase decreases between theta=" << theta_grid[i - 1] << " and "
               << theta_grid[i];
            throw Error(Errc::unwrap_failure, os.str());
        }
    }
    return eta;
}

double eta_winding(const PopSpec& spec, std::size_t n) {
    const auto alphas = spec.base.alphas(n - 1);
    const double ends[2] = {0.0, kTwoPi};
    const auto eta = eval_eta(alphas, std::arg(spec.beta_for(n)), ends);
    return eta[1] - eta[0];
}

std::vector<double> pop_zeros_by_phase(const PopSpec& spec, std::size_t n) {
    if (n < 1) {
        throw Error(Errc::precondition, "pop_zeros_by_phase needs n >= 1");
    }
    const auto alphas = spec.base.alphas(n - 1);
    return pop_zeros_by_phase(alphas, spec.beta_for(n));
}

std::vector<double> pop_zeros_by_phase(std::span<const cplx> alphas, cplx beta) {
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        if (!(std::abs(alphas[k]) < 1.0)) {
            throw Error(Errc::invalid_parameter, "|alpha| >= 1 in POP phase");
        }
    }
    const double beta_arg = std::arg(normalize_beta(beta));
    const std::size_t n = alphas.size() + 1;
    const std::size_t g = 8 * n;
    std::vector<double> grid(g + 1);
    for (std::size_t i = 0; i <= g; ++i) {
        grid[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(g);
    }
    grid[g] = kTwoPi;
    const auto eta = eval_eta(alphas, beta_arg, grid);

    // Zeros sit where eta crosses a multiple of 2pi; eta increases by exactly
    // 2pi n over the circle, so there are n such levels in [eta(0), eta(2pi)).
    const double j0 = std::ceil(eta[0] / kTwoPi);
    std::vector<double> roots;
    roots.reserve(n);
    std::vector<Bracket> open;
    std::size_t cell = 0;
    for (std::size_t m = 0; m < n; ++m) {
        const double level = kTwoPi * (j0 + static_cast<double>(m));
        while (cell + 1 < g && eta[cell + 1] <= level) {
            ++cell;
        }
        if (eta[cell] == level) {
            roots.push_back(grid[cell]);
            continue;
        }
        if (!(eta[cell] < level && level < eta[cell + 1])) {
            std::ostringstream os;
            os << "level " << m << " of " << n << " not bracketed by the phase grid";
            throw Error(Errc::count_mismatch, os.str());
        }
        Bracket b;
        b.level = level;
        b.lo = grid[cell];
        b.hi = grid[cell + 1];
        b.flo = eta[cell] - level;
        b.fhi = eta[cell + 1] - level;
        b.checkpoint = b.hi - b.lo;
        open.push_back(b);
    }

    // Batched Illinois iteration with a bisection safeguard.
    std::vector<double> probe;
    std::vector<std::size_t> active;
    for (int round = 0; round < 400; ++round) {
        active.clear();
        probe.clear();
        for (std::size_t i = 0; i < open.size(); ++i) {
            Bracket& b = open[i];
            const double width = b.hi - b.lo;
            if (width <= kThetaTol) {
                continue;
            }
            bool bisect = false;
            if (b.since_check >= 2) {
                bisect = width > 0.5 * b.checkpoint;
                b.checkpoint = width;
                b.since_check = 0;
            }
            double c = 0.5 * (b.lo + b.hi);
            if (!bisect) {
                const double rf = (b.lo * b.fhi - b.hi * b.flo) / (b.fhi - b.flo);
                if (rf > b.lo && rf < b.hi) {
                    c = rf;
                }
            }
            ++b.since_check;
            active.push_back(i);
            probe.push_back(c);
        }
        if (active.empty()) {
            break;
        }
        const auto val = eval_eta(alphas, beta_arg, probe);
        for (std::size_t k = 0; k < active.size(); ++k) {
            Bracket& b = open[active[k]];
            const double c = probe[k];
            const double fc = val[k] - b.level;
            if (fc < 0.0) {
                b.lo = c;
                b.flo = fc;
                if (b.side == -1) {
                    b.fhi *= 0.5;
                }
                b.side = -1;
            } else if (fc > 0.0) {
                b.hi = c;
                b.fhi = fc;
                if (b.side == 1) {
                    b.flo *= 0.5;
                }
                b.side = 1;
            } else {
                b.lo = b.hi = c;
            }
        }
    }
    for (const auto& b : open) {
        if (b.hi - b.lo > kThetaTol) {
            throw Error(Errc::non_convergence, "phase bracket did not shrink to 1e-12");
        }
        roots.push_back(0.5 * (b.lo + b.hi));
    }
    for (auto& r : roots) {
        if (r >= kTwoPi) {
            r -= kTwoPi;
        }
    }
    std::sort(roots.begin(), roots.end());
    if (roots.size() != n) {
        throw Error(Errc::count_mismatch, "phase crossings differ from degree");
    }
    return roots;
}

}  // namespace opuc
