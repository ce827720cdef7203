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

#include "opuc/harness/run.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "opuc/asym.hpp"
#include "opuc/harness/report.hpp"
#include "opuc/oprl.hpp"
#include "opuc/pop.hpp"
#include "opuc/roots.hpp"
#include "opuc/stats.hpp"
#include "opuc/szego.hpp"
#include "opuc/szegofn.hpp"

namespace opuc::harness {

using nlohmann::json;

bool RunResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(format_number(v)); }

json cx(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

struct Ctx {
    const ExperimentConfig& cfg;
    std::filesystem::path dir;
    RunResult result;
    json results = json::object();

    void file(const std::string& name, const CsvTable& t) {
        t.write(dir / name);
        result.files.push_back(name);
    }
    void le(const std::string& name, double v, double thr) {
        result.checks.push_back({name, v <= thr, v, thr, "<="});
    }
    void ge(const std::string& name, double v, double thr) {
        result.checks.push_back({name, v >= thr, v, thr, ">="});
    }
    void holds(const std::string& name, bool ok) {
        result.checks.push_back({name, ok, ok ? 1.0 : 0.0, 1.0, "holds"});
    }
};

const VerblunskySeq& family(const ExperimentConfig& cfg) {
    if (!cfg.family) {
        throw Error(Errc::config, std::string(experiment_name(cfg.kind)) + " needs a family");
    }
    return *cfg.family;
}

/// Zeros on the circle from the phase, or Phi_n zeros by Aberth.
ZeroSet zeros_for(const ExperimentConfig& cfg, std::size_t n) {
    const auto& seq = family(cfg);
    if (!cfg.pop) {
        return opuc_zeros(recurse(seq, n));
    }
    const PopSpec spec = cfg.pop->random_beta ? PopSpec::random_beta(seq, cfg.seed)
                                              : PopSpec(seq, *cfg.pop->beta);
    ZeroSet zs;
    for (double t : pop_zeros_by_phase(spec, n)) {
        zs.zeros.push_back(std::polar(1.0, t));
        zs.residuals.push_back(0.0);
    }
    zs.coeff_norm = 1.0;
    return zs;
}

void run_zeros(Ctx& c) {
    CsvTable zt({"n", "index", "re", "im", "modulus", "argument"});
    CsvTable st({"n", "count", "max_modulus", "mean_modulus", "relative_residual"});
    double worst = 0.0;
    json per_n = json::array();
    for (std::size_t n : c.cfg.n_list) {
        const auto zs = zeros_for(c.cfg, n);
        append_zeros(zt, n, zs);
        double mx = 0.0;
        double mean = 0.0;
        for (std::size_t i = 0; i < zs.size(); ++i) {
            mx = std::max(mx, zs.modulus(i));
            mean += zs.modulus(i);
        }
        mean /= static_cast<double>(std::max<std::size_t>(zs.size(), 1));
        const double res = zs.max_residual() / zs.coeff_norm;
        worst = std::max(worst, res);
        st.add_row({CsvTable::num(n), CsvTable::num(zs.size()), CsvTable::num(mx),
                    CsvTable::num(mean), CsvTable::num(res)});
        per_n.push_back({{"n", n}, {"count", zs.size()}, {"max_modulus", number(mx)},
                         {"relative_residual", number(res)}});
    }
    c.file("zeros.csv", zt);
    c.file("summary.csv", st);
    c.results["per_n"] = per_n;
    c.le("relative_residual", worst, c.cfg.tolerance("residual_max", 1e-12));
}

void run_clock(Ctx& c) {
    const auto& seq = family(c.cfg);
    const double b = c.cfg.pop ? 1.0 : analyticity_b(seq);
    CsvTable t({"n", "period", "sup_dev", "radial_sup", "ratio_sup", "gap_at_zero",
                "gap_at_zero_ok", "outliers"});
    CsvTable zt({"n", "index", "re", "im", "modulus", "argument"});
    CsvTable ot({"n", "re", "im"});
    std::vector<double> sup;
    ClockReport last;
    for (std::size_t n : c.cfg.n_list) {
        const auto zs = zeros_for(c.cfg, n);
        append_zeros(zt, n, zs);
        ClockOptions opts;
        opts.convention = c.cfg.convention;
        opts.radius_margin = c.cfg.radius_margin >= 0.0 ? c.cfg.radius_margin
                             : c.cfg.pop                ? 1e-6
                                                        : -1.0;
        last = clock_metrics(zs, b, opts);
        sup.push_back(last.sup_dev);
        t.add_row({CsvTable::num(n), CsvTable::num(last.period), CsvTable::num(last.sup_dev),
                   CsvTable::num(last.radial_sup), CsvTable::num(last.ratio_sup),
                   CsvTable::num(last.gap_at_zero), last.gap_at_zero_ok ? "1" : "0",
                   CsvTable::num(last.outliers.size())});
        for (cplx z : last.outliers) {
            ot.add_row({CsvTable::num(n), CsvTable::num(z.real()), CsvTable::num(z.imag())});
        }
    }
    c.file("clock.csv", t);
    c.file("zeros.csv", zt);
    c.file("outliers.csv", ot);
    c.results["b"] = number(b);
    c.results["convention"] =
        c.cfg.convention == ClockConvention::PinnedAtZero ? "pinned" : "wraparound";
    c.results["sup_dev"] = sup;
    bool dec = true;
    for (std::size_t i = 0; i + 1 < sup.size(); ++i) {
        dec = dec && sup[i + 1] < sup[i];
    }
    if (sup.size() > 1) {
        c.holds("sup_dev_decreasing", dec);
    }
    if (c.cfg.tolerances.count("sup_dev_max")) {
        c.le("sup_dev_final", sup.back(), c.cfg.tolerance("sup_dev_max", 0.0));
    }
    if (c.cfg.convention == ClockConvention::PinnedAtZero) {
        const double dev = std::abs(last.gap_at_zero / (2.0 * last.period) - 1.0);
        c.le("gap_at_zero_relative", dev, c.cfg.tolerance("gap_tolerance", kGapTolerance));
    }
}

void run_poisson(Ctx& c) {
    const auto& seq = family(c.cfg);
    const std::size_t n = c.cfg.n_list.at(0);
    PoissonOptions po;
    po.threads = c.cfg.threads;
    const auto rep = poisson_experiment(seq, n, c.cfg.trials, c.cfg.intervals, c.cfg.seed, po);
    CsvTable ht({"interval", "l", "count", "empirical", "poisson"});
    json iv = json::array();
    const double total = static_cast<double>(rep.trials);
    for (std::size_t k = 0; k < rep.intervals.size(); ++k) {
        const auto& ic = rep.intervals[k];
        for (std::size_t l = 0; l < ic.histogram.size(); ++l) {
            ht.add_row({CsvTable::num(k), CsvTable::num(l), CsvTable::num(ic.histogram[l]),
                        CsvTable::num(static_cast<double>(ic.histogram[l]) / total),
                        CsvTable::num(ic.pmf[l])});
        }
        iv.push_back({{"start", number(ic.arc.start)},
                      {"length", number(ic.arc.length)},
                      {"lambda", number(ic.arc.lambda)},
                      {"mean", number(ic.mean)},
                      {"tv", number(ic.tv)}});
        c.le("tv_interval_" + std::to_string(k), ic.tv, c.cfg.tolerance("tv_max", 0.05));
    }
    c.file("histogram.csv", ht);
    const auto cdf = spacing_cdf(rep.spacings);
    CsvTable sp({"spacing", "ecdf"});
    // Thin the ECDF to at most 2000 rows; the KS statistic uses all of it.
    const std::size_t stride = std::max<std::size_t>(1, cdf.size() / 2000);
    for (std::size_t i = 0; i < cdf.size(); i += stride) {
        sp.add_row({CsvTable::num(cdf[i]),
                    CsvTable::num(static_cast<double>(i + 1) / static_cast<double>(cdf.size()))});
    }
    c.file("spacings.csv", sp);
    const double ks = ks_to_exponential(cdf);
    c.results["intervals"] = iv;
    c.results["correlation"] = rep.correlation;
    c.results["joint"] = rep.joint;
    c.results["ks_exponential"] = number(ks);
    c.results["mean_eta_derivative_over_n"] =
        number(rep.mean_eta_derivative / static_cast<double>(n));
    if (c.cfg.tolerances.count("ks_max")) {
        c.le("ks_exponential", ks, c.cfg.tolerance("ks_max", 0.0));
    }
    if (c.cfg.control) {
        po.keep_spacings = false;
        const auto ctl = poisson_experiment(VerblunskySeq::constant(0.0), n, c.cfg.trials,
                                            c.cfg.intervals, c.cfg.seed, po);
        c.results["control_tv"] = number(ctl.intervals[0].tv);
        c.ge("control_tv", ctl.intervals[0].tv, c.cfg.tolerance("control_tv_min", 0.2));
    }
}

void run_asym(Ctx& c) {
    const auto& seq = family(c.cfg);
    AsymOptions opts;
    opts.reference_n = c.cfg.reference_n;
    opts.slope_threshold = c.cfg.tolerance("slope_max", opts.slope_threshold);
    CsvTable t({"region", "re", "im", "n", "log_error"});
    json regs = json::object();
    for (const auto& [name, pts] : c.cfg.regions) {
        const AsymReport r = name == "outer"   ? verify_outer(seq, pts, c.cfg.n_list, opts)
                             : name == "inner" ? verify_inner(seq, pts, c.cfg.n_list, opts)
                                               : verify_critical(seq, pts, c.cfg.n_list, opts);
        json arr = json::array();
        for (const auto& p : r.points) {
            for (std::size_t k = 0; k < r.n_list.size(); ++k) {
                t.add_row({name, CsvTable::num(p.z.real()), CsvTable::num(p.z.imag()),
                           CsvTable::num(r.n_list[k]), CsvTable::num(p.log_error[k])});
            }
            arr.push_back({{"z", cx(p.z)},
                           {"slope", number(p.slope)},
                           {"rate", number(p.rate)},
                           {"rate_bound", number(p.rate_bound)},
                           {"monotone_tail", p.monotone_tail},
                           {"pass", p.pass}});
        }
        regs[name] = arr;
        c.holds(name + "_decay", r.pass());
    }
    c.file("asymptotics.csv", t);
    c.results["regions"] = regs;
}

void run_oprl(Ctx& c) {
    const auto& o = c.cfg.oprl;
    const bool jac = o.family == "jacobi";
    const JacobiParams params = o.params();
    CsvTable t({"n", "index", "theta", "x"});
    CsvTable outside({"n", "x"});
    std::vector<double> stat;
    for (std::size_t n : c.cfg.n_list) {
        const auto z = jac ? jacobi_poly_zeros(o.alpha, o.beta, n) : oprl_zeros(params, n);
        const double scale = z.scale == ThetaScale::TwoCos ? 2.0 : 1.0;
        for (std::size_t i = 0; i < z.theta.size(); ++i) {
            t.add_row({CsvTable::num(n), CsvTable::num(i + 1), CsvTable::num(z.theta[i]),
                       CsvTable::num(scale * std::cos(z.theta[i]))});
        }
        for (double x : z.outside) {
            outside.add_row({CsvTable::num(n), CsvTable::num(x)});
        }
        if (jac) {
            stat.push_back(interval_clock_sup(z.theta, n, kPi / static_cast<double>(n), o.epsilon,
                                              kPi - o.epsilon));
        }
    }
    c.file("oprl_zeros.csv", t);
    c.file("oprl_outside.csv", outside);
    if (jac) {
        c.results["clock_stat"] = stat;
        bool dec = true;
        for (std::size_t i = 0; i + 1 < stat.size(); ++i) {
            dec = dec && stat[i + 1] < stat[i];
        }
        if (stat.size() > 1) {
            c.holds("clock_stat_decreasing", dec);
        }
        CsvTable dt({"n", "theta", "lhs", "rhs"});
        json res = json::array();
        for (std::size_t n : c.cfg.n_list) {
            double r = 0.0;
            for (int i = 0; i <= 200; ++i) {
                const double th = o.epsilon + (kPi - 2 * o.epsilon) * i / 200.0;
                const auto d = darboux_eval(o.alpha, o.beta, th, n, o.epsilon);
                r = std::max(r, std::abs(d.lhs - d.rhs));
                if (i % 10 == 0) {
                    dt.add_row({CsvTable::num(n), CsvTable::num(th), CsvTable::num(d.lhs),
                                CsvTable::num(d.rhs)});
                }
            }
            res.push_back(number(r));
        }
        c.file("darboux.csv", dt);
        c.results["darboux_residual"] = res;
    } else if (c.cfg.n_list.size() >= 2) {
        const auto fit = resonance_scaling(params, c.cfg.n_list);
        c.results["resonance"] = {
            {"limit", number(fit.limit)},
            {"slope", number(fit.slope)},
            {"n_theta1", fit.n_theta1},
            {"classification",
             fit.classification == Resonance::Resonant ? "resonant" : "nonresonant"}};
        const double target = fit.classification == Resonance::Resonant ? kPi / 2 : kPi;
        c.le("resonance_distance", std::abs(fit.limit - target),
             c.cfg.tolerance("resonance_tol", 0.1));
    }
}

void run_model(Ctx& c) {
    const std::size_t n = c.cfg.n_list.at(0);
    const auto zs = model_zeros(c.cfg.model_K, c.cfg.model_k, n);
    const auto mc = check_model_zeros(zs, c.cfg.model_K, c.cfg.model_k, n);
    c.file("zeros.csv", zeros_table(n, zs));
    c.results["M"] = number(mc.M);
    c.results["observed_M"] = number(mc.observed_M);
    c.results["outer_violations"] = mc.outer_violations;
    c.results["inner_violations"] = mc.inner_violations;
    c.results["near_one_violations"] = mc.near_one_violations;
    c.results["interior_gaps"] = mc.interior_gaps;
    c.results["max_gap_scaled"] = number(mc.max_gap_scaled);
    c.holds("exclusions", mc.exclusions_hold());
    c.le("max_gap_scaled", mc.max_gap_scaled, c.cfg.tolerance("gap_cap", 10.0));
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
    Ctx c{cfg, std::filesystem::path(cfg.out_dir), {}};
    switch (cfg.kind) {
        case ExperimentKind::Zeros:
        case ExperimentKind::Figdata:
            run_zeros(c);
            break;
        case ExperimentKind::Clock:
            run_clock(c);
            break;
        case ExperimentKind::Poisson:
            run_poisson(c);
            break;
        case ExperimentKind::Asymptotics:
            run_asym(c);
            break;
        case ExperimentKind::Oprl:
            run_oprl(c);
            break;
        case ExperimentKind::Model:
            run_model(c);
            break;
    }
    json checks = json::array();
    for (const auto& k : c.result.checks) {
        checks.push_back({{"name", k.name},
                          {"pass", k.pass},
                          {"value", number(k.value)},
                          {"threshold", number(k.threshold)},
                          {"relation", k.relation}});
    }
    json report;
    report["schema"] = kReportSchema;
    report["experiment"] = experiment_name(cfg.kind);
    report["config_hash"] = hex64(fnv1a64(cfg.canonical));
    report["config"] = json::parse(cfg.canonical);
    report["seed"] = cfg.seed;
    report["status"] = c.result.pass() ? "pass" : "fail";
    report["checks"] = checks;
    report["results"] = c.results;
    report["files"] = c.result.files;
    c.result.report_path = c.dir / "report.json";
    write_text_file(c.result.report_path, report.dump(2) + "\n");
    return c.result;
}

}  // namespace opuc::harness
