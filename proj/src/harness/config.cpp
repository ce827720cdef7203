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

#include "opuc/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace opuc::harness {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw Error(Errc::config, path + ": " + msg);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    if (!obj.is_object()) {
        fail(path.empty() ? "<root>" : path, "expected an object");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            std::string list;
            for (const auto& k : allowed) {
                list += (list.empty() ? "" : ", ") + k;
            }
            fail(join(path, it.key()), "unknown key (allowed: " + list + ")");
        }
    }
}

double get_real(const json& v, const std::string& path) {
    if (!v.is_number()) {
        fail(path, "expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail(path, "expected a finite number");
    }
    return x;
}

std::uint64_t get_u64(const json& v, const std::string& path) {
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    fail(path, "expected a non-negative integer");
}

std::size_t get_index(const json& v, const std::string& path, std::size_t min_value) {
    const auto x = get_u64(v, path);
    if (x < min_value) {
        fail(path, "must be at least " + std::to_string(min_value));
    }
    return static_cast<std::size_t>(x);
}

cplx get_complex(const json& v, const std::string& path) {
    if (v.is_number()) {
        return {get_real(v, path), 0.0};
    }
    if (v.is_array() && v.size() == 2) {
        return {get_real(v[0], path + "[0]"), get_real(v[1], path + "[1]")};
    }
    fail(path, "expected a number or [re, im]");
}

bool get_bool(const json& v, const std::string& path) {
    if (!v.is_boolean()) {
        fail(path, "expected true or false");
    }
    return v.get<bool>();
}

std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) {
        fail(path, "expected a string");
    }
    return v.get<std::string>();
}

std::vector<std::size_t> get_n_list(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) {
        fail(path, "expected a non-empty array of degrees");
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(get_index(v[i], path + "[" + std::to_string(i) + "]", 1));
    }
    if (!std::is_sorted(out.begin(), out.end()) ||
        std::adjacent_find(out.begin(), out.end()) != out.end()) {
        fail(path, "degrees must be strictly increasing");
    }
    return out;
}

// Wraps constructor errors so the message names the field.
template <class F>
auto with_path(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

VerblunskySeq parse_family(const json& v, const std::string& path, std::uint64_t run_seed) {
    if (!v.is_object() || !v.contains("type")) {
        fail(path, "expected an object with a \"type\"");
    }
    const std::string type = get_string(v["type"], join(path, "type"));
    if (type == "constant") {
        check_keys(v, path, {"type", "value"});
        const cplx c = v.contains("value") ? get_complex(v["value"], join(path, "value")) : 0.0;
        return with_path(path, [&] { return VerblunskySeq::constant(c); });
    }
    if (type == "bls") {
        check_keys(v, path, {"type", "C", "b", "perturbation"});
        if (!v.contains("C") || !v.contains("b")) {
            fail(path, "bls needs C and b");
        }
        const cplx C = get_complex(v["C"], join(path, "C"));
        const double b = get_real(v["b"], join(path, "b"));
        std::optional<BlsPerturbation> pert;
        if (v.contains("perturbation")) {
            const auto pp = join(path, "perturbation");
            const json& p = v["perturbation"];
            check_keys(p, pp, {"K", "delta"});
            if (!p.contains("K") || !p.contains("delta")) {
                fail(pp, "needs K and delta");
            }
            pert = BlsPerturbation{get_complex(p["K"], join(pp, "K")),
                                   get_real(p["delta"], join(pp, "delta"))};
        }
        return with_path(path, [&] { return VerblunskySeq::bls(C, b, pert); });
    }
    if (type == "random_disk" || type == "random_real") {
        const std::string scale = type == "random_disk" ? "rho" : "halfwidth";
        check_keys(v, path, {"type", scale, "seed"});
        if (!v.contains(scale)) {
            fail(path, type + " needs " + scale);
        }
        const double s = get_real(v[scale], join(path, scale));
        const std::uint64_t seed = v.contains("seed") ? get_u64(v["seed"], join(path, "seed"))
                                                      : run_seed;
        return with_path(path, [&] {
            return type == "random_disk" ? VerblunskySeq::random_disk(s, seed)
                                         : VerblunskySeq::random_real(s, seed);
        });
    }
    if (type == "power_decay") {
        check_keys(v, path, {"type", "C", "beta"});
        if (!v.contains("C") || !v.contains("beta")) {
            fail(path, "power_decay needs C and beta");
        }
        const cplx C = get_complex(v["C"], join(path, "C"));
        const double beta = get_real(v["beta"], join(path, "beta"));
        return with_path(path, [&] { return VerblunskySeq::power_decay(C, beta); });
    }
    if (type == "explicit") {
        check_keys(v, path, {"type", "values"});
        if (!v.contains("values") || !v["values"].is_array()) {
            fail(path, "explicit needs a values array");
        }
        std::vector<cplx> vals;
        for (std::size_t i = 0; i < v["values"].size(); ++i) {
            vals.push_back(get_complex(v["values"][i], join(path, "values") + "[" +
                                                           std::to_string(i) + "]"));
        }
        return with_path(path, [&] { return VerblunskySeq::explicit_list(vals); });
    }
    fail(join(path, "type"), "unknown family \"" + type +
                                 "\" (constant, bls, random_disk, random_real, power_decay, "
                                 "explicit)");
}

std::vector<cplx> get_points(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) {
        fail(path, "expected a non-empty array of points");
    }
    std::vector<cplx> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(get_complex(v[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

const std::map<ExperimentKind, std::set<std::string>>& keys_by_kind() {
    static const std::map<ExperimentKind, std::set<std::string>> k{
        {ExperimentKind::Zeros, {"family", "n", "n_list", "pop"}},
        {ExperimentKind::Figdata, {"family", "n_list", "pop"}},
        {ExperimentKind::Clock, {"family", "n_list", "pop", "convention", "radius_margin"}},
        {ExperimentKind::Poisson, {"family", "n", "trials", "intervals", "control"}},
        {ExperimentKind::Asymptotics, {"family", "n_list", "regions", "reference_n"}},
        {ExperimentKind::Oprl, {"oprl", "n_list"}},
        {ExperimentKind::Model, {"model", "n"}},
    };
    return k;
}

const std::map<ExperimentKind, std::set<std::string>>& tolerances_by_kind() {
    static const std::map<ExperimentKind, std::set<std::string>> k{
        {ExperimentKind::Zeros, {"residual_max"}},
        {ExperimentKind::Figdata, {"residual_max"}},
        {ExperimentKind::Clock, {"sup_dev_max", "gap_tolerance"}},
        {ExperimentKind::Poisson, {"tv_max", "control_tv_min", "ks_max"}},
        {ExperimentKind::Asymptotics, {"slope_max"}},
        {ExperimentKind::Oprl, {"resonance_tol"}},
        {ExperimentKind::Model, {"gap_cap"}},
    };
    return k;
}

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string canonical_text(json j) {
    j.erase("output");
    return j.dump();
}

}  // namespace

const char* experiment_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Zeros:
            return "zeros";
        case ExperimentKind::Clock:
            return "clock";
        case ExperimentKind::Poisson:
            return "poisson";
        case ExperimentKind::Asymptotics:
            return "asymptotics";
        case ExperimentKind::Oprl:
            return "oprl";
        case ExperimentKind::Figdata:
            return "figdata";
        case ExperimentKind::Model:
            return "model";
    }
    return "?";
}

std::optional<ExperimentKind> parse_experiment_name(const std::string& s) {
    for (auto k : {ExperimentKind::Zeros, ExperimentKind::Clock, ExperimentKind::Poisson,
                   ExperimentKind::Asymptotics, ExperimentKind::Oprl, ExperimentKind::Figdata,
                   ExperimentKind::Model}) {
        if (s == experiment_name(k)) {
            return k;
        }
    }
    return std::nullopt;
}

JacobiParams OprlChoice::params() const {
    JacobiParams p = family == "jacobi"            ? JacobiParams::jacobi(alpha, beta)
                     : family == "chebyshev_first" ? JacobiParams::chebyshev_first()
                                                   : JacobiParams::free();
    for (const auto& [n, v] : a_override) {
        p = p.with_a(n, v);
    }
    for (const auto& [n, v] : b_override) {
        p = p.with_b(n, v);
    }
    return p;
}

double ExperimentConfig::tolerance(const std::string& name, double fallback) const {
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::config, origin + ": syntax error at " + line_col(text, e.byte) + ": " +
                                      e.what());
    }
    if (!root.is_object()) {
        fail(origin, "top level must be an object");
    }
    if (!root.contains("experiment")) {
        fail(origin, "missing \"experiment\"");
    }
    ExperimentConfig cfg;
    const std::string exp = get_string(root["experiment"], "experiment");
    const auto kind = parse_experiment_name(exp);
    if (!kind) {
        fail("experiment", "unknown experiment \"" + exp +
                               "\" (zeros, clock, poisson, asymptotics, oprl, figdata, model)");
    }
    cfg.kind = *kind;
    std::set<std::string> allowed{"experiment", "seed", "threads", "output", "tolerances"};
    for (const auto& k : keys_by_kind().at(cfg.kind)) {
        allowed.insert(k);
    }
    check_keys(root, "", allowed);

    if (root.contains("seed")) {
        cfg.seed = get_u64(root["seed"], "seed");
    }
    if (root.contains("threads")) {
        cfg.threads = static_cast<unsigned>(get_index(root["threads"], "threads", 1));
    }
    if (root.contains("output")) {
        check_keys(root["output"], "output", {"dir"});
        if (root["output"].contains("dir")) {
            cfg.out_dir = get_string(root["output"]["dir"], "output.dir");
        }
    }
    if (root.contains("tolerances")) {
        const auto& names = tolerances_by_kind().at(cfg.kind);
        check_keys(root["tolerances"], "tolerances", names);
        for (auto it = root["tolerances"].begin(); it != root["tolerances"].end(); ++it) {
            cfg.tolerances[it.key()] = get_real(it.value(), "tolerances." + it.key());
        }
    }
    if (root.contains("family")) {
        cfg.family = parse_family(root["family"], "family", cfg.seed);
        cfg.family_seed_pinned = root["family"].contains("seed");
    }
    if (root.contains("n")) {
        cfg.n_list = {get_index(root["n"], "n", 1)};
    }
    if (root.contains("n_list")) {
        if (root.contains("n")) {
            fail("n_list", "give either n or n_list");
        }
        cfg.n_list = get_n_list(root["n_list"], "n_list");
    }
    if (root.contains("pop")) {
        check_keys(root["pop"], "pop", {"beta", "random_beta"});
        PopChoice pc;
        if (root["pop"].contains("beta")) {
            pc.beta = get_complex(root["pop"]["beta"], "pop.beta");
            if (std::abs(*pc.beta) == 0.0) {
                fail("pop.beta", "must be nonzero");
            }
        }
        if (root["pop"].contains("random_beta")) {
            pc.random_beta = get_bool(root["pop"]["random_beta"], "pop.random_beta");
        }
        if (pc.beta && pc.random_beta) {
            fail("pop", "give either beta or random_beta");
        }
        if (!pc.beta && !pc.random_beta) {
            pc.beta = cplx(1.0, 0.0);
        }
        cfg.pop = pc;
    }
    if (root.contains("convention")) {
        const std::string c = get_string(root["convention"], "convention");
        if (c == "wraparound") {
            cfg.convention = ClockConvention::Wraparound;
        } else if (c == "pinned") {
            cfg.convention = ClockConvention::PinnedAtZero;
        } else {
            fail("convention", "expected \"wraparound\" or \"pinned\"");
        }
    } else if (cfg.kind == ExperimentKind::Clock && !cfg.pop) {
        cfg.convention = ClockConvention::PinnedAtZero;
    }
    if (root.contains("radius_margin")) {
        cfg.radius_margin = get_real(root["radius_margin"], "radius_margin");
        if (!(cfg.radius_margin > 0.0)) {
            fail("radius_margin", "must be positive");
        }
    }
    if (root.contains("trials")) {
        cfg.trials = get_index(root["trials"], "trials", 200);
    }
    if (root.contains("control")) {
        cfg.control = get_bool(root["control"], "control");
    }
    if (root.contains("intervals")) {
        const json& iv = root["intervals"];
        if (!iv.is_array() || iv.empty()) {
            fail("intervals", "expected a non-empty array");
        }
        for (std::size_t i = 0; i < iv.size(); ++i) {
            const std::string p = "intervals[" + std::to_string(i) + "]";
            check_keys(iv[i], p, {"anchor", "a", "b"});
            IntervalSpec s;
            if (iv[i].contains("anchor")) {
                s.theta_anchor = get_real(iv[i]["anchor"], p + ".anchor");
            }
            if (!iv[i].contains("a") || !iv[i].contains("b")) {
                fail(p, "needs a and b");
            }
            s.a = get_real(iv[i]["a"], p + ".a");
            s.b = get_real(iv[i]["b"], p + ".b");
            cfg.intervals.push_back(s);
        }
    }
    if (root.contains("regions")) {
        check_keys(root["regions"], "regions", {"outer", "inner", "critical"});
        for (auto it = root["regions"].begin(); it != root["regions"].end(); ++it) {
            cfg.regions[it.key()] = get_points(it.value(), "regions." + it.key());
        }
    }
    if (root.contains("reference_n")) {
        cfg.reference_n = get_index(root["reference_n"], "reference_n", 100);
    }
    if (root.contains("oprl")) {
        const json& o = root["oprl"];
        check_keys(o, "oprl", {"family", "alpha", "beta", "a", "b", "epsilon"});
        if (o.contains("family")) {
            cfg.oprl.family = get_string(o["family"], "oprl.family");
            if (cfg.oprl.family != "free" && cfg.oprl.family != "chebyshev_first" &&
                cfg.oprl.family != "jacobi") {
                fail("oprl.family", "expected free, chebyshev_first or jacobi");
            }
        }
        if (o.contains("alpha")) {
            cfg.oprl.alpha = get_real(o["alpha"], "oprl.alpha");
        }
        if (o.contains("beta")) {
            cfg.oprl.beta = get_real(o["beta"], "oprl.beta");
        }
        if (o.contains("epsilon")) {
            cfg.oprl.epsilon = get_real(o["epsilon"], "oprl.epsilon");
        }
        for (const char* key : {"a", "b"}) {
            if (!o.contains(key)) {
                continue;
            }
            const std::string p = std::string("oprl.") + key;
            if (!o[key].is_object()) {
                fail(p, "expected an object {\"index\": value}");
            }
            for (auto it = o[key].begin(); it != o[key].end(); ++it) {
                std::size_t idx = 0;
                try {
                    std::size_t used = 0;
                    idx = std::stoul(it.key(), &used);
                    if (used != it.key().size() || idx == 0) {
                        throw std::invalid_argument("index");
                    }
                } catch (const std::exception&) {
                    fail(p + "." + it.key(), "keys must be positive integers");
                }
                (key[0] == 'a' ? cfg.oprl.a_override : cfg.oprl.b_override)[idx] =
                    get_real(it.value(), p + "." + it.key());
            }
        }
        with_path("oprl", [&] { return cfg.oprl.params(); });
    }
    if (root.contains("model")) {
        check_keys(root["model"], "model", {"K", "k"});
        if (root["model"].contains("K")) {
            cfg.model_K = get_complex(root["model"]["K"], "model.K");
        }
        if (root["model"].contains("k")) {
            cfg.model_k = static_cast<int>(get_index(root["model"]["k"], "model.k", 1));
        }
        if (cfg.model_K == cplx(0.0)) {
            fail("model.K", "must be nonzero");
        }
    }

    // Per-experiment requirements.
    const bool needs_family = cfg.kind != ExperimentKind::Oprl && cfg.kind != ExperimentKind::Model;
    if (needs_family && !cfg.family) {
        fail(origin, std::string("experiment \"") + experiment_name(cfg.kind) +
                         "\" needs a family");
    }
    switch (cfg.kind) {
        case ExperimentKind::Figdata:
            if (cfg.n_list.empty()) {
                cfg.n_list = {5, 10, 20, 50, 100, 200};
            }
            break;
        case ExperimentKind::Zeros:
        case ExperimentKind::Clock:
        case ExperimentKind::Oprl:
        case ExperimentKind::Asymptotics:
            if (cfg.n_list.empty()) {
                fail(origin, "needs n or n_list");
            }
            break;
        case ExperimentKind::Poisson:
            if (cfg.n_list.size() != 1) {
                fail(origin, "poisson needs a single n");
            }
            if (cfg.trials == 0) {
                fail(origin, "poisson needs trials");
            }
            if (cfg.intervals.empty()) {
                cfg.intervals = {IntervalSpec{0.0, 0.0, 1.0}};
            }
            with_path("intervals", [&] { return canonical_intervals(cfg.n_list[0], cfg.intervals); });
            break;
        case ExperimentKind::Model:
            if (cfg.n_list.size() != 1) {
                fail(origin, "model needs n");
            }
            if (cfg.n_list[0] <= static_cast<std::size_t>(cfg.model_k)) {
                fail("n", "must exceed model.k");
            }
            break;
    }
    if (cfg.kind == ExperimentKind::Asymptotics) {
        if (cfg.regions.empty()) {
            fail(origin, "asymptotics needs regions");
        }
        if (cfg.n_list.size() < 2) {
            fail("n_list", "asymptotics needs at least two degrees");
        }
    }
    cfg.canonical = canonical_text(root);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::io, "cannot open config " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

void override_seed(ExperimentConfig& cfg, std::uint64_t seed) {
    cfg.seed = seed;
    if (cfg.family && cfg.family->is_random() && !cfg.family_seed_pinned) {
        cfg.family = cfg.family->with_seed(seed);
    }
    json j = json::parse(cfg.canonical);
    j["seed"] = seed;
    cfg.canonical = canonical_text(j);
}

}  // namespace opuc::harness
