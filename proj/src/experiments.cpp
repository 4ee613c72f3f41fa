#include "disklab/experiments.hpp"

#include "disklab/norms.hpp"
#include "disklab/specparse.hpp"
#include "disklab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace disklab::experiments {

namespace {

using functions::AnalyticFunction;
using norms::SpaceSpec;
using report::format_number;
using report::Report;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

weights::RadialWeight weight_option(const ExperimentConfig& cfg, const std::string& key,
                                    const std::string& fallback) {
    return specparse::parse_weight(cfg.get(key, fallback));
}

SpaceSpec make_spec(const ExperimentConfig& cfg, SpaceSpec::Kind kind,
                    const std::string& weight_fallback = "const:c=1") {
    SpaceSpec spec;
    spec.p = cfg.number("p", 2.0);
    spec.q = cfg.number("q", 2.0);
    spec.weight = weight_option(cfg, "weight", weight_fallback);
    spec.kind = kind;
    return spec;
}

void echo_config(Report& rep, const ExperimentConfig& cfg) {
    rep.add_meta("experiment", cfg.name);
    for (const auto& [k, v] : cfg.options) rep.add_meta(k, v);
}

struct FamilyStats {
    double min = 0.0, max = 0.0;
    bool any = false;
    void add(double v) {
        if (!any) {
            min = max = v;
            any = true;
        } else {
            min = std::min(min, v);
            max = std::max(max, v);
        }
    }
};

std::vector<double> ladder_option(const ExperimentConfig& cfg, const std::string& key,
                                  const std::string& fallback) {
    std::vector<double> out;
    std::istringstream ss(cfg.get(key, fallback));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

// --- named experiments -----------------------------------------------------

Report exp_tent_vs_mixed(const ExperimentConfig& cfg) {
    Report rep;
    echo_config(rep, cfg);
    const auto qc = quad_from_options(cfg);
    SpaceSpec spec = make_spec(cfg, SpaceSpec::Kind::Mixed);
    auto parsed = specparse::parse_function(cfg.get("fn", "poly:1"));
    norms::PolarFn absf = std::visit([](const auto& f) { return norms::polar_abs(f); }, parsed);
    rep.columns = {"case", "mixed", "tent", "ratio", "converged"};
    const auto mixed = norms::mixed_norm(absf, spec, qc);
    const auto tent = norms::tent_norm(absf, spec, qc);
    const double ratio = (mixed.value > 0) ? tent.value / mixed.value : 0.0;
    rep.rows.push_back({cfg.get("fn", "poly:1"), format_number(mixed.value),
                        format_number(tent.value), format_number(ratio),
                        (mixed.converged && tent.converged) ? "true" : "false"});
    rep.add_summary("ratio", format_number(ratio));
    rep.add_summary("fubini_factor_p_eq_q", format_number(std::pow(2.0, 1.0 / spec.p)));
    return rep;
}

Report exp_rho_table(const ExperimentConfig& cfg) {
    Report rep;
    echo_config(rep, cfg);
    const auto w = weight_option(cfg, "weight", "const:c=1");
    const double K = cfg.number("K", 2.0);
    const int n_max = cfg.integer("n", 10);
    const auto rho = w.rho_sequence(K, n_max);
    rep.columns = {"n", "rho_n", "one_minus_rho_n"};
    for (int n = 0; n < static_cast<int>(rho.size()); ++n)
        rep.rows.push_back({std::to_string(n), format_number(rho[static_cast<std::size_t>(n)]),
                            format_number(1.0 - rho[static_cast<std::size_t>(n)])});
    rep.add_summary("K", format_number(K));
    return rep;
}

// Family-ratio experiment core: for each test function report value_num /
// value_den, plus the family interval and its drift under grid refinement.
Report family_ratio_report(
    const ExperimentConfig& cfg,
    const std::function<double(const AnalyticFunction&, const quad::QuadConfig&)>& num,
    const std::function<double(const AnalyticFunction&, const quad::QuadConfig&)>& den) {
    Report rep;
    echo_config(rep, cfg);
    const auto qc = quad_from_options(cfg);
    const auto family = random_polynomials(
        static_cast<std::uint64_t>(cfg.integer("seed", 7)), cfg.integer("count", 20),
        cfg.integer("degree", 12));
    rep.columns = {"case", "numerator", "denominator", "ratio"};
    FamilyStats stats, refined_stats;
    const bool refine = cfg.integer("refine", 1) != 0;
    const auto qr = qc.refined();
    for (std::size_t i = 0; i < family.size(); ++i) {
        const double nv = num(family[i], qc);
        const double dv = den(family[i], qc);
        const double ratio = (dv > 0) ? nv / dv : 0.0;
        stats.add(ratio);
        if (refine) {
            const double nv2 = num(family[i], qr);
            const double dv2 = den(family[i], qr);
            refined_stats.add((dv2 > 0) ? nv2 / dv2 : 0.0);
        }
        rep.rows.push_back({"f" + std::to_string(i), format_number(nv), format_number(dv),
                            format_number(ratio)});
    }
    rep.add_summary("family_min", format_number(stats.min));
    rep.add_summary("family_max", format_number(stats.max));
    rep.add_summary("spread", format_number(stats.min > 0 ? stats.max / stats.min : 0.0));
    if (refine) {
        rep.add_summary("refined_min", format_number(refined_stats.min));
        rep.add_summary("refined_max", format_number(refined_stats.max));
        const double drift =
            std::max(std::abs(refined_stats.max / std::max(stats.max, 1e-300) - 1.0),
                     std::abs(refined_stats.min / std::max(stats.min, 1e-300) - 1.0));
        rep.add_summary("refinement_drift", format_number(drift));
    }
    return rep;
}

Report exp_maximal_bound(const ExperimentConfig& cfg) {
    const double opening = cfg.number("M", 1.0);
    const std::string kind_s = cfg.get("space", "mixed");
    const auto kind =
        (kind_s == "tent") ? SpaceSpec::Kind::Tent : SpaceSpec::Kind::Mixed;
    SpaceSpec spec = make_spec(cfg, kind, "std:gamma=0");
    auto num = [spec, opening](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        norms::PolarFn absf = norms::polar_abs(f);
        norms::PolarFn nmax = [absf, opening, qc](double r, double theta) {
            return norms::nontangential_max(absf, opening, std::polar(r, theta), qc);
        };
        return norms::space_norm(nmax, spec, qc).value;
    };
    auto den = [spec](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        return norms::space_norm(norms::polar_abs(f), spec, qc).value;
    };
    return family_ratio_report(cfg, num, den);
}

Report exp_al_eq_at(const ExperimentConfig& cfg) {
    SpaceSpec mixed = make_spec(cfg, SpaceSpec::Kind::Mixed, "std:gamma=0");
    SpaceSpec tent = mixed;
    tent.kind = SpaceSpec::Kind::Tent;
    auto num = [tent](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        return norms::tent_norm(norms::polar_abs(f), tent, qc).value;
    };
    auto den = [mixed](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        return norms::mixed_norm(norms::polar_abs(f), mixed, qc).value;
    };
    return family_ratio_report(cfg, num, den);
}

Report exp_lp_equiv(const ExperimentConfig& cfg) {
    SpaceSpec spec = make_spec(cfg, SpaceSpec::Kind::Mixed, "std:gamma=0");
    const int k = cfg.integer("k", 1);
    auto num = [spec, k](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        return norms::lp_seminorm(f, k, spec, qc).value;
    };
    auto den = [spec](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        return norms::mixed_norm(norms::polar_abs(f), spec, qc).value;
    };
    return family_ratio_report(cfg, num, den);
}

Report exp_regularized_equiv(const ExperimentConfig& cfg) {
    SpaceSpec spec = make_spec(cfg, SpaceSpec::Kind::Mixed, "std:gamma=0");
    SpaceSpec reg = spec;
    reg.weight = spec.weight.regularized();
    auto num = [reg](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        return norms::mixed_norm(norms::polar_abs(f), reg, qc).value;
    };
    auto den = [spec](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        return norms::mixed_norm(norms::polar_abs(f), spec, qc).value;
    };
    return family_ratio_report(cfg, num, den);
}

Report exp_dilation_density(const ExperimentConfig& cfg) {
    Report rep;
    echo_config(rep, cfg);
    const auto qc = quad_from_options(cfg);
    SpaceSpec spec = make_spec(cfg, SpaceSpec::Kind::Mixed, "std:gamma=0");
    auto parsed = specparse::parse_function(cfg.get("fn", "kernel:lambda=0.9,beta=3"));
    const auto* fp = std::get_if<AnalyticFunction>(&parsed);
    if (!fp) throw std::invalid_argument("dilation-density needs an analytic function");
    const AnalyticFunction f = *fp;
    const double base = norms::mixed_norm(norms::polar_abs(f), spec, qc).value;
    rep.columns = {"lambda", "norm_f_lambda_minus_f", "relative"};
    double last_rel = 0.0;
    for (double lam : ladder_option(cfg, "ladder", "0.9,0.99,0.999")) {
        const AnalyticFunction fl = f.dilate({lam, 0.0});
        norms::PolarFn diff = [f, fl](double r, double theta) {
            const auto z = std::polar(r, theta);
            return std::abs(fl.evaluate(z) - f.evaluate(z));
        };
        const double d = norms::mixed_norm(diff, spec, qc).value;
        last_rel = (base > 0) ? d / base : 0.0;
        rep.rows.push_back(
            {format_number(lam), format_number(d), format_number(last_rel)});
    }
    rep.add_summary("base_norm", format_number(base));
    rep.add_summary("final_relative", format_number(last_rel));
    return rep;
}

Report exp_w_counterexample(const ExperimentConfig& cfg) {
    Report rep;
    echo_config(rep, cfg);
    auto qc = quad_from_options(cfg);
    SpaceSpec mixed = make_spec(cfg, SpaceSpec::Kind::Mixed, "exp:c=1,alpha=1");
    mixed.p = cfg.number("p", 1.0);
    mixed.q = cfg.number("q", 2.0);
    SpaceSpec tent = mixed;
    tent.kind = SpaceSpec::Kind::Tent;
    const int trunc = cfg.integer("N", 200);
    rep.columns = {"a", "mixed", "tent", "ratio", "converged"};
    double first = 0.0, last = 0.0;
    bool all_converged = true;
    const auto ladder = ladder_option(cfg, "ladder", "0.8,0.9,0.95,0.98");
    for (double a : ladder) {
        const auto f = AnalyticFunction::moment_kernel({a, 0.0}, mixed.weight, trunc);
        const auto absf = norms::polar_abs(f);
        const auto m = norms::mixed_norm(absf, mixed, qc);
        const auto t = norms::tent_norm(absf, tent, qc);
        const double ratio = (t.value > 0) ? m.value / t.value : 0.0;
        if (a == ladder.front()) first = ratio;
        last = ratio;
        all_converged = all_converged && m.converged && t.converged;
        rep.rows.push_back({format_number(a), format_number(m.value),
                            format_number(t.value), format_number(ratio),
                            (m.converged && t.converged) ? "true" : "false"});
    }
    const double growth = (first > 0) ? last / first : 0.0;
    rep.add_summary("ratio_growth", format_number(growth));
    rep.add_summary("all_converged", all_converged ? "true" : "false");
    rep.add_summary("verdict", growth >= cfg.number("growth_required", 5.0)
                                   ? "gap-detected"
                                   : (all_converged ? "no-gap" : "inconclusive"));
    return rep;
}

Report exp_testfn_bound(const ExperimentConfig& cfg) {
    Report rep;
    echo_config(rep, cfg);
    const auto qc = quad_from_options(cfg);
    SpaceSpec spec = make_spec(cfg, SpaceSpec::Kind::Mixed, "std:gamma=0");
    const double beta = cfg.number("beta", 2.0);
    rep.columns = {"abs_lambda", "norm", "normalized"};
    FamilyStats stats;
    for (double lam : ladder_option(cfg, "ladder", "0.5,0.7,0.9,0.95,0.99")) {
        const auto f = AnalyticFunction::kernel({lam, 0.0}, beta);
        const double n = norms::mixed_norm(norms::polar_abs(f), spec, qc).value;
        const double scale = std::pow(spec.weight.tail(lam), -1.0 / spec.p) *
                             std::pow(1.0 - lam, beta - 1.0 / spec.q);
        const double normalized = n * scale;
        stats.add(normalized);
        rep.rows.push_back(
            {format_number(lam), format_number(n), format_number(normalized)});
    }
    rep.add_summary("normalized_min", format_number(stats.min));
    rep.add_summary("normalized_max", format_number(stats.max));
    rep.add_summary("spread", format_number(stats.min > 0 ? stats.max / stats.min : 0.0));
    return rep;
}

Report exp_tga_bloch(const ExperimentConfig& cfg) {
    auto parsed = specparse::parse_function(cfg.get("g", "kernel:lambda=0.5,beta=1"));
    const auto* gp = std::get_if<AnalyticFunction>(&parsed);
    if (!gp) throw std::invalid_argument("tga-bloch needs an analytic symbol g");
    const AnalyticFunction g = *gp;
    const double bloch = functions::bloch_norm(g);
    SpaceSpec spec = make_spec(cfg, SpaceSpec::Kind::Mixed, "std:gamma=0");
    auto num = [spec, g](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        const auto tg = functions::integrate_Tg(f, g);
        return norms::mixed_norm(norms::polar_abs(tg), spec, qc).value;
    };
    auto den = [spec, bloch](const AnalyticFunction& f, const quad::QuadConfig& qc) {
        return bloch * norms::mixed_norm(norms::polar_abs(f), spec, qc).value;
    };
    Report rep = family_ratio_report(cfg, num, den);
    rep.add_summary("bloch_norm_g", format_number(bloch));
    return rep;
}

} // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& name,
                                             const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    ExperimentConfig cfg;
    cfg.name = name;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("malformed config line (need key = value): " + line);
        cfg.options[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return cfg;
}

std::string ExperimentConfig::get(const std::string& key, const std::string& fallback) const {
    auto it = options.find(key);
    return it == options.end() ? fallback : it->second;
}

double ExperimentConfig::number(const std::string& key, double fallback) const {
    auto it = options.find(key);
    return it == options.end() ? fallback : std::stod(it->second);
}

int ExperimentConfig::integer(const std::string& key, int fallback) const {
    auto it = options.find(key);
    return it == options.end() ? fallback : std::stoi(it->second);
}

quad::QuadConfig quad_from_options(const ExperimentConfig& cfg, quad::QuadConfig base) {
    base.n_theta = cfg.integer("ntheta", 64);
    base.clip = cfg.number("clip", base.clip);
    base.rel_tol = cfg.number("tol", base.rel_tol);
    base.max_rounds = cfg.integer("rounds", base.max_rounds);
    return base;
}

std::vector<functions::AnalyticFunction> random_polynomials(std::uint64_t seed, int count,
                                                            int max_degree) {
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1p-53; // identical on all platforms
    };
    std::vector<AnalyticFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int degree = 1 + (i % std::max(1, max_degree));
        std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(degree) + 1);
        for (auto& c : coeffs) {
            const double re = uniform01();
            const double im = uniform01();
            c = {re, im};
        }
        out.push_back(AnalyticFunction::taylor(std::move(coeffs)));
    }
    return out;
}

std::vector<std::string> experiment_names() {
    return {"maximal-bound",    "al-eq-at",        "dilation-density", "lp-equiv",
            "regularized-equiv", "tent-vs-mixed",  "w-counterexample", "testfn-bound",
            "tga-bloch",        "rho-table"};
}

report::Report run_experiment(const ExperimentConfig& cfg) {
    if (cfg.name == "tent-vs-mixed") return exp_tent_vs_mixed(cfg);
    if (cfg.name == "rho-table") return exp_rho_table(cfg);
    if (cfg.name == "maximal-bound") return exp_maximal_bound(cfg);
    if (cfg.name == "al-eq-at") return exp_al_eq_at(cfg);
    if (cfg.name == "lp-equiv") return exp_lp_equiv(cfg);
    if (cfg.name == "regularized-equiv") return exp_regularized_equiv(cfg);
    if (cfg.name == "dilation-density") return exp_dilation_density(cfg);
    if (cfg.name == "w-counterexample") return exp_w_counterexample(cfg);
    if (cfg.name == "testfn-bound") return exp_testfn_bound(cfg);
    if (cfg.name == "tga-bloch") return exp_tga_bloch(cfg);
    throw std::invalid_argument("unknown experiment name: " + cfg.name);
}

} // namespace disklab::experiments
