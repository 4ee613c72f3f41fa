#include "disklab/experiments.hpp"
#include "disklab/geometry.hpp"
#include "disklab/norms.hpp"
#include "disklab/projection.hpp"
#include "disklab/report.hpp"
#include "disklab/specparse.hpp"
#include "disklab/weights.hpp"

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>

namespace {

using disklab::report::format_number;
using disklab::report::Report;

struct QuadFlags {
    int ntheta = 64;
    double clip = 1e-6;
    double tol = 1e-6;
    int rounds = 8;

    void attach(CLI::App* app) {
        app->add_option("--ntheta", ntheta, "angular nodes for the outer integral");
        app->add_option("--clip", clip, "boundary clip delta");
        app->add_option("--tol", tol, "relative tolerance");
        app->add_option("--rounds", rounds, "max refinement rounds");
    }
    disklab::quad::QuadConfig config() const {
        disklab::quad::QuadConfig qc;
        qc.n_theta = ntheta;
        qc.clip = clip;
        qc.rel_tol = tol;
        qc.max_rounds = rounds;
        return qc;
    }
};

void emit(const Report& rep, const std::string& format, const std::string& output) {
    if (output.empty()) {
        disklab::report::write(rep, format, std::cout);
    } else {
        std::ofstream os(output, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file: " + output);
        disklab::report::write(rep, format, os);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"disklab: weighted tent/mixed norm laboratory on the unit disc"};
    app.require_subcommand(1);
    // Let global options (--format, --output) appear after the subcommand.
    app.fallthrough();

    std::string format = "csv", output;
    app.add_option("--format", format, "output format: csv or json")->capture_default_str();
    app.add_option("--output", output, "output file (default: stdout)");

    // --- norm -----------------------------------------------------------
    auto* norm_cmd = app.add_subcommand("norm", "compute a mixed or tent norm");
    std::string space = "mixed", weight_spec = "const:c=1", fn_spec = "poly:1";
    double p = 2.0, q = 2.0, opening = 1.0;
    QuadFlags norm_qf;
    norm_cmd->add_option("--space", space, "mixed or tent")->capture_default_str();
    norm_cmd->add_option("--p", p, "inner exponent");
    norm_cmd->add_option("--q", q, "outer exponent");
    norm_cmd->add_option("--M", opening, "cone opening (tent only)");
    norm_cmd->add_option("--weight", weight_spec, "weight spec");
    norm_cmd->add_option("--fn", fn_spec, "function spec");
    norm_qf.attach(norm_cmd);

    // --- classify-weight --------------------------------------------------
    auto* classify_cmd = app.add_subcommand("classify-weight",
                                            "doubling-class membership of a weight");
    std::string cw_weight = "const:c=1";
    double cw_K = 2.0;
    classify_cmd->add_option("--weight", cw_weight, "weight spec")->required();
    classify_cmd->add_option("--K", cw_K, "lower-doubling parameter K");

    // --- rho-table ----------------------------------------------------------
    auto* rho_cmd = app.add_subcommand("rho-table", "tail-halving radii rho_n");
    std::string rho_weight = "const:c=1";
    double rho_K = 2.0;
    int rho_n = 10;
    rho_cmd->add_option("--weight", rho_weight, "weight spec");
    rho_cmd->add_option("--K", rho_K, "tail division base");
    rho_cmd->add_option("--n", rho_n, "number of radii");

    // --- condition ----------------------------------------------------------
    auto* cond_cmd = app.add_subcommand("condition", "projection boundedness conditions");
    std::string which = "Dp", cond_weight = "const:c=1";
    double cond_gamma = 0.0, cond_p = 2.0;
    int cond_n = 100;
    cond_cmd->add_option("--which", which, "Dp or Bp")->capture_default_str();
    cond_cmd->add_option("--gamma", cond_gamma, "kernel parameter gamma");
    cond_cmd->add_option("--p", cond_p, "exponent p");
    cond_cmd->add_option("--weight", cond_weight, "weight spec");
    cond_cmd->add_option("--n", cond_n, "max index / grid size");

    // --- projection-check -----------------------------------------------------
    auto* proj_cmd = app.add_subcommand("projection-check",
                                        "Bergman projection reproduction error");
    double proj_gamma = 0.0;
    int proj_degree = 4;
    QuadFlags proj_qf;
    proj_cmd->add_option("--gamma", proj_gamma, "kernel parameter gamma");
    proj_cmd->add_option("--degree", proj_degree, "polynomial degree to reproduce");
    proj_qf.attach(proj_cmd);

    // --- partition-demo --------------------------------------------------------
    auto* part_cmd = app.add_subcommand("partition-demo",
                                        "locate sample points in the cone partition");
    double part_vertex = 0.9, part_M = 1.0;
    int part_n = 4, part_samples = 25;
    part_cmd->add_option("--vertex", part_vertex, "partition vertex modulus");
    part_cmd->add_option("--M", part_M, "cone opening");
    part_cmd->add_option("--n", part_n, "partition depth");
    part_cmd->add_option("--samples", part_samples, "sample count");

    // --- run ----------------------------------------------------------------
    auto* run_cmd = app.add_subcommand("run", "run a named experiment");
    std::string run_name, run_config;
    run_cmd->add_option("experiment", run_name, "experiment name")->required();
    run_cmd->add_option("--config", run_config, "flat key=value config file");

    CLI11_PARSE(app, argc, argv);

    try {
        Report rep;
        if (*norm_cmd) {
            auto qc = norm_qf.config();
            disklab::norms::SpaceSpec spec;
            spec.p = p;
            spec.q = q;
            spec.weight = disklab::specparse::parse_weight(weight_spec);
            auto parsed = disklab::specparse::parse_function(fn_spec);
            auto absf = std::visit(
                [](const auto& f) { return disklab::norms::polar_abs(f); }, parsed);
            disklab::quad::ConvergenceReport r =
                (space == "tent")
                    ? disklab::norms::tent_norm(absf, spec, qc, opening)
                    : disklab::norms::mixed_norm(absf, spec, qc);
            rep.add_meta("space", space);
            rep.add_meta("weight", weight_spec);
            rep.add_meta("fn", fn_spec);
            rep.columns = {"p", "q", "value", "rel_error", "converged"};
            rep.rows.push_back({format_number(p), format_number(q), format_number(r.value),
                                format_number(r.rel_error), r.converged ? "true" : "false"});
        } else if (*classify_cmd) {
            const auto w = disklab::specparse::parse_weight(cw_weight);
            const auto grid = disklab::weights::default_r_grid();
            const auto dhat = disklab::weights::classify_dhat(w, grid);
            const auto dcheck = disklab::weights::classify_dcheck(w, cw_K, grid);
            rep.add_meta("weight", cw_weight);
            rep.columns = {"class", "member", "statistic"};
            rep.rows.push_back({"Dhat", dhat.member ? "true" : "false",
                                format_number(dhat.sup_ratio)});
            rep.rows.push_back({"Dcheck", dcheck.member ? "true" : "false",
                                format_number(dcheck.inf_ratio)});
            rep.add_summary("D", (dhat.member && dcheck.member) ? "true" : "false");
        } else if (*rho_cmd) {
            disklab::experiments::ExperimentConfig cfg;
            cfg.name = "rho-table";
            cfg.options["weight"] = rho_weight;
            cfg.options["K"] = format_number(rho_K);
            cfg.options["n"] = std::to_string(rho_n);
            rep = disklab::experiments::run_experiment(cfg);
        } else if (*cond_cmd) {
            const auto w = disklab::specparse::parse_weight(cond_weight);
            rep.add_meta("which", which);
            rep.add_meta("weight", cond_weight);
            rep.add_meta("gamma", format_number(cond_gamma));
            rep.add_meta("p", format_number(cond_p));
            rep.columns = {"n_or_r", "ratio"};
            if (which == "Dp") {
                const auto dp =
                    disklab::projection::condition_Dp(cond_gamma, w, cond_p, cond_n);
                for (std::size_t n = 0; n < dp.sequence.size(); ++n)
                    rep.rows.push_back({std::to_string(n), format_number(dp.sequence[n])});
                rep.add_summary("value", format_number(dp.value));
                rep.add_summary("trend_slope", format_number(dp.trend_slope));
                rep.add_summary("verdict",
                                dp.verdict == disklab::projection::ConditionVerdict::Finite
                                    ? "finite"
                                    : (dp.verdict ==
                                               disklab::projection::ConditionVerdict::Infinite
                                           ? "infinite"
                                           : "unbounded-trend"));
            } else if (which == "Bp") {
                std::vector<double> grid;
                for (int i = 0; i < cond_n; ++i)
                    grid.push_back(1.0 - std::pow(10.0, -4.0 * i / std::max(1, cond_n - 1)));
                const auto bp = disklab::projection::condition_Bp(cond_gamma, w, cond_p, grid);
                for (const auto& [r, ratio] : bp.curve)
                    rep.rows.push_back({format_number(r), format_number(ratio)});
                rep.add_summary("value", format_number(bp.value));
                rep.add_summary("verdict",
                                bp.verdict == disklab::projection::ConditionVerdict::Finite
                                    ? "finite"
                                    : (bp.verdict ==
                                               disklab::projection::ConditionVerdict::Infinite
                                           ? "infinite"
                                           : "unbounded-trend"));
            } else {
                throw std::invalid_argument("--which must be Dp or Bp");
            }
        } else if (*proj_cmd) {
            const auto qc = proj_qf.config();
            rep.add_meta("gamma", format_number(proj_gamma));
            rep.columns = {"monomial_degree", "sup_error"};
            double worst = 0.0;
            for (int n = 0; n <= proj_degree; ++n) {
                double sup_err = 0.0;
                for (int s = 0; s < 8; ++s) {
                    const auto z = std::polar(0.1 + 0.8 * s / 7.0, 0.7 * s);
                    const auto pv = disklab::projection::project(
                        [n](std::complex<double> zeta) { return std::pow(zeta, n); },
                        proj_gamma, z, qc);
                    sup_err = std::max(sup_err, std::abs(pv - std::pow(z, n)));
                }
                worst = std::max(worst, sup_err);
                rep.rows.push_back({std::to_string(n), format_number(sup_err)});
            }
            rep.add_summary("max_error", format_number(worst));
        } else if (*part_cmd) {
            disklab::geometry::ConePartition part{part_vertex, part_M, part_n};
            rep.add_meta("vertex", format_number(part_vertex));
            rep.add_meta("M", format_number(part_M));
            rep.add_meta("n", std::to_string(part_n));
            rep.columns = {"re", "im", "j", "k"};
            for (int s = 0; s < part_samples; ++s) {
                const double r = part_vertex * (s + 0.5) / part_samples;
                const double t = part_M * part_vertex * std::sin(2.7 * s) * 0.5;
                const auto z = std::polar(r, t);
                const auto cell = part.locate(z);
                rep.rows.push_back(
                    {format_number(z.real()), format_number(z.imag()),
                     cell ? std::to_string(cell->first) : "-",
                     cell ? std::to_string(cell->second) : "-"});
            }
        } else if (*run_cmd) {
            auto cfg = run_config.empty()
                           ? disklab::experiments::ExperimentConfig{run_name, {}}
                           : disklab::experiments::ExperimentConfig::from_file(run_name,
                                                                               run_config);
            cfg.name = run_name;
            rep = disklab::experiments::run_experiment(cfg);
        }
        emit(rep, format, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
