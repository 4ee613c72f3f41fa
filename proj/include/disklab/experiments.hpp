#pragma once

#include "disklab/functions.hpp"
#include "disklab/quadrature.hpp"
#include "disklab/report.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace disklab::experiments {

struct ExperimentConfig {
    std::string name;
    std::map<std::string, std::string> options;

    /// Load a flat "key = value" config file ('#' comments, blank lines ok).
    static ExperimentConfig from_file(const std::string& name, const std::string& path);

    std::string get(const std::string& key, const std::string& fallback) const;
    double number(const std::string& key, double fallback) const;
    int integer(const std::string& key, int fallback) const;
};

/// Quadrature settings from config options (ntheta, clip, tol, rounds).
quad::QuadConfig quad_from_options(const ExperimentConfig& cfg, quad::QuadConfig base = {});

/// Deterministic polynomial family: coefficients uniform in the unit square
/// of the complex plane, degrees cycling up to max_degree.
std::vector<functions::AnalyticFunction> random_polynomials(std::uint64_t seed, int count,
                                                            int max_degree);

/// Named experiments: maximal-bound, al-eq-at, dilation-density, lp-equiv,
/// regularized-equiv, tent-vs-mixed, w-counterexample, testfn-bound,
/// tga-bloch, rho-table. Throws std::invalid_argument for unknown names.
report::Report run_experiment(const ExperimentConfig& cfg);

std::vector<std::string> experiment_names();

} // namespace disklab::experiments
