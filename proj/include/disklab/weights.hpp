#pragma once

#include "disklab/quadrature.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace disklab::weights {

/// A radial weight on [0,1): pointwise density plus a cached tail integral
/// omega_hat(r) = int_r^1 omega(s) ds, built once at construction and
/// interpolated log-linearly in (log(1-r), log omega_hat). Immutable and
/// safe to share across threads.
class RadialWeight {
public:
    static RadialWeight constant(double c);
    /// v_gamma(r) = (1-r^2)^gamma, times (gamma+1) when normalized.
    static RadialWeight standard(double gamma, bool normalized = true);
    /// exp(-c / (1 - r^l)^alpha); rapidly decreasing (class W for l=1).
    static RadialWeight exponential(double c, double alpha, double l);
    /// exp(-exp(c / (1 - r))); double-exponential decay.
    static RadialWeight double_exponential(double c);
    /// (1-r^2)^{-1} log^{-alpha}(e/(1-r^2)); rapidly increasing, alpha > 1.
    static RadialWeight log_rapid_increase(double alpha);
    /// Piecewise-linear in r through the given nonnegative samples.
    static RadialWeight tabulated(std::vector<double> r, std::vector<double> w);
    /// Arbitrary density with a descriptive name (tail cached numerically).
    static RadialWeight from_density(std::function<double(double)> density,
                                     std::string name);

    // Derived weights.
    RadialWeight regularized() const;          // omega_tilde = omega_hat/(1-r)
    RadialWeight tilted(double beta) const;    // (1-r)^beta omega(r)
    RadialWeight dotted() const;               // s omega(s)
    RadialWeight boundary_flip() const;        // (1-x) omega(1-x)
    RadialWeight sigma_dual(double gamma, double p) const; // (v_gamma/omega^{1/p})^{p'}

    double operator()(double r) const;
    double tail(double r) const;               // omega_hat(r)
    double tail_at_zero() const;
    double moment(double x) const;             // int_0^1 r^x omega(r) dr
    const std::string& name() const;

    /// rho_n(omega, K): minimal r with omega_hat(r) = omega_hat(0) K^{-n},
    /// inverted analytically on the log-log tail interpolant.
    std::vector<double> rho_sequence(double K, int n_max) const;

    /// Heuristic tau descriptor for exponential-type weights (no contract).
    std::optional<double> tau(double r) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit RadialWeight(std::shared_ptr<const Impl> impl);
    static RadialWeight make(std::string name, std::function<double(double)> density,
                             std::function<double(double)> exact_tail = nullptr,
                             std::optional<double> tau_alpha = std::nullopt);
};

struct DhatReport {
    bool member = false;
    double sup_ratio = 0.0;
    double trend_slope = 0.0; // d log(ratio) per decade of shrinking 1-r
    std::vector<std::pair<double, double>> ratio_curve; // (r, ratio)
};

struct DcheckReport {
    bool member = false;
    double inf_ratio = 0.0;
    std::vector<std::pair<double, double>> ratio_curve;
};

struct ExponentFit {
    std::optional<double> beta;  // upper (D-hat direction)
    std::optional<double> alpha; // lower (D-check direction)
    double residual = 0.0;
};

/// Default classifier grid: geometric in 1-r.
std::vector<double> default_r_grid(double min_one_minus_r = 1e-6, int per_decade = 8);

/// Upper doubling: ratio omega_hat(r) / omega_hat((1+r)/2) over the grid.
/// Finite-resolution verdict; never a proof.
DhatReport classify_dhat(const RadialWeight& w, const std::vector<double>& r_grid,
                         double cap = 1e6, double slope_threshold = 0.05);

/// Lower doubling at parameter K: ratio omega_hat(r) / omega_hat(1-(1-r)/K).
/// Membership requires inf_ratio >= (1+margin)^{log2 K}: the margin counts
/// per doubling step, so verdicts are comparable across K.
DcheckReport classify_dcheck(const RadialWeight& w, double K,
                             const std::vector<double>& r_grid, double margin = 0.05);

/// Least-squares slope of log omega_hat vs log(1-r) over the last two usable
/// decades; nullopt entries when the tail is not power-like.
ExponentFit fit_doubling_exponents(const RadialWeight& w,
                                   double residual_threshold = 0.25);

/// W-class transform: e^{-C r^2} mu(r) / (1-r^2)^alpha with C the smallest
/// power of two making the discretized radial Laplacian of
/// C r^2 + phi + alpha log(1-r^2) positive (mu = e^{-phi}).
RadialWeight w_transform(const RadialWeight& mu, double alpha);
double w_transform_constant(const RadialWeight& mu, double alpha);

struct TailComparison {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Both sides of int_rho^1 phi w dr <= C int_rho^1 phi nu dr.
TailComparison tail_comparison_check(const RadialWeight& w, const RadialWeight& nu,
                                     const std::function<double(double)>& phi,
                                     double rho, const quad::QuadConfig& cfg = {});

} // namespace disklab::weights
