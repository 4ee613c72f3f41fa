#pragma once

#include "disklab/quadrature.hpp"
#include "disklab/weights.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace disklab::projection {

using complex = std::complex<double>;
using DiscFn = std::function<complex(complex)>;

/// Bergman projection P_gamma(f)(z) = (gamma+1) int_D f(zeta) (1-|zeta|^2)^gamma
/// / (1 - conj(zeta) z)^{2+gamma} dA(zeta), dA normalized. plus_variant takes
/// the modulus of the kernel. Requires |z| <= 1 - 10*cfg.clip.
complex project(const DiscFn& f, double gamma, complex z, const quad::QuadConfig& cfg,
                bool plus_variant = false);

enum class ConditionVerdict { Finite, UnboundedTrend, Infinite };

struct DpReport {
    double value = 0.0;                // running sup of the ratios
    std::vector<double> sequence;      // ratio at n = 0..n_max
    double trend_slope = 0.0;          // slope of log ratio vs log n on the tail
    ConditionVerdict verdict = ConditionVerdict::Finite;
};

/// D_p(gamma, omega) = sup_n (omega_{np+1})^{1/p} (sigma_{np'+1})^{1/p'} / gamma_{2n+1},
/// with sigma the dual weight and gamma_x the moments of v_gamma.
DpReport condition_Dp(double gamma, const weights::RadialWeight& omega, double p,
                      int n_max, const quad::QuadConfig& cfg = {});

struct BpReport {
    double value = 0.0;                       // grid sup
    std::vector<std::pair<double, double>> curve; // (r, ratio)
    double last_decade_trend = 0.0;           // ratio change over the last decade
    ConditionVerdict verdict = ConditionVerdict::Finite;
};

/// B_p(gamma, omega) = sup_r (int_r^1 w t dt)^{1/p} (int_r^1 sigma t dt)^{1/p'}
/// / int_r^1 v_gamma t dt, evaluated on the given r grid.
BpReport condition_Bp(double gamma, const weights::RadialWeight& omega, double p,
                      const std::vector<double>& r_grid);

/// Discrete comparison kernels (quotient-group distance |theta-phi| throughout).
/// K~_gamma(re^{i theta}, rho e^{i phi}) with the chi cutoffs.
double kernel_Ktilde(double theta, double phi, double r, double rho, double gamma);
/// D(theta, phi, r, rho): piecewise discrete majorant.
double discrete_kernel_D(double theta, double phi, double r, double rho, double gamma);
/// H~(theta, phi, x, y) in the boundary variables x = 1-r, y = 1-rho.
double kernel_Htilde(double theta, double phi, double x, double y, double gamma);
/// Index n with max{x,y} <= 2^n |theta-phi| < 2 max{x,y} < 1; 0 for the J_0 case
/// (max{x,y} <= |theta-phi| <= 1, max < 1/2); nullopt otherwise.
std::optional<int> jn_index(double theta, double phi, double x, double y);

struct KernelIntegralReport {
    double value = 0.0;       // int_D omega(zeta) / |1 - z zeta|^eta dA(zeta)
    double bound_ratio = 0.0; // value / ( what(|z|) / (1-|z|)^{eta-1} )
};

KernelIntegralReport kernel_weight_integral(const weights::RadialWeight& omega, double eta,
                                            complex z, const quad::QuadConfig& cfg);

} // namespace disklab::projection
