#pragma once

#include "disklab/functions.hpp"
#include "disklab/quadrature.hpp"
#include "disklab/weights.hpp"

#include <complex>
#include <functional>

namespace disklab::norms {

/// Magnitude of a function on the disc in polar coordinates: (r, theta) -> |f|.
using PolarFn = std::function<double(double, double)>;

/// Wrap an analytic function as a polar magnitude function.
PolarFn polar_abs(const functions::AnalyticFunction& f);
PolarFn polar_abs(const functions::MeasurableTestFunction& f);

struct SpaceSpec {
    enum class Kind { Mixed, Tent };
    double p = 2.0;
    double q = 2.0;
    weights::RadialWeight weight = weights::RadialWeight::constant(1.0);
    Kind kind = Kind::Mixed;

    double p_conj() const; // p' = p/(p-1), requires p > 1
    double q_conj() const;
};

/// Mixed norm: ( (1/2pi) int_0^{2pi} ( int_0^1 |f|^p w(r) r dr )^{q/p} dtheta )^{1/q}.
/// theta_exclusion > 0 treats f as zero on |theta| < exclusion (quotient angle)
/// and switches the outer integral to an adaptive rule refined toward the cut.
quad::ConvergenceReport mixed_norm(const PolarFn& absf, const SpaceSpec& spec,
                                   const quad::QuadConfig& cfg,
                                   double theta_exclusion = 0.0);

/// Tent norm: ( (1/2pi) int_bdry ( int_{Gamma_M(xi)} |f|^p w(r)/(1-r) r dr dtheta )^{q/p} |dxi| )^{1/q}.
quad::ConvergenceReport tent_norm(const PolarFn& absf, const SpaceSpec& spec,
                                  const quad::QuadConfig& cfg, double opening = 1.0,
                                  double theta_exclusion = 0.0);

quad::ConvergenceReport space_norm(const PolarFn& absf, const SpaceSpec& spec,
                                   const quad::QuadConfig& cfg);

/// M_p(r, f) = ( (1/2pi) int |f(re^{it})|^p dt )^{1/p}.
double hardy_mean(const PolarFn& absf, double p, double r, int n_theta = 512);
/// M_inf(r, f) = max_{|z|=r} |f(z)|, grid-sup with refinement.
double sup_mean(const PolarFn& absf, double r, int grid = 512);

/// N_M(f)(xi) = sup over the cone with vertex xi of |f|; clipped at |z| <= 1-clip.
/// Grid-sup over radial_grid x angular_grid samples with golden-section
/// refinement of the radial coordinate (a lower bound of the true sup).
double nontangential_max(const PolarFn& absf, double opening, std::complex<double> vertex,
                         const quad::QuadConfig& cfg, int radial_grid = 96,
                         int angular_grid = 33, int refine_iters = 40);
/// R(f)(z) = sup_{0<=r<=1} |f(r z)|.
double radial_max(const PolarFn& absf, std::complex<double> z);

/// Phi_{f,M,p}(re^{i theta}) = (1/(1-r)) int_{|t-theta|<1-r} N_M(f)(re^{it})^p dt.
double averaged_max_Phi(const PolarFn& absf, double opening, double p, double r,
                        double theta, const quad::QuadConfig& cfg, int arc_nodes = 33);

/// Hardy-Littlewood maximal function of g on the circle at the point e^{i xi_arg}:
/// sup over a dyadic family of arcs (all lengths 2pi 2^{-k}, translated) containing
/// the point. Grid-sup, hence a lower bound.
double hl_maximal(const std::function<double(double)>& g, double xi_arg,
                  int max_depth = 16, int translates = 33, int arc_nodes = 256);

/// Hormander maximal function sup_{z in S} int_S |phi| eta dA / int_S eta dA over a
/// lattice of Carleson squares containing z. Throws if every sampled square has
/// eta(S) = 0.
double hormander_maximal(const PolarFn& absphi, const weights::RadialWeight& eta,
                         std::complex<double> z, const quad::QuadConfig& cfg);

/// W_nu f(x) = sup_{t in [x, 1-clip]} int_0^t f(u)(1-u)nu(1-u) du / int_{1-t}^1 s nu(s) ds.
double w_maximal(const std::function<double(double)>& f, const weights::RadialWeight& nu,
                 double x, const quad::QuadConfig& cfg, int t_grid = 64);

/// Littlewood-Paley seminorm: ||f^{(k)} (1-|z|)^k||_{spec} + sum_{j<k} |f^{(j)}(0)|.
quad::ConvergenceReport lp_seminorm(const functions::AnalyticFunction& f, int k,
                                    const SpaceSpec& spec, const quad::QuadConfig& cfg);

} // namespace disklab::norms
