#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace disklab::quad {

/// Grid and tolerance settings shared by all integrators.
struct QuadConfig {
    int gl_order = 16;          // Gauss-Legendre nodes per panel
    double clip = 1e-6;         // boundary clip delta: integrate r in [0, 1-clip]
    int n_theta = 512;          // angular resolution (periodic trapezoid)
    double rel_tol = 1e-6;      // relative tolerance for refinement
    int max_rounds = 8;         // refinement rounds
    int base_panels = 8;        // smooth panels per unit before dyadic split
    bool clip_extrapolate = false; // Richardson in log(clip) for singular tails

    QuadConfig refined() const {
        QuadConfig c = *this;
        c.n_theta *= 2;
        c.base_panels *= 2;
        return c;
    }
};

struct ConvergenceReport {
    double value = 0.0;
    double rel_error = 0.0; // estimated from the last two refinement deltas
    int rounds = 0;
    bool converged = false;
};

/// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

/// Fixed-order Gauss-Legendre on a single interval.
double gl_panel(const std::function<double(double)>& h, double a, double b, int order);

/// Integrate h over [a, b-clip] with panels refined geometrically toward b.
/// Handles integrable endpoint singularities at b.
ConvergenceReport integrate_radial(const std::function<double(double)>& h,
                                   double a, double b, const QuadConfig& cfg);

/// Integral of a 2pi-periodic function by the trapezoid rule (spectral accuracy).
double integrate_periodic(const std::function<double(double)>& g, int n_theta);

enum class DiscMeasure {
    NormalizedArea, // dA = dx dy / pi, so that the disc has measure 1
    WeightedArea,   // omega(|z|) dA
    TentDensity     // omega(|z|) dA / (1-|z|)
};

/// Integral of F over the unit disc against the chosen measure.
/// Product rule: periodic trapezoid in theta, adaptive radial panels.
ConvergenceReport integrate_disc(const std::function<double(double, double)>& F_polar,
                                 DiscMeasure measure,
                                 const std::function<double(double)>& weight,
                                 const QuadConfig& cfg);

enum class ConeMeasure {
    RawArea,    // r dr dtheta ("raw polar": the tent-norm convention)
    WeightedRaw,// omega(r) r dr dtheta
    TentDensity // omega(r) r / (1-r) dr dtheta
};

/// Integral of F over the cone with vertex |xi| e^{i arg}, opening M:
/// exact angular limits theta in (arg - M(|xi|-r), arg + M(|xi|-r)) per radius.
ConvergenceReport integrate_cone(const std::function<double(double, double)>& F_polar,
                                 double vertex_mod, double vertex_arg, double opening,
                                 ConeMeasure measure,
                                 const std::function<double(double)>& weight,
                                 const QuadConfig& cfg);

/// Deterministic sup estimate: coarse grid max + golden-section refinement
/// around the leading candidates. A lower bound of the true sup.
double estimate_sup(const std::function<double(double)>& F, double a, double b,
                    int grid = 256, int refine_iters = 60);

/// Pairwise (tree) summation in a fixed order; reproducible across runs.
double tree_sum(std::span<const double> xs);

} // namespace disklab::quad
