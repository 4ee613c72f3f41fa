#include "disklab/norms.hpp"

#include "disklab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace disklab::norms {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Integral of g over [a, b] with geometric panel refinement toward a
// (integrate_radial refines toward its upper endpoint, so flip the variable).
double integrate_toward_lower(const std::function<double(double)>& g, double a, double b,
                              const quad::QuadConfig& cfg) {
    quad::QuadConfig c = cfg;
    c.clip = 1e-12 * (b - a);
    auto flipped = [&](double u) { return g(a + b - u); };
    return quad::integrate_radial(flipped, a, b, c).value;
}

// Angular integral of theta -> F(theta) over [lo, hi] minus the excluded band
// |theta|_quotient < eps, with panels refined geometrically toward the cut
// edges. Deterministic fixed scheme.
double angular_integral_excluded(const std::function<double(double)>& F, double lo,
                                 double hi, double eps, int gl_order) {
    if (hi <= lo) return 0.0;
    // Breakpoints where the excluded band starts/ends (quotient angle 0 lifts
    // to multiples of 2pi within the window).
    std::vector<double> cuts{lo, hi};
    for (double base : {-kTwoPi, 0.0, kTwoPi}) {
        for (double c : {base - eps, base + eps})
            if (c > lo && c < hi) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (b - a <= 0.0) continue;
        const double mid = 0.5 * (a + b);
        if (eps > 0.0 && std::abs(geometry::ang_diff(mid, 0.0)) < eps) continue; // excluded band
        // Geometric panels toward both edges (integrand may be steep at cuts).
        const int halves = 10;
        double sub = 0.0;
        auto toward_edge = [&](double inner, double edge) {
            double len = std::abs(edge - inner);
            double x = len;
            for (int k = 0; k < halves && x > 1e-14 * len; ++k) {
                const double x2 = (k + 1 == halves) ? 0.0 : x / 2.0;
                const double lo2 = (edge > inner) ? inner + (len - x) : inner - (len - x);
                const double hi2 = (edge > inner) ? inner + (len - x2) : inner - (len - x2);
                sub += quad::gl_panel(F, std::min(lo2, hi2), std::max(lo2, hi2), gl_order);
                x = x2;
            }
        };
        toward_edge(mid, a);
        toward_edge(mid, b);
        total += sub;
    }
    return total;
}

double pow_safe(double base, double expo) {
    if (base <= 0.0) return 0.0;
    return std::pow(base, expo);
}

// Shared outer refinement loop: inner_power(theta, rounds) gives the inner
// integral ( ... )^{q/p}; the loop doubles the outer angular grid until the
// q-th root stabilizes.
quad::ConvergenceReport outer_qroot_loop(
    const std::function<double(double)>& inner_power, double q,
    const quad::QuadConfig& cfg, double theta_exclusion) {
    quad::ConvergenceReport rep;
    double prev = 0.0;
    int n = std::max(cfg.n_theta, 8);
    const int max_rounds = std::min(cfg.max_rounds, 3);
    for (int round = 0; round < max_rounds; ++round) {
        double power;
        if (theta_exclusion > 0.0) {
            // Adaptive outer integral on both sides of the cut.
            quad::QuadConfig oc = cfg;
            oc.base_panels = std::max(cfg.base_panels, n / 16);
            const double eps = theta_exclusion;
            const double pos = integrate_toward_lower(inner_power, eps, M_PI, oc);
            auto neg_fn = [&](double t) { return inner_power(-t); };
            const double neg = integrate_toward_lower(neg_fn, eps, M_PI, oc);
            power = (pos + neg) / kTwoPi;
        } else {
            power = quad::integrate_periodic(inner_power, n) / kTwoPi;
        }
        const double value = pow_safe(power, 1.0 / q);
        rep.rounds = round + 1;
        if (round > 0) {
            rep.rel_error = std::abs(value - prev) / std::max(std::abs(value), 1e-300);
            rep.value = value;
            if (rep.rel_error <= cfg.rel_tol || value == prev) {
                rep.converged = true;
                break;
            }
        } else {
            rep.value = value;
        }
        prev = value;
        n *= 2;
    }
    if (rep.rel_error <= cfg.rel_tol) rep.converged = true;
    return rep;
}

} // namespace

PolarFn polar_abs(const functions::AnalyticFunction& f) {
    return [f](double r, double theta) { return std::abs(f.evaluate(std::polar(r, theta))); };
}

PolarFn polar_abs(const functions::MeasurableTestFunction& f) {
    return [f](double r, double theta) { return std::abs(f(r, theta)); };
}

double SpaceSpec::p_conj() const {
    if (p <= 1.0) throw std::invalid_argument("conjugate exponent requires p > 1");
    return p / (p - 1.0);
}

double SpaceSpec::q_conj() const {
    if (q <= 1.0) throw std::invalid_argument("conjugate exponent requires q > 1");
    return q / (q - 1.0);
}

quad::ConvergenceReport mixed_norm(const PolarFn& absf, const SpaceSpec& spec,
                                   const quad::QuadConfig& cfg, double theta_exclusion) {
    const double p = spec.p, q = spec.q;
    const auto w = spec.weight;
    auto inner_power = [&, w](double theta) {
        if (theta_exclusion > 0.0 &&
            std::abs(geometry::ang_diff(theta, 0.0)) < theta_exclusion)
            return 0.0;
        auto h = [&](double r) { return pow_safe(absf(r, theta), p) * w(r) * r; };
        const double inner = quad::integrate_radial(h, 0.0, 1.0, cfg).value;
        return pow_safe(inner, q / p);
    };
    return outer_qroot_loop(inner_power, q, cfg, theta_exclusion);
}

quad::ConvergenceReport tent_norm(const PolarFn& absf, const SpaceSpec& spec,
                                  const quad::QuadConfig& cfg, double opening,
                                  double theta_exclusion) {
    const double p = spec.p, q = spec.q;
    const auto w = spec.weight;
    auto cone_integral = [&, w](double phi) {
        if (theta_exclusion <= 0.0) {
            auto Fp = [&](double r, double theta) { return pow_safe(absf(r, theta), p); };
            return quad::integrate_cone(Fp, 1.0, phi, opening, quad::ConeMeasure::TentDensity,
                                        [w](double r) { return w(r); }, cfg)
                .value;
        }
        // Exclusion variant: angular window split at the cut edges per radius.
        auto radial_profile = [&](double r) {
            const double half = opening * (1.0 - r);
            auto F = [&](double t) { return pow_safe(absf(r, t), p); };
            const double ang =
                angular_integral_excluded(F, phi - half, phi + half, theta_exclusion,
                                          cfg.gl_order);
            const double one_minus_r = std::max(1.0 - r, 1e-300);
            return ang * w(r) * r / one_minus_r;
        };
        return quad::integrate_radial(radial_profile, 0.0, 1.0, cfg).value;
    };
    auto inner_power = [&](double phi) { return pow_safe(cone_integral(phi), q / p); };
    return outer_qroot_loop(inner_power, q, cfg, 0.0);
}

quad::ConvergenceReport space_norm(const PolarFn& absf, const SpaceSpec& spec,
                                   const quad::QuadConfig& cfg) {
    return spec.kind == SpaceSpec::Kind::Mixed ? mixed_norm(absf, spec, cfg)
                                               : tent_norm(absf, spec, cfg);
}

double hardy_mean(const PolarFn& absf, double p, double r, int n_theta) {
    auto g = [&](double t) { return pow_safe(absf(r, t), p); };
    return pow_safe(quad::integrate_periodic(g, n_theta) / kTwoPi, 1.0 / p);
}

double sup_mean(const PolarFn& absf, double r, int grid) {
    auto g = [&](double t) { return absf(r, t); };
    return quad::estimate_sup(g, 0.0, kTwoPi, grid);
}

double nontangential_max(const PolarFn& absf, double opening, std::complex<double> vertex,
                         const quad::QuadConfig& cfg, int radial_grid, int angular_grid,
                         int refine_iters) {
    const double vm = std::abs(vertex);
    if (vm == 0.0) return 0.0;
    const double va = std::arg(vertex);
    const double s_max = std::min(vm, 1.0 - cfg.clip);
    const int n_ang = std::max(angular_grid, 3);
    auto column_max = [&](double s) {
        const double half = opening * (vm - s);
        double best = 0.0;
        for (int i = 0; i < n_ang; ++i) {
            const double u = -1.0 + 2.0 * i / (n_ang - 1);
            best = std::max(best, absf(s, va + u * half));
        }
        return best;
    };
    return quad::estimate_sup(column_max, 0.0, s_max, radial_grid, refine_iters);
}

double radial_max(const PolarFn& absf, std::complex<double> z) {
    const double zm = std::abs(z), za = std::arg(z);
    auto g = [&](double r) { return absf(r * zm, za); };
    return quad::estimate_sup(g, 0.0, 1.0, 256, 60);
}

double averaged_max_Phi(const PolarFn& absf, double opening, double p, double r,
                        double theta, const quad::QuadConfig& cfg, int arc_nodes) {
    const double h = 1.0 - r;
    if (h <= 0.0) throw std::invalid_argument("averaged_max_Phi: r must be < 1");
    const int n = std::max(arc_nodes, 3);
    std::vector<double> vals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = theta - h + 2.0 * h * i / (n - 1);
        const double nm = nontangential_max(absf, opening, std::polar(r, t), cfg);
        vals[static_cast<std::size_t>(i)] = pow_safe(nm, p);
    }
    // Trapezoid over the arc [theta-h, theta+h], divided by (1-r).
    double sum = 0.5 * (vals.front() + vals.back());
    for (int i = 1; i + 1 < n; ++i) sum += vals[static_cast<std::size_t>(i)];
    const double integral = sum * (2.0 * h / (n - 1));
    return integral / h;
}

double hl_maximal(const std::function<double(double)>& g, double xi_arg, int max_depth,
                  int translates, int arc_nodes) {
    double best = 0.0;
    for (int k = 0; k <= max_depth; ++k) {
        const double len = kTwoPi * std::pow(0.5, k);
        for (int j = 0; j < translates; ++j) {
            const double frac = (translates == 1) ? 0.0 : -1.0 + 2.0 * j / (translates - 1);
            const double center = xi_arg + frac * len / 2.0;
            // Midpoint rule over the arc.
            double sum = 0.0;
            for (int i = 0; i < arc_nodes; ++i) {
                const double t = center - len / 2.0 + len * (i + 0.5) / arc_nodes;
                sum += std::abs(g(t));
            }
            best = std::max(best, sum / arc_nodes);
        }
    }
    return best;
}

double hormander_maximal(const PolarFn& absphi, const weights::RadialWeight& eta,
                         std::complex<double> z, const quad::QuadConfig& cfg) {
    const double zm = std::abs(z), za = std::arg(z);
    double best = 0.0;
    bool any = false;
    const int n_offsets = 9;
    const auto& nodes = quad::gl_nodes(cfg.gl_order);
    const auto& wts = quad::gl_weights(cfg.gl_order);
    for (int j = 0;; ++j) {
        const double side = std::pow(0.5, j); // 1 - |a|
        if (side < std::max(cfg.clip, 1.0 - zm)) break;
        const double am = 1.0 - side;
        if (am > zm) continue;
        for (int o = 0; o < n_offsets; ++o) {
            const double frac = -1.0 + 2.0 * o / (n_offsets - 1);
            const double aa = za + frac * side / 2.0;
            // Square: radii [am, 1), angles [aa - side/2, aa + side/2].
            auto eta_r = [&](double r) { return eta(r) * r; };
            const double den_radial = quad::integrate_radial(eta_r, am, 1.0, cfg).value;
            const double den = den_radial * side;
            if (den <= 0.0) continue;
            auto num_radial = [&](double r) {
                double ang = 0.0;
                for (int i = 0; i < cfg.gl_order; ++i) {
                    const double t = aa + nodes[static_cast<std::size_t>(i)] * side / 2.0;
                    ang += wts[static_cast<std::size_t>(i)] * absphi(r, t);
                }
                return ang * (side / 2.0) * eta(r) * r;
            };
            const double num = quad::integrate_radial(num_radial, am, 1.0, cfg).value;
            best = std::max(best, num / den);
            any = true;
        }
        if (j > 60) break;
    }
    if (!any) throw std::runtime_error("hormander_maximal: every sampled square has eta(S)=0");
    return best;
}

double w_maximal(const std::function<double(double)>& f, const weights::RadialWeight& nu,
                 double x, const quad::QuadConfig& cfg, int t_grid) {
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("w_maximal: x must be in (0,1]");
    quad::QuadConfig nc = cfg;
    nc.rel_tol = std::min(cfg.rel_tol, 1e-9);
    nc.clip = 1e-13;
    double best = 0.0;
    const double x_hi = 1.0 - cfg.clip;
    const double lo = 1.0 - x_hi; // smallest 1-t sampled
    const double hi = 1.0 - x;    // largest 1-t (t = x)
    for (int i = 0; i < t_grid; ++i) {
        double t;
        if (hi <= 0.0) {
            t = x;
        } else {
            const double f1 = (t_grid == 1) ? 1.0 : static_cast<double>(i) / (t_grid - 1);
            const double one_minus_t =
                (lo > 0.0) ? hi * std::pow(lo / hi, f1) : hi * (1.0 - f1);
            t = 1.0 - one_minus_t;
        }
        if (t < x) continue;
        auto h = [&](double u) { return f(u) * (1.0 - u) * nu(1.0 - u); };
        const double num = quad::integrate_radial(h, 0.0, t, nc).value;
        // Same substitution (s = 1-u) and the same rule as the numerator, so
        // the constant density gives a ratio of exactly 1.
        auto hd = [&](double u) { return (1.0 - u) * nu(1.0 - u); };
        const double den = quad::integrate_radial(hd, 0.0, t, nc).value;
        if (!(den > 0.0)) continue; // denominator underflow near t = 1: clipped
        best = std::max(best, num / den);
    }
    return best;
}

quad::ConvergenceReport lp_seminorm(const functions::AnalyticFunction& f, int k,
                                    const SpaceSpec& spec, const quad::QuadConfig& cfg) {
    if (k < 1) throw std::invalid_argument("lp_seminorm: k must be >= 1");
    const auto fk = f.derivative(k);
    PolarFn absg = [fk, k](double r, double theta) {
        return std::abs(fk.evaluate(std::polar(r, theta))) * std::pow(1.0 - r, k);
    };
    quad::ConvergenceReport rep = space_norm(absg, spec, cfg);
    double jet = 0.0;
    for (int j = 0; j < k; ++j) jet += std::abs(f.derivative(j).evaluate({0.0, 0.0}));
    rep.value += jet;
    return rep;
}

} // namespace disklab::norms
