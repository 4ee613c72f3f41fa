#include "disklab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace disklab::quad {

namespace {

// Newton iteration on Legendre polynomials; nodes are cached per order.
void compute_gl(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

struct GLTable {
    std::vector<double> nodes, weights;
};

const GLTable& gl_table(int n) {
    static std::map<int, GLTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        GLTable t;
        compute_gl(n, t.nodes, t.weights);
        it = cache.emplace(n, std::move(t)).first;
    }
    return it->second;
}

// Panel layout on [a, b-clip]: a smooth head split uniformly, then dyadic
// panels shrinking geometrically toward b so endpoint singularities resolve.
std::vector<double> panel_breaks(double a, double b, double clip, int base_panels) {
    std::vector<double> brk;
    double len = b - a;
    if (len <= clip) return {a, a};
    if (clip >= 0.5 * len) {
        // Clip eats into the smooth head: plain uniform panels on [a, b-clip].
        brk.push_back(a);
        for (int i = 1; i <= base_panels; ++i)
            brk.push_back(a + (len - clip) * i / base_panels);
        return brk;
    }
    double head_end = b - 0.5 * len; // dyadic tail covers the last half
    brk.push_back(a);
    for (int i = 1; i <= base_panels; ++i)
        brk.push_back(a + (head_end - a) * i / base_panels);
    clip = std::max(clip, len * 1e-14);
    double x = 0.5 * len;
    while (x > clip) {
        x *= 0.5;
        if (x <= clip) break;
        brk.push_back(b - x);
    }
    brk.push_back(b - clip);
    return brk;
}

double integrate_breaks(const std::function<double(double)>& h,
                        const std::vector<double>& brk, int order, int split) {
    std::vector<double> parts;
    parts.reserve((brk.size() - 1) * split);
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        double a = brk[i], b = brk[i + 1];
        for (int s = 0; s < split; ++s) {
            double pa = a + (b - a) * s / split;
            double pb = a + (b - a) * (s + 1) / split;
            parts.push_back(gl_panel(h, pa, pb, order));
        }
    }
    return tree_sum(parts);
}

double integrate_clipped(const std::function<double(double)>& h, double a, double b,
                         double clip, const QuadConfig& cfg, ConvergenceReport& rep) {
    auto brk = panel_breaks(a, b, clip, cfg.base_panels);
    double prev = integrate_breaks(h, brk, cfg.gl_order, 1);
    int split = 2;
    for (int round = 1; round <= cfg.max_rounds; ++round) {
        double cur = integrate_breaks(h, brk, cfg.gl_order, split);
        double denom = std::max(std::abs(cur), 1e-300);
        double err = std::abs(cur - prev) / denom;
        rep.rounds = round;
        rep.rel_error = err;
        prev = cur;
        if (err <= cfg.rel_tol) {
            rep.converged = true;
            break;
        }
        split *= 2;
    }
    return prev;
}

} // namespace

const std::vector<double>& gl_nodes(int n) { return gl_table(n).nodes; }
const std::vector<double>& gl_weights(int n) { return gl_table(n).weights; }

double gl_panel(const std::function<double(double)>& h, double a, double b, int order) {
    const auto& t = gl_table(order);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < order; ++i)
        acc += t.weights[i] * h(mid + half * t.nodes[i]);
    return acc * half;
}

ConvergenceReport integrate_radial(const std::function<double(double)>& h,
                                   double a, double b, const QuadConfig& cfg) {
    ConvergenceReport rep;
    if (b - a <= cfg.clip) {
        rep.converged = true;
        return rep;
    }
    if (!cfg.clip_extrapolate) {
        rep.value = integrate_clipped(h, a, b, cfg.clip, cfg, rep);
        return rep;
    }
    // Power-law model I(clip) = I0 - c*clip^s, fitted from three clip levels.
    double i1 = integrate_clipped(h, a, b, cfg.clip, cfg, rep);
    ConvergenceReport r2, r3;
    double i2 = integrate_clipped(h, a, b, cfg.clip / 2, cfg, r2);
    double i3 = integrate_clipped(h, a, b, cfg.clip / 4, cfg, r3);
    double d1 = i2 - i1, d2 = i3 - i2;
    if (d1 != 0.0 && d2 != 0.0 && d1 * d2 > 0.0 && std::abs(d2) < std::abs(d1)) {
        double ratio = d1 / d2; // = 2^s for a pure power tail
        rep.value = i3 + d2 / (ratio - 1.0);
        rep.rel_error = std::abs(d2 / (ratio - 1.0)) / std::max(std::abs(rep.value), 1e-300);
        rep.converged = rep.converged && r3.converged;
    } else {
        rep.value = i3;
        rep.converged = rep.converged && r3.converged;
    }
    return rep;
}

double integrate_periodic(const std::function<double(double)>& g, int n_theta) {
    const double h = 2.0 * std::numbers::pi / n_theta;
    std::vector<double> parts(n_theta);
    for (int j = 0; j < n_theta; ++j)
        parts[j] = g(j * h);
    return tree_sum(parts) * h;
}

ConvergenceReport integrate_disc(const std::function<double(double, double)>& F_polar,
                                 DiscMeasure measure,
                                 const std::function<double(double)>& weight,
                                 const QuadConfig& cfg) {
    auto density = [&](double r) -> double {
        switch (measure) {
            case DiscMeasure::NormalizedArea: return r;
            case DiscMeasure::WeightedArea: return weight(r) * r;
            case DiscMeasure::TentDensity: return weight(r) * r / (1.0 - r);
        }
        return 0.0;
    };
    ConvergenceReport rep;
    QuadConfig inner = cfg;
    inner.max_rounds = std::max(2, cfg.max_rounds - 2);
    double prev = 0.0;
    int n_theta = cfg.n_theta;
    for (int round = 0; round <= 2; ++round) {
        QuadConfig rc = inner;
        rc.base_panels = inner.base_panels << round;
        double cur = integrate_periodic(
            [&](double th) {
                ConvergenceReport ir;
                auto integrand = [&](double r) { return F_polar(r, th) * density(r); };
                return integrate_clipped(integrand, 0.0, 1.0, cfg.clip, rc, ir);
            },
            n_theta);
        cur /= std::numbers::pi; // dA = r dr dtheta / pi
        if (round > 0) {
            double err = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
            rep.rel_error = err;
            rep.rounds = round;
            if (err <= cfg.rel_tol) {
                rep.converged = true;
                rep.value = cur;
                return rep;
            }
        }
        prev = cur;
        n_theta *= 2;
    }
    rep.value = prev;
    return rep;
}

ConvergenceReport integrate_cone(const std::function<double(double, double)>& F_polar,
                                 double vertex_mod, double vertex_arg, double opening,
                                 ConeMeasure measure,
                                 const std::function<double(double)>& weight,
                                 const QuadConfig& cfg) {
    ConvergenceReport rep;
    if (vertex_mod <= 0.0) {
        rep.converged = true;
        return rep; // empty cone
    }
    auto density = [&](double r) -> double {
        switch (measure) {
            case ConeMeasure::RawArea: return r;
            case ConeMeasure::WeightedRaw: return weight(r) * r;
            case ConeMeasure::TentDensity: return weight(r) * r / (1.0 - r);
        }
        return 0.0;
    };
    const double r_max = std::min(vertex_mod, 1.0 - cfg.clip);
    // radial profile: angular GL across the exact cone section at radius r
    int ang_order = cfg.gl_order;
    auto profile = [&](double r) {
        double half = opening * (vertex_mod - r);
        if (half <= 0.0) return 0.0;
        half = std::min(half, std::numbers::pi);
        double acc = gl_panel([&](double th) { return F_polar(r, th); },
                              vertex_arg - half, vertex_arg + half, ang_order);
        return acc * density(r);
    };
    // The angular window closes linearly at r_max, so clipping the last
    // cfg.clip of the radial range costs only O(clip^2).
    rep.value = integrate_clipped(profile, 0.0, r_max, cfg.clip, cfg, rep);
    return rep;
}

double estimate_sup(const std::function<double(double)>& F, double a, double b,
                    int grid, int refine_iters) {
    if (b <= a) return F(a);
    double best = -1e300;
    std::vector<std::pair<double, double>> top; // (value, x)
    for (int i = 0; i <= grid; ++i) {
        double x = a + (b - a) * i / grid;
        double v = F(x);
        top.emplace_back(v, x);
        best = std::max(best, v);
    }
    std::sort(top.begin(), top.end(), [](auto& l, auto& r) { return l.first > r.first; });
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double h = (b - a) / grid;
    int candidates = std::min<std::size_t>(3, top.size());
    for (int c = 0; c < candidates; ++c) {
        double lo = std::max(a, top[c].second - h);
        double hi = std::min(b, top[c].second + h);
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = F(x1), f2 = F(x2);
        for (int it = 0; it < refine_iters; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = F(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = F(x1);
            }
        }
        best = std::max({best, f1, f2});
    }
    return best;
}

double tree_sum(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    std::vector<double> buf(xs.begin(), xs.end());
    std::size_t n = buf.size();
    while (n > 1) {
        std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i < n / 2; ++i)
            buf[i] = buf[2 * i] + buf[2 * i + 1];
        if (n % 2) buf[n / 2] = buf[n - 1];
        n = half;
    }
    return buf[0];
}

} // namespace disklab::quad
