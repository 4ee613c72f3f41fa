#include "disklab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <stdexcept>

namespace disklab::weights {

namespace {

// Tail cache grid: geometric in x = 1-r, 16 points per decade down to 1e-16.
constexpr int kPerDecade = 16;
constexpr int kDecades = 16;

std::vector<double> cache_x_grid() {
    std::vector<double> xs;
    xs.reserve(kPerDecade * kDecades + 1);
    for (int j = 0; j <= kPerDecade * kDecades; ++j)
        xs.push_back(std::pow(10.0, -double(j) / kPerDecade));
    return xs;
}

} // namespace

struct RadialWeight::Impl {
    std::string name;
    std::function<double(double)> density;
    std::function<double(double)> exact_tail; // set for tabulated weights
    std::optional<double> tau_alpha;          // set for exponential kind

    // tail cache: xs decreasing from 1, tails[j] = omega_hat(1 - xs[j])
    std::vector<double> xs;
    std::vector<double> tails;

    void build_cache() {
        if (exact_tail) return;
        xs = cache_x_grid();
        const std::size_t n = xs.size();
        std::vector<double> segs(n - 1, 0.0);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            double a = 1.0 - xs[j], b = 1.0 - xs[j + 1];
            // 4 sub-panels of GL16 per geometric segment
            double acc = 0.0;
            for (int s = 0; s < 4; ++s) {
                double pa = a + (b - a) * s / 4.0;
                double pb = a + (b - a) * (s + 1) / 4.0;
                acc += quad::gl_panel(density, pa, pb, 16);
            }
            segs[j] = acc;
        }
        tails.assign(n, 0.0);
        for (std::size_t j = n - 1; j-- > 0;)
            tails[j] = tails[j + 1] + segs[j];
    }

    double tail_value(double r) const {
        if (exact_tail) return exact_tail(r);
        const double x = 1.0 - r;
        if (x >= 1.0) return tails.front();
        if (x <= xs.back()) return 0.0;
        // bracket by log-uniform index
        double pos = -std::log10(x) * kPerDecade;
        std::size_t j = std::min<std::size_t>(std::size_t(pos), xs.size() - 2);
        while (j + 1 < xs.size() && xs[j + 1] > x) ++j;
        while (j > 0 && xs[j] < x) --j;
        double x0 = xs[j], x1 = xs[j + 1], t0 = tails[j], t1 = tails[j + 1];
        if (t0 > 0.0 && t1 > 0.0 && std::isfinite(t0) && std::isfinite(t1)) {
            // log-log linear: exact for power tails
            double u = (std::log(x) - std::log(x0)) / (std::log(x1) - std::log(x0));
            return std::exp(std::log(t0) + u * (std::log(t1) - std::log(t0)));
        }
        double u = (x0 - x) / (x0 - x1);
        return t0 + u * (t1 - t0);
    }
};

RadialWeight::RadialWeight(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

RadialWeight RadialWeight::make(std::string name, std::function<double(double)> density,
                                std::function<double(double)> exact_tail,
                                std::optional<double> tau_alpha) {
    auto impl = std::make_shared<Impl>();
    impl->name = std::move(name);
    impl->density = std::move(density);
    impl->exact_tail = std::move(exact_tail);
    impl->tau_alpha = tau_alpha;
    impl->build_cache();
    return RadialWeight(std::move(impl));
}

RadialWeight RadialWeight::constant(double c) {
    if (c < 0.0) throw std::invalid_argument("constant weight must be nonnegative");
    return make("const:c=" + std::to_string(c), [c](double) { return c; });
}

RadialWeight RadialWeight::standard(double gamma, bool normalized) {
    if (gamma <= -1.0) throw std::invalid_argument("standard weight needs gamma > -1");
    double scale = normalized ? gamma + 1.0 : 1.0;
    return make(
        "std:gamma=" + std::to_string(gamma) + (normalized ? ",norm=true" : ",norm=false"),
        [gamma, scale](double r) { return scale * std::pow(1.0 - r * r, gamma); });
}

RadialWeight RadialWeight::exponential(double c, double alpha, double l) {
    if (c <= 0.0 || alpha <= 0.0 || l <= 0.0)
        throw std::invalid_argument("exponential weight needs c, alpha, l > 0");
    return make(
        "exp:c=" + std::to_string(c) + ",alpha=" + std::to_string(alpha) +
            ",l=" + std::to_string(l),
        [c, alpha, l](double r) {
            double base = 1.0 - std::pow(r, l);
            return std::exp(-c / std::pow(base, alpha));
        },
        nullptr, alpha);
}

RadialWeight RadialWeight::double_exponential(double c) {
    if (c <= 0.0) throw std::invalid_argument("double-exponential weight needs c > 0");
    return make("dexp:c=" + std::to_string(c), [c](double r) {
        double e = c / (1.0 - r);
        return e > 700.0 ? 0.0 : std::exp(-std::exp(e));
    });
}

RadialWeight RadialWeight::log_rapid_increase(double alpha) {
    if (alpha <= 1.0) throw std::invalid_argument("logri weight needs alpha > 1");
    // The tail integral converges so slowly (~log^{1-alpha}(e/(1-r))) that a
    // truncated numeric cache would drop a large share of the mass near the
    // boundary.  Substituting t = 1-s^2 splits the tail into an exact
    // logarithmic antiderivative plus a bounded remainder:
    //   tail(r) = (1/2) L^{1-alpha}/(alpha-1) + (1/2) I(T),
    //   T = 1-r^2, L = log(e/T),
    //   I(T) = int_0^T ((1-t)^{-1/2} - 1) / (t log^alpha(e/t)) dt.
    auto exact_tail = [alpha](double r) -> double {
        const double T = (1.0 - r) * (1.0 + r);
        if (T <= 0.0) return 0.0;
        const double L = 1.0 - std::log(T);
        const double lead = std::pow(L, 1.0 - alpha) / (alpha - 1.0);
        quad::QuadConfig c;
        c.rel_tol = 1e-12;
        c.clip = 1e-12;
        auto rem = quad::integrate_radial(
            [alpha](double t) {
                if (t <= 0.0) return 0.0;
                const double s = std::sqrt(1.0 - t);
                // (1-t)^{-1/2} - 1 without cancellation for small t.
                const double frac = t / (s * (1.0 + s));
                return frac / (t * std::pow(1.0 - std::log(t), alpha));
            },
            0.0, T, c);
        return 0.5 * (lead + rem.value);
    };
    return make(
        "logri:alpha=" + std::to_string(alpha),
        [alpha](double r) {
            double x = 1.0 - r * r;
            return 1.0 / (x * std::pow(std::log(std::numbers::e / x), alpha));
        },
        exact_tail);
}

RadialWeight RadialWeight::tabulated(std::vector<double> r, std::vector<double> w) {
    if (r.size() != w.size() || r.size() < 2)
        throw std::invalid_argument("tabulated weight needs matching samples, at least 2");
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (r[i + 1] <= r[i]) throw std::invalid_argument("tabulated r must increase");
    for (double v : w)
        if (v < 0.0) throw std::invalid_argument("tabulated samples must be nonnegative");
    auto rs = std::make_shared<std::vector<double>>(std::move(r));
    auto ws = std::make_shared<std::vector<double>>(std::move(w));
    auto density = [rs, ws](double x) -> double {
        if (x <= rs->front()) return ws->front();
        if (x >= rs->back()) return ws->back();
        auto it = std::upper_bound(rs->begin(), rs->end(), x);
        std::size_t i = std::size_t(it - rs->begin()) - 1;
        double u = (x - (*rs)[i]) / ((*rs)[i + 1] - (*rs)[i]);
        return (*ws)[i] + u * ((*ws)[i + 1] - (*ws)[i]);
    };
    // exact piecewise-linear tail
    auto exact_tail = [rs, ws, density](double r0) -> double {
        auto trapz = [&](double a, double b) {
            return 0.5 * (density(a) + density(b)) * (b - a);
        };
        double acc = 0.0;
        double cur = r0;
        for (std::size_t i = 0; i < rs->size(); ++i) {
            double knot = (*rs)[i];
            if (knot <= cur) continue;
            acc += trapz(cur, std::min(knot, 1.0));
            cur = knot;
            if (cur >= 1.0) break;
        }
        if (cur < 1.0) acc += trapz(cur, 1.0);
        return acc;
    };
    return make("table", density, exact_tail);
}

RadialWeight RadialWeight::from_density(std::function<double(double)> density,
                                        std::string name) {
    return make(std::move(name), std::move(density));
}

RadialWeight RadialWeight::regularized() const {
    auto self = *this;
    return make(impl_->name + "~reg",
                       [self](double r) { return self.tail(r) / (1.0 - r); });
}

RadialWeight RadialWeight::tilted(double beta) const {
    auto base = impl_;
    return make(impl_->name + "~tilt(" + std::to_string(beta) + ")",
                       [base, beta](double r) {
                           return std::pow(1.0 - r, beta) * base->density(r);
                       });
}

RadialWeight RadialWeight::dotted() const {
    auto base = impl_;
    return make(impl_->name + "~dot",
                       [base](double s) { return s * base->density(s); });
}

RadialWeight RadialWeight::boundary_flip() const {
    auto base = impl_;
    return make(impl_->name + "~flip",
                       [base](double x) { return (1.0 - x) * base->density(1.0 - x); });
}

RadialWeight RadialWeight::sigma_dual(double gamma, double p) const {
    if (p <= 1.0) throw std::invalid_argument("sigma dual needs p > 1");
    auto base = impl_;
    double pp = p / (p - 1.0);
    return make(
        impl_->name + "~sigma(" + std::to_string(gamma) + "," + std::to_string(p) + ")",
        [base, gamma, p, pp](double r) -> double {
            double w = base->density(r);
            if (w <= 0.0) return 0.0; // convention: excluded set
            double vg = (gamma + 1.0) * std::pow(1.0 - r * r, gamma);
            return std::pow(vg / std::pow(w, 1.0 / p), pp);
        });
}

double RadialWeight::operator()(double r) const { return impl_->density(r); }

double RadialWeight::tail(double r) const { return impl_->tail_value(r); }

double RadialWeight::tail_at_zero() const { return impl_->tail_value(0.0); }

const std::string& RadialWeight::name() const { return impl_->name; }

double RadialWeight::moment(double x) const {
    if (x < 0.0) throw std::invalid_argument("moment needs x >= 0");
    quad::QuadConfig cfg;
    cfg.clip = 1e-13;
    cfg.rel_tol = 1e-12;
    cfg.max_rounds = 10;
    auto impl = impl_;
    auto rep = quad::integrate_radial(
        [impl, x](double r) { return (x == 0.0 ? 1.0 : std::pow(r, x)) * impl->density(r); },
        0.0, 1.0, cfg);
    return rep.value;
}

std::vector<double> RadialWeight::rho_sequence(double K, int n_max) const {
    if (K <= 1.0) throw std::invalid_argument("rho sequence needs K > 1");
    if (n_max < 0) throw std::invalid_argument("rho sequence needs n_max >= 0");
    std::vector<double> rho;
    rho.reserve(n_max + 1);
    const double total = tail_at_zero();
    rho.push_back(0.0);
    for (int n = 1; n <= n_max; ++n) {
        double target = total * std::pow(K, -n);
        if (impl_->exact_tail) {
            // bisection for the minimal root on the exact tail
            double lo = 0.0, hi = 1.0 - 1e-15;
            for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
                double mid = 0.5 * (lo + hi);
                if (impl_->exact_tail(mid) > target)
                    lo = mid;
                else
                    hi = mid;
            }
            rho.push_back(hi);
            continue;
        }
        // analytic inversion of the log-log interpolant
        const auto& xs = impl_->xs;
        const auto& ts = impl_->tails;
        std::size_t j = 0;
        while (j + 1 < ts.size() && ts[j + 1] > target) ++j;
        if (j + 1 >= ts.size()) {
            rho.push_back(1.0 - xs.back());
            continue;
        }
        double x;
        if (ts[j] > 0.0 && ts[j + 1] > 0.0) {
            double u = (std::log(target) - std::log(ts[j])) /
                       (std::log(ts[j + 1]) - std::log(ts[j]));
            x = std::exp(std::log(xs[j]) + u * (std::log(xs[j + 1]) - std::log(xs[j])));
        } else {
            double u = (ts[j] - target) / (ts[j] - ts[j + 1]);
            x = xs[j] + u * (xs[j + 1] - xs[j]);
        }
        rho.push_back(1.0 - x);
    }
    return rho;
}

std::optional<double> RadialWeight::tau(double r) const {
    if (!impl_->tau_alpha) return std::nullopt;
    return std::pow(1.0 - r, (*impl_->tau_alpha + 2.0) / 2.0);
}

std::vector<double> default_r_grid(double min_one_minus_r, int per_decade) {
    std::vector<double> rs;
    double decades = -std::log10(min_one_minus_r);
    int n = int(decades * per_decade);
    for (int j = 0; j <= n; ++j)
        rs.push_back(1.0 - std::pow(10.0, -decades * j / n));
    return rs;
}

namespace {

// slope of log(y) per decade of shrinking 1-r over the last usable decade
double decade_slope(const std::vector<std::pair<double, double>>& curve) {
    // collect points with positive finite y in the final decade of 1-r
    std::vector<std::pair<double, double>> pts; // (log10(1-r), log(y))
    for (auto& [r, y] : curve)
        if (y > 0.0 && std::isfinite(y)) pts.emplace_back(std::log10(1.0 - r), std::log(y));
    if (pts.size() < 3) return 0.0;
    double last = pts.back().first;
    std::vector<std::pair<double, double>> win;
    for (auto& p : pts)
        if (p.first <= last + 1.0) win.push_back(p);
    if (win.size() < 3) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : win) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = double(win.size());
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    // positive slope means growth as 1-r shrinks
    return -(n * sxy - sx * sy) / denom;
}

} // namespace

DhatReport classify_dhat(const RadialWeight& w, const std::vector<double>& r_grid,
                         double cap, double slope_threshold) {
    DhatReport rep;
    for (double r : r_grid) {
        double num = w.tail(r);
        double den = w.tail((1.0 + r) / 2.0);
        if (num <= 0.0) continue;
        double ratio = den > 0.0 ? num / den : std::numeric_limits<double>::infinity();
        rep.ratio_curve.emplace_back(r, ratio);
        rep.sup_ratio = std::max(rep.sup_ratio, ratio);
    }
    rep.trend_slope = decade_slope(rep.ratio_curve);
    rep.member = rep.sup_ratio <= cap && rep.trend_slope <= slope_threshold;
    return rep;
}

DcheckReport classify_dcheck(const RadialWeight& w, double K,
                             const std::vector<double>& r_grid, double margin) {
    DcheckReport rep;
    rep.inf_ratio = std::numeric_limits<double>::infinity();
    for (double r : r_grid) {
        double num = w.tail(r);
        double den = w.tail(1.0 - (1.0 - r) / K);
        if (num <= 0.0 || den <= 0.0 || !std::isfinite(num)) continue;
        rep.ratio_curve.emplace_back(r, num / den);
    }
    if (rep.ratio_curve.empty()) {
        rep.member = false;
        rep.inf_ratio = 0.0;
        return rep;
    }
    // membership judged on the final usable decade of 1-r
    double last = std::log10(1.0 - rep.ratio_curve.back().first);
    for (auto& [r, ratio] : rep.ratio_curve)
        if (std::log10(1.0 - r) <= last + 1.0)
            rep.inf_ratio = std::min(rep.inf_ratio, ratio);
    // The margin is per doubling step so the verdict is comparable across K:
    // a K-fold tail shrink spans log2(K) doublings.
    rep.member = rep.inf_ratio >= std::pow(1.0 + margin, std::log2(K));
    return rep;
}

ExponentFit fit_doubling_exponents(const RadialWeight& w, double residual_threshold) {
    ExponentFit fit;
    // last two usable decades: tail positive and finite
    std::vector<std::pair<double, double>> pts; // (log(1-r), log tail)
    for (int j = 0; j <= 160; ++j) {
        double x = std::pow(10.0, -8.0 * j / 160.0);
        double t = w.tail(1.0 - x);
        if (t > 0.0 && std::isfinite(t)) pts.emplace_back(std::log(x), std::log(t));
    }
    if (pts.size() < 8) return fit;
    double last = pts.back().first;
    std::vector<std::pair<double, double>> win;
    for (auto& p : pts)
        if (p.first <= last + 2.0 * std::numbers::ln10) win.push_back(p);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : win) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = double(win.size());
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double intercept = (sy - slope * sx) / n;
    double ss = 0.0;
    for (auto& [x, y] : win) {
        double e = y - (slope * x + intercept);
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    if (fit.residual <= residual_threshold) {
        fit.beta = slope;
        fit.alpha = slope;
    }
    return fit;
}

double w_transform_constant(const RadialWeight& mu, double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("w_transform needs alpha > 0");
    // psi = C r^2 + phi(r) + alpha log(1-r^2), phi = -log mu.
    // Pick the smallest C in {1,2,4,...} with the discretized radial
    // Laplacian of psi positive on a grid inside the representable region.
    auto phi = [&](double r) -> double {
        double v = mu(r);
        return v > 0.0 ? -std::log(v) : std::numeric_limits<double>::infinity();
    };
    std::vector<double> grid;
    for (int j = 1; j <= 64; ++j) {
        double r = 1.0 - std::pow(10.0, -3.0 * j / 64.0);
        if (std::isfinite(phi(r)) && r > 2e-4) grid.push_back(r);
    }
    const double h = 1e-4;
    for (double C = 1.0; C <= double(1 << 20); C *= 2.0) {
        auto psi = [&](double r) { return C * r * r + phi(r) + alpha * std::log(1.0 - r * r); };
        bool ok = true;
        for (double r : grid) {
            double p0 = psi(r - h), p1 = psi(r), p2 = psi(r + h);
            if (!std::isfinite(p0) || !std::isfinite(p1) || !std::isfinite(p2)) continue;
            double lap = (p2 - 2.0 * p1 + p0) / (h * h) + (p2 - p0) / (2.0 * h * r);
            if (!(lap > 0.0)) {
                ok = false;
                break;
            }
        }
        if (ok) return C;
    }
    throw std::runtime_error("w_transform: no admissible constant found");
}

RadialWeight w_transform(const RadialWeight& mu, double alpha) {
    double C = w_transform_constant(mu, alpha);
    auto base = mu;
    return RadialWeight::from_density(
        [base, alpha, C](double r) {
            return std::exp(-C * r * r) * base(r) / std::pow(1.0 - r * r, alpha);
        },
        "wtransform(" + mu.name() + ",alpha=" + std::to_string(alpha) +
            ",C=" + std::to_string(C) + ")");
}

TailComparison tail_comparison_check(const RadialWeight& w, const RadialWeight& nu,
                                     const std::function<double(double)>& phi,
                                     double rho, const quad::QuadConfig& cfg) {
    TailComparison out;
    quad::QuadConfig c = cfg;
    c.clip = std::min(c.clip, 1e-9);
    out.lhs = quad::integrate_radial([&](double r) { return phi(r) * w(r); }, rho, 1.0, c).value;
    out.rhs = quad::integrate_radial([&](double r) { return phi(r) * nu(r); }, rho, 1.0, c).value;
    return out;
}

} // namespace disklab::weights
