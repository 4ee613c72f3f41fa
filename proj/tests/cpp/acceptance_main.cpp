// Acceptance gate: one pass/fail line per criterion; exit code is the number
// of hard failures. Criterion 15 is reporting-only and never fails the gate.
#include "disklab/experiments.hpp"
#include "disklab/functions.hpp"
#include "disklab/norms.hpp"
#include "disklab/projection.hpp"
#include "disklab/quadrature.hpp"
#include "disklab/report.hpp"
#include "disklab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace disklab;
using functions::AnalyticFunction;
using norms::SpaceSpec;
using weights::RadialWeight;

namespace {

int g_failures = 0;

void result(int n, bool ok, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", n, what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(double v) { return report::format_number(v); }

void guarded(int n, const std::string& what, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        result(n, false, what, std::string("exception: ") + e.what());
    }
}

// 1. Tent norm equals 2^{1/p} times the mixed norm when p = q: the cone of a
// boundary point has angular width 2(1-|z|), which cancels the 1/(1-|z|)
// density exactly.
void criterion1() {
    quad::QuadConfig cfg;
    cfg.n_theta = 128;
    cfg.rel_tol = 1e-6;
    cfg.max_rounds = 4;
    const std::vector<RadialWeight> ws{RadialWeight::constant(1.0),
                                       RadialWeight::standard(1.0)};
    const std::vector<AnalyticFunction> fs{
        AnalyticFunction::taylor({{1.0, 0.0}}), AnalyticFunction::monomial(1),
        AnalyticFunction::monomial(3), AnalyticFunction::kernel({0.7, 0.0}, 2.0)};
    double worst = 0.0;
    for (const auto& w : ws)
        for (double p : {1.0, 2.0})
            for (const auto& f : fs) {
                SpaceSpec spec;
                spec.p = spec.q = p;
                spec.weight = w;
                const auto absf = norms::polar_abs(f);
                const double m = norms::mixed_norm(absf, spec, cfg).value;
                spec.kind = SpaceSpec::Kind::Tent;
                const double t = norms::tent_norm(absf, spec, cfg).value;
                worst = std::max(worst, std::abs(t / (std::pow(2.0, 1.0 / p) * m) - 1.0));
            }
    result(1, worst < 0.01, "tent norm = 2^{1/p} mixed norm at p = q",
           "max relative deviation = " + fmt(worst));
}

// 2. The nontangential maximal operator is bounded on the polynomial family:
// the family sup of ||N_1 f|| / ||f|| is finite and refinement-stable.
void criterion2() {
    const auto family = experiments::random_polynomials(7, 20, 12);
    quad::QuadConfig qc;
    qc.n_theta = 24;
    qc.gl_order = 8;
    qc.base_panels = 6;
    qc.rel_tol = 1e-4;
    qc.max_rounds = 2;
    qc.clip = 1e-5;
    const std::pair<double, double> pqs[] = {{1, 2}, {2, 1}, {2, 2}};
    bool ok = true;
    double worst_drift = 0.0, biggest_sup = 0.0;
    // sup[kind][pq][round]; the maximal function is tabulated once per
    // polynomial and round on a polar grid (doubled under refinement) and
    // interpolated bilinearly, since evaluating it afresh at every nested
    // quadrature node is prohibitively expensive.
    double sup[2][3][2] = {};
    for (const auto& f : family) {
        const auto absf = norms::polar_abs(f);
        for (int round = 0; round < 2; ++round) {
            const auto c = round ? qc.refined() : qc;
            const int nr = round ? 128 : 64;
            const int nt = round ? 192 : 96;
            const double rmax = 1.0 - 1e-6;
            auto table = std::make_shared<std::vector<double>>(
                static_cast<std::size_t>(nr + 1) * nt);
            for (int i = 0; i <= nr; ++i) {
                const double r = rmax * i / nr;
                for (int j = 0; j < nt; ++j) {
                    const double th = 2.0 * std::numbers::pi * j / nt;
                    (*table)[static_cast<std::size_t>(i) * nt + j] =
                        norms::nontangential_max(absf, 1.0, std::polar(r, th), c, 16, 5,
                                                 10);
                }
            }
            norms::PolarFn nmax = [table, nr, nt, rmax](double r, double theta) {
                double fr = std::clamp(r / rmax, 0.0, 1.0) * nr;
                const int i0 = std::min(static_cast<int>(fr), nr - 1);
                fr -= i0;
                double ft = theta / (2.0 * std::numbers::pi) * nt;
                ft -= std::floor(ft / nt) * nt;
                int j0 = static_cast<int>(ft) % nt;
                const double gt = ft - std::floor(ft);
                const int j1 = (j0 + 1) % nt;
                auto at = [&](int i, int j) {
                    return (*table)[static_cast<std::size_t>(i) * nt + j];
                };
                return (1 - fr) * ((1 - gt) * at(i0, j0) + gt * at(i0, j1)) +
                       fr * ((1 - gt) * at(i0 + 1, j0) + gt * at(i0 + 1, j1));
            };
            int ki = 0;
            for (auto kind : {SpaceSpec::Kind::Mixed, SpaceSpec::Kind::Tent}) {
                for (int pi = 0; pi < 3; ++pi) {
                    SpaceSpec spec;
                    spec.p = pqs[pi].first;
                    spec.q = pqs[pi].second;
                    spec.kind = kind;
                    const double num = norms::space_norm(nmax, spec, c).value;
                    const double den = norms::space_norm(absf, spec, c).value;
                    sup[ki][pi][round] = std::max(sup[ki][pi][round], num / den);
                }
                ++ki;
            }
        }
    }
    for (int ki = 0; ki < 2; ++ki)
        for (int pi = 0; pi < 3; ++pi) {
            const double drift = std::abs(sup[ki][pi][1] / sup[ki][pi][0] - 1.0);
            worst_drift = std::max(worst_drift, drift);
            biggest_sup = std::max(biggest_sup, std::max(sup[ki][pi][0], sup[ki][pi][1]));
            ok = ok && std::isfinite(sup[ki][pi][0]) && sup[ki][pi][0] < 1e6 &&
                 drift < 0.10;
        }
    result(2, ok, "maximal-operator norm ratios finite and refinement-stable",
           "family sup <= " + fmt(biggest_sup) + ", max drift = " + fmt(worst_drift));
}

// 3. Tent and mixed norms are equivalent on the polynomial family for p != q:
// all ratios lie in one refinement-stable interval with small eccentricity.
void criterion3() {
    const auto family = experiments::random_polynomials(7, 20, 12);
    quad::QuadConfig qc;
    qc.n_theta = 48;
    qc.gl_order = 8;
    qc.rel_tol = 1e-5;
    qc.max_rounds = 3;
    const std::pair<double, double> pqs[] = {{1, 2}, {2, 1}};
    bool ok = true;
    double worst_ecc = 0.0, worst_drift = 0.0;
    for (auto [p, q] : pqs) {
        SpaceSpec mixed;
        mixed.p = p;
        mixed.q = q;
        SpaceSpec tent = mixed;
        tent.kind = SpaceSpec::Kind::Tent;
        double lo = 0.0, hi = 0.0, lo_ref = 0.0, hi_ref = 0.0;
        bool first = true;
        for (const auto& f : family) {
            const auto absf = norms::polar_abs(f);
            const double r0 = norms::tent_norm(absf, tent, qc).value /
                              norms::mixed_norm(absf, mixed, qc).value;
            const auto qr = qc.refined();
            const double r1 = norms::tent_norm(absf, tent, qr).value /
                              norms::mixed_norm(absf, mixed, qr).value;
            if (first) {
                lo = hi = r0;
                lo_ref = hi_ref = r1;
                first = false;
            } else {
                lo = std::min(lo, r0);
                hi = std::max(hi, r0);
                lo_ref = std::min(lo_ref, r1);
                hi_ref = std::max(hi_ref, r1);
            }
        }
        const double ecc = hi / lo;
        const double drift =
            std::max(std::abs(lo_ref / lo - 1.0), std::abs(hi_ref / hi - 1.0));
        worst_ecc = std::max(worst_ecc, ecc);
        worst_drift = std::max(worst_drift, drift);
        ok = ok && ecc < 50.0 && drift < 0.10;
    }
    result(3, ok, "tent/mixed equivalence interval for p != q",
           "max interval eccentricity = " + fmt(worst_ecc) +
               ", endpoint drift = " + fmt(worst_drift));
}

// 4. The tail-halving radii have closed forms for power tails and the
// inversion reproduces them to 1e-10.
void criterion4() {
    double worst = 0.0;
    const auto r1 = RadialWeight::constant(1.0).rho_sequence(2.0, 30);
    for (int n = 0; n <= 30; ++n)
        worst = std::max(worst, std::abs(r1[static_cast<std::size_t>(n)] -
                                         (1.0 - std::pow(2.0, -n))));
    const auto r2 = RadialWeight::constant(1.0).tilted(1.0).rho_sequence(4.0, 30);
    for (int n = 0; n <= 30; ++n)
        worst = std::max(worst, std::abs((1.0 - r2[static_cast<std::size_t>(n)]) -
                                         std::pow(2.0, -n)));
    result(4, worst < 1e-10, "tail-halving radii match closed forms",
           "max abs error = " + fmt(worst));
}

// 5. Doubling classifier truth table across the four reference weights.
void criterion5() {
    const auto grid = weights::default_r_grid();
    const auto grid3 = weights::default_r_grid(1e-3);
    bool ok = true;
    std::ostringstream detail;
    for (double gamma : {0.0, 1.0}) {
        const auto v = RadialWeight::standard(gamma);
        const bool both = weights::classify_dhat(v, grid).member &&
                          weights::classify_dcheck(v, 2.0, grid).member;
        ok = ok && both;
        detail << "v" << gamma << ":" << (both ? "D" : "!D") << " ";
    }
    const auto expw = RadialWeight::exponential(1.0, 1.0, 1.0);
    const auto dh = weights::classify_dhat(expw, grid3);
    double peak = 0.0;
    for (const auto& [r, ratio] : dh.ratio_curve)
        if (r <= 0.999) peak = std::max(peak, ratio);
    const bool exp_ok =
        !dh.member && peak > 1e3 && weights::classify_dcheck(expw, 2.0, grid3).member;
    ok = ok && exp_ok;
    detail << "exp:" << (exp_ok ? "ok" : "bad") << "(peak=" << fmt(peak) << ") ";
    // The slowly-shrinking tail drives the doubling ratio to 1 only
    // logarithmically: sample down to 1-r = 1e-8 and compare the last-decade
    // ratio per doubling step so the 1.05 band is meaningful for every K.
    const auto logri = RadialWeight::log_rapid_increase(2.0);
    const auto grid8 = weights::default_r_grid(1e-8);
    bool logri_ok = weights::classify_dhat(logri, grid8).member;
    for (double K : {2.0, 4.0, 8.0}) {
        const auto dc = weights::classify_dcheck(logri, K, grid8);
        const double per_doubling = std::pow(dc.inf_ratio, 1.0 / std::log2(K));
        logri_ok = logri_ok && !dc.member && per_doubling < 1.05 && per_doubling > 0.95;
    }
    ok = ok && logri_ok;
    detail << "logri:" << (logri_ok ? "ok" : "bad");
    result(5, ok, "doubling classifier truth table", detail.str());
}

// 6. Moment comparison: for a doubling weight the normalized moment sequence
// n^p * m_{tilted p}(np+1) / m(np+1) stays in a narrow band; for the
// rapidly-decreasing weight the k = 2 sequence grows monotonically by >= 100x.
void criterion6() {
    const std::vector<int> ns{10, 14, 20, 28, 40, 57, 80, 113, 160, 200};
    bool ok = true;
    std::ostringstream detail;
    const auto v0 = RadialWeight::constant(1.0);
    for (double p : {1.0, 2.0}) {
        const auto vp = v0.tilted(p);
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (int n : ns) {
            const double x = n * p + 1.0;
            const double s = std::pow(n, p) * vp.moment(x) / v0.moment(x);
            if (first) {
                lo = hi = s;
                first = false;
            } else {
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
        }
        ok = ok && hi / lo < 20.0;
        detail << "flat band p=" << p << ": " << fmt(hi / lo) << " ";
    }
    const auto expw = RadialWeight::exponential(1.0, 1.0, 1.0);
    const double kp = 4.0; // k = 2, p = 2
    const auto exp4 = expw.tilted(kp);
    std::vector<double> s;
    for (int n : ns) {
        const double x = n * 2.0 + 1.0;
        s.push_back(std::pow(n, kp) * exp4.moment(x) / expw.moment(x));
    }
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) monotone = monotone && s[i + 1] > s[i];
    const double growth = s.back() / s.front();
    ok = ok && monotone && growth >= 100.0;
    detail << "| steep growth = " << fmt(growth) << (monotone ? " monotone" : " NOT monotone");
    result(6, ok, "moment-sequence band vs unbounded growth", detail.str());
}

// 7. Derivative seminorm is equivalent to the norm on the polynomial family.
void criterion7() {
    const auto family = experiments::random_polynomials(7, 20, 12);
    quad::QuadConfig qc;
    qc.n_theta = 48;
    qc.gl_order = 8;
    qc.rel_tol = 1e-5;
    qc.max_rounds = 3;
    SpaceSpec spec; // p = q = 2, constant weight
    double lo = 0.0, hi = 0.0, lo_ref = 0.0, hi_ref = 0.0;
    bool first = true;
    for (const auto& f : family) {
        const auto absf = norms::polar_abs(f);
        const double r0 =
            norms::lp_seminorm(f, 1, spec, qc).value / norms::mixed_norm(absf, spec, qc).value;
        const auto qr = qc.refined();
        const double r1 =
            norms::lp_seminorm(f, 1, spec, qr).value / norms::mixed_norm(absf, spec, qr).value;
        if (first) {
            lo = hi = r0;
            lo_ref = hi_ref = r1;
            first = false;
        } else {
            lo = std::min(lo, r0);
            hi = std::max(hi, r0);
            lo_ref = std::min(lo_ref, r1);
            hi_ref = std::max(hi_ref, r1);
        }
    }
    const double ecc = hi / lo;
    const double drift = std::max(std::abs(lo_ref / lo - 1.0), std::abs(hi_ref / hi - 1.0));
    result(7, ecc < 50.0 && drift < 0.10, "derivative seminorm equivalent to the norm",
           "interval eccentricity = " + fmt(ecc) + ", endpoint drift = " + fmt(drift));
}

// 8. Projection conditions at the self-dual point: gamma = 0, constant weight,
// p = 2 make every ratio in both conditions exactly 1.
void criterion8() {
    const auto w = RadialWeight::constant(1.0);
    const auto dp = projection::condition_Dp(0.0, w, 2.0, 100);
    double worst = 0.0;
    for (double v : dp.sequence) worst = std::max(worst, std::abs(v - 1.0));
    const std::vector<double> grid{0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999};
    const auto bp = projection::condition_Bp(0.0, w, 2.0, grid);
    for (const auto& [r, v] : bp.curve) worst = std::max(worst, std::abs(v - 1.0));
    const bool ok = worst < 1e-8 && dp.verdict == projection::ConditionVerdict::Finite &&
                    bp.verdict == projection::ConditionVerdict::Finite;
    result(8, ok, "self-dual projection conditions are exactly 1",
           "max |ratio - 1| = " + fmt(worst));
}

// 9. The weighted projection reproduces analytic polynomials and annihilates
// the antianalytic coordinate.
void criterion9() {
    quad::QuadConfig cfg;
    cfg.n_theta = 256;
    cfg.rel_tol = 1e-8;
    std::vector<AnalyticFunction> polys;
    for (int d = 0; d <= 8; ++d) polys.push_back(AnalyticFunction::monomial(d));
    for (auto& f : experiments::random_polynomials(11, 3, 8)) polys.push_back(f);
    double worst = 0.0;
    for (double gamma : {0.0, 1.0})
        for (const auto& f : polys) {
            projection::DiscFn fd = [&f](projection::complex zeta) { return f(zeta); };
            for (int i = 0; i < 12; ++i) {
                const auto z = std::polar(0.9 * (i + 1) / 12.0, 2.399 * i);
                worst = std::max(worst, std::abs(projection::project(fd, gamma, z, cfg) -
                                                 f(z)));
            }
        }
    double worst_conj = 0.0;
    projection::DiscFn anti = [](projection::complex zeta) { return std::conj(zeta); };
    for (int i = 0; i < 20; ++i) {
        const auto z = std::polar(0.05 + 0.85 * i / 19.0, 1.1 * i);
        worst_conj = std::max(worst_conj, std::abs(projection::project(anti, 0.0, z, cfg)));
    }
    result(9, worst < 1e-3 && worst_conj < 1e-6,
           "projection reproduces polynomials, annihilates conj",
           "max reproduction error = " + fmt(worst) +
               ", max |P(conj)| = " + fmt(worst_conj));
}

// 10. Kernel comparison sandwich on 1e5 seeded samples, plus a stable
// empirical constant bounding the exact kernel by the discrete majorant.
void criterion10() {
    bool ok = true;
    std::ostringstream detail;
    for (double gamma : {0.0, 1.0}) {
        std::mt19937_64 rng(42);
        auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1p-53; };
        const double c = std::pow(2.0, 2.0 + gamma);
        long violations = 0;
        double cmax_half = 0.0, cmax = 0.0;
        const int total = 100000;
        for (int i = 0; i < total; ++i) {
            const double d = u01() * 1.05;
            const double x = 1e-4 + u01() * 0.4989;
            const double y = 1e-4 + u01() * 0.4989;
            const double h = projection::kernel_Htilde(d, 0.0, x, y, gamma);
            const double dd =
                projection::discrete_kernel_D(d, 0.0, 1.0 - x, 1.0 - y, gamma);
            const double slack = 1e-12 * std::max(1.0, h);
            if (dd > h + slack || dd < h / c - slack) ++violations;
            const double kt = projection::kernel_Ktilde(d, 0.0, 1.0 - x, 1.0 - y, gamma);
            if (dd > 0.0 && kt > 0.0) {
                const double ratio = kt / dd;
                cmax = std::max(cmax, ratio);
                if (i < total / 2) cmax_half = std::max(cmax_half, ratio);
            }
        }
        const double drift = cmax / cmax_half - 1.0;
        ok = ok && violations == 0 && drift < 0.05;
        detail << "gamma=" << gamma << ": violations=" << violations
               << ", C=" << fmt(cmax) << ", drift=" << fmt(drift) << " ";
    }
    result(10, ok, "kernel sandwich and stable comparison constant", detail.str());
}

// 11. Strictness of the tent/mixed inclusions: along the shrinking-cutoff
// ladder the divergent power functional keeps growing at every step
// (non-Cauchy: per-step factor >= 1.08; total growth >= 2.0 for the
// log-divergent family A and >= 1.75 for the slower sqrt-log family B),
// while the finite companion norm is Cauchy (strictly shrinking steps,
// final step < 1%).
void criterion11() {
    quad::QuadConfig cfg;
    cfg.n_theta = 96;
    cfg.rel_tol = 1e-6;
    cfg.max_rounds = 2;
    const auto w = RadialWeight::constant(1.0);
    const std::vector<double> eps{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    bool ok = true;
    std::ostringstream detail;
    for (int variant = 0; variant < 2; ++variant) {
        const bool is_a = variant == 0;
        functions::MeasurableTestFunction f{
            is_a ? functions::MeasurableTestFunction::Family::PropA
                 : functions::MeasurableTestFunction::Family::PropB,
            is_a ? 1.0 : 2.0, is_a ? 2.0 : 1.0, w};
        SpaceSpec mixed;
        mixed.p = f.p;
        mixed.q = f.q;
        SpaceSpec tent = mixed;
        tent.kind = SpaceSpec::Kind::Tent;
        const auto absf = norms::polar_abs(f);
        std::vector<double> mv, tv;
        for (double e : eps) {
            mv.push_back(norms::mixed_norm(absf, mixed, cfg, e).value);
            tv.push_back(norms::tent_norm(absf, tent, cfg, 1.0, e).value);
        }
        const auto& div = is_a ? mv : tv;    // log-divergent side
        const auto& stable = is_a ? tv : mv; // convergent side
        const double power = is_a ? f.q : f.p;
        const double growth = std::pow(div.back() / div.front(), power);
        double min_factor = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < div.size(); ++i)
            min_factor = std::min(min_factor, std::pow(div[i + 1] / div[i], power));
        bool cauchy = true;
        double prev_step = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < stable.size(); ++i) {
            const double step = std::abs(stable[i + 1] / stable[i] - 1.0);
            cauchy = cauchy && step < prev_step;
            prev_step = step;
        }
        const double last_step = prev_step;
        ok = ok && growth >= (is_a ? 2.0 : 1.75) && min_factor >= 1.08 && cauchy &&
             last_step < 0.01;
        detail << (is_a ? "A" : "B") << ": growth=" << fmt(growth)
               << ", step factor>=" << fmt(min_factor)
               << ", stable last step=" << fmt(last_step) << " ";
    }
    result(11, ok, "strict inclusion witnesses diverge one-sidedly", detail.str());
}

// 12. Kernel test functions have the predicted norm growth: the normalized
// quantity stays in a band of eccentricity < 10 up to the boundary.
void criterion12() {
    quad::QuadConfig cfg;
    cfg.n_theta = 512;
    cfg.rel_tol = 1e-6;
    cfg.max_rounds = 3;
    SpaceSpec spec; // p = q = 2, constant weight
    const double beta = 2.0;
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (double lam : {0.5, 0.7, 0.9, 0.95, 0.99}) {
        const auto f = AnalyticFunction::kernel({lam, 0.0}, beta);
        const double n = norms::mixed_norm(norms::polar_abs(f), spec, cfg).value;
        const double v = n * std::pow(spec.weight.tail(lam), -1.0 / spec.p) *
                         std::pow(1.0 - lam, beta - 1.0 / spec.q);
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    result(12, hi / lo < 10.0, "normalized kernel test-function norms stay banded",
           "band eccentricity = " + fmt(hi / lo));
}

// 13. Dilations converge in norm: ||f_lambda - f|| decreases strictly along
// the ladder and ends below 1% of ||f||.
void criterion13() {
    quad::QuadConfig cfg;
    cfg.n_theta = 256;
    cfg.rel_tol = 1e-6;
    cfg.max_rounds = 3;
    SpaceSpec spec; // p = q = 2, constant weight
    const auto f = AnalyticFunction::kernel({0.9, 0.0}, 3.0);
    const double base = norms::mixed_norm(norms::polar_abs(f), spec, cfg).value;
    double prev = -1.0;
    bool decreasing = true;
    double final_rel = 0.0;
    for (double lam : {0.9, 0.99, 0.999, 0.9999}) {
        const auto fl = f.dilate({lam, 0.0});
        norms::PolarFn diff = [&f, fl](double r, double theta) {
            const auto z = std::polar(r, theta);
            return std::abs(fl.evaluate(z) - f.evaluate(z));
        };
        const double d = norms::mixed_norm(diff, spec, cfg).value;
        if (prev >= 0.0 && d >= prev) decreasing = false;
        prev = d;
        final_rel = d / base;
    }
    result(13, decreasing && final_rel < 0.01, "dilations converge in norm",
           "strictly decreasing = " + std::string(decreasing ? "yes" : "no") +
               ", final relative = " + fmt(final_rel));
}

// 14. Weighted sup-average identity for the constant density, and agreement
// between the square maximal function and its radial sup-average form.
void criterion14() {
    quad::QuadConfig cfg;
    cfg.rel_tol = 1e-9;
    bool ok = true;
    double worst_id = 0.0;
    auto one = [](double) { return 1.0; };
    for (double gamma : {0.0, 1.0}) {
        const auto nu = RadialWeight::standard(gamma);
        for (double x : {0.1, 0.5, 0.9})
            worst_id = std::max(worst_id, std::abs(norms::w_maximal(one, nu, x, cfg) - 1.0));
    }
    ok = ok && worst_id < 1e-6;
    const auto eta = RadialWeight::standard(1.0);
    norms::PolarFn phi = [](double r, double) { return 1.0 - r; };
    auto f = [](double u) { return u; };
    double worst_corr = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double zm = 0.3 + 0.65 * i / 19.0;
        const auto z = std::polar(zm, 0.7 * i);
        const double m = norms::hormander_maximal(phi, eta, z, cfg);
        const double wv = norms::w_maximal(f, eta, 1.0 - zm, cfg);
        worst_corr = std::max(worst_corr, std::abs(m / wv - 1.0));
    }
    ok = ok && worst_corr < 0.02;
    result(14, ok, "sup-average identity and square/radial correspondence",
           "max |identity - 1| = " + fmt(worst_id) +
               ", max correspondence deviation = " + fmt(worst_corr));
}

// 15. Reporting-only: for the rapidly-decreasing weight the mixed/tent ratio
// of the reproducing-kernel family should grow along the parameter ladder.
// Non-convergence downgrades to a flagged report, never a gate failure.
void criterion15() {
    std::string detail = "flagged: experiment did not run";
    try {
        experiments::ExperimentConfig ec;
        ec.name = "w-counterexample";
        ec.options["weight"] = "exp:c=1,alpha=1";
        ec.options["p"] = "1";
        ec.options["q"] = "2";
        ec.options["N"] = "8000";
        ec.options["ladder"] = "0.8,0.9,0.95,0.98";
        ec.options["ntheta"] = "512";
        ec.options["tol"] = "1e-4";
        // One refinement round: the near-boundary angular spike makes deeper
        // adaptive refinement explode in cost, and this criterion only
        // reports the ratio trend.
        ec.options["rounds"] = "1";
        const auto rep = experiments::run_experiment(ec);
        std::string verdict, growth;
        for (const auto& [k, v] : rep.summary) {
            if (k == "verdict") verdict = v;
            if (k == "ratio_growth") growth = v;
        }
        if (verdict == "gap-detected")
            detail = "ratio growth = " + growth + " (gap detected)";
        else
            detail = "flagged: verdict = " + verdict + ", ratio growth = " + growth +
                     " (reporting only)";
    } catch (const std::exception& e) {
        detail = std::string("flagged: exception: ") + e.what();
    }
    result(15, true, "rapidly-decreasing weight separates mixed from tent", detail);
}

} // namespace

int main() {
    guarded(1, "tent norm = 2^{1/p} mixed norm at p = q", criterion1);
    guarded(2, "maximal-operator norm ratios finite and refinement-stable", criterion2);
    guarded(3, "tent/mixed equivalence interval for p != q", criterion3);
    guarded(4, "tail-halving radii match closed forms", criterion4);
    guarded(5, "doubling classifier truth table", criterion5);
    guarded(6, "moment-sequence band vs unbounded growth", criterion6);
    guarded(7, "derivative seminorm equivalent to the norm", criterion7);
    guarded(8, "self-dual projection conditions are exactly 1", criterion8);
    guarded(9, "projection reproduces polynomials, annihilates conj", criterion9);
    guarded(10, "kernel sandwich and stable comparison constant", criterion10);
    guarded(11, "strict inclusion witnesses diverge one-sidedly", criterion11);
    guarded(12, "normalized kernel test-function norms stay banded", criterion12);
    guarded(13, "dilations converge in norm", criterion13);
    guarded(14, "sup-average identity and square/radial correspondence", criterion14);
    guarded(15, "rapidly-decreasing weight separates mixed from tent", criterion15);
    std::printf("%d of 15 criteria passed\n", 15 - g_failures);
    return g_failures;
}
