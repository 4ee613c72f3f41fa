#include "disklab/functions.hpp"

#include "disklab/geometry.hpp"
#include "disklab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace disklab::functions {

namespace {

complex pow_principal(complex base, double expo) {
    return std::pow(base, complex{expo, 0.0});
}

// Rising factorial (beta)_k = beta (beta+1) ... (beta+k-1).
double pochhammer(double beta, int k) {
    double out = 1.0;
    for (int i = 0; i < k; ++i) out *= beta + i;
    return out;
}

std::vector<complex> differentiate_coeffs(std::vector<complex> c, int k) {
    for (int pass = 0; pass < k; ++pass) {
        if (c.size() <= 1) return {complex{0.0, 0.0}};
        for (std::size_t n = 1; n < c.size(); ++n) c[n - 1] = static_cast<double>(n) * c[n];
        c.pop_back();
    }
    return c;
}

} // namespace

AnalyticFunction::AnalyticFunction(std::variant<Taylor, Kernel, MomentKernel> rep)
    : rep_(std::move(rep)) {}

AnalyticFunction AnalyticFunction::taylor(std::vector<complex> coeffs) {
    if (coeffs.empty()) coeffs.push_back({0.0, 0.0});
    return AnalyticFunction{Taylor{std::move(coeffs)}};
}

AnalyticFunction AnalyticFunction::monomial(int degree, complex coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: degree must be >= 0");
    std::vector<complex> c(static_cast<std::size_t>(degree) + 1, complex{0.0, 0.0});
    c.back() = coeff;
    return taylor(std::move(c));
}

AnalyticFunction AnalyticFunction::kernel(complex lambda, double beta) {
    if (std::abs(lambda) >= 1.0)
        throw std::invalid_argument("kernel: |lambda| must be < 1");
    return AnalyticFunction{Kernel{lambda, beta, complex{1.0, 0.0}}};
}

AnalyticFunction AnalyticFunction::moment_kernel(complex a, const weights::RadialWeight& w,
                                                 int truncation) {
    if (std::abs(a) >= 1.0)
        throw std::invalid_argument("moment_kernel: |a| must be < 1");
    if (truncation < 0) throw std::invalid_argument("moment_kernel: truncation must be >= 0");
    MomentKernel mk{a, w, truncation, {}, 0.0};
    mk.inv_two_moments.reserve(static_cast<std::size_t>(truncation) + 1);
    for (int n = 0; n <= truncation; ++n) {
        const double m = w.moment(2.0 * n + 1.0);
        if (!(m > 0.0))
            throw std::runtime_error("moment_kernel: nonpositive moment at n=" + std::to_string(n));
        mk.inv_two_moments.push_back(1.0 / (2.0 * m));
    }
    // Trim trailing terms whose bound inv_two_moments[n]*|a|^n falls below
    // 1e-15 of the largest: on |z| < 1 they contribute nothing at double
    // precision, and evaluation cost is linear in the retained degree.
    {
        const double abs_a = std::abs(a);
        double top = 0.0, pw = 1.0;
        std::vector<double> bound(mk.inv_two_moments.size());
        for (std::size_t n = 0; n < mk.inv_two_moments.size(); ++n, pw *= abs_a) {
            bound[n] = mk.inv_two_moments[n] * pw;
            top = std::max(top, bound[n]);
        }
        std::size_t keep = bound.size();
        while (keep > 1 && bound[keep - 1] < 1e-15 * top) --keep;
        mk.inv_two_moments.resize(keep);
        mk.truncation = static_cast<int>(keep) - 1;
    }
    // Geometric tail estimate for |a z| <= |a|: last coefficient magnitude times
    // |a|^{N+1} / (1 - |a|), coarse but recorded for diagnostics.
    const double last = mk.inv_two_moments.back() * std::pow(std::abs(a), mk.truncation);
    mk.tail_bound = last * std::abs(a) / (1.0 - std::abs(a));
    return AnalyticFunction{std::move(mk)};
}

complex AnalyticFunction::evaluate(complex z) const {
    if (const auto* t = std::get_if<Taylor>(&rep_)) {
        complex acc{0.0, 0.0};
        for (auto it = t->coeffs.rbegin(); it != t->coeffs.rend(); ++it) acc = acc * z + *it;
        return acc;
    }
    if (const auto* k = std::get_if<Kernel>(&rep_)) {
        return k->scale * pow_principal(complex{1.0, 0.0} - std::conj(k->lambda) * z, -k->beta);
    }
    const auto& mk = std::get<MomentKernel>(rep_);
    const complex w = std::conj(mk.a) * z;
    complex acc{0.0, 0.0};
    for (int n = mk.truncation; n >= 0; --n)
        acc = acc * w + complex{mk.inv_two_moments[static_cast<std::size_t>(n)], 0.0};
    return acc;
}

AnalyticFunction AnalyticFunction::derivative(int k) const {
    if (k < 0) throw std::invalid_argument("derivative: order must be >= 0");
    if (k == 0) return *this;
    if (const auto* kr = std::get_if<Kernel>(&rep_)) {
        // d^k/dz^k (1 - lb z)^{-beta} = (beta)_k lb^k (1 - lb z)^{-beta-k}
        Kernel out = *kr;
        out.scale *= pochhammer(kr->beta, k) * std::pow(std::conj(kr->lambda), k);
        out.beta += k;
        return AnalyticFunction{out};
    }
    if (const auto* t = std::get_if<Taylor>(&rep_))
        return taylor(differentiate_coeffs(t->coeffs, k));
    return taylor(differentiate_coeffs(taylor_coefficients(degree_hint()), k));
}

AnalyticFunction AnalyticFunction::dilate(complex lambda) const {
    if (const auto* kr = std::get_if<Kernel>(&rep_)) {
        // (1 - conj(mu) z)^{-beta} with conj(mu) = conj(lambda_0) * lambda.
        Kernel out = *kr;
        out.lambda = std::conj(std::conj(kr->lambda) * lambda);
        return AnalyticFunction{out};
    }
    if (const auto* mk = std::get_if<MomentKernel>(&rep_)) {
        MomentKernel out = *mk;
        out.a = std::conj(std::conj(mk->a) * lambda);
        return AnalyticFunction{out};
    }
    const auto& t = std::get<Taylor>(rep_);
    std::vector<complex> c = t.coeffs;
    complex pw{1.0, 0.0};
    for (auto& cn : c) {
        cn *= pw;
        pw *= lambda;
    }
    return taylor(std::move(c));
}

std::vector<complex> AnalyticFunction::taylor_coefficients(int degree) const {
    if (degree < 0) throw std::invalid_argument("taylor_coefficients: degree must be >= 0");
    std::vector<complex> out(static_cast<std::size_t>(degree) + 1, complex{0.0, 0.0});
    if (const auto* t = std::get_if<Taylor>(&rep_)) {
        const std::size_t n = std::min(out.size(), t->coeffs.size());
        std::copy(t->coeffs.begin(), t->coeffs.begin() + static_cast<long>(n), out.begin());
        return out;
    }
    if (const auto* k = std::get_if<Kernel>(&rep_)) {
        // Binomial series: coefficient_n = scale * (beta)_n / n! * conj(lambda)^n.
        complex term = k->scale;
        const complex lb = std::conj(k->lambda);
        for (int n = 0; n <= degree; ++n) {
            out[static_cast<std::size_t>(n)] = term;
            term *= (k->beta + n) / (n + 1.0) * lb;
        }
        return out;
    }
    const auto& mk = std::get<MomentKernel>(rep_);
    const complex ab = std::conj(mk.a);
    complex pw{1.0, 0.0};
    for (int n = 0; n <= std::min(degree, mk.truncation); ++n) {
        out[static_cast<std::size_t>(n)] = mk.inv_two_moments[static_cast<std::size_t>(n)] * pw;
        pw *= ab;
    }
    return out;
}

int AnalyticFunction::degree_hint() const {
    if (const auto* t = std::get_if<Taylor>(&rep_))
        return static_cast<int>(t->coeffs.size()) - 1;
    if (const auto* mk = std::get_if<MomentKernel>(&rep_)) return mk->truncation;
    return kDefaultTruncationDegree;
}

double AnalyticFunction::truncation_tail(double q) const {
    const auto* mk = std::get_if<MomentKernel>(&rep_);
    if (!mk) return 0.0;
    if (q < 0.0 || q >= 1.0) throw std::invalid_argument("truncation_tail: need 0 <= q < 1");
    const double last = mk->inv_two_moments.back() * std::pow(q, mk->truncation);
    return last * q / (1.0 - q);
}

AnalyticFunction integrate_Tg(const AnalyticFunction& f, const AnalyticFunction& g,
                              int trunc_degree) {
    // T_g(f)(z) = int_0^z f(w) g'(w) dw, exact on coefficients.
    const auto fc = f.taylor_coefficients(trunc_degree);
    const auto gpc = g.derivative(1).taylor_coefficients(trunc_degree);
    std::vector<complex> prod(fc.size() + gpc.size() - 1, complex{0.0, 0.0});
    for (std::size_t i = 0; i < fc.size(); ++i)
        for (std::size_t j = 0; j < gpc.size(); ++j) prod[i + j] += fc[i] * gpc[j];
    std::vector<complex> out(prod.size() + 1, complex{0.0, 0.0});
    for (std::size_t n = 0; n < prod.size(); ++n)
        out[n + 1] = prod[n] / static_cast<double>(n + 1);
    return AnalyticFunction::taylor(std::move(out));
}

AnalyticFunction integrate_Tga(const AnalyticFunction& f, const AnalyticFunction& g,
                               const std::vector<complex>& a, int n, int trunc_degree) {
    if (n < 1) throw std::invalid_argument("integrate_Tga: n must be >= 1");
    if (static_cast<int>(a.size()) != n - 1 && !(a.empty() && n == 1))
        throw std::invalid_argument("integrate_Tga: need n-1 coefficients a_1..a_{n-1}");
    // Integrand series h = f g^{(n)} + sum_{k=1}^{n-1} a_k f^{(k)} g^{(n-k)},
    // then apply the n-fold antiderivative T_I^n (I(z) = z, so T_I = single
    // antiderivative with h in place of f g').
    const int d = trunc_degree;
    auto product = [d](const AnalyticFunction& u, const AnalyticFunction& v) {
        const auto uc = u.taylor_coefficients(d);
        const auto vc = v.taylor_coefficients(d);
        std::vector<complex> prod(static_cast<std::size_t>(d) + 1, complex{0.0, 0.0});
        for (std::size_t i = 0; i < uc.size(); ++i)
            for (std::size_t j = 0; i + j < prod.size() && j < vc.size(); ++j)
                prod[i + j] += uc[i] * vc[j];
        return prod;
    };
    std::vector<complex> h = product(f, g.derivative(n));
    for (int k = 1; k <= n - 1; ++k) {
        const auto term = product(f.derivative(k), g.derivative(n - k));
        for (std::size_t i = 0; i < h.size(); ++i)
            h[i] += a[static_cast<std::size_t>(k - 1)] * term[i];
    }
    // n-fold antiderivative: coefficient c_m -> c_m * m! / (m+n)! shifted by n.
    std::vector<complex> out(h.size() + static_cast<std::size_t>(n), complex{0.0, 0.0});
    for (std::size_t m = 0; m < h.size(); ++m) {
        double denom = 1.0;
        for (int j = 1; j <= n; ++j) denom *= static_cast<double>(m + static_cast<std::size_t>(j));
        out[m + static_cast<std::size_t>(n)] = h[m] / denom;
    }
    return AnalyticFunction::taylor(std::move(out));
}

double bloch_norm(const AnalyticFunction& g, int radial_grid, int angular_grid) {
    const AnalyticFunction gp = g.derivative(1);
    double sup = std::abs(gp.evaluate({0.0, 0.0}));  // centre sample (factor 1)
    for (int i = 0; i < radial_grid; ++i) {
        // Uniform radii plus geometric spacing of 1-r toward the boundary.
        const double x = (i % 2 == 0)
                             ? 1.0 - (i + 1.0) / (radial_grid + 1.0)
                             : std::pow(10.0, -8.0 * (i + 1) / static_cast<double>(radial_grid));
        const double r = 1.0 - x;
        const double factor = 1.0 - r * r;
        for (int j = 0; j < angular_grid; ++j) {
            const double th = 2.0 * M_PI * j / angular_grid;
            const double v = factor * std::abs(gp.evaluate(std::polar(r, th)));
            sup = std::max(sup, v);
        }
    }
    return std::abs(g.evaluate({0.0, 0.0})) + sup;
}

double MeasurableTestFunction::operator()(double r, double theta) const {
    const double th = geometry::ang_diff(theta, 0.0);
    const double wr = weight(r);
    if (wr <= 0.0 || th == 0.0) return 0.0;
    const double theta_expo = (family == Family::PropA) ? -1.0 / q : -1.0 / p;
    return std::pow(1.0 - r, 1.0 / p) * std::pow(std::abs(th), theta_expo) *
           std::pow(wr, -1.0 / p);
}

} // namespace disklab::functions
