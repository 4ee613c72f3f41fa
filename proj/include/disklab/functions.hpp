#pragma once

#include "disklab/weights.hpp"

#include <complex>
#include <optional>
#include <variant>
#include <vector>

namespace disklab::functions {

using complex = std::complex<double>;

/// Analytic function in one of three representations:
///  - Taylor: finite coefficient list a_0..a_d
///  - Kernel: scale * (1 - conj(lambda) z)^{-beta}, principal branch
///  - MomentKernel: truncated reproducing-kernel series
///    sum_n (conj(a) z)^n / (2 omega_{2n+1})
/// Values are immutable; operators return new functions.
class AnalyticFunction {
public:
    struct Taylor {
        std::vector<complex> coeffs;
    };
    struct Kernel {
        complex lambda;
        double beta;
        complex scale{1.0, 0.0};
    };
    struct MomentKernel {
        complex a;
        weights::RadialWeight weight;
        int truncation;
        std::vector<double> inv_two_moments; // 1 / (2 omega_{2n+1})
        double tail_bound;                   // recorded geometric tail estimate
    };

    static AnalyticFunction taylor(std::vector<complex> coeffs);
    static AnalyticFunction monomial(int degree, complex coeff = {1.0, 0.0});
    static AnalyticFunction kernel(complex lambda, double beta);
    static AnalyticFunction moment_kernel(complex a, const weights::RadialWeight& w,
                                          int truncation);

    complex evaluate(complex z) const;
    complex operator()(complex z) const { return evaluate(z); }

    /// k-th derivative; closed form for Kernel, coefficient shift for series.
    AnalyticFunction derivative(int k = 1) const;

    /// z -> f(lambda z); exact parameter substitution for Kernel forms.
    AnalyticFunction dilate(complex lambda) const;

    /// Taylor truncation to the given degree (evaluation itself never truncates
    /// Kernel forms).
    std::vector<complex> taylor_coefficients(int degree) const;
    int degree_hint() const;

    bool is_taylor() const { return std::holds_alternative<Taylor>(rep_); }
    const std::variant<Taylor, Kernel, MomentKernel>& rep() const { return rep_; }

    /// Truncation tail bound for MomentKernel evaluation at |a z| <= q; 0 for
    /// exact representations.
    double truncation_tail(double q) const;

private:
    std::variant<Taylor, Kernel, MomentKernel> rep_;
    explicit AnalyticFunction(std::variant<Taylor, Kernel, MomentKernel> rep);
};

/// Default Taylor degree used when an operator needs coefficients of a
/// closed-form family.
inline constexpr int kDefaultTruncationDegree = 400;

/// T_g(f)(z) = int_0^z f g' ; exact coefficient arithmetic on Taylor forms.
AnalyticFunction integrate_Tg(const AnalyticFunction& f, const AnalyticFunction& g,
                              int trunc_degree = kDefaultTruncationDegree);

/// T_{g,a}(f) = T_I^n( f g^{(n)} + sum_k a_k f^{(k)} g^{(n-k)} ).
AnalyticFunction integrate_Tga(const AnalyticFunction& f, const AnalyticFunction& g,
                               const std::vector<complex>& a, int n,
                               int trunc_degree = kDefaultTruncationDegree);

/// |g(0)| + sup (1-|z|^2) |g'(z)| over a grid geometric toward the boundary.
double bloch_norm(const AnalyticFunction& g, int radial_grid = 256, int angular_grid = 64);

/// Measurable counterexample families: value at (r, theta) with theta taken
/// in (-pi, pi]; zero wherever omega(r) = 0 or theta = 0.
struct MeasurableTestFunction {
    enum class Family { PropA, PropB } family;
    double p, q;
    weights::RadialWeight weight;

    double operator()(double r, double theta) const;
};

} // namespace disklab::functions
