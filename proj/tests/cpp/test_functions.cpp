#include <doctest.h>

#include "disklab/functions.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace disklab;
using functions::AnalyticFunction;
using functions::complex;

TEST_CASE("taylor evaluation uses all coefficients") {
    auto f = AnalyticFunction::taylor({{1.0, 0.0}, {0.0, 2.0}, {3.0, 0.0}});
    const complex z{0.5, 0.25};
    const complex expect = complex{1.0, 0.0} + complex{0.0, 2.0} * z +
                           complex{3.0, 0.0} * z * z;
    CHECK(std::abs(f(z) - expect) < 1e-15);
    CHECK(f.is_taylor());
}

TEST_CASE("kernel evaluation matches its binomial series") {
    const complex lambda{0.6, 0.2};
    auto f = AnalyticFunction::kernel(lambda, 2.5);
    auto coeffs = f.taylor_coefficients(200);
    const complex z{0.3, -0.4};
    complex series{0.0, 0.0};
    complex zp{1.0, 0.0};
    for (const complex& c : coeffs) {
        series += c * zp;
        zp *= z;
    }
    CHECK(std::abs(f(z) - series) < 1e-10);
    // beta = 2 has the classical coefficients (n+1) conj(lambda)^n
    auto g = AnalyticFunction::kernel(lambda, 2.0);
    auto gc = g.taylor_coefficients(6);
    for (int n = 0; n <= 6; ++n)
        CHECK(std::abs(gc[n] - double(n + 1) * std::pow(std::conj(lambda), n)) < 1e-12);
}

TEST_CASE("kernel derivative closed form") {
    const complex lambda{0.4, 0.1};
    auto f = AnalyticFunction::kernel(lambda, 1.5);
    auto fp = f.derivative();
    const complex z{0.2, 0.3};
    const double h = 1e-6;
    const complex fd = (f(z + h) - f(z - h)) / (2.0 * h);
    CHECK(std::abs(fp(z) - fd) < 1e-7);
    // second derivative via two applications equals derivative(2)
    CHECK(std::abs(f.derivative(2)(z) - fp.derivative()(z)) < 1e-12);
}

TEST_CASE("taylor derivative shifts coefficients") {
    auto f = AnalyticFunction::taylor({{1, 0}, {2, 0}, {3, 0}, {4, 0}});
    auto fp = f.derivative();
    // f' = 2 + 6z + 12z^2
    CHECK(std::abs(fp(complex{0.0, 0.0}) - complex{2.0, 0.0}) < 1e-15);
    CHECK(std::abs(fp(complex{1.0, 0.0}) - complex{20.0, 0.0}) < 1e-12);
}

TEST_CASE("dilation substitutes the parameter") {
    const complex lam{0.9, 0.0};
    auto f = AnalyticFunction::kernel(complex{0.7, 0.1}, 3.0);
    auto fl = f.dilate(lam);
    const complex z{0.4, -0.2};
    CHECK(std::abs(fl(z) - f(lam * z)) < 1e-13);

    auto p = AnalyticFunction::taylor({{1, 0}, {0, 1}, {2, 0}});
    auto pl = p.dilate(lam);
    CHECK(std::abs(pl(z) - p(lam * z)) < 1e-14);
}

TEST_CASE("volterra operator on monomials") {
    // f = z^a, g = z^b: T_g f = int_0^z t^a b t^{b-1} dt = b z^{a+b} / (a+b)
    const int a = 3, b = 4;
    auto f = AnalyticFunction::monomial(a);
    auto g = AnalyticFunction::monomial(b);
    auto h = functions::integrate_Tg(f, g);
    const complex z{0.5, 0.3};
    const complex expect = double(b) / double(a + b) * std::pow(z, a + b);
    CHECK(std::abs(h(z) - expect) < 1e-13);
    CHECK(std::abs(h(complex{0.0, 0.0})) < 1e-15);
}

TEST_CASE("generalized volterra with n = 1 and a = {} reduces to T_g") {
    auto f = AnalyticFunction::taylor({{1, 0}, {2, 0}});
    auto g = AnalyticFunction::taylor({{0, 0}, {1, 0}, {1, 0}});
    auto t1 = functions::integrate_Tg(f, g);
    auto t2 = functions::integrate_Tga(f, g, {}, 1);
    for (double rr : {0.2, 0.5, 0.8}) {
        const complex z{rr, rr / 3.0};
        CHECK(std::abs(t1(z) - t2(z)) < 1e-13);
    }
}

TEST_CASE("bloch norm of the identity is 1") {
    auto g = AnalyticFunction::monomial(1);
    // |g(0)| + sup (1-|z|^2)|g'| = 0 + 1
    CHECK(functions::bloch_norm(g) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("moment kernel with constant weight is the beta=2 kernel") {
    auto w = weights::RadialWeight::constant(1.0);
    // omega_{2n+1} = 1/(2n+2), so sum (conj(a) z)^n / (2 omega_{2n+1})
    //   = sum (n+1) (conj(a) z)^n = (1 - conj(a) z)^{-2}
    const complex a{0.5, 0.2};
    auto mk = AnalyticFunction::moment_kernel(a, w, 300);
    auto exact = AnalyticFunction::kernel(a, 2.0);
    for (double rr : {0.0, 0.3, 0.6}) {
        const complex z{rr, 0.1};
        CHECK(std::abs(mk(z) - exact(z)) < 1e-9);
    }
    CHECK(mk.truncation_tail(0.5) < 1e-9);
    CHECK(mk.truncation_tail(0.999) > 1e-9);
}

TEST_CASE("measurable test families") {
    auto w = weights::RadialWeight::constant(1.0);
    functions::MeasurableTestFunction fa{
        functions::MeasurableTestFunction::Family::PropA, 2.0, 4.0, w};
    // (1-r)^{1/p} |theta|^{-1/q} omega^{-1/p}
    CHECK(fa(0.5, 0.5) ==
          doctest::Approx(std::pow(0.5, 0.5) * std::pow(0.5, -0.25)));
    CHECK(fa(0.5, 0.0) == 0.0);
    // theta is taken modulo 2 pi into (-pi, pi]
    CHECK(fa(0.5, 0.5 + 2.0 * M_PI) == doctest::Approx(fa(0.5, 0.5)));
    CHECK(fa(0.5, -0.5) == doctest::Approx(fa(0.5, 0.5)));

    functions::MeasurableTestFunction fb{
        functions::MeasurableTestFunction::Family::PropB, 2.0, 4.0, w};
    CHECK(fb(0.5, 0.5) ==
          doctest::Approx(std::pow(0.5, 0.5) * std::pow(0.5, -0.5)));
}
