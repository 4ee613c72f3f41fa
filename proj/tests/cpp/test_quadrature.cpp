#include <doctest.h>

#include "disklab/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace disklab;

TEST_CASE("radial integration of smooth integrands") {
    quad::QuadConfig cfg;
    cfg.clip = 1e-12;  // default clip trims O(clip) of the domain near b
    auto one = quad::integrate_radial([](double) { return 1.0; }, 0.0, 1.0, cfg);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(one.converged);

    auto cubic = quad::integrate_radial([](double r) { return r * r * r; }, 0.0, 1.0, cfg);
    CHECK(cubic.value == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("radial integration with endpoint singularity and clip extrapolation") {
    quad::QuadConfig cfg;
    cfg.clip = 1e-6;
    cfg.clip_extrapolate = true;
    auto rep = quad::integrate_radial(
        [](double r) { return 1.0 / std::sqrt(1.0 - r); }, 0.0, 1.0, cfg);
    CHECK(rep.value == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("Gauss-Legendre order 16 integrates monomials up to degree 31 exactly") {
    for (int d : {5, 16, 31}) {
        double got = quad::gl_panel([d](double x) { return std::pow(x, d); }, 0.0, 1.0, 16);
        CHECK(got == doctest::Approx(1.0 / (d + 1)).epsilon(1e-13));
    }
}

TEST_CASE("periodic trapezoid is exact on low-degree trigonometric polynomials") {
    auto g = [](double t) { return 1.0 + std::cos(3.0 * t) + std::sin(7.0 * t); };
    double got = quad::integrate_periodic(g, 64);
    CHECK(got == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("disc integration against area measures") {
    quad::QuadConfig cfg;
    cfg.clip = 1e-12;
    auto one = quad::integrate_disc([](double, double) { return 1.0; },
                                    quad::DiscMeasure::NormalizedArea, nullptr, cfg);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-8));

    auto rsq = quad::integrate_disc([](double r, double) { return r * r; },
                                    quad::DiscMeasure::NormalizedArea, nullptr, cfg);
    CHECK(rsq.value == doctest::Approx(0.5).epsilon(1e-8));

    auto wone = quad::integrate_disc([](double, double) { return 1.0; },
                                     quad::DiscMeasure::WeightedArea,
                                     [](double) { return 1.0; }, cfg);
    CHECK(wone.value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("cone integration: tent density over the unit cone at xi=1") {
    quad::QuadConfig cfg;
    // angular width 2(1-r) cancels the 1/(1-r) density: 2 int_0^1 r dr = 1.
    auto rep = quad::integrate_cone([](double, double) { return 1.0; }, 1.0, 0.0, 1.0,
                                    quad::ConeMeasure::TentDensity,
                                    [](double) { return 1.0; }, cfg);
    CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("cone integration: truncated cone with interior vertex") {
    quad::QuadConfig cfg;
    // 2 int_0^{1/2} (1/2 - r) r / (1-r) dr = 2(3/8 + 0.5 log(1/2)).
    const double oracle = 2.0 * (0.375 + 0.5 * std::log(0.5));
    auto rep = quad::integrate_cone([](double, double) { return 1.0; }, 0.5, 0.0, 1.0,
                                    quad::ConeMeasure::TentDensity,
                                    [](double) { return 1.0; }, cfg);
    CHECK(rep.value == doctest::Approx(oracle).epsilon(1e-6));

    auto zero = quad::integrate_cone([](double, double) { return 0.0; }, 0.5, 0.0, 1.0,
                                     quad::ConeMeasure::RawArea, nullptr, cfg);
    CHECK(zero.value == doctest::Approx(0.0));

    auto empty = quad::integrate_cone([](double, double) { return 1.0; }, 0.0, 0.0, 1.0,
                                      quad::ConeMeasure::RawArea, nullptr, cfg);
    CHECK(empty.value == 0.0);
    CHECK(empty.converged);
}

TEST_CASE("sup estimation") {
    CHECK(quad::estimate_sup([](double r) { return r * (1.0 - r); }, 0.0, 1.0) ==
          doctest::Approx(0.25).epsilon(1e-8));
    CHECK(quad::estimate_sup([](double) { return 3.5; }, 0.0, 1.0) == doctest::Approx(3.5));
    CHECK(quad::estimate_sup([](double t) { return std::cos(t); }, 0.0,
                             2.0 * std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("tree summation is deterministic and correct") {
    std::vector<double> xs;
    double plain = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        xs.push_back(1.0 / i);
        plain += 1.0 / i;
    }
    CHECK(quad::tree_sum(xs) == doctest::Approx(plain).epsilon(1e-12));
    CHECK(quad::tree_sum(xs) == quad::tree_sum(xs));
}
