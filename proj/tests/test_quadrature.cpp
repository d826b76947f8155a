#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "numeric.hpp"
#include "quadrature.hpp"

using namespace ncorr;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    auto rule = gauss_legendre(6, 0.0, 1.0);
    double s3 = 0.0, s11 = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) {
        s3 += rule.w[i] * std::pow(rule.x[i], 3);
        s11 += rule.w[i] * std::pow(rule.x[i], 11);
    }
    CHECK(s3 == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(s11 == doctest::Approx(1.0 / 12.0).epsilon(1e-13));  // degree 11 = 2*6 - 1
}

TEST_CASE("unit rule rounds up and caches") {
    const gl_rule& a = unit_rule(33);
    CHECK(a.x.size() % 32 == 0);
    CHECK(a.x.size() >= 33);
    const gl_rule& b = unit_rule(33);
    CHECK(&a == &b);
    double s = 0.0;
    for (size_t i = 0; i < a.x.size(); ++i) s += a.w[i];
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("oscillation node counts resolve the phase") {
    // e^{i omega u} over [-1, 1] needs roughly omega/pi periods' worth of nodes
    for (double omega : {5.0, 40.0, 300.0}) {
        int n = osc_nodes(omega);
        const gl_rule& r = unit_rule(n);
        cx s = 0.0;
        for (size_t i = 0; i < r.x.size(); ++i)
            s += r.w[i] * std::exp(cx(0.0, omega * r.x[i]));
        cx exact = 2.0 * std::sin(omega) / omega;
        CHECK(std::abs(s - exact) < 1e-10);
    }
}

TEST_CASE("periodic trapezoid is exact for trigonometric polynomials") {
    for (double jitter : {0.0, 0.37}) {
        auto r = periodic_trapezoid(16, jitter);
        double s0 = 0.0, sc = 0.0, s15 = 0.0;
        for (size_t i = 0; i < r.x.size(); ++i) {
            s0 += r.w[i];
            sc += r.w[i] * std::cos(3.0 * r.x[i]);
            s15 += r.w[i] * std::cos(15.0 * r.x[i]);
        }
        CHECK(s0 == doctest::Approx(two_pi).epsilon(1e-14));
        CHECK(std::abs(sc) < 1e-12);
        CHECK(std::abs(s15) < 1e-12);  // degree 15 < 16 still exact
    }
}

TEST_CASE("refined integral reports a sane error estimate") {
    // the window must bury the Gaussian tail or truncation dominates the check
    auto [val, err] = integrate_refined([](double x) { return std::exp(-x * x); },
                                        -6.5, 6.5, 48);
    CHECK(val == doctest::Approx(std::sqrt(pi)).epsilon(1e-10));
    CHECK(err < 1e-8);
    auto [cval, cerr] = integrate_refined_cx(
        [](double x) { return std::exp(cx(0.0, 3.0 * x)) * std::exp(-x * x); }, -6.5, 6.5, 48);
    CHECK(cval.real() == doctest::Approx(std::sqrt(pi) * std::exp(-9.0 / 4.0)).epsilon(1e-9));
    CHECK(std::abs(cval.imag()) < 1e-12);
    CHECK(cerr < 1e-8);
}

TEST_CASE("kahan summation holds up under cancellation") {
    kahan_sum<double> s;
    s.add(1.0);
    for (int i = 0; i < 10000000; ++i) s.add(1e-16);
    CHECK(s.value() == doctest::Approx(1.0 + 1e-9).epsilon(1e-12));
}
