#include <catch2/catch_amalgamated.hpp>

#include "explicit_zeta/riemann_siegel.hpp"

using namespace ezeta;

TEST_CASE("theta against its classical asymptotic") {
    // theta(t) = (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + O(t^{-3})
    for (double t : {200.0, 1000.0, 25000.0}) {
        double lead = 0.5 * t * std::log(t / (TWO_PI * std::numbers::e)) - PI / 8 +
                      1.0 / (48 * t);
        CHECK(rs_theta(t) == Catch::Approx(lead).margin(1e-6));
    }
}

TEST_CASE("e^{i theta} zeta(1/2+it) is real") {
    for (double t : {20.0, 100.0, 512.5, 4000.0}) {
        CAPTURE(t);
        auto z = to_std(zeta_reference({0.5, t}));
        double th = rs_theta(t);
        double im = std::cos(th) * z.imag() + std::sin(th) * z.real();
        CHECK(std::fabs(im) < 1e-10);
    }
}

TEST_CASE("Z sign change brackets the first zero") {
    double a = riemann_siegel_Z(14.0);
    double b = riemann_siegel_Z(14.3);
    CHECK(a * b < 0.0);
}

TEST_CASE("|Z(t)| = |zeta(1/2+it)|") {
    for (double t : {100.0, 50.0, 231.7}) {
        double z = riemann_siegel_Z(t);
        double mag = static_cast<double>(abs(zeta_reference({0.5, t})));
        CHECK(std::fabs(std::fabs(z) - mag) < 1e-8);
    }
}

TEST_CASE("Riemann-Siegel expansion matches Euler-Maclaurin high up") {
    // direct RS formula (main sum + four corrections) vs the independent
    // Euler-Maclaurin route
    for (double t : {2345.6, 8000.1, 31234.567, 60000.3, 123456.7, 400000.1}) {
        CAPTURE(t);
        auto z = zeta_fast({0.5, t}, 1e-10);
        double th = rs_theta(t);
        double z_em = std::cos(th) * z.real() - std::sin(th) * z.imag();
        double z_rs = riemann_siegel_Z_rs(t);
        CHECK(std::fabs(z_rs - z_em) < 3e-9);
    }
}

TEST_CASE("correction terms are smooth across the p = 1/4 removable point") {
    auto a = rs_correction_terms(0.2499999);
    auto b = rs_correction_terms(0.2500001);
    for (int j = 0; j < 4; ++j) {
        CAPTURE(j);
        CHECK(std::fabs(a[static_cast<std::size_t>(j)] -
                        b[static_cast<std::size_t>(j)]) < 1e-5);
    }
}

TEST_CASE("Z cross-route consistency at moderate heights") {
    // t in [30, 3e4) goes through the double EM path; compare against the
    // multiprecision oracle route
    for (double t : {35.0, 500.0, 1200.0, 1999.0}) {
        CAPTURE(t);
        cplx_mp z = zeta_reference({0.5, t});
        double th = rs_theta(t);
        double zmp = std::cos(th) * static_cast<double>(z.re) -
                     std::sin(th) * static_cast<double>(z.im);
        CHECK(std::fabs(riemann_siegel_Z(t) - zmp) < 1e-8);
    }
}
