#include <catch2/catch_amalgamated.hpp>

#include "explicit_zeta/zeta_oracle.hpp"

using namespace ezeta;

namespace {
double mp_err(const cplx_mp& z, const char* re_ref, const char* im_ref) {
    mpreal dr = z.re - mpreal(re_ref);
    mpreal di = z.im - mpreal(im_ref);
    mpreal mag = abs(z);
    if (mag < 1) mag = 1;
    return static_cast<double>(boost::multiprecision::sqrt(dr * dr + di * di) / mag);
}
}  // namespace

TEST_CASE("zeta at classical points") {
    // zeta(2) = pi^2/6
    cplx_mp z2 = zeta_reference({2.0, 0.0});
    mpreal pi = mp_pi();
    mpreal err = boost::multiprecision::abs(z2.re - pi * pi / 6);
    CHECK(static_cast<double>(err) < 1e-20 * 1.7);
    CHECK(static_cast<double>(boost::multiprecision::abs(z2.im)) < 1e-25);

    // published high-precision values
    CHECK(mp_err(zeta_reference({0.5, 0.0}),
                 "-1.4603545088095868128894991525152980124672", "0") < 1e-20);
    CHECK(mp_err(zeta_reference({3.0, 0.0}),
                 "1.2020569031595942853997381615114499907650", "0") < 1e-20);
    CHECK(mp_err(zeta_reference({0.0, 0.0}), "-0.5", "0") < 1e-20);
    // zeta(1/2 + 14.134725 i) is nearly zero (first zero neighborhood)
    cplx_mp near_zero = zeta_reference({0.5, 14.134725141734693790});
    CHECK(static_cast<double>(abs(near_zero)) < 1e-8);
}

TEST_CASE("zeta reflection symmetry") {
    cplx_mp a = zeta_reference({0.75, 50.0});
    cplx_mp b = zeta_reference({0.75, -50.0});
    CHECK(static_cast<double>(abs(a - conj(b))) < 1e-25);
}

TEST_CASE("pole and height guards") {
    CHECK_THROWS_AS(zeta_reference({1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(zeta_reference({0.5, 2e6}), std::domain_error);
}

TEST_CASE("fast path agrees with reference") {
    for (double sigma : {0.3, 0.5, 0.75, 1.2}) {
        for (double t : {1.0, 14.0, 137.2, 1043.7, 9871.3}) {
            CAPTURE(sigma, t);
            auto f = zeta_fast({sigma, t}, 1e-11);
            auto r = to_std(zeta_reference({sigma, t}));
            CHECK(std::abs(f - r) < 5e-10);
        }
    }
}

TEST_CASE("zeta_plan matches zeta_fast") {
    zeta_plan plan(0.6, 4000.0, 1e-10);
    for (double t : {33.0, 700.5, 1999.9, 3777.0}) {
        auto a = plan(t);
        auto b = zeta_fast({0.6, t}, 1e-11);
        CHECK(std::abs(a - b) < 2e-9);
    }
}

TEST_CASE("dirichlet partial sums") {
    // s=(2,0), x=3: 1 + 1/4 + 1/9 = 49/36
    auto v = dirichlet_sum({2.0, 0.0}, 3.0, dirichlet_exponent::minus_s);
    CHECK(v.real() == Catch::Approx(49.0 / 36.0).epsilon(1e-15));
    CHECK(v.imag() == 0.0);

    // empty sum
    auto e = dirichlet_sum({2.0, 0.0}, 0.5, dirichlet_exponent::minus_s);
    CHECK(e.real() == 0.0);
    CHECK(e.imag() == 0.0);

    CHECK_THROWS_AS(dirichlet_sum({2.0, 0.0}, -1.0, dirichlet_exponent::minus_s),
                    std::domain_error);

    // double vs 40-digit reference at s = 1/2 + 100i, x = 10
    auto d = dirichlet_sum({0.5, 100.0}, 10.0, dirichlet_exponent::minus_s);
    auto m = dirichlet_sum_mp({0.5, 100.0}, 10.0, dirichlet_exponent::minus_s);
    CHECK(std::abs(d - to_std(m)) < 1e-13);

    // s-1 exponent variant
    auto u = dirichlet_sum({0.5, 3.0}, 2.0, dirichlet_exponent::s_minus_1);
    // 1 + 2^{-1/2+3i}
    std::complex<double> expect =
        1.0 + std::pow(2.0, std::complex<double>(-0.5, 3.0));
    CHECK(std::abs(u - expect) < 1e-14);
}
