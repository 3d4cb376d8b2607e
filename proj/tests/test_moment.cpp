#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "explicit_zeta/moment.hpp"

using namespace ezeta;

TEST_CASE("preissmann constant") {
    CHECK(preissmann_m0() == Catch::Approx(1.3154074).margin(2e-7));
    CHECK(PI * preissmann_m0() / 2.0 - 1.0 > 0.0);
}

TEST_CASE("sum bounds dominate exact sums") {
    for (double X : {2.0, 10.0, 100.0, 1e4}) {
        for (double sigma : {0.5, 0.55, 0.75, 0.9}) {
            CAPTURE(X, sigma);
            double s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0, h = 0;
            for (double n = 1; n <= X; ++n) {
                s1 += std::pow(n, -2.0 * sigma);
                s2 += std::pow(n, 2.0 * (sigma - 1.0));
                s3 += std::pow(n, 1.0 - 2.0 * sigma);
                s4 += std::pow(n, -sigma);
                s5 += std::pow(n, 2.0 * sigma - 1.0);
                h += 1.0 / n;
            }
            CHECK(s1 <= em_sum1(X));
            CHECK(s2 <= em_sum2(X, sigma));
            CHECK(s3 <= i_sum1(X, sigma));
            CHECK(s4 <= i_sum2(X, sigma));
            CHECK(s5 <= i_sum3(X, sigma));
            CHECK(h <= em_sum1(X));  // harmonic-sum bound
        }
    }
}

TEST_CASE("double sum bound dominates brute force") {
    // |D(a, 0, Y; X)| for random phases Y
    sampler rng(4242);
    double X = 50.0;
    for (double a : {-0.6, -0.5, -0.4, -0.25}) {
        double bound = double_sum_bound(a, X);
        for (int rep = 0; rep < 10; ++rep) {
            double Y = rng.uniform(0.0, 1e3);
            std::complex<double> acc = 0.0;
            for (int n = 1; n <= 50; ++n)
                for (int m = 1; m <= 50; ++m) {
                    if (n == m) continue;
                    double lg = std::log(static_cast<double>(n) / m);
                    std::complex<double> ph =
                        std::polar(1.0, Y * lg) - 1.0;
                    acc += std::pow(static_cast<double>(n) * m, a) / lg * ph;
                }
            CAPTURE(a, Y);
            REQUIRE(std::abs(acc) <= bound);
        }
    }
    CHECK_THROWS_AS(double_sum_bound(-0.5, 1.5), std::domain_error);
}

TEST_CASE("interchange identity for sum-under-integral") {
    // int_{T1}^{T2} sum_{n<=g(t)} f(n,t) dt = sum_n int_{max(T1,g^{-1}(n))}^{T2}
    // for f(n,t) = n^{-0.6} cos(t log n), g(t) = sqrt(t/2pi)
    double T1 = 20.0, T2 = 200.0;
    auto f = [](int n, double t) {
        return std::pow(n, -0.6) * std::cos(t * std::log(static_cast<double>(n)));
    };
    quadrature_options opt;
    opt.abs_tol = 1e-10;
    opt.max_width = [](double) { return 0.25; };
    // left side: integrand has jumps at t = 2 pi n^2; integrate between them
    std::vector<double> cuts{T1};
    for (int n = 2;; ++n) {
        double c = TWO_PI * n * n;
        if (c >= T2) break;
        if (c > T1) cuts.push_back(c);
    }
    cuts.push_back(T2);
    double lhs = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        lhs += integrate_adaptive(
            [&](double t) {
                int g = static_cast<int>(std::sqrt(t / TWO_PI));
                double acc = 0.0;
                for (int n = 1; n <= g; ++n) acc += f(n, t);
                return acc;
            },
            cuts[i], cuts[i + 1], opt);
    }
    double rhs = 0.0;
    int gmax = static_cast<int>(std::sqrt(T2 / TWO_PI));
    for (int n = 1; n <= gmax; ++n) {
        double lo = std::max(T1, TWO_PI * n * n);
        rhs += integrate_adaptive([&](double t) { return f(n, t); }, lo, T2, opt);
    }
    CHECK(lhs == Catch::Approx(rhs).margin(1e-8));
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS((MomentContext{0.6, 100.0, 2, 4, 0.6, TWO_PI}.validate()),
                    std::invalid_argument);  // not coprime
    CHECK_THROWS_AS((MomentContext{0.6, 100.0, 3, 2, 0.6, TWO_PI}.validate()),
                    std::invalid_argument);  // mu1 > mu2
    CHECK_THROWS_AS((MomentContext{0.7, 100.0, 1, 1, 0.6, TWO_PI}.validate()),
                    std::invalid_argument);  // sigma > sigma0
    CHECK_NOTHROW((MomentContext{0.55, 500.0, 2, 3, 0.55, TWO_PI}.validate()));
}

TEST_CASE("selberg main term") {
    MomentContext c{0.75, 1e4, 1, 1, 0.75, TWO_PI};
    double v = selberg_main_term(c);
    // independent recomputation at 40 digits
    mpreal T(10000), mu(1);
    mpreal z32 = zeta_reference({1.5, 0.0}).re;
    mpreal z12 = zeta_reference({0.5, 0.0}).re;
    mpreal pi = mp_pi();
    mpreal expect = z32 * T +
                    boost::multiprecision::pow(2 * pi, mpreal(0.5)) *
                        (boost::multiprecision::pow(mpreal(4), mpreal(0.25)) - 1) *
                        z12 / (2 * mpreal(0.25)) *
                        boost::multiprecision::pow(T, mpreal(0.5));
    CHECK(v == Catch::Approx(static_cast<double>(expect)).epsilon(1e-12));
    // second term is negative: zeta(2-2 sigma) < 0 for sigma in (1/2,1)
    double first = zeta_real(1.5) * 1e4;
    CHECK(v < first);
    // structure: first term scales as zeta(2s) T/(mu1 mu2)^s
    MomentContext c23{0.75, 1e4, 2, 3, 0.75, TWO_PI};
    double v23 = selberg_main_term(c23);
    CHECK(v23 < v);
    CHECK_THROWS_AS(selberg_main_term(MomentContext{0.5, 1e4, 1, 1, 0.5, TWO_PI}),
                    std::domain_error);
}

TEST_CASE("critical line main limit") {
    // n0 = 1: direct arithmetic
    double T = 2e3;
    double direct = 0.5 * (std::log(T) + 2 * EULER_GAMMA) * T -
                    (1.0 + std::log(TWO_PI)) * T +
                    0.5 * (1.0 + LOG2 + std::log(TWO_PI)) * T;
    CHECK(critical_line_main_limit(T, 1) == Catch::Approx(direct).epsilon(1e-14));
    // dominance: <= T log T - (1+log 2pi - 2 gamma) T + 2 T0 log(2 pi e T/T0)
    double T2 = 1e4, T0 = 1e3;
    int n0 = static_cast<int>(std::floor(std::log2(T2 / T0)));
    double lhs = critical_line_main_limit(T2, n0);
    double rhs = T2 * std::log(T2) - (1.0 + std::log(TWO_PI) - 2 * EULER_GAMMA) * T2 +
                 2.0 * T0 * std::log(TWO_PI * std::numbers::e * T2 / T0);
    CHECK(lhs <= rhs);
    // after restoring the linear term, the T log T coefficient tends to 1
    double big = (critical_line_main_limit(1e6, 40) +
                  (1.0 + std::log(TWO_PI) - 2 * EULER_GAMMA) * 1e6) /
                 (1e6 * std::log(1e6));
    CHECK(big == Catch::Approx(1.0).margin(1e-3));
}

TEST_CASE("dyadic telescoping of main terms") {
    // sum_n script-S(sigma, T/2^n) equals the closed form
    double sigma = 0.7, T = 1e4, T0 = 1e3;
    int n0 = static_cast<int>(std::floor(std::log2(T / T0)));
    double acc = 0.0;
    for (int n = 1; n <= n0; ++n)
        acc += selberg_main_term(MomentContext{sigma, T / std::pow(2.0, n), 1, 1,
                                               sigma, TWO_PI});
    double f = std::pow(TWO_PI, 2 * sigma - 1) *
               (1.0 - std::pow(4.0, -(1.0 - sigma) * n0)) / (2 * (1.0 - sigma)) *
               std::pow(T, 2 * (1.0 - sigma));
    double closed = zeta_real(2 * sigma) * (1.0 - std::pow(2.0, -n0)) * T +
                    f * zeta_real(2.0 - 2 * sigma);
    CHECK(acc == Catch::Approx(closed).epsilon(1e-10));
}

TEST_CASE("envelope reproduces the published critical-line constants") {
    MomentContext c{0.5, 1e3, 1, 1, 0.5, 1e3};
    auto env = moment_envelope(c);
    CHECK(env.S1 <= 9.4104);
    CHECK(env.S2 <= 34.779);
    CHECK(env.S1 > 9.0);
    CHECK(env.S2 > 34.0);
    CHECK(round_up_decimal(env.S2, 3) == Catch::Approx(34.779));

    // all components positive
    for (const auto& [name, value] : env.components) {
        CAPTURE(name);
        CHECK(value >= 0.0);
    }
}

TEST_CASE("envelope at the Theorem 1.1 anchor") {
    // the published 219.618 / 611.578 anchor sits at the printed sigma cap
    double T0 = H0_RH_HEIGHT;
    double cap = round_down_decimal(0.5 + 8.0 / std::log(T0), 3);
    CHECK(cap == Catch::Approx(0.831));
    MomentContext c{cap, T0, 1, 2, cap, T0};
    auto env = moment_envelope(c);
    CHECK(env.S1 <= 219.618);
    CHECK(env.S2 <= 611.578);
    CHECK(round_up_decimal(env.S1, 3) == Catch::Approx(219.618));
    CHECK(round_up_decimal(env.S2, 3) == Catch::Approx(611.578));
}

TEST_CASE("asymptotic envelope limits") {
    auto row = error_table_row(1e3);
    auto a = moment_envelope_asymptotic(1e12, row.Et_sym, row.Et_sym);
    CHECK(std::fabs(a.S1 - 8.953) / 8.953 < 0.05);
    CHECK(std::fabs(a.S2 - 22.6) / 22.6 < 0.05);
    // the true T0 -> infinity limits with the same AFE constants
    auto b = moment_envelope_asymptotic(1e306, 1.205, 1.205);
    CHECK(b.S1 == Catch::Approx(8.953).margin(5e-3));
    CHECK(b.S2 == Catch::Approx(22.6).margin(5e-2));
}

TEST_CASE("envelope continuity in sigma near 1/2") {
    MomentContext a{0.5, 1e3, 1, 2, 0.6, 1e3};
    MomentContext b{0.5 + 1e-8, 1e3, 1, 2, 0.6, 1e3};
    auto ea = moment_envelope(a);
    auto eb = moment_envelope(b);
    CHECK(std::fabs(ea.S1 - eb.S1) < 1e-6);
    CHECK(std::fabs(ea.S2 - eb.S2) < 1e-6);
    // exact z components move continuously too
    CHECK(std::fabs(ea.component("B5_2") - eb.component("B5_2")) < 1e-6);
    CHECK(std::fabs(ea.component("B7_1") - eb.component("B7_1")) < 1e-6);
}

TEST_CASE("component positivity across the grid") {
    for (double sigma : {0.5, 0.55, 0.6, 0.75}) {
        for (double T : {1e3, 1e4, 1e6}) {
            for (auto [m1, m2] : {std::pair<long long, long long>{1, 1}, {1, 2}, {3, 5}}) {
                MomentContext c{sigma, T, m1, m2, std::max(sigma, 0.75), 1e3};
                auto env = moment_envelope(c);
                for (const auto& [name, value] : env.components) {
                    CAPTURE(sigma, T, m1, m2, name);
                    REQUIRE(value > 0.0);
                }
            }
        }
    }
}

TEST_CASE("second moment coefficients and bound") {
    auto co = second_moment_coefficients(9.4104, 34.779);
    CHECK(round_up_decimal(co.c34, 3) == Catch::Approx(13.803));
    CHECK(round_up_decimal(co.c12, 3) == Catch::Approx(83.964));

    CHECK_THROWS_AS(second_moment_bound(1.0), std::domain_error);
    // headline form dominates at T >= 2000
    for (double T : {2000.0, 5000.0, 1e5, 1e8}) {
        CAPTURE(T);
        CHECK(second_moment_error_bound(T) <= second_moment_headline(T));
    }
    // empirical: int_0^500 |zeta|^2 <= bound(500)
    double emp = integrate_abs_zeta_sq(0.0, 500.0, 1e-4);
    CHECK(emp <= second_moment_bound(500.0));
}

TEST_CASE("weighted moment dominance on sample contexts") {
    for (auto [sigma, T, m1, m2] :
         {std::tuple{0.6, 200.0, 1LL, 2LL}, {0.75, 1e3, 1LL, 1LL},
          {0.55, 500.0, 2LL, 3LL}}) {
        MomentContext c{sigma, T, m1, m2, sigma, TWO_PI};
        auto r = weighted_moment_empirical(c, 1e-4);
        CAPTURE(sigma, T, m1, m2, std::abs(r.S_num - r.S_main), r.envelope_rhs);
        CHECK(r.holds);
    }
    MomentContext bad{0.6, 200.0, 2, 4, 0.6, TWO_PI};
    CHECK_THROWS_AS(weighted_moment_empirical(bad, 1e-4), std::invalid_argument);
    MomentContext too_big{0.6, 2e4, 1, 2, 0.6, TWO_PI};
    CHECK_THROWS_AS(weighted_moment_empirical(too_big, 1e-4), budget_error);
}
