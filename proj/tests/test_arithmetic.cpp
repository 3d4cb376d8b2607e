#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "explicit_zeta/arithmetic.hpp"

using namespace ezeta;

TEST_CASE("sieve small values by hand") {
    auto t = sieve_tables(60);
    int mu_expected[] = {1, -1, -1, 0, -1, 1};
    for (int n = 1; n <= 6; ++n) CHECK(t.mu(n) == mu_expected[n - 1]);
    CHECK(t.divisor_count(1) == 1);
    CHECK(t.divisor_count(6) == 4);
    CHECK(t.divisor_count(12) == 6);
    CHECK(t.divisor_count(36) == 9);
    CHECK(t.divisor_count(48) == 10);
    CHECK(t.mu(30) == -1);
    CHECK(t.mu(49) == 0);
}

TEST_CASE("phi_1 is the Euler totient") {
    auto t = sieve_tables(100);
    CHECK(t.phi_x(12, 1.0) == Catch::Approx(4.0).epsilon(1e-13));
    CHECK(t.phi_x(1, 1.0) == Catch::Approx(1.0));
    CHECK(t.phi_x(97, 1.0) == Catch::Approx(96.0).epsilon(1e-13));
    CHECK(t.phi_x(100, 1.0) == Catch::Approx(40.0).epsilon(1e-13));
}

TEST_CASE("phi_x product form equals divisor-sum form") {
    auto t = sieve_tables(10000);
    CHECK(t.phi_x(10, 1.2) ==
          Catch::Approx(t.phi_x_divisor_sum(10, 1.2)).epsilon(1e-12));
    for (double x : {1.0, 1.2, 2 * 0.5, 2 * 0.6, 2 * 0.75}) {
        for (std::int64_t n : {2, 7, 12, 36, 210, 1024, 5040, 9973, 9996}) {
            CAPTURE(x, n);
            CHECK(t.phi_x(n, x) ==
                  Catch::Approx(t.phi_x_divisor_sum(n, x)).epsilon(1e-12));
        }
    }
}

namespace {
int mu_brute(std::int64_t n) {
    int k = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++k;
    }
    if (n > 1) ++k;
    return (k % 2 == 0) ? 1 : -1;
}
}  // namespace

TEST_CASE("mu and d agree with brute force on a range") {
    auto t = sieve_tables(2000);
    for (std::int64_t n = 1; n <= 2000; ++n) {
        std::int64_t d = 0;
        for (std::int64_t e = 1; e <= n; ++e)
            if (n % e == 0) ++d;
        REQUIRE(t.divisor_count(n) == d);
        REQUIRE(t.mu(n) == mu_brute(n));
    }
}

TEST_CASE("coprime helper matches gcd") {
    auto t = sieve_tables(500);
    for (std::int64_t a = 1; a <= 60; ++a)
        for (std::int64_t b = 1; b <= 60; ++b)
            REQUIRE(t.coprime(a, b) == (std::gcd(a, b) == 1));
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(sieve_tables(0), budget_error);
    CHECK_THROWS_AS(sieve_tables(200000001), budget_error);
}
