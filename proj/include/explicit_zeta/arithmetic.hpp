#ifndef EZETA_ARITHMETIC_HPP
#define EZETA_ARITHMETIC_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "explicit_zeta/numutil.hpp"

namespace ezeta {

// Sieved multiplicative-function tables: mu(n), d(n), smallest prime factor.
// phi_x(n) = n^x * prod_{p|n} (1 - p^{-x}) is evaluated on demand from the
// spf factorization.
class ArithmeticTables {
  public:
    explicit ArithmeticTables(std::int64_t limit) : limit_(limit) {
        if (limit < 1 || limit > 100000000)
            throw budget_error("sieve limit out of range [1, 1e8]");
        build();
    }

    std::int64_t limit() const { return limit_; }

    int mu(std::int64_t n) const { return mu_[static_cast<std::size_t>(n)]; }
    std::int64_t divisor_count(std::int64_t n) const { return d_[static_cast<std::size_t>(n)]; }
    std::int32_t smallest_prime_factor(std::int64_t n) const {
        return spf_[static_cast<std::size_t>(n)];
    }

    bool squarefree(std::int64_t n) const { return mu_[static_cast<std::size_t>(n)] != 0; }

    // phi_x(n) = n^x prod_{p|n}(1 - p^{-x})
    double phi_x(std::int64_t n, double x) const {
        double v = std::pow(static_cast<double>(n), x);
        std::int64_t m = n;
        while (m > 1) {
            std::int64_t p = spf_[static_cast<std::size_t>(m)];
            v *= 1.0 - std::pow(static_cast<double>(p), -x);
            while (m % p == 0) m /= p;
        }
        return v;
    }

    // Divisor-sum form sum_{e|n} mu(e) (n/e)^x; brute force, used as the
    // independent check of phi_x.
    double phi_x_divisor_sum(std::int64_t n, double x) const {
        double v = 0.0;
        for (std::int64_t e = 1; e * e <= n; ++e) {
            if (n % e != 0) continue;
            std::int64_t f = n / e;
            v += mu(e) * std::pow(static_cast<double>(f), x);
            if (f != e) v += mu(f) * std::pow(static_cast<double>(e), x);
        }
        return v;
    }

    bool coprime(std::int64_t a, std::int64_t b) const {
        // walk prime factors of the smaller argument
        std::int64_t m = a;
        while (m > 1) {
            std::int64_t p = spf_[static_cast<std::size_t>(m)];
            if (b % p == 0) return false;
            while (m % p == 0) m /= p;
        }
        return true;
    }

  private:
    void build() {
        auto n = static_cast<std::size_t>(limit_);
        mu_.assign(n + 1, 0);
        d_.assign(n + 1, 0);
        spf_.assign(n + 1, 0);
        cnt_.assign(n + 1, 0);
        std::vector<std::int32_t> primes;
        mu_[1] = 1;
        d_[1] = 1;
        for (std::size_t i = 2; i <= n; ++i) {
            if (spf_[i] == 0) {
                spf_[i] = static_cast<std::int32_t>(i);
                primes.push_back(static_cast<std::int32_t>(i));
                mu_[i] = -1;
                d_[i] = 2;
                cnt_[i] = 1;
            }
            for (std::int32_t p : primes) {
                std::size_t ip = i * static_cast<std::size_t>(p);
                if (p > spf_[i] || ip > n) break;
                spf_[ip] = p;
                if (i % static_cast<std::size_t>(p) == 0) {
                    mu_[ip] = 0;
                    cnt_[ip] = cnt_[i] + 1;
                    d_[ip] = d_[i] / (cnt_[i] + 1) * (cnt_[i] + 2);
                } else {
                    mu_[ip] = -mu_[i];
                    cnt_[ip] = 1;
                    d_[ip] = d_[i] * 2;
                }
            }
        }
    }

    std::int64_t limit_;
    std::vector<std::int8_t> mu_;
    std::vector<std::int64_t> d_;
    std::vector<std::int32_t> spf_;
    std::vector<std::int32_t> cnt_;  // exponent of spf in n
};

inline ArithmeticTables sieve_tables(std::int64_t limit) { return ArithmeticTables(limit); }

}  // namespace ezeta

#endif
