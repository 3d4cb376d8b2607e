#ifndef EZETA_ZETA_ORACLE_HPP
#define EZETA_ZETA_ORACLE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "explicit_zeta/gamma.hpp"
#include "explicit_zeta/multiprec.hpp"
#include "explicit_zeta/numutil.hpp"
#include "explicit_zeta/strip_point.hpp"

namespace ezeta {

namespace detail {

template <class Real>
Real real_abs(const Real& x) {
    if constexpr (std::is_same_v<Real, double>) {
        return std::fabs(x);
    } else {
        return boost::multiprecision::abs(x);
    }
}

// Euler–Maclaurin with N initial terms and Bernoulli corrections through
// B_{2K}; writes a rigorous remainder bound.  The classical form
//   zeta(s) = sum_{n<=N} n^{-s} + N^{1-s}/(s-1) - N^{-s}/2
//           + sum_{k=1}^{K} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1} + R
//   |R| <= |B_{2K+2}/(2K+2)! * s(s+1)...(s+2K) * N^{-s-2K-1}|
//          * |s+2K+1| / (sigma+2K+1).
template <class Real>
cplx<Real> zeta_euler_maclaurin(const cplx<Real>& s, std::int64_t N, int K,
                                Real* remainder_bound) {
    using std::log;
    const Real one(1);
    cplx<Real> sum{Real(0), Real(0)};
    if constexpr (std::is_same_v<Real, double>) {
        kahan_sum re, im;
        for (std::int64_t n = 1; n <= N; ++n) {
            double ln = std::log(static_cast<double>(n));
            double mag = std::exp(-s.re * ln);
            re.add(mag * std::cos(s.im * ln));
            im.add(-mag * std::sin(s.im * ln));
        }
        sum = {re.value(), im.value()};
    } else {
        for (std::int64_t n = 1; n <= N; ++n) {
            Real ln = log(Real(n));
            Real mag = boost::multiprecision::exp(-s.re * ln);
            sum.re += mag * boost::multiprecision::cos(s.im * ln);
            sum.im -= mag * boost::multiprecision::sin(s.im * ln);
        }
    }

    Real rN(static_cast<double>(N));
    cplx<Real> Npow_ms = pow_real_base(rN, cplx<Real>{-s.re, -s.im});  // N^{-s}
    cplx<Real> sm1{s.re - one, s.im};
    cplx<Real> tail = (Npow_ms * rN) / sm1;  // N^{1-s}/(s-1)
    tail -= Npow_ms / Real(2);

    // rising product s(s+1)...(s+j) and factorial bookkeeping
    cplx<Real> rising{one, Real(0)};  // empty product
    Real fact(1);                     // (2k)!
    cplx<Real> Nshift = Npow_ms / rN; // N^{-s-1}
    Real N2 = rN * rN;
    int j = 0;  // next factor to absorb is (s + j)
    for (int k = 1; k <= K; ++k) {
        fact *= Real(2 * k - 1) * Real(2 * k);
        while (j < 2 * k - 1) {
            rising = rising * cplx<Real>{s.re + Real(j), s.im};
            ++j;
        }
        Real b = Real(BERNOULLI_EVEN[k - 1].num) / Real(BERNOULLI_EVEN[k - 1].den);
        tail += rising * Nshift * (b / fact);
        Nshift = Nshift / N2;
    }
    // remainder: one more Bernoulli step
    {
        Real fact2 = fact * Real(2 * K + 1) * Real(2 * K + 2);
        cplx<Real> rising2 = rising;
        while (j < 2 * K + 1) {
            rising2 = rising2 * cplx<Real>{s.re + Real(j), s.im};
            ++j;
        }
        Real b = Real(BERNOULLI_EVEN[K].num) / Real(BERNOULLI_EVEN[K].den);
        Real mag = abs(rising2) * abs(Nshift) * (real_abs(b) / fact2);
        Real corr = abs(cplx<Real>{s.re + Real(2 * K + 1), s.im}) / (s.re + Real(2 * K + 1));
        if (remainder_bound) *remainder_bound = mag * corr;
    }
    return sum + tail;
}

}  // namespace detail

// High-precision reference oracle: relative error <= 1e-20 by construction
// (tail bound asserted), |t| <= 1e6, s != 1.
inline cplx_mp zeta_reference(const StripPoint& s) {
    require_oracle_height(s);
    if (s.t == 0.0 && s.sigma == 1.0)
        throw std::domain_error("zeta_reference: pole at s = 1");
    std::int64_t N = static_cast<std::int64_t>(std::ceil(10.0 + 2.0 * std::fabs(s.t)));
    if (N < 24) N = 24;  // keeps the tail bound under 1e-22 for sigma up to ~5
    mpreal bound;
    cplx_mp z = detail::zeta_euler_maclaurin<mpreal>(
        cplx_mp{mpreal(s.sigma), mpreal(s.t)}, N, 12, &bound);
    mpreal scale = abs(z);
    if (scale < 1) scale = 1;
    if (!(bound < mpreal("1e-22") * scale))
        throw integrity_error("zeta_reference: Euler-Maclaurin tail bound exceeded 1e-22");
    return z;
}

inline std::complex<double> to_std(const cplx_mp& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

// Fast double-precision evaluator with a rigorous tail bound target.  Picks
// the smallest N (of the form c*|t|) whose computed Euler–Maclaurin remainder
// is below `abs_tol`.
inline std::complex<double> zeta_fast(const StripPoint& s, double abs_tol = 1e-10) {
    if (s.t == 0.0 && s.sigma == 1.0)
        throw std::domain_error("zeta_fast: pole at s = 1");
    double at = std::fabs(s.t);
    std::int64_t N = static_cast<std::int64_t>(0.40 * at) + 24;
    for (int attempt = 0; attempt < 6; ++attempt) {
        double bound;
        cplx_d z = detail::zeta_euler_maclaurin<double>(cplx_d{s.sigma, s.t}, N, 12, &bound);
        if (bound <= abs_tol) return {z.re, z.im};
        N = N * 2;
    }
    throw tolerance_error("zeta_fast: could not reach requested tolerance");
}

// Reusable evaluation plan for many zeta values at fixed sigma (quadrature,
// zero scans): precomputes log n and n^{-sigma} up to the largest N needed.
class zeta_plan {
  public:
    zeta_plan(double sigma, double t_max, double abs_tol = 1e-9)
        : sigma_(sigma), tol_(abs_tol) {
        n_max_ = 64 + static_cast<std::int64_t>(0.55 * t_max);
        logs_.resize(static_cast<std::size_t>(n_max_) + 1);
        pows_.resize(static_cast<std::size_t>(n_max_) + 1);
        for (std::int64_t n = 1; n <= n_max_; ++n) {
            logs_[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
            pows_[static_cast<std::size_t>(n)] =
                std::exp(-sigma * logs_[static_cast<std::size_t>(n)]);
        }
    }

    std::complex<double> operator()(double t) const {
        std::int64_t N = 32 + static_cast<std::int64_t>(0.40 * std::fabs(t));
        while (true) {
            if (N > n_max_) return fallback(t);
            kahan_sum re, im;
            for (std::int64_t n = 1; n <= N; ++n) {
                auto u = static_cast<std::size_t>(n);
                re.add(pows_[u] * std::cos(t * logs_[u]));
                im.add(-pows_[u] * std::sin(t * logs_[u]));
            }
            double bound;
            cplx_d corr = em_tail(t, N, &bound);
            if (bound > tol_) { N *= 2; continue; }
            return {re.value() + corr.re, im.value() + corr.im};
        }
    }

    double sigma() const { return sigma_; }

  private:
    std::complex<double> fallback(double t) const {
        auto z = zeta_fast({sigma_, t}, tol_);
        return z;
    }

    cplx_d em_tail(double t, std::int64_t N, double* bound) const {
        // same correction terms as zeta_euler_maclaurin, main sum excluded
        cplx_d s{sigma_, t};
        double rN = static_cast<double>(N);
        cplx_d Npow_ms = pow_real_base(rN, cplx_d{-s.re, -s.im});
        cplx_d tail = (Npow_ms * rN) / cplx_d{s.re - 1.0, s.im};
        tail -= Npow_ms / 2.0;
        cplx_d rising{1.0, 0.0};
        double fact = 1.0;
        cplx_d Nshift = Npow_ms / rN;
        double N2 = rN * rN;
        int j = 0;
        const int K = 12;
        for (int k = 1; k <= K; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            while (j < 2 * k - 1) {
                rising = rising * cplx_d{s.re + j, s.im};
                ++j;
            }
            double b = static_cast<double>(BERNOULLI_EVEN[k - 1].num) /
                       static_cast<double>(BERNOULLI_EVEN[k - 1].den);
            tail += rising * Nshift * (b / fact);
            Nshift = Nshift / N2;
        }
        double fact2 = fact * (2.0 * K + 1.0) * (2.0 * K + 2.0);
        cplx_d rising2 = rising;
        while (j < 2 * K + 1) {
            rising2 = rising2 * cplx_d{s.re + j, s.im};
            ++j;
        }
        double b = std::fabs(static_cast<double>(BERNOULLI_EVEN[K].num) /
                             static_cast<double>(BERNOULLI_EVEN[K].den));
        double mag = abs(rising2) * abs(Nshift) * (b / fact2);
        *bound = mag * (abs(cplx_d{s.re + 2.0 * K + 1.0, s.im}) / (s.re + 2.0 * K + 1.0));
        return tail;
    }

    double sigma_;
    double tol_;
    std::int64_t n_max_;
    std::vector<double> logs_;
    std::vector<double> pows_;
};

// Real zeta for arguments away from 1 (used by bound formulas).
inline double zeta_real(double x) {
    if (x == 1.0) throw std::domain_error("zeta_real: pole at 1");
    auto z = zeta_fast({x, 0.0}, 1e-14);
    return z.real();
}

// Dirichlet partial sum sum_{n<=x} n^{e} with e = -s or s-1; empty sum is 0.
enum class dirichlet_exponent { minus_s, s_minus_1 };

template <class Real>
cplx<Real> dirichlet_sum_impl(const cplx<Real>& s, double x, dirichlet_exponent which) {
    cplx<Real> e = (which == dirichlet_exponent::minus_s)
                       ? cplx<Real>{-s.re, -s.im}
                       : cplx<Real>{s.re - Real(1), s.im};
    auto limit = static_cast<std::int64_t>(std::floor(x + 1e-12));
    cplx<Real> sum{Real(0), Real(0)};
    if constexpr (std::is_same_v<Real, double>) {
        kahan_sum re, im;
        for (std::int64_t n = 1; n <= limit; ++n) {
            double ln = std::log(static_cast<double>(n));
            double mag = std::exp(e.re * ln);
            re.add(mag * std::cos(e.im * ln));
            im.add(mag * std::sin(e.im * ln));
        }
        sum = {re.value(), im.value()};
    } else {
        for (std::int64_t n = 1; n <= limit; ++n) {
            Real ln = boost::multiprecision::log(Real(n));
            Real mag = boost::multiprecision::exp(e.re * ln);
            sum.re += mag * boost::multiprecision::cos(e.im * ln);
            sum.im += mag * boost::multiprecision::sin(e.im * ln);
        }
    }
    return sum;
}

inline std::complex<double> dirichlet_sum(const StripPoint& s, double x,
                                          dirichlet_exponent which) {
    if (x < 0) throw std::domain_error("dirichlet_sum: x must be >= 0");
    cplx_d z = dirichlet_sum_impl<double>(cplx_d{s.sigma, s.t}, x, which);
    return {z.re, z.im};
}

inline cplx_mp dirichlet_sum_mp(const StripPoint& s, double x, dirichlet_exponent which) {
    if (x < 0) throw std::domain_error("dirichlet_sum: x must be >= 0");
    return dirichlet_sum_impl<mpreal>(cplx_mp{mpreal(s.sigma), mpreal(s.t)}, x, which);
}

}  // namespace ezeta

#endif
