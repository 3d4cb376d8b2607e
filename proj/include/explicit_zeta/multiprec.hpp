#ifndef EZETA_MULTIPREC_HPP
#define EZETA_MULTIPREC_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ezeta {

// Working type for reference (oracle) evaluations.  Dynamic MPFR precision,
// default 40 decimal digits; never allowed below 30.
using mpreal = boost::multiprecision::mpfr_float;

inline unsigned oracle_digits() {
    return static_cast<unsigned>(mpreal::default_precision());
}

inline void set_oracle_digits(unsigned digits) {
    mpreal::default_precision(std::max(30u, digits));
}

struct oracle_precision_init {
    oracle_precision_init() {
        unsigned digits = 40;
        if (const char* env = std::getenv("EXPLICIT_ZETA_PRECISION")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) digits = static_cast<unsigned>(v);
        }
        set_oracle_digits(digits);
    }
};
inline const oracle_precision_init oracle_precision_init_once{};

// Minimal complex-over-anything.  std::complex is only specified for the
// builtin floating types, so the MPFR code paths use this instead.
template <class T>
struct cplx {
    T re{};
    T im{};

    cplx() = default;
    cplx(T r) : re(std::move(r)) {}
    cplx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    cplx& operator+=(const cplx& o) { re += o.re; im += o.im; return *this; }
    cplx& operator-=(const cplx& o) { re -= o.re; im -= o.im; return *this; }

    friend cplx operator+(const cplx& a, const cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend cplx operator-(const cplx& a, const cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend cplx operator-(const cplx& a) { return {-a.re, -a.im}; }
    friend cplx operator*(const cplx& a, const cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend cplx operator*(const T& a, const cplx& b) { return {a * b.re, a * b.im}; }
    friend cplx operator*(const cplx& a, const T& b) { return {a.re * b, a.im * b}; }
    friend cplx operator/(const cplx& a, const T& b) { return {a.re / b, a.im / b}; }
    friend cplx operator/(const cplx& a, const cplx& b) {
        T d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

template <class T>
cplx<T> conj(const cplx<T>& z) { return {z.re, -z.im}; }

template <class T>
T abs(const cplx<T>& z) {
    using std::hypot;
    if constexpr (std::is_same_v<T, double>) {
        return hypot(z.re, z.im);
    } else {
        return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
    }
}

// exp(i*phi)
template <class T>
cplx<T> cis(const T& phi) {
    using std::cos, std::sin;
    if constexpr (std::is_same_v<T, double>) {
        return {cos(phi), sin(phi)};
    } else {
        return {boost::multiprecision::cos(phi), boost::multiprecision::sin(phi)};
    }
}

template <class T>
cplx<T> exp(const cplx<T>& z) {
    using std::exp;
    if constexpr (std::is_same_v<T, double>) {
        return exp(z.re) * cis(z.im);
    } else {
        return boost::multiprecision::exp(z.re) * cis(z.im);
    }
}

// b^w for real b > 0.
template <class T>
cplx<T> pow_real_base(const T& b, const cplx<T>& w) {
    using std::log;
    T lb;
    if constexpr (std::is_same_v<T, double>) lb = log(b);
    else lb = boost::multiprecision::log(b);
    return exp(cplx<T>{w.re * lb, w.im * lb});
}

using cplx_mp = cplx<mpreal>;
using cplx_d = cplx<double>;

// pi at the current working precision
inline mpreal mp_pi() { return 4 * boost::multiprecision::atan(mpreal(1)); }

}  // namespace ezeta

#endif
