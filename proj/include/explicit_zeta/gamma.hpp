#ifndef EZETA_GAMMA_HPP
#define EZETA_GAMMA_HPP

#include <array>
#include <cmath>
#include <complex>

#include "explicit_zeta/numutil.hpp"

namespace ezeta {

// B_2, B_4, ..., B_26 as exact rationals.
struct bernoulli_pair {
    long long num;
    long long den;
};
inline constexpr std::array<bernoulli_pair, 13> BERNOULLI_EVEN = {{
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
    {8553103, 6},
}};

// Principal-branch log Gamma. Stirling series with 10 terms after shifting the
// argument until it is large enough; valid for Re z > 0 (and for any z with
// large |Im z|), which covers every use here.
inline std::complex<double> log_gamma(std::complex<double> z) {
    std::complex<double> shift = 0.0;
    while (z.real() < 12.0 && std::fabs(z.imag()) < 14.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    std::complex<double> lg =
        (z - 0.5) * std::log(z) - z + 0.5 * std::log(TWO_PI);
    std::complex<double> zpow = z;
    std::complex<double> z2 = z * z;
    for (int k = 1; k <= 10; ++k) {
        double b = static_cast<double>(BERNOULLI_EVEN[k - 1].num) /
                   static_cast<double>(BERNOULLI_EVEN[k - 1].den);
        lg += b / (2.0 * k * (2.0 * k - 1.0)) / zpow;
        zpow *= z2;
    }
    return lg + shift;
}

// Riemann–Siegel theta: arg Gamma(1/4 + it/2) - (t/2) log pi, continuous in t.
inline double rs_theta(double t) {
    std::complex<double> lg = log_gamma({0.25, 0.5 * t});
    return lg.imag() - 0.5 * t * std::log(PI);
}

// C2(t) = exp(1/(12|t|) + 1/(90|t|^3)), the Stirling remainder factor.
inline double stirling_c2(double t) {
    double a = std::fabs(t);
    return std::exp(1.0 / (12.0 * a) + 1.0 / (90.0 * a * a * a));
}

}  // namespace ezeta

#endif
