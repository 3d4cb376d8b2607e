#ifndef EZETA_CHI_STIRLING_HPP
#define EZETA_CHI_STIRLING_HPP

#include <cmath>
#include <complex>

#include "explicit_zeta/gamma.hpp"
#include "explicit_zeta/numutil.hpp"
#include "explicit_zeta/strip_point.hpp"

namespace ezeta {

// chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s), evaluated through logs so the
// e^{pi|t|/2} factors cancel instead of overflowing.
inline std::complex<double> chi(const StripPoint& sp) {
    std::complex<double> s{sp.sigma, sp.t};
    if (sp.t == 0.0 && sp.sigma >= 1.0 &&
        std::fabs(sp.sigma - std::round(sp.sigma)) < 1e-12)
        throw std::domain_error("chi: pole of Gamma(1-s) at positive integer s");
    // log sin(pi s / 2), branch-stable for either sign of t
    std::complex<double> w = 0.5 * PI * s;
    std::complex<double> log_sin;
    if (sp.t > 1.0) {
        // sin w = e^{-iw}(e^{2iw} - 1)/(2i) with |e^{2iw}| = e^{-pi t} small
        std::complex<double> iw{-w.imag(), w.real()};
        log_sin = -iw + std::log((std::exp(2.0 * iw) - 1.0) / std::complex<double>(0.0, 2.0));
    } else if (sp.t < -1.0) {
        std::complex<double> iw{-w.imag(), w.real()};
        log_sin = iw + std::log((1.0 - std::exp(-2.0 * iw)) / std::complex<double>(0.0, 2.0));
    } else {
        log_sin = std::log(std::sin(w));
    }
    std::complex<double> lg = log_gamma(1.0 - s);
    std::complex<double> log_chi =
        s * std::log(2.0) + (s - 1.0) * std::log(PI) + log_sin + lg;
    return std::exp(log_chi);
}

// The elementary Stirling approximation
//   chi~(sigma+it) = (2pi/|t|)^{sigma-1/2} (|t|/2pi e)^{-it} e^{sgn(t) pi i/4}.
inline std::complex<double> chi_tilde(const StripPoint& sp) {
    if (sp.t == 0.0) throw std::domain_error("chi_tilde: t must be nonzero");
    double at = std::fabs(sp.t);
    double mag = std::pow(TWO_PI / at, sp.sigma - 0.5);
    double phase = -sp.t * std::log(at / (TWO_PI * std::numbers::e)) +
                   (sp.t > 0 ? 0.25 * PI : -0.25 * PI);
    return std::polar(mag, phase);
}

// Explicit bound |C(sigma,t,t0)| <= C1 (1 + t0 e^{-pi t0}/|t|) C2 + C3 for the
// relation chi = chi~ (1 + C/|t|).
struct StirlingBounds {
    double C1;
    double C2;
    double C3;
    double C_total;
    double t0;
    bool sigma_half_extension;  // sigma = 1/2 accepted by continuity
};

inline double stirling_c1(double sigma, double t) {
    double at = std::fabs(t);
    double om = 1.0 - sigma;
    return om * om * (0.5 + 2.0 / PI) +
           om * (sigma - 0.5) * (0.25 * PI * PI + om / (2.0 * at));
}

inline double stirling_c3(double t, double t0) {
    double at = std::fabs(t);
    double c2t0 = stirling_c2(t0);
    return (c2t0 - 1.0) / std::log(c2t0) * (1.0 / 12.0 + 1.0 / (90.0 * at * at)) +
           t0 * std::exp(-PI * t0) * stirling_c2(t);
}

inline StirlingBounds stirling_error_bound(double sigma, double t, double t0) {
    if (!(sigma >= 0.5 && sigma <= 1.0))
        throw std::invalid_argument("stirling_error_bound: sigma must be in [1/2, 1]");
    if (!(t0 >= 1.0 / PI) || !(std::fabs(t) >= t0))
        throw std::invalid_argument("stirling_error_bound: need |t| >= t0 >= 1/pi");
    StirlingBounds b;
    b.t0 = t0;
    b.sigma_half_extension = (sigma == 0.5);
    b.C1 = stirling_c1(sigma, t);
    b.C2 = stirling_c2(t);
    b.C3 = stirling_c3(t, t0);
    double at = std::fabs(t);
    b.C_total = b.C1 * (1.0 + t0 * std::exp(-PI * t0) / at) * b.C2 + b.C3;
    return b;
}

// sup over sigma in (1/2, 1] of C_total(sigma, t0, t0); the published case is
// t0 = 2 pi where the sup stays below 0.3746 with maximizer near 0.54162.
struct stirling_sup {
    double sigma_star;
    double value;
};

inline stirling_sup stirling_c_sup(double t0 = TWO_PI) {
    auto f = [&](double sigma) { return stirling_error_bound(sigma, t0, t0).C_total; };
    auto [x, v] = golden_section_max(f, 0.5, 1.0, 1e-10);
    return {x, v};
}

inline constexpr double STIRLING_C_PUBLISHED = 0.3746;

// Upper bound for |chi(sigma+it)|; exactly 1 on the critical line.
inline double chi_modulus_bound(double sigma, double t, double t0) {
    if (!(sigma >= 0.0 && sigma <= 1.0))
        throw std::invalid_argument("chi_modulus_bound: sigma must be in [0, 1]");
    if (!(t0 >= TWO_PI) || !(std::fabs(t) >= t0))
        throw std::invalid_argument("chi_modulus_bound: need |t| >= t0 >= 2pi");
    if (sigma == 0.5) return 1.0;
    double at = std::fabs(t);
    double lead = std::pow(at / TWO_PI, 0.5 - sigma);
    if (sigma > 0.5) {
        double c = stirling_error_bound(sigma, t, t0).C_total;
        return lead * (1.0 + c / at);
    }
    double c = stirling_error_bound(1.0 - sigma, t, t0).C_total;
    return lead * at / (at - c);
}

// (pi/2) x / (2/pi + x) >= arctan x >= (pi/2) x / (2/pi + sqrt(x^2 + (pi/2-2/pi)^2))
inline std::pair<double, double> arctan_bounds(double x) {
    if (x < 0) throw std::domain_error("arctan_bounds: x must be >= 0");
    double halfpi = 0.5 * PI;
    double upper = halfpi * x / (2.0 / PI + x);
    double q = halfpi - 2.0 / PI;
    double lower = halfpi * x / (2.0 / PI + std::sqrt(x * x + q * q));
    return {lower, upper};
}

// (1/2pi)|e^{-i pi s} Gamma(1-s)| <= (C2(t)/(2^min(sigma,1/2) sqrt(pi)))
//                                    * t^{1/2-sigma} e^{pi t/2}.
// For sigma <= 1/2 this is the usual 2^sigma form; for sigma > 1/2 the
// |1-sigma-it| >= t step only supports the exponent 1/2, and the 2^sigma form
// is in fact violated near (0.9, 1).
inline double gamma_factor_bound(double sigma, double t) {
    if (!(sigma > 0.0 && sigma < 1.0) || !(t >= 1.0))
        throw std::invalid_argument("gamma_factor_bound: need sigma in (0,1), t >= 1");
    return stirling_c2(t) / (std::pow(2.0, std::min(sigma, 0.5)) * std::sqrt(PI)) *
           std::pow(t, 0.5 - sigma) * std::exp(0.5 * PI * t);
}

}  // namespace ezeta

#endif
