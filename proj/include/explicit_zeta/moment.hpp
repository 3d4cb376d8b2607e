#ifndef EZETA_MOMENT_HPP
#define EZETA_MOMENT_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "explicit_zeta/afe.hpp"
#include "explicit_zeta/numutil.hpp"
#include "explicit_zeta/quadrature.hpp"
#include "explicit_zeta/zeta_oracle.hpp"

namespace ezeta {

// Preissmann constant m0 = sqrt(1 + (2/3) sqrt(6/5)).
inline double preissmann_m0() { return std::sqrt(1.0 + (2.0 / 3.0) * std::sqrt(1.2)); }

// --------------------------------------------------------------------------
// Elementary sum majorants (valid for sigma in [1/2, 1)):
//   sum n^{-2s}      <= log X + gamma + 1/(2X)
//   sum n^{2(s-1)}   <= X^{2s-1} (log X + gamma + 1/(2X))
//   sum n^{1-2s}     <= X^{2(1-s)} / (2(1-s))
//   sum n^{-s}       <= X^{1-s} / (1-s)
//   sum n^{2s-1}     <= X^{2s}/(2s) (1 + 2s/X - X^{-2s})
// --------------------------------------------------------------------------
inline double em_sum1(double X) { return std::log(X) + EULER_GAMMA + 0.5 / X; }
inline double em_sum2(double X, double sigma) {
    return std::pow(X, 2.0 * sigma - 1.0) * em_sum1(X);
}
inline double i_sum1(double X, double sigma) {
    return std::pow(X, 2.0 * (1.0 - sigma)) / (2.0 * (1.0 - sigma));
}
inline double i_sum2(double X, double sigma) {
    return std::pow(X, 1.0 - sigma) / (1.0 - sigma);
}
inline double i_sum3(double X, double sigma) {
    return std::pow(X, 2.0 * sigma) / (2.0 * sigma) *
           (1.0 + 2.0 * sigma / X - std::pow(X, -2.0 * sigma));
}

// Majorant for the oscillatory double sum D(a, *, *; X) with a in {-s, s-1}:
//   (pi m0 + 2 sum 1/n) sum n^{1+2a} + (sum n^a)^2 + (pi m0/2 - 1) sum n^{2a}.
inline double double_sum_bound(double a, double X) {
    if (!(X >= 2.0)) throw std::domain_error("double_sum_bound: need X >= 2");
    if (!(a >= -1.0 && a <= 0.0))
        throw std::domain_error("double_sum_bound: exponent must lie in [-1, 0]");
    double m0 = preissmann_m0();
    double harmonic = em_sum1(X);
    double s_1p2a, s_a, s_2a;
    if (a <= -0.5) {
        // a = -sigma with sigma in [1/2, 1]
        double sigma = -a;
        s_1p2a = i_sum1(X, sigma);
        s_a = i_sum2(X, sigma);
        s_2a = em_sum1(X);
    } else {
        // a = sigma - 1 with sigma in [1/2, 1]
        double sigma = 1.0 + a;
        s_1p2a = i_sum3(X, sigma);
        s_a = std::pow(X, sigma) / sigma;  // sum n^{sigma-1} <= X^sigma/sigma
        s_2a = em_sum2(X, sigma);
    }
    return (PI * m0 + 2.0 * harmonic) * s_1p2a + s_a * s_a +
           (PI * m0 / 2.0 - 1.0) * s_2a;
}

// --------------------------------------------------------------------------
// Context z = (sigma, T, mu1, mu2) plus the envelope anchors (sigma0, T0).
// --------------------------------------------------------------------------
struct MomentContext {
    double sigma;
    double T;
    long long mu1 = 1;
    long long mu2 = 1;
    double sigma0;
    double T0;

    void validate() const {
        if (!(sigma >= 0.5 && sigma <= sigma0 && sigma0 < 1.0))
            throw std::invalid_argument("moment: need 1/2 <= sigma <= sigma0 < 1");
        if (!(T >= T0 && T0 >= TWO_PI))
            throw std::invalid_argument("moment: need T >= T0 >= 2 pi");
        if (!(mu1 >= 1 && mu1 <= mu2 &&
              static_cast<double>(mu2) <= T / TWO_PI))
            throw std::invalid_argument("moment: need 1 <= mu1 <= mu2 <= T/(2 pi)");
        if (std::gcd(mu1, mu2) != 1)
            throw std::invalid_argument("moment: mu1, mu2 must be coprime");
    }
};

// Main term script-S(z); pole at sigma = 1/2 (use the dyadic critical-line
// limit there instead).
inline double selberg_main_term(const MomentContext& ctx) {
    if (ctx.sigma == 0.5)
        throw std::domain_error("selberg_main_term: sigma = 1/2 is a removable "
                                "singularity; use critical_line_main_limit");
    double sigma = ctx.sigma, T = ctx.T;
    double mu = static_cast<double>(ctx.mu1) * static_cast<double>(ctx.mu2);
    double term1 = zeta_real(2.0 * sigma) / std::pow(mu, sigma) * T;
    double term2 = std::pow(TWO_PI, 2.0 * sigma - 1.0) *
                   (std::pow(4.0, 1.0 - sigma) - 1.0) * zeta_real(2.0 - 2.0 * sigma) /
                   (2.0 * (1.0 - sigma) * std::pow(mu, 1.0 - sigma)) *
                   std::pow(T, 2.0 * (1.0 - sigma));
    return term1 + term2;
}

// lim_{sigma -> 1/2} of the dyadic sum of main terms:
//   (1-2^{-n0})(log T + 2 gamma) T - (1+log 2pi) T
//   + 2^{-n0} (1 + n0 log 2 + log 2pi) T.
inline double critical_line_main_limit(double T, int n0) {
    if (!(T > 0.0) || n0 < 1)
        throw std::invalid_argument("critical_line_main_limit: need T > 0, n0 >= 1");
    double p = std::pow(2.0, -n0);
    return (1.0 - p) * (std::log(T) + 2.0 * EULER_GAMMA) * T -
           (1.0 + std::log(TWO_PI)) * T +
           p * (1.0 + n0 * LOG2 + std::log(TWO_PI)) * T;
}

// --------------------------------------------------------------------------
// Component functions.  The *_exact forms carry the z-dependence; the
// *_closed forms are the (sigma0, T0)-uniform majorants used in the envelope;
// the *_special forms apply to mu1 = mu2 = 1 on the critical line (T0 >= 50);
// the *_limit forms are the T -> infinity limits of the exact forms at mu = 1.
// --------------------------------------------------------------------------
namespace moment_detail {

inline double B51_exact(double T, double mu1, double mu2) {
    return 0.5 + (EULER_GAMMA - 0.5 + 0.5 * std::log(2.0 * mu1 / (PI * mu2)) +
                  (SQRT2 - 1.0) * std::sqrt(TWO_PI * mu2 / (mu1 * T))) /
                     std::log(T);
}

inline double B52_exact(double sigma, double T, double mu1, double mu2) {
    double m0 = preissmann_m0();
    double om = 1.0 - sigma;
    double ratio = PI * mu2 / (mu1 * T);
    double logratio = std::log(mu1 / (PI * mu2));
    double first = std::pow(T, -sigma) / (2.0 * om);
    double second = (4.0 + 2.0 * om * (2.0 * EULER_GAMMA + logratio +
                                       std::sqrt(ratio) + PI * m0)) /
                    (4.0 * om * om * std::pow(T, sigma) * std::log(T));
    double third = std::pow(ratio, om) * (PI * m0 - 2.0) /
                   (4.0 * std::pow(T, sigma)) *
                   (1.0 + (2.0 * EULER_GAMMA + logratio + std::sqrt(ratio)) /
                              std::log(T));
    return first + second + third;
}

inline double Bt5_closed(double sigma0, double T0) {
    double om = 1.0 - sigma0;
    return 0.5 + 0.266 / std::log(T0) +
           std::pow(PI, sigma0 - 1.0) / (2.0 * om * std::sqrt(T0)) *
               (1.0 + 4.43 / (om * std::log(T0)) +
                0.534 * std::pow(2.0, sigma0 - 1.0) * (1.0 + 0.717 / std::log(T0)));
}

inline double Bt6_closed(double sigma0, double T0) {
    double om = 1.0 - sigma0;
    return std::sqrt(PI) +
           1.0 / (om * std::sqrt(T0)) *
               (1.0 + (1.577 + 0.25 * std::sqrt(PI / T0)) / (om * std::log(T0)) +
                0.534 * std::pow(PI / T0, om));
}

inline double B71_exact(double sigma, double T, double mu1, double mu2) {
    double L = std::log(T * mu2 / (PI * mu1));
    double a = (1.0 + 2.0 * sigma) * std::pow(2.0, 0.5 + sigma) -
               std::pow(2.0, 0.5 - sigma) / (1.0 + 2.0 * sigma);
    double b = -std::pow(2.0, 0.5 - sigma) * (std::pow(2.0, 1.5 + sigma) - 2.0) /
                   ((1.0 + 2.0 * sigma) * (1.0 + 2.0 * sigma)) +
               ((4.0 - std::pow(2.0, 1.5 - sigma)) * EULER_GAMMA +
                std::pow(2.0, 0.5 - sigma) * LOG2) /
                   (1.0 + 2.0 * sigma) +
               (1.0 - std::pow(2.0, -sigma)) / sigma *
                   std::sqrt(PI * mu1 / (T * mu2));
    return a + b / L;
}

inline double B72_exact(double sigma, double T, double mu1, double mu2) {
    double m0 = preissmann_m0();
    double ratio = PI * mu1 / (T * mu2);
    double L = std::log(T * mu2 / (PI * mu1));
    double first = (1.0 + 2.0 * sigma * std::sqrt(ratio) - std::pow(ratio, sigma)) /
                   (2.0 * sigma * std::sqrt(T)) *
                   (1.0 + (2.0 / sigma + PI * m0 + 2.0 * EULER_GAMMA +
                           std::sqrt(ratio)) /
                              L);
    double second = (PI * m0 - 2.0) / (4.0 * std::sqrt(T)) *
                    std::sqrt(PI * mu1 / (mu2 * T)) *
                    (1.0 + (2.0 * EULER_GAMMA + std::sqrt(ratio)) / L);
    return first + second;
}

inline double Bt7_closed(double sigma0, double T0) {
    double L0 = std::log(T0 / PI);
    double g = EULER_GAMMA;
    double core = (1.0 + 2.0 * sigma0) * std::pow(2.0, 0.5 + sigma0) -
                  std::pow(2.0, 0.5 - sigma0) / (1.0 + 2.0 * sigma0) +
                  (((4.0 - std::pow(2.0, 1.5 - sigma0)) * g + LOG2) / 2.0 -
                   std::pow(2.0, 1.5 - sigma0) /
                       ((1.0 + 2.0 * sigma0) * (1.0 + 2.0 * sigma0)) +
                   2.0 * (1.0 - std::pow(2.0, -sigma0)) * std::sqrt(PI / T0)) /
                      L0;
    return std::sqrt(PI) * core +
           (1.0 + 2.0 * sigma0 * std::sqrt(PI / T0)) / std::sqrt(T0) *
               (1.0 + (9.287 + std::sqrt(PI / T0)) / L0) +
           0.534 * std::sqrt(PI) / T0 * (1.0 + (2.0 * g + std::sqrt(PI / T0)) / L0);
}

inline double Bt8_closed(double sigma0, double T0) {
    double g = EULER_GAMMA;
    return (1.0 + 2.0 * sigma0) * std::pow(2.0, 0.5 + sigma0) -
           std::pow(2.0, 0.5 - sigma0) / (1.0 + 2.0 * sigma0) +
           (((4.0 - std::pow(2.0, 1.5 - sigma0)) * g + LOG2) / 2.0 -
            std::pow(2.0, 1.5 - sigma0) /
                ((1.0 + 2.0 * sigma0) * (1.0 + 2.0 * sigma0)) +
            (1.0 - std::pow(2.0, -sigma0)) * SQRT2) /
               LOG2 +
           27.7101 / std::sqrt(PI * T0);
}

inline double Bt12_closed(double sigma0, double T0) {
    double om = 1.0 - sigma0;
    return std::pow(PI, sigma0 - 1.0) / om *
           (1.0 + (2.0 * EULER_GAMMA + 2.0 / om + std::sqrt(PI / T0)) /
                      std::log(T0 / PI));
}

inline double Bt22_closed(double sigma0, double T0) {
    return std::pow(2.0, 2.0 * sigma0) * std::pow(PI, sigma0 - 1.0) *
           (1.0 + 2.0 * sigma0 * std::sqrt(PI / T0) +
            (4.0 + 2.0 * EULER_GAMMA +
             (1.0 + 4.0 * EULER_GAMMA * sigma0) * std::sqrt(PI / T0) +
             2.0 * PI * sigma0 / T0) /
                std::log(T0 / PI));
}

inline double B1_closed(double sigma0, double T0) {
    return Bt12_closed(sigma0, T0) + Bt22_closed(sigma0, T0) +
           std::pow(PI, sigma0) * (2.0 - std::pow(2.0, sigma0)) /
               ((1.0 - sigma0) * std::log(T0 / PI));
}

inline double Bt31_exact(double T, double mu1, double mu2) {
    double L = std::log(T * mu2 / (PI * mu1));
    return std::sqrt(PI * mu1 / (2.0 * mu2)) *
           (1.0 + (2.0 * EULER_GAMMA + std::sqrt(PI * mu1 / (T * mu2))) / L *
                      (1.0 + 1.0 / std::sqrt(T)) +
            1.0 / std::sqrt(T));
}

inline double Bt31_closed(double T0) { return Bt31_exact(T0, 1.0, 1.0); }

inline double Bt32_exact(double sigma, double T, double mu1, double mu2) {
    double om = 1.0 - sigma;
    double Q = T * mu2 / (PI * mu1);
    return 1.0 / (2.0 * om) *
           (1.0 + (2.0 / om + 2.0 * EULER_GAMMA / std::sqrt(Q) + 1.0 / Q) /
                      std::log(Q));
}

inline double Bt32_closed(double sigma0, double T0) {
    double om = 1.0 - sigma0;
    return 1.0 / (2.0 * om) *
           (1.0 + (2.0 / om + 2.0 * EULER_GAMMA * std::sqrt(PI / T0) + PI / T0) /
                      std::log(T0 / PI));
}

inline double Bt41_exact(double T, double mu1, double mu2) {
    double L = std::log(T * mu1 / (PI * mu2));
    return 0.5 * SQRT2 +
           (2.0 * EULER_GAMMA + std::sqrt(PI * mu2 / (T * mu1))) / (SQRT2 * L) *
               (1.0 + 1.0 / std::sqrt(T)) +
           1.0 / std::sqrt(2.0 * T);
}

inline double Bt41_closed(double T0) { return 2.607 * (1.0 + 1.0 / std::sqrt(T0)); }

inline double Bt42_closed(double sigma0) {
    double om = 1.0 - sigma0;
    return 1.0 / (2.0 * std::sqrt(PI) * om) * (2.9 + 2.886 / om);
}

inline double lambda1(double x) {
    if (std::fabs(x - 2.0 / 3.0) < 1e-9) return 2.0 * LOG2;
    return (2.0 - std::pow(2.0, 3.0 * x - 1.0)) / (2.0 - 3.0 * x);
}

}  // namespace moment_detail

// Table constants feeding the envelope: symmetric column when mu1 = mu2
// (x(t) = y(t)), otherwise the x<=y / x>y columns.
struct EnvelopeAfeConstants {
    double Et;
    double Ft;
};

inline EnvelopeAfeConstants envelope_afe_constants(double T0, bool symmetric) {
    auto row = error_table_for_height(T0);
    if (symmetric) return {row.Et_sym, row.Et_sym};
    return {row.Et_xley, row.Ft_xgty};
}

struct MomentEnvelope {
    double S_main;  // NaN at sigma = 1/2
    double S1;
    double S2;
    std::vector<std::pair<std::string, double>> components;

    double component(const std::string& name) const {
        for (const auto& [k, v] : components)
            if (k == name) return v;
        throw std::invalid_argument("MomentEnvelope: unknown component " + name);
    }
};

// The (sigma0, T0)-uniform envelope coefficients S1, S2 with the full
// component registry.  The sharper mu = 1 critical-line branch engages when
// sigma0 = 1/2, mu1 = mu2 = 1 and T0 >= 50.
inline MomentEnvelope moment_envelope(const MomentContext& ctx) {
    namespace md = moment_detail;
    ctx.validate();
    double sigma0 = ctx.sigma0, T0 = ctx.T0, T = ctx.T;
    auto mu1 = static_cast<double>(ctx.mu1);
    auto mu2 = static_cast<double>(ctx.mu2);
    bool special = (ctx.mu1 == 1 && ctx.mu2 == 1 && sigma0 == 0.5 && T0 >= 50.0);
    auto [Et, Ft] = envelope_afe_constants(T0, ctx.mu1 == ctx.mu2);

    double bt5, bt6, bt7, bt8, bt41, bt42;
    if (special) {
        bt5 = 0.5 + 2.3 / std::sqrt(PI * T0);
        bt6 = 0.5 * std::sqrt(PI) + 2.3 / std::sqrt(T0);
        bt7 = std::sqrt(PI) * md::B71_exact(0.5, T0, 1, 1) + md::B72_exact(0.5, T0, 1, 1);
        bt8 = md::B71_exact(0.5, T0, 1, 1) +
              md::B72_exact(0.5, T0, 1, 1) / std::sqrt(PI);
        bt41 = md::Bt41_exact(T0, 1, 1);
        bt42 = md::Bt32_closed(0.5, T0) / std::sqrt(PI);
    } else {
        bt5 = md::Bt5_closed(sigma0, T0);
        bt6 = md::Bt6_closed(sigma0, T0);
        bt7 = md::Bt7_closed(sigma0, T0);
        bt8 = md::Bt8_closed(sigma0, T0);
        bt41 = md::Bt41_closed(T0);
        bt42 = md::Bt42_closed(sigma0);
    }
    double bt31 = md::Bt31_closed(T0);
    double bt32 = md::Bt32_closed(sigma0, T0);
    double bt12 = md::Bt12_closed(sigma0, T0);
    double bt22 = md::Bt22_closed(sigma0, T0);

    double ratio_pow = (2.0 - std::pow(2.0, sigma0)) / (1.0 - sigma0);
    double B5 = Ft * std::pow(PI, 0.5 * sigma0) * std::sqrt(ratio_pow * bt5);
    double B6 = Et * std::pow(PI, sigma0 - 0.5) * std::sqrt(ratio_pow * bt6);
    double l1 = md::lambda1(sigma0);
    double B7 = Ft * std::pow(PI, sigma0 - 0.5) * std::sqrt(l1 * bt7);
    double B8 = Et * std::pow(PI, sigma0 - 0.25) * std::sqrt(l1 * bt8);
    double B1 = bt12 + bt22 + std::pow(PI, sigma0) * (2.0 - std::pow(2.0, sigma0)) /
                                  ((1.0 - sigma0) * std::log(T0 / PI));
    double B3 = 8.0 * std::pow(TWO_PI, sigma0 - 0.5) * (bt31 + bt32);
    double B4 = 8.0 * std::pow(TWO_PI, sigma0 - 0.5) * (bt41 + bt42);
    double B9 = std::pow(PI, sigma0) * ratio_pow * Et * Ft;

    MomentEnvelope env;
    env.S1 = std::sqrt(std::log(T0) / std::log(T0 / PI)) * (B5 + B6) + B7 + B8;
    env.S2 = B1 + B3 / std::sqrt(PI) + B4 + B9 / std::log(T0 / PI);
    env.S_main = (ctx.sigma > 0.5) ? selberg_main_term(ctx)
                                   : std::numeric_limits<double>::quiet_NaN();

    env.components = {
        {"B1", B1},       {"B3", B3},       {"B4", B4},       {"B5", B5},
        {"B6", B6},       {"B7", B7},       {"B8", B8},       {"B9", B9},
        {"B5_1", md::B51_exact(T, mu1, mu2)},
        {"B5_2", md::B52_exact(ctx.sigma, T, mu1, mu2)},
        {"B7_1", md::B71_exact(ctx.sigma, T, mu1, mu2)},
        {"B7_2", md::B72_exact(ctx.sigma, T, mu1, mu2)},
        {"Bt1_2", bt12},  {"Bt2_2", bt22},
        {"Bt3_1", bt31},  {"Bt3_2", bt32},
        {"Bt4_1", bt41},  {"Bt4_2", bt42},
        {"Bt5", bt5},     {"Bt6", bt6},
        {"Bt7", bt7},     {"Bt8", bt8},
        {"Et", Et},       {"Ft", Ft},
    };
    return env;
}

// T -> infinity limits of the exact z-forms at mu = 1, sigma = 1/2, with the
// explicit T0 factors of the assembly retained; reproduces the ~8.953 / ~22.6
// asymptotic coefficients when fed the 1e3-threshold symmetric constants.
struct AsymptoticEnvelope {
    double S1;
    double S2;
};

inline AsymptoticEnvelope moment_envelope_asymptotic(double T0, double Et, double Ft) {
    double ratio_pow = (2.0 - SQRT2) / 0.5;  // sigma0 = 1/2
    double l1 = moment_detail::lambda1(0.5);
    double bt5 = 0.5;
    double bt6 = 0.5 * std::sqrt(PI);
    double b71_inf = 4.0 - 0.5;  // B71 at sigma = 1/2, T -> inf
    double bt7 = std::sqrt(PI) * b71_inf;
    double bt8 = b71_inf;
    double B5 = Ft * std::pow(PI, 0.25) * std::sqrt(ratio_pow * bt5);
    double B6 = Et * std::sqrt(ratio_pow * bt6);
    double B7 = Ft * std::sqrt(l1 * bt7);
    double B8 = Et * std::pow(PI, 0.25) * std::sqrt(l1 * bt8);
    double S1 = std::sqrt(std::log(T0) / std::log(T0 / PI)) * (B5 + B6) + B7 + B8;

    double bt12 = 2.0 / std::sqrt(PI);
    double bt22 = 2.0 / std::sqrt(PI);
    double B1 = bt12 + bt22 + std::sqrt(PI) * ratio_pow / std::log(T0 / PI);
    double B3 = 8.0 * (std::sqrt(0.5 * PI) + 1.0);
    double B4 = 8.0 * (0.5 * SQRT2 + 1.0 / std::sqrt(PI));
    double B9 = std::sqrt(PI) * ratio_pow * Et * Ft;
    double S2 = B1 + B3 / std::sqrt(PI) + B4 + B9 / std::log(T0 / PI);
    return {S1, S2};
}

// --------------------------------------------------------------------------
// Critical-line second power moment:
//   int_0^T |zeta(1/2+it)|^2 dt <= T log T - (1+log 2pi - 2 gamma) T + E(T),
//   E(T) <= 13.803 T^{3/4} sqrt(log(T/2pi)) + 83.964 sqrt(T) log(T/2pi)
//           + 2e3 log T + 3691.24.
// --------------------------------------------------------------------------
struct SecondMomentCoefficients {
    double c34;      // 13.803 after round-up
    double c12;      // 83.964 after round-up
};

inline SecondMomentCoefficients second_moment_coefficients(double S1_hat, double S2_hat) {
    return {S1_hat / (std::pow(2.0, 0.75) - 1.0), S2_hat / (SQRT2 - 1.0)};
}

inline double second_moment_error_bound(double T) {
    if (!(T >= TWO_PI)) throw std::domain_error("second_moment_bound: need T >= 2 pi");
    double L = std::log(T / TWO_PI);
    return 13.803 * std::pow(T, 0.75) * std::sqrt(L) + 83.964 * std::sqrt(T) * L +
           2e3 * std::log(T) + 3691.24;
}

inline double second_moment_bound(double T) {
    double main = T * std::log(T) - (1.0 + std::log(TWO_PI) - 2.0 * EULER_GAMMA) * T;
    return main + second_moment_error_bound(T);
}

// Headline simplification: E(T) <= 70.26 T^{3/4} sqrt(log(T/2pi)) for T >= 2000.
inline double second_moment_headline(double T) {
    return 70.26 * std::pow(T, 0.75) * std::sqrt(std::log(T / TWO_PI));
}

// --------------------------------------------------------------------------
// Empirical weighted moment:  S(z) = int_T^{2T} |zeta|^2 (mu1/mu2)^{it} dt,
// checked against |S - script-S| <= S1 (mu2/mu1)^sigma T^{1-sigma/2}
// sqrt(log(T mu2/pi mu1)) + S2 mu1 mu2 T^{1-sigma} log(T mu1 mu2/pi).
// --------------------------------------------------------------------------
struct WeightedMomentCheck {
    std::complex<double> S_num;
    double S_main;
    double envelope_rhs;
    bool holds;
};

inline WeightedMomentCheck weighted_moment_empirical(const MomentContext& ctx,
                                                     double tol) {
    ctx.validate();
    if (!(ctx.T <= 1e4))
        throw budget_error("weighted_moment_empirical: T <= 1e4 (quadrature budget)");
    if (!(tol > 0)) throw std::invalid_argument("weighted_moment_empirical: tol <= 0");

    zeta_plan plan(ctx.sigma, 2.0 * ctx.T + 1.0, 1e-9);
    double omega = std::log(static_cast<double>(ctx.mu1) / static_cast<double>(ctx.mu2));
    quadrature_options opt;
    opt.abs_tol = tol;
    opt.max_width = [omega](double t) {
        double cap = zeta_sq_panel_cap(t);
        if (omega != 0.0) cap = std::min(cap, TWO_PI / (8.0 * std::fabs(omega)));
        return cap;
    };
    auto f = [&](double t) {
        auto z = plan(t);
        double zz = std::norm(z);
        return std::complex<double>(zz * std::cos(omega * t), zz * std::sin(omega * t));
    };
    WeightedMomentCheck out;
    out.S_num = integrate_adaptive_complex(f, ctx.T, 2.0 * ctx.T, opt);
    out.S_main = selberg_main_term(ctx);

    auto env = moment_envelope(ctx);
    double mu1 = static_cast<double>(ctx.mu1), mu2 = static_cast<double>(ctx.mu2);
    out.envelope_rhs =
        env.S1 * std::pow(mu2 / mu1, ctx.sigma) * std::pow(ctx.T, 1.0 - 0.5 * ctx.sigma) *
            std::sqrt(std::log(ctx.T * mu2 / (PI * mu1))) +
        env.S2 * mu1 * mu2 * std::pow(ctx.T, 1.0 - ctx.sigma) *
            std::log(ctx.T * mu1 * mu2 / PI);
    out.holds = std::abs(out.S_num - out.S_main) <= out.envelope_rhs;
    return out;
}

}  // namespace ezeta

#endif
