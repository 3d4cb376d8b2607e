#ifndef EZETA_ZERO_DENSITY_HPP
#define EZETA_ZERO_DENSITY_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <vector>

#include "explicit_zeta/arithmetic.hpp"
#include "explicit_zeta/moment.hpp"
#include "explicit_zeta/riemann_siegel.hpp"

namespace ezeta {

// --------------------------------------------------------------------------
// Selberg mollifier lambda_X(n) built on mu and phi_{2 sigma}.
// --------------------------------------------------------------------------
inline constexpr double LAMBDA_HAT_CAP = 2.2;  // lambda-hat(X) for X >= 8

class MollifierContext {
  public:
    MollifierContext(double X, double sigma, const ArithmeticTables& tables)
        : X_(X), sigma_(sigma), tables_(&tables) {
        if (!(X >= 1.0) || !(sigma >= 0.5))
            throw std::invalid_argument("mollifier: need X >= 1, sigma >= 1/2");
        if (static_cast<double>(tables.limit()) < X)
            throw std::invalid_argument("mollifier: sieve tables too small for X");
        auto nx = static_cast<std::int64_t>(std::floor(X));
        weights_.assign(static_cast<std::size_t>(nx) + 1, 0.0);
        double acc = 0.0;
        for (std::int64_t m = 1; m <= nx; ++m) {
            if (!tables.squarefree(m)) continue;
            weights_[static_cast<std::size_t>(m)] =
                1.0 / tables.phi_x(m, 2.0 * sigma);
            acc += weights_[static_cast<std::size_t>(m)];
        }
        normalizer_ = acc;
    }

    double X() const { return X_; }
    double sigma() const { return sigma_; }
    double normalizer() const { return normalizer_; }
    const ArithmeticTables& tables() const { return *tables_; }

    // coprime-restricted single-sum form
    double lambda(std::int64_t n) const {
        if (n < 1) throw std::domain_error("lambda_X: n must be >= 1");
        if (static_cast<double>(n) > X_) return 0.0;
        if (!tables_->squarefree(n)) return 0.0;
        auto cap = static_cast<std::int64_t>(std::floor(X_ / static_cast<double>(n)));
        double acc = 0.0;
        for (std::int64_t m = 1; m <= cap; ++m) {
            if (weights_[static_cast<std::size_t>(m)] == 0.0) continue;
            if (!tables_->coprime(m, n)) continue;
            acc += weights_[static_cast<std::size_t>(m)];
        }
        double head = tables_->mu(n) * std::pow(static_cast<double>(n), 2.0 * sigma_) /
                      tables_->phi_x(n, 2.0 * sigma_);
        return head * acc / normalizer_;
    }

    // double-sum defining form, kept as the independent cross-check
    double lambda_double_sum(std::int64_t n) const {
        if (static_cast<double>(n) > X_) return 0.0;
        auto cap = static_cast<std::int64_t>(std::floor(X_ / static_cast<double>(n)));
        double acc = 0.0;
        for (std::int64_t m = 1; m <= cap; ++m) {
            std::int64_t nm = n * m;
            acc += tables_->mu(nm) * tables_->mu(m) /
                   tables_->phi_x(nm, 2.0 * sigma_);
        }
        return std::pow(static_cast<double>(n), 2.0 * sigma_) * acc / normalizer_;
    }

    // S_X(s) = sum_{n<=X} lambda_X(n) n^{-s}
    std::complex<double> mollified_sum(const StripPoint& s) const {
        std::complex<double> cs{s.sigma, s.t};
        std::complex<double> acc = 0.0;
        auto nx = static_cast<std::int64_t>(std::floor(X_));
        for (std::int64_t n = 1; n <= nx; ++n) {
            double l = lambda(n);
            if (l == 0.0) continue;
            acc += l * std::pow(static_cast<double>(n), -cs);
        }
        return acc;
    }

  private:
    double X_;
    double sigma_;
    const ArithmeticTables* tables_;
    std::vector<double> weights_;  // mu^2(m)/phi_{2 sigma}(m)
    double normalizer_;
};

inline double mollifier_lambda(std::int64_t n, double X, double sigma,
                               const ArithmeticTables& tables) {
    return MollifierContext(X, sigma, tables).lambda(n);
}

enum class gcd_sum_exponent { two_sigma, two_minus_two_sigma };

// Brute-force mollifier double sums of Lemma-4.1 type; the 2 sigma exponent
// admits the closed form 1/sum mu^2/phi, the other is asserted positive.
inline double gcd_double_sum(double X, double sigma, gcd_sum_exponent which,
                             const ArithmeticTables& tables) {
    if (!(X >= 1.0)) throw std::domain_error("gcd_double_sum: X >= 1");
    if (!(sigma > 0.5 && sigma < 1.0))
        throw std::domain_error("gcd_double_sum: sigma in (1/2, 1)");
    if (X > 1e4) throw budget_error("gcd_double_sum: X <= 1e4 (quadratic cost)");
    MollifierContext ctx(X, sigma, tables);
    auto nx = static_cast<std::int64_t>(std::floor(X));
    std::vector<double> lam(static_cast<std::size_t>(nx) + 1);
    for (std::int64_t n = 1; n <= nx; ++n)
        lam[static_cast<std::size_t>(n)] = ctx.lambda(n);
    double acc = 0.0;
    for (std::int64_t n = 1; n <= nx; ++n) {
        if (lam[static_cast<std::size_t>(n)] == 0.0) continue;
        for (std::int64_t m = 1; m <= nx; ++m) {
            if (lam[static_cast<std::size_t>(m)] == 0.0) continue;
            double g = static_cast<double>(std::gcd(n, m));
            double nm = static_cast<double>(n) * static_cast<double>(m);
            if (which == gcd_sum_exponent::two_sigma)
                acc += lam[static_cast<std::size_t>(n)] * lam[static_cast<std::size_t>(m)] *
                       std::pow(g, 2.0 * sigma) / std::pow(nm, 2.0 * sigma);
            else
                acc += lam[static_cast<std::size_t>(n)] * lam[static_cast<std::size_t>(m)] *
                       std::pow(g, 2.0 - 2.0 * sigma) / nm;
        }
    }
    return acc;
}

// zeta(2 sigma) * (closed form) <= 1 + (1+(2 sigma-1)/X)/(1-e^{-2}) X^{1-2 sigma}
inline double sellem2_bound(double sigma, double X) {
    if (!(X > 1.0) || !(sigma >= 0.5 + 1.0 / std::log(X)))
        throw std::domain_error("sellem2_bound: need sigma >= 1/2 + 1/log X, X > 1");
    return 1.0 + (1.0 + (2.0 * sigma - 1.0) / X) / (1.0 - std::exp(-2.0)) *
                     std::pow(X, 1.0 - 2.0 * sigma);
}

// --------------------------------------------------------------------------
// Argument bounds: h, b1, b2, b3.
// --------------------------------------------------------------------------
inline double h_sigma(double sigma) {
    return (2.0 * zeta_real(sigma) + std::pow(1.5, -sigma) - 1.0) *
           (1.0 + zeta_real(sigma) * zeta_real(2.0 * sigma));
}

inline double b1_sigma(double sigma1) {
    return std::sqrt(2.0 / PI) * std::pow(TWO_PI, 1.0 - sigma1) *
           std::exp(-sigma1 + 1.0 / (12.0 * sigma1) +
                    1.0 / (90.0 * sigma1 * sigma1 * sigma1));
}

inline double b2_sigma(double sigma1, double T0) {
    double a = (4.0 * sigma1 - 1.0) / T0;
    double b = (2.0 * sigma1 - 1.0) / T0 + 1.0;
    return a * a + b * b;
}

inline double argument_bound_b3(double sigma1, double T0) {
    if (!(sigma1 >= 2.4) || !(T0 > 2.0 * sigma1 - 1.0))
        throw std::invalid_argument("argument_bound_b3: need sigma1 >= 2.4, T0 > 2 sigma1 - 1");
    double h = h_sigma(sigma1);
    double shield = 1.0 - std::pow(2.0, -sigma1) * h;
    if (!(shield > 0.0))
        throw std::domain_error("argument_bound_b3: 1 - 2^{-sigma1} h(sigma1) must be positive");
    double zs = zeta_real(sigma1);
    return (PI - 2.0) / (2.0 * LOG2) * std::log(zs) +
           std::log(b1_sigma(sigma1)) / LOG2 +
           PI / (4.0 * LOG2) * std::log(b2_sigma(sigma1, T0)) * (0.5 + sigma1) +
           PI / (2.0 * LOG2) *
               std::log(11.0 * (1.0 + std::pow(2.0, -sigma1) * h) /
                        (5.0 * (T0 - 2.0 * sigma1 + 1.0) * shield * shield)) +
           0.5 * PI;
}

// --------------------------------------------------------------------------
// Mollified second moment envelope (the phi of the density chain):
//   phi(sigma0,T0,eps,T) = (1+(2 sigma0-1) T0^{eps-1/6})/(1-e^{-2})
//     + phi1 log^{7/2} T / T^{1/4} + phi2 log^3 T / T^{3 eps},
//   phi1 = 2 sqrt2 (1/6-eps)^3 S1 lh^2 (1 + gamma/((1/6-eps) log T0)
//          + 1/(2 T0^{1/6-eps})),           phi2 = 6 (1/6-eps)^2 S2 lh^2,
// with lh = 2.2 and (S1, S2) the envelope at (sigma_env, T0).
// --------------------------------------------------------------------------
struct PhiMomentBound {
    double phi;
    double phi1;
    double phi2;
    double S1;
    double S2;
};

inline PhiMomentBound phi_moment_bound_with_envelope(double sigma0, double T0,
                                                     double eps, double T,
                                                     double S1, double S2) {
    if (!(sigma0 > 0.5 && sigma0 < 1.0))
        throw std::invalid_argument("phi_moment_bound: sigma0 in (1/2, 1)");
    if (!(T >= T0) || !(T0 > std::exp(6.0 / (sigma0 - 0.5))))
        throw std::invalid_argument("phi_moment_bound: need T >= T0 > e^{6/(sigma0-1/2)}");
    double eps_hi = 1.0 / 6.0 - 1.0 / ((sigma0 - 0.5) * std::log(T0));
    if (!(eps > 0.0 && eps <= eps_hi + 1e-15))
        throw constraint_error("eq:epsilon",
                               "need 0 < eps <= 1/6 - 1/((sigma0-1/2) log T0)");
    double a = 1.0 / 6.0 - eps;
    double lh2 = LAMBDA_HAT_CAP * LAMBDA_HAT_CAP;
    PhiMomentBound out;
    out.S1 = S1;
    out.S2 = S2;
    out.phi1 = 2.0 * SQRT2 * a * a * a * S1 * lh2 *
               (1.0 + EULER_GAMMA / (a * std::log(T0)) +
                0.5 * std::pow(T0, -a));
    out.phi2 = 6.0 * a * a * S2 * lh2;
    double lt = std::log(T);
    out.phi = (1.0 + (2.0 * sigma0 - 1.0) * std::pow(T0, eps - 1.0 / 6.0)) /
                  (1.0 - std::exp(-2.0)) +
              out.phi1 * std::pow(lt, 3.5) / std::pow(T, 0.25) +
              out.phi2 * lt * lt * lt / std::pow(T, 3.0 * eps);
    return out;
}

inline PhiMomentBound phi_moment_bound(double sigma0, double T0, double eps, double T) {
    MomentContext ctx{std::min(sigma0, 0.999), T0, 1, 2, std::min(sigma0, 0.999), T0};
    auto env = moment_envelope(ctx);
    return phi_moment_bound_with_envelope(sigma0, T0, eps, T, env.S1, env.S2);
}

// --------------------------------------------------------------------------
// Final constants: alpha/beta/gamma/delta and (a, b, c, d).
// --------------------------------------------------------------------------
struct DensityCoefficients {
    double T0;
    double sigma1;
    double sigma0;     // 1/2 + 8/log T0
    double sigma_cap;  // certified sigma range: [1/2, sigma_cap]
    double alpha, beta, gamma_c, delta;
    double a, b, c, d;
    double absorbed_d_term;  // (0.88 + 2.4 loglogT0/logT0 + 20/logT0)/4
    double S1, S2;
};

inline DensityCoefficients density_coefficients(double T0, double sigma1) {
    if (!(T0 >= std::exp(24.0) * (1.0 - 1e-12)))
        throw std::invalid_argument("density_coefficients: need T0 >= e^24");
    if (!(sigma1 >= 2.4))
        throw std::invalid_argument("density_coefficients: need sigma1 >= 2.4");
    DensityCoefficients out;
    out.T0 = T0;
    out.sigma1 = sigma1;
    double lt = std::log(T0);
    out.sigma0 = 0.5 + 8.0 / lt;
    // The envelope anchors at the certified sigma cap (printed range of the
    // published theorem): round the exact sigma0 down at 3 decimals.
    out.sigma_cap = std::min(round_down_decimal(out.sigma0, 3), out.sigma0);
    MomentContext ctx{out.sigma_cap, T0, 1, 2, out.sigma_cap, T0};
    auto env = moment_envelope(ctx);
    out.S1 = env.S1;
    out.S2 = env.S2;
    auto phi = phi_moment_bound_with_envelope(out.sigma0, T0, 1.0 / 24.0, T0,
                                              env.S1, env.S2);
    out.alpha = phi.phi / (4.0 * PI);
    out.beta = (sigma1 - 0.5) * (9.0 * sigma1 + 4.0) / (16.0 * LOG2);
    out.gamma_c = (sigma1 - 0.5) / (4.0 * LOG2);
    double h = h_sigma(sigma1);
    double shield = 1.0 - std::pow(2.0, -sigma1) * h;
    out.delta = (sigma1 - 0.5) *
                    ((2.0 * sigma1 - 11.0) / 8.0 + argument_bound_b3(sigma1, T0) / PI) +
                std::pow(2.0, -sigma1) * h / (shield * PI * LOG2);
    out.absorbed_d_term =
        (0.88 + 2.4 * std::log(lt) / lt + 20.0 / lt) / 4.0;
    if (out.absorbed_d_term > 0.51)
        throw integrity_error("density_coefficients: absorbed log T terms exceed the "
                              "published 0.51 at this T0");
    double e = std::numbers::e;
    out.a = (e / 4.0) * (2.0 * e * e / PI + out.alpha);
    out.b = out.beta / 4.0;
    out.c = out.gamma_c / 4.0;
    out.d = std::max(out.delta / 4.0, 0.0) + 0.51;
    return out;
}

// floor of the leading coefficient over all T0: (e^3/2pi)(1 + 1/(8(e^2-1)))
inline double density_a_floor() {
    double e = std::numbers::e;
    return e * e * e / TWO_PI * (1.0 + 1.0 / (8.0 * (e * e - 1.0)));
}

enum class density_form { dyadic, cumulative };

// Right side of the zero-density bound: dyadic N(sigma,2T)-N(sigma,T) or the
// geometric-sum cumulative N(sigma,T) form.
inline double density_bound_eval(double sigma, double T,
                                 const DensityCoefficients& k, density_form form) {
    if (!(sigma >= 0.5 && sigma <= k.sigma_cap + 1e-12))
        throw std::domain_error("density_bound_eval: sigma outside [1/2, sigma_cap]");
    double expo = 1.0 - 0.25 * (sigma - 0.5);
    if (form == density_form::dyadic) {
        if (!(T >= k.T0))
            throw std::domain_error("density_bound_eval: dyadic form needs T >= T0");
        double lt = std::log(T);
        return k.a * std::pow(T, expo) * lt + k.b * lt * lt +
               k.c * lt * std::log(lt) + k.d * lt;
    }
    if (!(T >= 2.0 * k.T0))
        throw std::domain_error("density_bound_eval: cumulative form needs T >= 2 T0");
    double lead = round_up_decimal(k.a, 1) + 0.01;  // 10395.21 for the H0 set
    return lead / (std::pow(2.0, expo) - 1.0) * std::pow(T, expo) *
           std::log(T / 2.0);
}

// --------------------------------------------------------------------------
// Zero counting by sign changes of Z against the explicit Riemann–von
// Mangoldt envelope.
// --------------------------------------------------------------------------
struct ZeroCount {
    long long N;
    double rvm_lo;
    double rvm_hi;
    int refinements;
};

inline std::pair<double, double> rvm_envelope(double T) {
    double main = T / TWO_PI * std::log(T / (TWO_PI * std::numbers::e)) + 7.0 / 8.0;
    double err = 0.11 * std::log(T) + 0.29 * std::log(std::log(T)) + 2.29 +
                 1.0 / (5.0 * T);
    return {main - err, main + err};
}

inline ZeroCount zero_count_empirical(double T) {
    if (!(T >= std::numbers::e && T <= 1e5))
        throw std::domain_error("zero_count_empirical: need e <= T <= 1e5");
    auto [lo, hi] = rvm_envelope(T);
    zeta_plan plan(0.5, T + 1.0, 1e-9);
    ZeroCount out{};
    out.rvm_lo = lo;
    out.rvm_hi = hi;
    double refine = 1.0;
    for (int attempt = 0;; ++attempt) {
        long long count = 0;
        double t = 2.0;
        double z_prev = riemann_siegel_Z(t, plan);
        while (t < T) {
            double gap = 0.25 * TWO_PI / std::log(std::max(t, 20.0) / TWO_PI) / refine;
            double t_next = std::min(t + gap, T);
            double z_next = riemann_siegel_Z(t_next, plan);
            if ((z_prev < 0.0) != (z_next < 0.0)) ++count;
            t = t_next;
            z_prev = z_next;
        }
        out.N = count;
        out.refinements = attempt;
        if (static_cast<double>(count) >= lo) break;
        if (refine >= 8.0)
            throw integrity_error("zero_count_empirical: sign changes below the "
                                  "Riemann-von Mangoldt floor after 8x refinement");
        refine *= 2.0;
    }
    if (static_cast<double>(out.N) > hi)
        throw integrity_error("zero_count_empirical: more sign changes than the "
                              "Riemann-von Mangoldt ceiling allows");
    return out;
}

// Desk-scale consistency: the bound is nonnegative and the empirical zero
// count sits inside the Riemann–von Mangoldt envelope (all zeros found on the
// line, so the off-line count is zero below the verified height).
inline bool density_consistency_check(double sigma, double T,
                                      const DensityCoefficients& k) {
    if (!(sigma > 0.5) || !(T <= 1e5))
        throw std::domain_error("density_consistency_check: need sigma > 1/2, T <= 1e5");
    double bound = density_bound_eval(std::min(sigma, k.sigma_cap), std::max(T, k.T0),
                                      k, density_form::dyadic);
    if (!(bound >= 0.0)) return false;
    auto zc = zero_count_empirical(std::max(T, 30.0));
    return static_cast<double>(zc.N) >= zc.rvm_lo &&
           static_cast<double>(zc.N) <= zc.rvm_hi;
}

}  // namespace ezeta

#endif
