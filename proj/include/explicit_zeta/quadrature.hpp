#ifndef EZETA_QUADRATURE_HPP
#define EZETA_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "explicit_zeta/multiprec.hpp"
#include "explicit_zeta/numutil.hpp"
#include "explicit_zeta/riemann_siegel.hpp"

namespace ezeta {

// Gauss–Legendre order 16; nodes/weights generated once by Newton iteration
// in multiprecision so the table carries no transcription risk.
struct gauss_legendre16 {
    std::array<double, 16> node{};
    std::array<double, 16> weight{};

    static const gauss_legendre16& instance() {
        static gauss_legendre16 g;
        return g;
    }

  private:
    gauss_legendre16() {
        const int n = 16;
        for (int i = 0; i < n; ++i) {
            // Chebyshev initial guess, Newton on P_16
            mpreal x = mpreal(-std::cos(PI * (i + 0.75) / (n + 0.5)));
            for (int it = 0; it < 60; ++it) {
                mpreal p0(1), p1(0);
                for (int k = 0; k < n; ++k) {
                    mpreal p2 = p1;
                    p1 = p0;
                    p0 = ((2 * k + 1) * x * p1 - k * p2) / (k + 1);
                }
                mpreal dp = n * (x * p0 - p1) / (x * x - 1);
                mpreal dx = p0 / dp;
                x -= dx;
                if (boost::multiprecision::abs(dx) < mpreal("1e-35")) break;
            }
            mpreal p0(1), p1(0);
            for (int k = 0; k < n; ++k) {
                mpreal p2 = p1;
                p1 = p0;
                p0 = ((2 * k + 1) * x * p1 - k * p2) / (k + 1);
            }
            mpreal dp = n * (x * p0 - p1) / (x * x - 1);
            node[static_cast<std::size_t>(i)] = static_cast<double>(x);
            weight[static_cast<std::size_t>(i)] =
                static_cast<double>(2 / ((1 - x * x) * dp * dp));
        }
    }
};

template <class F>
double gl16_panel(F&& f, double a, double b) {
    const auto& g = gauss_legendre16::instance();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    kahan_sum s;
    for (int i = 0; i < 16; ++i)
        s.add(g.weight[static_cast<std::size_t>(i)] *
              f(mid + half * g.node[static_cast<std::size_t>(i)]));
    return half * s.value();
}

// Adaptive panel bisection with a position-dependent width cap.  Panels are
// processed left to right and partial sums reduced in index order, so results
// are reproducible bit for bit.
struct quadrature_options {
    double abs_tol = 1e-8;
    std::function<double(double)> max_width;  // optional cap, by panel midpoint
    int max_depth = 38;
};

template <class F>
double integrate_adaptive(F&& f, double a, double b, const quadrature_options& opt) {
    if (!(opt.abs_tol > 0)) throw std::invalid_argument("quadrature: tol must be > 0");
    if (b <= a) return 0.0;

    struct seg { double a, b, whole; int depth; };
    std::vector<seg> stack;
    stack.push_back({a, b, gl16_panel(f, a, b), 0});
    kahan_sum total;
    const double span = b - a;
    while (!stack.empty()) {
        seg s = stack.back();
        stack.pop_back();
        double w = s.b - s.a;
        double cap = opt.max_width ? opt.max_width(0.5 * (s.a + s.b)) : span;
        double m = 0.5 * (s.a + s.b);
        double left = gl16_panel(f, s.a, m);
        double right = gl16_panel(f, m, s.b);
        double err = std::fabs(left + right - s.whole);
        bool capped = w > cap;
        if (!capped && (err <= opt.abs_tol * (w / span) || s.depth >= opt.max_depth)) {
            if (s.depth >= opt.max_depth && err > 64 * opt.abs_tol * (w / span))
                throw tolerance_error("quadrature: panel refinement exhausted");
            total.add(left);
            total.add(right);
            continue;
        }
        // keep left-to-right order on the explicit stack
        stack.push_back({m, s.b, right, s.depth + 1});
        stack.push_back({s.a, m, left, s.depth + 1});
    }
    return total.value();
}

template <class F>
std::complex<double> integrate_adaptive_complex(F&& f, double a, double b,
                                                const quadrature_options& opt) {
    double re = integrate_adaptive([&](double t) { return f(t).real(); }, a, b, opt);
    double im = integrate_adaptive([&](double t) { return f(t).imag(); }, a, b, opt);
    return {re, im};
}

// Panel cap used for |zeta(1/2+it)|^2: the local zero gap 2 pi / log(t/2pi).
inline double zeta_sq_panel_cap(double t) {
    double base = std::max(t, 8.0) / TWO_PI;
    return std::min(1.0, TWO_PI / std::log(base));
}

// int_{T1}^{T2} |zeta(1/2+it)|^2 dt to absolute tolerance `tol`.
inline double integrate_abs_zeta_sq(double T1, double T2, double tol) {
    if (tol <= 0) throw std::invalid_argument("integrate_abs_zeta_sq: tol must be > 0");
    if (!(0 <= T1 && T1 <= T2 && T2 <= 1e5))
        throw std::domain_error("integrate_abs_zeta_sq: need 0 <= T1 <= T2 <= 1e5");
    if (T1 == T2) return 0.0;
    zeta_plan plan(0.5, T2 + 1.0, 1e-9);
    quadrature_options opt;
    opt.abs_tol = tol;
    opt.max_width = zeta_sq_panel_cap;
    return integrate_adaptive(
        [&](double t) {
            double z = riemann_siegel_Z(t, plan);
            return z * z;
        },
        T1, T2, opt);
}

enum class oscillatory_variant { lemma_integral, lemma_integral2 };

struct oscillatory_check {
    double computed;  // |numeric integral|
    double bound;     // the lemma's majorant
};

// Lemma-style oscillatory integrals with their explicit bounds:
//   variant 1: |int_{T1}^{T2} t^{1-2s} e^{i l t} dt|        <= (2/|l|) T1^{1-2s}
//   variant 2: |int_{T1}^{T2} t^{1/2-s} (t/(e xi))^{i t} dt| <= 8 T1^{1/2-s} /
//              log((T1+sqrt(T1))/xi)
inline oscillatory_check oscillatory_integral_check(double sigma, double lambda_or_xi,
                                                    double T1, double T2,
                                                    oscillatory_variant variant) {
    quadrature_options opt;
    opt.abs_tol = 1e-9;
    if (variant == oscillatory_variant::lemma_integral) {
        double lambda = lambda_or_xi;
        if (!(sigma >= 0.5) || lambda == 0.0 || !(T1 <= T2) || !(T1 > 0))
            throw std::domain_error("oscillatory_integral_check: bad variant-1 arguments");
        opt.max_width = [lambda](double) { return TWO_PI / (8.0 * std::fabs(lambda)); };
        auto f = [&](double t) {
            return std::polar(std::pow(t, 1.0 - 2.0 * sigma), lambda * t);
        };
        std::complex<double> v = integrate_adaptive_complex(f, T1, T2, opt);
        return {std::abs(v), 2.0 / std::fabs(lambda) * std::pow(T1, 1.0 - 2.0 * sigma)};
    }
    double xi = lambda_or_xi;
    if (!(sigma >= 0.5) || !(xi > 0) || !(xi <= T1) || !(T1 >= 2) ||
        !(T1 + std::sqrt(T1) <= T2))
        throw std::domain_error("oscillatory_integral_check: bad variant-2 arguments");
    opt.max_width = [xi](double t) {
        double freq = std::fabs(std::log(std::max(t, 1.001 * xi) / xi)) + 1e-3;
        return std::min(1.0, TWO_PI / (8.0 * freq));
    };
    auto f = [&](double t) {
        double phase = t * std::log(t / (std::numbers::e * xi));
        return std::polar(std::pow(t, 0.5 - sigma), phase);
    };
    std::complex<double> v = integrate_adaptive_complex(f, T1, T2, opt);
    double bound = 8.0 * std::pow(T1, 0.5 - sigma) /
                   std::log((T1 + std::sqrt(T1)) / xi);
    return {std::abs(v), bound};
}

}  // namespace ezeta

#endif
