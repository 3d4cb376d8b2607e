#ifndef EZETA_NUMUTIL_HPP
#define EZETA_NUMUTIL_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ezeta {

inline constexpr double PI = 3.14159265358979323846264338327950288;
inline constexpr double TWO_PI = 2.0 * PI;
inline constexpr double EULER_GAMMA = 0.57721566490153286060651209008240243;
inline constexpr double SQRT2 = 1.41421356237309504880168872420969808;
inline constexpr double LOG2 = 0.69314718055994530941723212145817657;

// Height below which RH is verified; input constant to the final theorem.
inline constexpr double H0_RH_HEIGHT = 3.0610046e10;

// Thrown when a named admissibility condition fails; `condition()` carries the
// tag, e.g. "(b)".
class constraint_error : public std::runtime_error {
  public:
    constraint_error(std::string condition, const std::string& what)
        : std::runtime_error(what), condition_(std::move(condition)) {}
    const std::string& condition() const { return condition_; }

  private:
    std::string condition_;
};

class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class tolerance_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class integrity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Ceiling at `decimals` decimal digits, guarded so that values within a few
// ulps below a representable decimal do not get bumped one step too far.
inline double round_up_decimal(double x, int decimals) {
    double scale = std::pow(10.0, decimals);
    double y = x * scale;
    double guard = std::fabs(y) * 5e-14 + 1e-300;
    return std::ceil(y - guard) / scale;
}

inline double round_down_decimal(double x, int decimals) {
    double scale = std::pow(10.0, decimals);
    double y = x * scale;
    double guard = std::fabs(y) * 5e-14 + 1e-300;
    return std::floor(y + guard) / scale;
}

// published-value comparison: derived must not exceed published by more than
// one printed ulp, and its round-up must land within one printed ulp.
struct golden_check {
    bool reproduced;   // round_up(derived) == published (exact at printed precision)
    bool within_ulp;   // |round_up(derived) - published| <= 1 printed ulp
    bool not_exceeding;// derived <= published + 1 printed ulp
    double rounded;
};

inline golden_check check_against_published(double derived, double published, int decimals) {
    double ulp = std::pow(10.0, -decimals);
    double r = round_up_decimal(derived, decimals);
    golden_check g;
    g.rounded = r;
    g.reproduced = std::fabs(r - published) < 0.25 * ulp;
    g.within_ulp = std::fabs(r - published) < 1.25 * ulp;
    g.not_exceeding = derived <= published + 1.25 * ulp;
    return g;
}

// Compensated (Kahan–Neumaier) accumulator.
struct kahan_sum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

// Deterministic sampler: mt19937_64 has a pinned algorithm, and the mapping
// below avoids the implementation-defined std distributions.
class sampler {
  public:
    explicit sampler(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    double log_uniform(double a, double b) {
        return std::exp(uniform(std::log(a), std::log(b)));
    }
    std::uint64_t integer(std::uint64_t n) {  // 0..n-1
        return eng_() % n;
    }

  private:
    std::mt19937_64 eng_;
};

// One-dimensional golden-section minimization on [a, b].
template <class F>
std::pair<double, double> golden_section_min(F&& f, double a, double b, double xtol) {
    const double invphi = 0.61803398874989484820;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

template <class F>
std::pair<double, double> golden_section_max(F&& f, double a, double b, double xtol) {
    auto [x, fx] = golden_section_min([&](double t) { return -f(t); }, a, b, xtol);
    return {x, -fx};
}

}  // namespace ezeta

#endif
