#ifndef EZETA_STRIP_POINT_HPP
#define EZETA_STRIP_POINT_HPP

#include <cmath>
#include <stdexcept>

namespace ezeta {

// A point s = sigma + i t.  Oracle-facing operations reject |t| > 1e6 (the
// practical precision ceiling); bound formulas accept anything finite.
struct StripPoint {
    double sigma = 0.0;
    double t = 0.0;

    StripPoint() = default;
    StripPoint(double s, double tt) : sigma(s), t(tt) {}

    StripPoint conjugated() const { return {sigma, -t}; }
    double abs_t() const { return std::fabs(t); }
};

inline constexpr double ORACLE_T_CEILING = 1e6;

inline void require_oracle_height(const StripPoint& s) {
    if (!(std::fabs(s.t) <= ORACLE_T_CEILING))
        throw std::domain_error("oracle: |t| exceeds 1e6 precision ceiling");
}

}  // namespace ezeta

#endif
