#pragma once

#include "illum/rat.hpp"

#include <cmath>
#include <limits>

namespace illum {
namespace detail {

// Certified double enclosure used as a fast filter in front of exact sign
// computations. Every constructor and operation widens by enough ulps to
// absorb rounding of the underlying double arithmetic; non-finite endpoints
// mean the enclosure is unusable and the caller must fall back to exact
// arithmetic.
struct DIv {
    double lo, hi;
};

inline double div_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double div_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline DIv div_widen(double x) { return {div_down(div_down(x)), div_up(div_up(x))}; }

inline DIv div_enclose(const Int& x) { return div_widen(x.convert_to<double>()); }

inline DIv div_neg(const DIv& a) { return {-a.hi, -a.lo}; }

inline DIv div_add(const DIv& a, const DIv& b) {
    return {div_down(a.lo + b.lo), div_up(a.hi + b.hi)};
}

inline DIv div_mul(const DIv& a, const DIv& b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    double lo = std::fmin(std::fmin(p1, p2), std::fmin(p3, p4));
    double hi = std::fmax(std::fmax(p1, p2), std::fmax(p3, p4));
    return {div_down(lo), div_up(hi)};
}

inline DIv div_div(const DIv& a, const DIv& b) {
    if (b.lo <= 0 && b.hi >= 0)
        return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    double lo = std::fmin(std::fmin(q1, q2), std::fmin(q3, q4));
    double hi = std::fmax(std::fmax(q1, q2), std::fmax(q3, q4));
    return {div_down(lo), div_up(hi)};
}

inline DIv div_enclose(const Rat& x) {
    return div_div(div_enclose(numerator(x)), div_enclose(denominator(x)));
}

// Requires a nonnegative true value; clamps the lower endpoint at zero.
inline DIv div_sqrt(const DIv& a) {
    double lo = a.lo <= 0 ? 0.0 : div_down(std::sqrt(a.lo));
    double hi = a.hi <= 0 ? 0.0 : div_up(std::sqrt(a.hi));
    return {lo, hi};
}

// 1 / -1 when the enclosure decides the sign, 2 when it cannot.
inline int div_sign(const DIv& a) {
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) return 2;
    if (a.lo > 0) return 1;
    if (a.hi < 0) return -1;
    return 2;
}

}  // namespace detail
}  // namespace illum
