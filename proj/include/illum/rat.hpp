#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <stdexcept>

namespace illum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degenerate_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long long n, long long d = 1) {
    if (d == 0) throw invalid_input("rational with zero denominator");
    return Rat(Int(n), Int(d));
}

inline int sgn(const Rat& x) { return x.sign(); }

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

// Exact square root if x is a perfect square of a rational.
inline std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rat(0);
    Int n = numerator(x), d = denominator(x);
    Int rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rat(rn, rd);
}

// Rational lower/upper bounds on sqrt(x) with error below 1/2^bits.
// Requires x >= 0.
inline std::pair<Rat, Rat> sqrt_bounds(const Rat& x, unsigned bits) {
    if (x < 0) throw invalid_input("sqrt_bounds of negative value");
    if (x == 0) return {Rat(0), Rat(0)};
    Int scale = Int(1) << (2 * bits);
    // floor(sqrt(x * 4^bits))
    Int n = numerator(x) * scale, d = denominator(x);
    // floor sqrt of n/d = floor(sqrt(n*d))/d
    Int lo = sqrt(Int(n * d));
    Rat lower(lo, d << bits);
    Rat upper((lo + 1), d << bits);
    return {lower, upper};
}

inline std::string to_string(const Rat& x) {
    std::string s = numerator(x).convert_to<std::string>();
    if (denominator(x) != 1) s += "/" + denominator(x).convert_to<std::string>();
    return s;
}

// Parses "p" or "p/q" with arbitrary-precision integers; q must be nonzero.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw invalid_input("zero denominator in '" + s + "'");
        return Rat(n, d);
    } catch (const invalid_input&) {
        throw;
    } catch (const std::exception&) {
        throw invalid_input("malformed rational '" + s + "'");
    }
}

}  // namespace illum
