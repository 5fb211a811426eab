#pragma once

#include "illum/vec.hpp"

#include <cmath>
#include <optional>
#include <utility>

namespace illum {

// Direction on the unit circle, stored as an unnormalized nonzero vector
// with components in a single quadratic field Q(sqrt(d)). Directions from
// different fields compare exactly through 4-term radical sign tests.
class Dir {
public:
    Dir(Quad x, Quad y) : x_(std::move(x)), y_(std::move(y)) {
        if (x_.sign() == 0 && y_.sign() == 0) throw invalid_input("zero direction");
        d_ = x_.is_rational() ? (y_.is_rational() ? Rat(0) : y_.d()) : x_.d();
        if (!x_.is_rational() && !y_.is_rational() && x_.d() != y_.d())
            throw invalid_input("direction components from different fields");
        ex_ = detail::div_enclose(x_);
        ey_ = detail::div_enclose(y_);
    }
    Dir(const Rat& x, const Rat& y) : Dir(Quad(x), Quad(y)) {}
    explicit Dir(const V2<Rat>& v) : Dir(Quad(v.x), Quad(v.y)) {}
    explicit Dir(const V2<Quad>& v) : Dir(v.x, v.y) {}

    const Quad& x() const { return x_; }
    const Quad& y() const { return y_; }
    const Rat& field() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    V2<Rat> rational_vec() const { return {x_.rational(), y_.rational()}; }
    V2<Quad> vec() const { return {x_, y_}; }

    Dir opposite() const { return Dir(-x_, -y_); }

    static Dir reference() { return Dir(Rat(1), Rat(0)); }

    double angle_approx() const;

    const detail::DIv& encl_x() const { return ex_; }
    const detail::DIv& encl_y() const { return ey_; }

private:
    Quad x_, y_;
    Rat d_;
    detail::DIv ex_{}, ey_{};  // cached certified coordinate enclosures
};

namespace detail {

inline int sign_bilinear(const Quad& ax, const Quad& by, const Quad& ay, const Quad& bx,
                         const Rat& d1, const Rat& d2) {
    // sign of ax*by - ay*bx with a-components in Q(sqrt(d1)), b in Q(sqrt(d2))
    if (d1 == d2 || d1 == 0 || d2 == 0) return (ax * by - ay * bx).sign();
    Mixed m{Rat(0), Rat(0), Rat(0), Rat(0), d1, d2};
    m.add_product(ax, by);
    m.add_product(ay, bx, Rat(-1));
    return m.sign();
}

}  // namespace detail

inline int sign_cross(const Dir& a, const Dir& b) {
    using namespace detail;
    DIv enc = div_add(div_mul(a.encl_x(), b.encl_y()),
                      div_neg(div_mul(a.encl_y(), b.encl_x())));
    if (int s = div_sign(enc); s != 2) return s;
    return detail::sign_bilinear(a.x(), b.y(), a.y(), b.x(), a.field(), b.field());
}

inline int sign_dot(const Dir& a, const Dir& b) {
    using namespace detail;
    DIv enc = div_add(div_mul(a.encl_x(), b.encl_x()), div_mul(a.encl_y(), b.encl_y()));
    if (int s = div_sign(enc); s != 2) return s;
    return detail::sign_bilinear(a.x(), b.x(), -a.y(), b.y(), a.field(), b.field());
}

inline bool dir_equal(const Dir& a, const Dir& b) {
    return sign_cross(a, b) == 0 && sign_dot(a, b) > 0;
}

inline double Dir::angle_approx() const {
    return std::atan2(y_.approx(), x_.approx());
}

// Position class of x relative to s: 0 equal, 1 in the open half-turn after
// s, 2 opposite, 3 in the open half-turn before s.
inline int pos_class(const Dir& s, const Dir& x) {
    int c = sign_cross(s, x);
    if (c > 0) return 1;
    if (c < 0) return 3;
    return sign_dot(s, x) > 0 ? 0 : 2;
}

// Compares angular offsets from s: theta_s in [0, 2pi). Returns -1/0/1.
inline int cmp_from(const Dir& s, const Dir& u, const Dir& v) {
    int ku = pos_class(s, u), kv = pos_class(s, v);
    if (ku != kv) return ku < kv ? -1 : 1;
    if (ku == 0 || ku == 2) return 0;
    int c = sign_cross(u, v);
    return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

inline Dir dir_east() { return Dir(Rat(1), Rat(0)); }

// Strict global CCW order anchored at (1,0); ties are equal directions.
inline bool ccw_less(const Dir& u, const Dir& v) {
    return cmp_from(dir_east(), u, v) < 0;
}

// Rational point on the unit circle with tangent-half parameter t.
inline Dir unit_dir_from_tan_half(const Rat& t) {
    Rat t2 = t * t;
    return Dir((1 - t2) / (1 + t2), 2 * t / (1 + t2));
}

// Is x strictly inside the open CCW arc from u to v? With u == v the arc is
// the full circle minus u.
inline bool strictly_between(const Dir& u, const Dir& x, const Dir& v) {
    if (dir_equal(u, x) || dir_equal(x, v)) return false;
    if (dir_equal(u, v)) return true;
    return cmp_from(u, x, v) < 0;
}

// A rational unit direction strictly inside the open CCW arc (u, v).
// Exact: a double-precision guess is verified with exact predicates, and a
// certified tangent-half bisection is the fallback.
Dir rational_dir_between(const Dir& u, const Dir& v);

namespace detail {

inline std::optional<Dir> try_candidate(const Rat& t, const Dir& u, const Dir& v) {
    Dir c = unit_dir_from_tan_half(t);
    if (strictly_between(u, c, v)) return c;
    return std::nullopt;
}

}  // namespace detail

inline Dir rational_dir_between(const Dir& u, const Dir& v) {
    Dir west(Rat(-1), Rat(0));
    if (strictly_between(u, west, v)) return west;

    // Full circle minus u: any direction different from u works.
    if (dir_equal(u, v)) {
        for (long long k : {0LL, 1LL, -1LL, 2LL}) {
            if (auto c = detail::try_candidate(Rat(k), u, u)) return *c;
        }
    }

    // Arcs with an endpoint at west: the tangent-half curve approaches west
    // from inside such an arc, so a large-|t| sample lands in it.
    if (dir_equal(u, west)) {
        Rat lo(-2);
        for (int k = 0; k < 512; ++k, lo = lo * 2)
            if (auto c = detail::try_candidate(lo, u, v)) return *c;
        throw invalid_input("empty arc");
    }
    if (dir_equal(v, west)) {
        Rat hi(2);
        for (int k = 0; k < 512; ++k, hi = hi * 2)
            if (auto c = detail::try_candidate(hi, u, v)) return *c;
        throw invalid_input("empty arc");
    }

    // Stern-Brocot descent over the tangent-half parameter, yielding the
    // smallest-denominator rational direction in the arc. The arc does not
    // contain west (tested above), so ord(u) < ord(v) in the order anchored
    // just after west and the preimage is a bounded t-interval on which the
    // parametrization is monotone.
    auto ord_le = [&](const Dir& a, const Dir& b) { return cmp_from(west, a, b) <= 0; };
    auto ord_ge = [&](const Dir& a, const Dir& b) { return cmp_from(west, a, b) >= 0; };
    Int ln(-1), ld(0), hn(1), hd(0);  // mediant tree bounds, start at +-infinity
    {
        // Root the tree at t = 0 by hand; the mediant of the two infinite
        // bounds is indeterminate.
        Dir c = unit_dir_from_tan_half(Rat(0));
        if (ord_le(c, u)) {
            ln = 0;
            ld = 1;
        } else if (ord_ge(c, v)) {
            hn = 0;
            hd = 1;
        } else {
            return c;
        }
    }
    for (int it = 0; it < 100000; ++it) {
        Int mn = ln + hn, md = ld + hd;
        Dir c = unit_dir_from_tan_half(Rat(mn, md));
        if (ord_le(c, u)) {
            // Gallop: take the largest power-of-two multiple of the high
            // bound that still lands at or below u, so runs of same-side
            // steps cost logarithmically many exact tests.
            Int k(1);
            while (true) {
                Int k2 = k * 2;
                Int tn = ln + k2 * hn, td = ld + k2 * hd;
                if (!ord_le(unit_dir_from_tan_half(Rat(tn, td)), u)) break;
                k = k2;
            }
            ln = ln + k * hn;
            ld = ld + k * hd;
        } else if (ord_ge(c, v)) {
            Int k(1);
            while (true) {
                Int k2 = k * 2;
                Int tn = k2 * ln + hn, td = k2 * ld + hd;
                if (!ord_ge(unit_dir_from_tan_half(Rat(tn, td)), v)) break;
                k = k2;
            }
            hn = k * ln + hn;
            hd = k * ld + hd;
        } else {
            return c;
        }
    }
    throw invalid_input("rational_dir_between failed to converge");
}

}  // namespace illum
