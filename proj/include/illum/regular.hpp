#pragma once

#include "illum/piercing.hpp"
#include "illum/polygon.hpp"

namespace illum {

// Direction given as a rational fraction of a full counterclockwise turn,
// normalized to [0, 1). Exact for any regular polygon's vertex cones, whose
// endpoints are rational turns even when the vertex coordinates are not
// representable in a quadratic field.
struct TurnDir {
    Rat t;

    TurnDir() : t(0) {}
    explicit TurnDir(Rat turns) : t(normalize(std::move(turns))) {}

    static TurnDir reference() { return TurnDir(); }

    static Rat normalize(Rat x) {
        Int n = numerator(x), d = denominator(x);
        Int m = n % d;
        if (m < 0) m += d;
        return Rat(m, d);
    }
};

inline bool dir_equal(const TurnDir& a, const TurnDir& b) { return a.t == b.t; }

inline bool ccw_less(const TurnDir& a, const TurnDir& b) { return a.t < b.t; }

inline int cmp_from(const TurnDir& a, const TurnDir& x, const TurnDir& y) {
    Rat dx = TurnDir::normalize(x.t - a.t), dy = TurnDir::normalize(y.t - a.t);
    return dx < dy ? -1 : (dx > dy ? 1 : 0);
}

// Is w strictly inside the counterclockwise arc from u to v? u = v reads as
// the full circle minus u, matching the vector-direction overload.
inline bool strictly_between(const TurnDir& u, const TurnDir& w, const TurnDir& v) {
    Rat dw = TurnDir::normalize(w.t - u.t), dv = TurnDir::normalize(v.t - u.t);
    if (dv == 0) return dw > 0;
    return dw > 0 && dw < dv;
}

inline TurnDir rational_dir_between(const TurnDir& u, const TurnDir& v) {
    Rat span = TurnDir::normalize(v.t - u.t);
    if (span == 0) span = Rat(1);
    return TurnDir(Rat(u.t + span / 2));
}

// Vertex tangent cones of the regular n-gon with vertex k at turn k/n,
// translated to directions: the cone at vertex k spans the chords toward
// its neighbors, turns k/n + 1/4 + 1/(2n) through k/n + 3/4 - 1/(2n).
inline ArcFamilyT<TurnDir> regular_vertex_cone_arcs(unsigned n, Mode mode) {
    if (n < 3) throw invalid_input("regular polygon needs n >= 3");
    bool closed = mode == Mode::Closed;
    ArcFamilyT<TurnDir> arcs;
    for (unsigned k = 0; k < n; ++k) {
        Rat base(k, n);
        TurnDir s(Rat(base + Rat(1, 4) + Rat(1, 2 * n)));
        TurnDir e(Rat(base + Rat(3, 4) - Rat(1, 2 * n)));
        arcs.push_back(ArcT<TurnDir>::make(s, e, closed, closed));
    }
    return arcs;
}

// Finiteness of the circumradius-step count for the regular n-gon: all
// vertices touch the circumcircle, so the criterion is coverage by the
// closed cone arcs.
inline bool regular_finite_at_circumradius(unsigned n) {
    return circle_covered(regular_vertex_cone_arcs(n, Mode::Closed));
}

inline std::size_t regular_number_i(unsigned n) {
    return min_piercing(regular_vertex_cone_arcs(n, Mode::Closed)).size();
}

inline std::size_t regular_number_c(unsigned n) {
    return min_piercing(regular_vertex_cone_arcs(n, Mode::Interior)).size();
}

// Exact coordinates exist in the supported scalars only for n in {3, 4, 6}
// (n = 4 rational, n in {3, 6} in the sqrt(3) field).
inline bool regular_ngon_representable(unsigned n) { return n == 3 || n == 4 || n == 6; }

inline ConvexPolygon<Rat> regular_square(const Rat& circumradius) {
    if (circumradius <= 0) throw invalid_input("circumradius must be positive");
    const Rat& r = circumradius;
    return make_polygon<Rat>({{r, Rat(0)}, {Rat(0), r}, {-r, Rat(0)}, {Rat(0), -r}});
}

inline ConvexPolygon<Quad> regular_triangle(const Rat& circumradius) {
    if (circumradius <= 0) throw invalid_input("circumradius must be positive");
    Quad r{circumradius};
    Quad h = Quad::sqrt_of(Rat(3)) / Quad(2) * r;
    Quad half = r / Quad(2);
    return make_polygon<Quad>({{r, Quad(0)}, {-half, h}, {-half, -h}});
}

inline ConvexPolygon<Quad> regular_hexagon(const Rat& circumradius) {
    if (circumradius <= 0) throw invalid_input("circumradius must be positive");
    Quad r{circumradius};
    Quad h = Quad::sqrt_of(Rat(3)) / Quad(2) * r;
    Quad half = r / Quad(2);
    return make_polygon<Quad>(
        {{r, Quad(0)}, {half, h}, {-half, h}, {-r, Quad(0)}, {-half, -h}, {half, -h}});
}

}  // namespace illum
