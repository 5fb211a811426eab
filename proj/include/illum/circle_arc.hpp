#pragma once

#include "illum/arc.hpp"
#include "illum/eps.hpp"
#include "illum/polygon.hpp"

namespace illum {

namespace detail {

inline Rat field_of(const Rat&) { return Rat(0); }
inline Rat field_of(const Quad& q) { return q.d(); }

template <class S>
Rat ambient_field(const ConvexPolygon<S>& K) {
    for (const auto& v : K.vertices()) {
        if (Rat d = field_of(v.x); d != 0) return d;
        if (Rat d = field_of(v.y); d != 0) return d;
    }
    return Rat(0);
}

// sqrt(x) as a Quad, inside Q(sqrt(ambient)) when x is irrationally rooted.
inline Quad sqrt_as_quad(const Quad& x, const Rat& ambient) {
    if (x.is_rational() && !rational_sqrt(x.a()) && ambient == 0)
        return Quad::sqrt_of(x.a());  // fresh field
    if (auto s = sqrt_in_field(x, ambient)) return *s;
    throw invalid_input("square root leaves the supported quadratic field");
}

}  // namespace detail

// Arc family of admissible step directions; exact is false when some arc
// had to be rounded outward because its true endpoints leave the supported
// quadratic fields. A rounded family is a superset of the true one.
struct CircleArcs {
    ArcFamilyT<Dir> family;
    bool exact = true;
};

namespace detail {

// Directions r on the unit circle with x + eps*r in K (Closed) resp. int K
// (Interior), as a family of arcs; eps passed squared. The set is an
// intersection of per-edge circle segments, so it is connected up to the
// closed/open endpoint bookkeeping, but at eps = R(K) it degenerates into
// isolated directions, hence a family rather than a single arc. round_bits
// zero demands exact endpoints; positive permits certified outward
// rounding (closed, wider arcs) when the square root leaves the field.
template <class S>
CircleArcs circle_arcs_impl(const ConvexPolygon<S>& K, const V2<S>& x, const S& eps_sq, Mode mode,
                            unsigned round_bits) {
    if (sgn(eps_sq) <= 0) throw invalid_input("eps must be positive");
    if (!contains(K, x, Mode::Closed)) throw invalid_input("point outside the body");
    const Rat ambient = detail::ambient_field(K);
    const bool closed = (mode == Mode::Closed);

    CircleArcs out;
    out.family = {ArcT<Dir>::full_circle()};
    auto restrict_to = [&](const ArcFamilyT<Dir>& allowed) {
        ArcFamilyT<Dir> next;
        for (const auto& a : out.family)
            for (const auto& b : allowed)
                for (auto& piece : intersect_arcs(a, b)) next.push_back(std::move(piece));
        out.family = std::move(next);
    };

    for (std::size_t e = 0; e < K.size() && !out.family.empty(); ++e) {
        V2<S> n = perp(K.vertex(e + 1) - K.vertex(e));  // inner normal
        S w = dot(x, n) - dot(K.vertex(e), n);          // >= 0 since x in K
        S disc = eps_sq * norm_sq(n) - w * w;
        int sd = sgn(disc);
        if (sd < 0) continue;  // circle entirely inside this half-plane
        if (sd == 0) {
            if (closed) continue;
            // Tangency: only the inward-opposite direction is excluded.
            Dir ex(lift(-n));
            Dir opp = ex.opposite();
            restrict_to({ArcT<Dir>::make(ex, opp, false, true),
                         ArcT<Dir>::make(opp, ex, true, false)});
            continue;
        }
        Quad s;
        bool seg_closed = closed;
        if (round_bits == 0) {
            s = detail::sqrt_as_quad(Quad(disc), ambient);
        } else {
            try {
                s = detail::sqrt_as_quad(Quad(disc), ambient);
            } catch (const invalid_input&) {
                // Certified rational upper bound on sqrt(disc); widening
                // keeps every true direction inside the arc.
                Rat hi = Quad(disc).bounds(round_bits).second;
                s = Quad(sqrt_bounds(hi, round_bits).second);
                seg_closed = true;
                out.exact = false;
            }
        }
        V2<Quad> nq = lift(n), pq = perp(nq);
        Quad wq(w);
        V2<Quad> a{-wq * nq.x - s * pq.x, -wq * nq.y - s * pq.y};
        V2<Quad> b{-wq * nq.x + s * pq.x, -wq * nq.y + s * pq.y};
        restrict_to({ArcT<Dir>::make(Dir(a), Dir(b), seg_closed, seg_closed)});
    }
    return out;
}

}  // namespace detail

template <class S>
ArcFamilyT<Dir> circle_polygon_arcs(const ConvexPolygon<S>& K, const V2<S>& x, const S& eps_sq,
                                    Mode mode) {
    return detail::circle_arcs_impl(K, x, eps_sq, mode, 0).family;
}

template <class S>
CircleArcs circle_polygon_arcs_rounded(const ConvexPolygon<S>& K, const V2<S>& x, const S& eps_sq,
                                       Mode mode, unsigned round_bits) {
    return detail::circle_arcs_impl(K, x, eps_sq, mode, round_bits);
}

}  // namespace illum
