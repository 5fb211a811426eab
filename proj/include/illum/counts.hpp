#pragma once

#include "illum/cover.hpp"
#include "illum/illuminate.hpp"
#include "illum/piercing.hpp"

#include <array>

namespace illum {

struct NumberResult {
    std::size_t value = 0;
    std::vector<Dir> dirs;
};

namespace detail {

template <class S>
ArcFamilyT<Dir> vertex_cone_arcs(const ConvexPolygon<S>& K, Mode mode) {
    ArcFamilyT<Dir> arcs;
    for (std::size_t i = 0; i < K.size(); ++i)
        arcs.push_back(tangent_cone_arc(K, K.vertex(i), mode));
    return arcs;
}

}  // namespace detail

// Minimum number of directions t-illuminating K: pierce the closed vertex
// cones.
template <class S>
NumberResult number_i(const ConvexPolygon<S>& K) {
    auto r = min_piercing(detail::vertex_cone_arcs(K, Mode::Closed));
    return {r.size(), std::move(r.dirs)};
}

// Minimum number of directions illuminating K: pierce the open vertex cones.
template <class S>
NumberResult number_c(const ConvexPolygon<S>& K) {
    auto r = min_piercing(detail::vertex_cone_arcs(K, Mode::Interior));
    return {r.size(), std::move(r.dirs)};
}

namespace detail {

inline bool dir_as_vec(const Dir& d, V2<Rat>& out) {
    if (!d.is_rational()) return false;
    out = d.rational_vec();
    return true;
}
inline bool dir_as_vec(const Dir& d, V2<Quad>& out) {
    out = d.vec();
    return true;
}

}  // namespace detail

template <class S>
struct TBounds {
    std::size_t lo = 0, hi = 0;
    std::vector<V2<S>> hi_certificate;  // verified closed cover of size hi
};

// Bracket for the translative covering number: lo from t-illumination, hi
// from the smallest verified translate cover found by scaling illumination
// directions. hi is sound (certificate re-verifies) but not claimed tight.
template <class S>
TBounds<S> number_t_bounds(const ConvexPolygon<S>& K) {
    NumberResult ni = number_i(K);
    NumberResult nc = number_c(K);
    TBounds<S> out;
    out.lo = ni.value;

    auto try_dirs = [&](const std::vector<Dir>& dirs) -> bool {
        std::vector<V2<S>> base;
        for (const auto& d : dirs) {
            V2<S> v;
            if (!detail::dir_as_vec(d, v)) return false;
            base.push_back(-v);  // negated illumination directions cover
        }
        S delta(1);
        for (int k = 0; k < 12; ++k) {
            delta = delta / S(2);
            std::vector<V2<S>> ts;
            for (const auto& v : base) ts.push_back(delta * v);
            if (cover_residual(K, ts, Mode::Closed).covered) {
                out.hi_certificate = std::move(ts);
                return true;
            }
        }
        return false;
    };

    if (try_dirs(ni.dirs)) {
        out.hi = ni.value;
    } else if (try_dirs(nc.dirs)) {
        out.hi = nc.value;
    } else {
        throw degenerate_input("no verified translate cover found");
    }
    return out;
}

template <class S>
struct FinitenessCert {
    std::vector<V2<S>> contact_vertices;
    ArcFamilyT<Dir> arcs;  // closed tangent cones of the contacts
    bool verdict = false;
    std::optional<Dir> gap_witness;
};

// Is the quantified illumination number finite exactly at the circumradius?
// Criterion: the closed tangent cones of the circumball contact vertices,
// read as direction arcs, cover the full circle.
template <class S>
FinitenessCert<S> finite_at_circumradius(const ConvexPolygon<S>& K) {
    FinitenessCert<S> cert;
    auto B = circumball(K);
    cert.contact_vertices = contact_set(K, B);
    for (const auto& v : cert.contact_vertices)
        cert.arcs.push_back(tangent_cone_arc(K, v, Mode::Closed));
    auto gap = circle_coverage_gap(cert.arcs);
    cert.verdict = !gap.has_value();
    if (gap) cert.gap_witness = gap->witness;
    return cert;
}

// Same coverage test restricted to a chosen subset of contact vertices.
template <class S>
bool contact_subset_covers(const ConvexPolygon<S>& K, const std::vector<V2<S>>& subset) {
    auto B = circumball(K);
    auto contacts = contact_set(K, B);
    ArcFamilyT<Dir> arcs;
    for (const auto& v : subset) {
        bool is_contact = false;
        for (const auto& c : contacts)
            if (c == v) is_contact = true;
        if (!is_contact) throw invalid_input("subset contains a non-contact vertex");
        arcs.push_back(tangent_cone_arc(K, v, Mode::Closed));
    }
    return circle_covered(arcs);
}

// At most three contact vertices per circumcircle quarter: the two extremal
// ones and one in between. Quarters are half-open [start, end) anchored at
// direction (1,0) from the circumcenter; coverage by the full contact set
// implies coverage by this selection.
template <class S>
std::vector<V2<S>> construct_H(const ConvexPolygon<S>& K) {
    auto B = circumball(K);
    auto contacts = contact_set(K, B);
    std::array<std::vector<V2<S>>, 4> quarter;
    for (const auto& v : contacts) {
        V2<S> d = v - B.center;
        int sx = sgn(d.x), sy = sgn(d.y);
        int q;
        if (sx > 0 && sy >= 0)
            q = 0;
        else if (sx <= 0 && sy > 0)
            q = 1;
        else if (sx < 0 && sy <= 0)
            q = 2;
        else
            q = 3;
        quarter[static_cast<std::size_t>(q)].push_back(v);
    }
    // Contacts inherit the polygon's CCW order; within one quarter that
    // order is angular except when the list wraps past the quarter anchor,
    // so sort each quarter explicitly.
    std::vector<V2<S>> H;
    for (auto& qs : quarter) {
        std::sort(qs.begin(), qs.end(), [&](const V2<S>& a, const V2<S>& b) {
            return ccw_less(Dir(lift(a - B.center)), Dir(lift(b - B.center)));
        });
        if (qs.size() <= 2) {
            for (const auto& v : qs) H.push_back(v);
        } else {
            H.push_back(qs.front());
            H.push_back(qs[qs.size() / 2]);
            H.push_back(qs.back());
        }
    }
    return H;
}

}  // namespace illum
