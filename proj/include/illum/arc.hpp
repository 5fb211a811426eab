#pragma once

#include "illum/dir.hpp"

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

namespace illum {

struct empty_arc_error : invalid_input {
    using invalid_input::invalid_input;
};

// CCW arc of directions from s to e with individually open or closed
// endpoints. s == e with both endpoints closed is a legal single-direction
// arc; the open variants of that are empty and rejected.
template <class D>
struct ArcT {
    D s, e;
    bool s_closed = true;
    bool e_closed = true;
    bool full = false;

    static ArcT full_circle() {
        ArcT a{D::reference(), D::reference(), true, true, true};
        return a;
    }

    static ArcT make(D start, D end, bool start_closed, bool end_closed) {
        if (dir_equal(start, end) && !(start_closed && end_closed))
            throw empty_arc_error("degenerate open arc is empty");
        return ArcT{std::move(start), std::move(end), start_closed, end_closed, false};
    }

    bool is_point() const { return !full && dir_equal(s, e); }
};

template <class D>
using ArcFamilyT = std::vector<ArcT<D>>;

template <class D>
bool arc_contains(const ArcT<D>& a, const D& d) {
    if (a.full) return true;
    if (dir_equal(d, a.s)) return a.s_closed;
    if (dir_equal(d, a.e)) return a.e_closed;
    if (a.is_point()) return false;
    return strictly_between(a.s, d, a.e);
}

// Does the arc contain the whole open atom (u, v) of an endpoint
// arrangement? Valid only when u, v are consecutive arrangement directions
// and every arc endpoint is an arrangement direction.
template <class D>
bool arc_covers_atom(const ArcT<D>& a, const D& u, const D& /*v*/) {
    if (a.full) return true;
    if (a.is_point()) return false;
    return dir_equal(u, a.s) || strictly_between(a.s, u, a.e);
}

// Sorted, deduplicated endpoint directions of all non-full arcs.
template <class D>
std::vector<D> arrangement_dirs(const ArcFamilyT<D>& arcs) {
    std::vector<D> pts;
    for (const auto& a : arcs) {
        if (a.full) continue;
        pts.push_back(a.s);
        pts.push_back(a.e);
    }
    std::sort(pts.begin(), pts.end(), [](const D& x, const D& y) { return ccw_less(x, y); });
    std::vector<D> out;
    for (const auto& p : pts)
        if (out.empty() || !dir_equal(out.back(), p)) out.push_back(p);
    return out;
}

template <class D>
struct CoverageGap {
    D witness;
};

// Full-circle coverage test. Exact: endpoint atoms are tested directly and
// each open atom of the endpoint arrangement has a constant hit pattern.
template <class D>
std::optional<CoverageGap<D>> circle_coverage_gap(const ArcFamilyT<D>& arcs) {
    for (const auto& a : arcs)
        if (a.full) return std::nullopt;
    auto pts = arrangement_dirs(arcs);
    if (pts.empty()) return CoverageGap<D>{D::reference()};
    auto hit_point = [&](const D& p) {
        for (const auto& a : arcs)
            if (arc_contains(a, p)) return true;
        return false;
    };
    for (const auto& p : pts)
        if (!hit_point(p)) return CoverageGap<D>{p};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const D& u = pts[i];
        const D& v = pts[(i + 1) % pts.size()];
        if (pts.size() == 1 || !dir_equal(u, v)) {
            bool covered = false;
            for (const auto& a : arcs)
                if (arc_covers_atom(a, u, v)) {
                    covered = true;
                    break;
                }
            if (!covered) return CoverageGap<D>{rational_dir_between(u, v)};
        }
    }
    return std::nullopt;
}

template <class D>
bool circle_covered(const ArcFamilyT<D>& arcs) {
    return !circle_coverage_gap(arcs).has_value();
}

// Intersection of two arcs: zero, one, or two arcs. Works in the angular
// coordinate anchored at a.s, where a = [0, alpha] and b is a linear or
// wrapping interval; all result endpoints are endpoints of the inputs.
template <class D>
std::vector<ArcT<D>> intersect_arcs(const ArcT<D>& a, const ArcT<D>& b) {
    if (a.full) return {b};
    if (b.full) return {a};
    if (a.is_point()) return arc_contains(b, a.s) ? std::vector<ArcT<D>>{a} : std::vector<ArcT<D>>{};
    if (b.is_point()) return arc_contains(a, b.s) ? std::vector<ArcT<D>>{b} : std::vector<ArcT<D>>{};

    // Endpoint closedness of d as a member of arc (interior points closed).
    auto closed_at = [](const ArcT<D>& arc, const D& d) {
        if (dir_equal(d, arc.s)) return arc.s_closed;
        if (dir_equal(d, arc.e)) return arc.e_closed;
        return true;
    };

    std::vector<ArcT<D>> out;
    auto emit = [&](const D& s, const D& e) {
        bool sc = closed_at(a, s) && closed_at(b, s);
        bool ec = closed_at(a, e) && closed_at(b, e);
        if (dir_equal(s, e)) {
            if (sc && ec) out.push_back(ArcT<D>{s, e, true, true, false});
        } else {
            out.push_back(ArcT<D>{s, e, sc, ec, false});
        }
    };

    // ord(x) = angular offset from a.s; cmp(x, y) compares offsets.
    auto cmp = [&](const D& x, const D& y) { return cmp_from(a.s, x, y); };
    bool b_wraps = cmp(b.e, b.s) < 0;  // b passes through a.s's angle zero

    if (!b_wraps) {
        // Linear intervals [0, ord(a.e)] and [ord(b.s), ord(b.e)].
        const D& hi = cmp(a.e, b.e) <= 0 ? a.e : b.e;
        if (cmp(b.s, hi) <= 0) emit(b.s, hi);
    } else {
        // b = [ord(b.s), 2pi] U [0, ord(b.e)].
        if (cmp(b.s, a.e) <= 0) emit(b.s, a.e);
        const D& hi = cmp(a.e, b.e) <= 0 ? a.e : b.e;
        emit(a.s, hi);
    }
    return out;
}

}  // namespace illum
