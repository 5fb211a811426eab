#pragma once

#include "illum/polygon.hpp"

#include <optional>
#include <vector>

namespace illum {

template <class S>
struct CoverVerdict {
    bool covered = false;
    std::optional<V2<S>> witness;   // a point of K missed by every translate
    std::vector<V2<S>> witnesses;  // one interior point per surviving piece
};

namespace detail {

// Convex region as a raw CCW vertex loop; may be degenerate (area 0).
template <class S>
using Loop = std::vector<V2<S>>;

template <class S>
S loop_doubled_area(const Loop<S>& v) {
    S acc{};
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        acc = acc + cross(v[i] - v[0], v[i + 1] - v[0]);
    return acc;
}

// Clip a convex CCW loop by the closed half-plane cross(b-a, p-a) >= 0.
template <class S>
Loop<S> clip_halfplane(const Loop<S>& poly, const V2<S>& a, const V2<S>& b) {
    Loop<S> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const V2<S>& p = poly[i];
        const V2<S>& q = poly[(i + 1) % n];
        int sp = sgn(cross(b - a, p - a));
        int sq = sgn(cross(b - a, q - a));
        if (sp >= 0) out.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            S t = cross(b - a, p - a) / cross(b - a, p - q);  // intersection parameter
            out.push_back(p + t * (q - p));
        }
    }
    // Dedup consecutive equal points.
    Loop<S> dedup;
    for (const auto& p : out)
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    if (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return dedup;
}

// Pieces of piece \ Q: for each edge j of Q, the part of the piece strictly
// beyond edge j and within edges 0..j-1. Zero-area pieces are dropped: the
// uncovered set is relatively open in K, so nonemptiness implies positive
// area.
template <class S>
std::vector<Loop<S>> subtract_convex(const Loop<S>& piece, const ConvexPolygon<S>& Q) {
    std::vector<Loop<S>> out;
    const std::size_t m = Q.size();
    Loop<S> kept = piece;  // region inside edges processed so far
    for (std::size_t j = 0; j < m && kept.size() >= 3; ++j) {
        const V2<S>& a = Q.vertex(j);
        const V2<S>& b = Q.vertex(j + 1);
        Loop<S> outside = clip_halfplane(kept, b, a);  // reversed: cross <= 0 side
        if (outside.size() >= 3 && sgn(loop_doubled_area(outside)) > 0) out.push_back(outside);
        kept = clip_halfplane(kept, a, b);
    }
    return out;
}

// Strictly interior rational-in-S point of a positive-area loop.
template <class S>
V2<S> loop_interior_point(const Loop<S>& v) {
    S cx{}, cy{}, area{};
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        S a = cross(v[i] - v[0], v[i + 1] - v[0]);
        cx = cx + a * (v[0].x + v[i].x + v[i + 1].x);
        cy = cy + a * (v[0].y + v[i].y + v[i + 1].y);
        area = area + a;
    }
    S three(3);
    return {cx / (three * area), cy / (three * area)};
}

}  // namespace detail

// Does the union of K + t_i cover K? Closed: exact convex-difference
// decomposition; a surviving positive-area piece yields an interior witness.
// Interior: additionally sweeps the translate boundary segments inside K,
// since points covered only by translate boundaries are invisible to the
// area computation.
template <class S>
CoverVerdict<S> cover_residual(const ConvexPolygon<S>& K, const std::vector<V2<S>>& translations,
                               Mode mode) {
    if (translations.empty()) throw invalid_input("no translations");
    std::vector<ConvexPolygon<S>> ts;
    for (const auto& t : translations) ts.push_back(K.translated(t));

    std::vector<detail::Loop<S>> pieces = {K.vertices()};
    for (const auto& T : ts) {
        std::vector<detail::Loop<S>> next;
        for (const auto& p : pieces)
            for (auto& q : detail::subtract_convex(p, T)) next.push_back(std::move(q));
        pieces = std::move(next);
        if (pieces.empty()) break;
    }
    if (!pieces.empty()) {
        CoverVerdict<S> out;
        out.covered = false;
        for (std::size_t i = 0; i < pieces.size() && out.witnesses.size() < 8; ++i)
            out.witnesses.push_back(detail::loop_interior_point(pieces[i]));
        out.witness = out.witnesses.front();
        return out;
    }
    if (mode == Mode::Closed) return {true, std::nullopt, {}};

    // Interior mode: every point of K lies in some closed translate; check
    // the 1-D leftovers on translate boundaries.
    auto in_some_open = [&](const V2<S>& p) {
        for (const auto& T : ts)
            if (contains(T, p, Mode::Interior)) return true;
        return false;
    };
    for (const auto& T : ts) {
        for (std::size_t e = 0; e < T.size(); ++e) {
            // Segment = edge of T clipped to K.
            detail::Loop<S> seg = {T.vertex(e), T.vertex(e + 1)};
            // Clip the segment to K as a parameter interval.
            V2<S> A = seg[0], B = seg[1];
            S lo(0), hi(1);
            bool alive = true;
            for (std::size_t f = 0; f < K.size() && alive; ++f) {
                const V2<S>& a = K.vertex(f);
                const V2<S>& b = K.vertex(f + 1);
                S fa = cross(b - a, A - a), fb = cross(b - a, B - a);
                int sa = sgn(fa), sb = sgn(fb);
                if (sa >= 0 && sb >= 0) continue;
                if (sa < 0 && sb < 0) {
                    alive = false;
                    break;
                }
                S t = fa / (fa - fb);  // crossing parameter
                if (sa < 0) {
                    if (sgn(t - lo) > 0) lo = t;
                } else {
                    if (sgn(t - hi) < 0) hi = t;
                }
            }
            if (!alive || sgn(hi - lo) < 0) continue;
            // Split at crossings with all translate edge lines.
            std::vector<S> cuts = {lo, hi};
            for (const auto& U : ts)
                for (std::size_t g = 0; g < U.size(); ++g) {
                    const V2<S>& a = U.vertex(g);
                    const V2<S>& b = U.vertex(g + 1);
                    S fa = cross(b - a, A - a), fb = cross(b - a, B - a);
                    if (sgn(fa - fb) == 0) continue;  // parallel
                    S t = fa / (fa - fb);
                    if (sgn(t - lo) > 0 && sgn(hi - t) > 0) cuts.push_back(t);
                }
            std::sort(cuts.begin(), cuts.end(), [](const S& x, const S& y) { return sgn(x - y) < 0; });
            auto at = [&](const S& t) { return A + t * (B - A); };
            for (std::size_t i = 0; i < cuts.size(); ++i) {
                V2<S> p = at(cuts[i]);
                if (!in_some_open(p)) return {false, p, {p}};
                if (i + 1 < cuts.size() && sgn(cuts[i + 1] - cuts[i]) > 0) {
                    V2<S> m = at(S((cuts[i] + cuts[i + 1]) / S(2)));
                    if (!in_some_open(m)) return {false, m, {m}};
                }
            }
        }
    }
    return {true, std::nullopt, {}};
}

}  // namespace illum
