#pragma once

#include "illum/circle_arc.hpp"
#include "illum/cover.hpp"
#include "illum/piercing.hpp"

#include <algorithm>
#include <random>

namespace illum {

struct SampleConfig {
    std::uint64_t seed = 20240915;
    std::size_t grid_resolution = 256;
    std::size_t mc_samples = 100000;
};

// One-sided sampling refuter for translate covers: grid points of the
// bounding box inside K, the vertices, edge subdivisions, and all exact
// edge-edge intersection points between K and the translates. Reports the
// lexicographically smallest uncovered sample; silence certifies nothing.
template <class S>
std::optional<V2<S>> sample_cover_check(const ConvexPolygon<S>& K,
                                        const std::vector<V2<S>>& translations, Mode mode,
                                        const SampleConfig& cfg = {}) {
    std::vector<ConvexPolygon<S>> ts;
    for (const auto& t : translations) ts.push_back(K.translated(t));
    auto covered = [&](const V2<S>& p) {
        for (const auto& T : ts)
            if (contains(T, p, mode)) return true;
        return false;
    };

    std::optional<V2<S>> worst;
    auto probe = [&](const V2<S>& p) {
        if (!contains(K, p, Mode::Closed)) return;
        if (covered(p)) return;
        if (!worst || detail::lex_less(p, *worst)) worst = p;
    };

    V2<S> lo = K.vertex(0), hi = K.vertex(0);
    for (const auto& v : K.vertices()) {
        if (sgn(v.x - lo.x) < 0) lo.x = v.x;
        if (sgn(v.y - lo.y) < 0) lo.y = v.y;
        if (sgn(v.x - hi.x) > 0) hi.x = v.x;
        if (sgn(v.y - hi.y) > 0) hi.y = v.y;
    }
    const std::size_t res = std::max<std::size_t>(cfg.grid_resolution, 2);
    S den(Rat(static_cast<long>(res)));
    for (std::size_t i = 0; i <= res; ++i)
        for (std::size_t j = 0; j <= res; ++j) {
            S fx = S(Rat(static_cast<long>(i))) / den, fy = S(Rat(static_cast<long>(j))) / den;
            probe({lo.x + fx * (hi.x - lo.x), lo.y + fy * (hi.y - lo.y)});
        }

    const std::size_t sub = 16;
    for (std::size_t e = 0; e < K.size(); ++e)
        for (std::size_t k = 0; k <= sub; ++k) {
            S f = S(Rat(static_cast<long>(k), static_cast<long>(sub)));
            probe(K.vertex(e) + f * (K.vertex(e + 1) - K.vertex(e)));
        }

    // Exact intersections between every pair of involved edges.
    std::vector<const ConvexPolygon<S>*> polys = {&K};
    for (const auto& T : ts) polys.push_back(&T);
    for (std::size_t a = 0; a < polys.size(); ++a)
        for (std::size_t b = a + 1; b < polys.size(); ++b)
            for (std::size_t i = 0; i < polys[a]->size(); ++i)
                for (std::size_t j = 0; j < polys[b]->size(); ++j) {
                    V2<S> p = polys[a]->vertex(i), q = polys[a]->vertex(i + 1);
                    V2<S> r = polys[b]->vertex(j), s = polys[b]->vertex(j + 1);
                    S d = cross(q - p, s - r);
                    if (sgn(d) == 0) continue;
                    S t = cross(r - p, s - r) / d;
                    S u = cross(r - p, q - p) / d;
                    if (sgn(t) < 0 || sgn(t - S(1)) > 0 || sgn(u) < 0 || sgn(u - S(1)) > 0)
                        continue;
                    probe(p + t * (q - p));
                }
    return worst;
}

// Exhaustive minimum piercing over endpoint/midpoint candidates, by subset
// size; independent of the branch-and-bound search. nullopt when no hitting
// set of size <= m_max exists among the candidates.
template <class D>
std::optional<std::size_t> brute_min_piercing(const ArcFamilyT<D>& arcs, std::size_t m_max) {
    std::vector<ArcFamilyT<D>> reqs;
    for (const auto& a : arcs) reqs.push_back(ArcFamilyT<D>{a});
    const std::size_t n = reqs.size();
    if (n == 0) return 0;

    std::vector<D> pts = arrangement_dirs(arcs);
    std::vector<D> cands = pts;
    if (pts.empty()) {
        cands.push_back(D::reference());
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const D& u = pts[i];
            const D& v = pts[(i + 1) % pts.size()];
            if (pts.size() == 1 || !dir_equal(u, v)) cands.push_back(rational_dir_between(u, v));
        }
    }
    std::vector<std::uint64_t> masks;
    for (const auto& c : cands) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& a : reqs[i])
                if (arc_contains(a, c)) {
                    m |= std::uint64_t(1) << i;
                    break;
                }
        if (m) masks.push_back(m);
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    std::vector<std::size_t> pick;
    auto search = [&](auto&& self, std::size_t from, std::uint64_t got, std::size_t left) -> bool {
        if (got == all) return true;
        if (left == 0) return false;
        for (std::size_t j = from; j < masks.size(); ++j) {
            pick.push_back(j);
            if (self(self, j + 1, got | masks[j], left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (std::size_t m = 0; m <= m_max; ++m) {
        pick.clear();
        if (search(search, 0, 0, m)) return m;
    }
    return std::nullopt;
}

// Randomized lower bound on the quantified count: arc piercing over a
// random rational witness sample (plus the vertices and circumcenter).
// infinite means some witness admits no step at all.
struct SampleLower {
    bool infinite = false;
    std::size_t lower = 0;
};

template <class S>
SampleLower sample_quantified_lower(const ConvexPolygon<S>& K, const EpsSpec& eps, Mode mode,
                                    const SampleConfig& cfg = {}) {
    auto B = circumball(K);
    S eps_sq = eps.eps_sq(B);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> num(0, 4096);

    V2<S> lo = K.vertex(0), hi = K.vertex(0);
    for (const auto& v : K.vertices()) {
        if (sgn(v.x - lo.x) < 0) lo.x = v.x;
        if (sgn(v.y - lo.y) < 0) lo.y = v.y;
        if (sgn(v.x - hi.x) > 0) hi.x = v.x;
        if (sgn(v.y - hi.y) > 0) hi.y = v.y;
    }
    std::vector<V2<S>> X(K.vertices().begin(), K.vertices().end());
    X.push_back(B.center);
    const std::size_t want = std::max<std::size_t>(8, cfg.mc_samples / 8192);
    for (std::size_t tries = 0; tries < 64 * want && X.size() < K.size() + 1 + want; ++tries) {
        S fx = S(Rat(num(rng), 4096)), fy = S(Rat(num(rng), 4096));
        V2<S> p{lo.x + fx * (hi.x - lo.x), lo.y + fy * (hi.y - lo.y)};
        if (contains(K, p, Mode::Closed)) X.push_back(p);
    }

    std::vector<ArcFamilyT<Dir>> families;
    for (const auto& x : X) {
        auto F = circle_polygon_arcs_rounded(K, x, eps_sq, mode, 64);
        if (F.family.empty()) return {true, 0};
        families.push_back(std::move(F.family));
    }
    return {false, min_piercing(families).size()};
}

}  // namespace illum
