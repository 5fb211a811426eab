#pragma once

#include "illum/arc.hpp"

#include <cstdint>
#include <vector>

namespace illum {

template <class D>
struct PiercingResult {
    std::vector<D> dirs;  // one direction inside every requirement it pierces
    std::size_t size() const { return dirs.size(); }
};

namespace detail {

// Dynamic bitset over requirement indices.
struct Mask {
    std::vector<std::uint64_t> w;

    explicit Mask(std::size_t bits) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    bool covers(const Mask& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (o.w[k] & ~w[k]) return false;
        return true;
    }
    bool operator==(const Mask& o) const { return w == o.w; }
};

}  // namespace detail

// Minimum number of directions hitting every requirement, each requirement
// being a union of arcs. Exact: membership patterns are constant on the
// atoms of the joint endpoint arrangement, so atom representatives contain
// an optimal solution; branch and bound finds it. Throws empty_arc_error
// when some requirement is an empty union.
template <class D>
PiercingResult<D> min_piercing(const std::vector<ArcFamilyT<D>>& requirements) {
    const std::size_t n = requirements.size();
    if (n == 0) return {};
    for (const auto& r : requirements)
        if (r.empty()) throw empty_arc_error("unsatisfiable requirement");

    // Candidate directions: arrangement endpoints plus one interior point
    // of every open atom.
    ArcFamilyT<D> all;
    for (const auto& r : requirements)
        for (const auto& a : r) all.push_back(a);
    std::vector<D> pts = arrangement_dirs(all);
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

    auto hits = [&](const D& c, const ArcFamilyT<D>& fam) {
        for (const auto& a : fam)
            if (arc_contains(a, c)) return true;
        return false;
    };
    std::vector<detail::Mask> masks;
    std::vector<D> kept;
    for (const auto& c : cands) {
        detail::Mask m(n);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i)
            if (hits(c, requirements[i])) {
                m.set(i);
                any = true;
            }
        if (!any) continue;
        // Dominance: keep only mask-maximal candidates.
        bool dominated = false;
        for (std::size_t j = 0; j < masks.size(); ++j)
            if (masks[j].covers(m)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        for (std::size_t j = 0; j < masks.size();) {
            if (m.covers(masks[j])) {
                masks.erase(masks.begin() + static_cast<std::ptrdiff_t>(j));
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(j));
            } else {
                ++j;
            }
        }
        masks.push_back(m);
        kept.push_back(c);
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool hittable = false;
        for (const auto& m : masks)
            if (m.test(i)) {
                hittable = true;
                break;
            }
        if (!hittable) throw empty_arc_error("unsatisfiable requirement");
    }

    // Row dominance: a requirement whose hit set contains another's is
    // automatically satisfied whenever the other is, so it can be dropped.
    std::vector<detail::Mask> rows(n, detail::Mask(masks.size()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < masks.size(); ++j)
            if (masks[j].test(i)) rows[i].set(j);
    std::vector<std::size_t> active;
    {
        std::vector<bool> dropped(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (dropped[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || dropped[j]) continue;
                if (rows[i].covers(rows[j]) && !(i > j && rows[i] == rows[j])) {
                    dropped[i] = true;
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!dropped[i]) active.push_back(i);
    }
    const std::size_t na = active.size();

    // Greedy upper bound, then depth-first branch and bound on the active
    // requirement hit by the fewest candidates.
    auto count_new = [&](const detail::Mask& m, const std::vector<bool>& cov) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < na; ++i)
            if (!cov[i] && m.test(active[i])) ++c;
        return c;
    };
    std::vector<std::size_t> best;
    {
        std::vector<bool> cov(na, false);
        std::size_t left = na;
        while (left > 0) {
            std::size_t pick = 0, gain = 0;
            for (std::size_t j = 0; j < masks.size(); ++j) {
                std::size_t g = count_new(masks[j], cov);
                if (g > gain) {
                    gain = g;
                    pick = j;
                }
            }
            best.push_back(pick);
            for (std::size_t i = 0; i < na; ++i)
                if (masks[pick].test(active[i]) && !cov[i]) {
                    cov[i] = true;
                    --left;
                }
        }
    }
    std::size_t max_gain = 1;
    for (std::size_t j = 0; j < masks.size(); ++j) {
        std::size_t g = count_new(masks[j], std::vector<bool>(na, false));
        if (g > max_gain) max_gain = g;
    }
    std::vector<std::size_t> cur;
    std::vector<bool> cov(na, false);
    auto dfs = [&](auto&& self, std::size_t uncovered) -> void {
        if (uncovered == 0) {
            if (cur.size() < best.size()) best = cur;
            return;
        }
        // Even covering max_gain requirements per extra pick cannot beat best.
        if (cur.size() + (uncovered + max_gain - 1) / max_gain >= best.size()) return;
        std::size_t req = na, fewest = masks.size() + 1;
        for (std::size_t i = 0; i < na; ++i) {
            if (cov[i]) continue;
            std::size_t hits_i = 0;
            for (std::size_t j = 0; j < masks.size(); ++j)
                if (masks[j].test(active[i])) ++hits_i;
            if (hits_i < fewest) {
                fewest = hits_i;
                req = i;
            }
        }
        for (std::size_t j = 0; j < masks.size(); ++j) {
            if (!masks[j].test(active[req])) continue;
            std::vector<std::size_t> flipped;
            for (std::size_t i = 0; i < na; ++i)
                if (masks[j].test(active[i]) && !cov[i]) {
                    cov[i] = true;
                    flipped.push_back(i);
                }
            cur.push_back(j);
            self(self, uncovered - flipped.size());
            cur.pop_back();
            for (std::size_t i : flipped) cov[i] = false;
        }
    };
    dfs(dfs, na);

    PiercingResult<D> out;
    for (std::size_t j : best) out.dirs.push_back(kept[j]);
    return out;
}

// Each arc of the family as its own one-arc requirement.
template <class D>
PiercingResult<D> min_piercing(const ArcFamilyT<D>& arcs) {
    std::vector<ArcFamilyT<D>> reqs;
    for (const auto& a : arcs) reqs.push_back(ArcFamilyT<D>{a});
    return min_piercing(reqs);
}

}  // namespace illum
