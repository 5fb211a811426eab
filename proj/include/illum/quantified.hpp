#pragma once

#include "illum/circle_arc.hpp"
#include "illum/counts.hpp"

#include <type_traits>

namespace illum {

template <class S>
struct CountResult {
    enum class Verdict { Finite, Infinite, LowerBound };

    Verdict verdict = Verdict::LowerBound;
    std::size_t count = 0;             // Finite value, or the proven lower bound
    std::vector<V2<Quad>> certificate; // translations t_i with |t_i|^2 = eps^2
    std::optional<V2<S>> witness;      // point behind an Infinite verdict

    static CountResult finite(std::size_t m, std::vector<V2<Quad>> cert) {
        return {Verdict::Finite, m, std::move(cert), std::nullopt};
    }
    static CountResult infinite(V2<S> w) { return {Verdict::Infinite, 0, {}, std::move(w)}; }
    static CountResult lower_bound(std::size_t lb) {
        return {Verdict::LowerBound, lb, {}, std::nullopt};
    }
};

namespace detail {

inline bool quad_to(const Quad& q, Rat& out) {
    if (!q.is_rational()) return false;
    out = q.rational();
    return true;
}
inline bool quad_to(const Quad& q, Quad& out) {
    out = q;
    return true;
}

template <class S>
std::optional<V2<S>> quad_vec_to(const V2<Quad>& v) {
    V2<S> out;
    if (!quad_to(v.x, out.x) || !quad_to(v.y, out.y)) return std::nullopt;
    return out;
}

// Exact translation of squared length eps_sq in the direction d. Rational
// scale ratios always root inside some quadratic field; irrational ratios
// must root inside the direction's own field.
template <class S>
std::optional<V2<Quad>> realize_exact(const Dir& d, const S& eps_sq, const Rat& ambient) {
    Quad nsq = d.x() * d.x() + d.y() * d.y();
    Quad ratio = Quad(eps_sq) / nsq;
    std::optional<Quad> s;
    if (ratio.is_rational()) {
        if (auto r = rational_sqrt(ratio.a())) {
            s = Quad(*r);
        } else {
            Rat f = d.field() != 0 ? d.field() : ambient;
            if (f != 0)
                s = sqrt_in_field(ratio, f);
            else
                s = Quad::sqrt_of(ratio.a());
        }
    } else {
        s = sqrt_in_field(ratio, ratio.d());
    }
    if (!s) return std::nullopt;
    return V2<Quad>{*s * d.x(), *s * d.y()};
}

// Common quadratic field of a vector set; nullopt when two distinct
// radicals mix.
inline std::optional<Rat> joint_field(const std::vector<V2<Quad>>& vs) {
    Rat d(0);
    for (const auto& v : vs)
        for (const Quad* c : {&v.x, &v.y}) {
            if (c->is_rational()) continue;
            if (d == 0)
                d = c->d();
            else if (d != c->d())
                return std::nullopt;
        }
    return d;
}

// Translation of squared length eps_sq with direction strictly inside the
// open arc (u1, u2): rotate the anchor (a known point of that length) by a
// rational unit rotation. Rotation preserves the circular order, so the
// target rotation is found with the rational-direction search on the
// back-rotated arc.
inline V2<Quad> realize_in_open_arc(const Dir& u1, const Dir& u2, const V2<Quad>& a) {
    auto back = [&](const Dir& u) {  // u * conj(anchor direction)
        return Dir(u.x() * a.x + u.y() * a.y, u.y() * a.x - u.x() * a.y);
    };
    Dir r = rational_dir_between(back(u1), back(u2));
    V2<Rat> rv = r.rational_vec();
    Quad rx(rv.x), ry(rv.y);
    return {rx * a.x - ry * a.y, ry * a.x + rx * a.y};
}

// Rational unit direction near the angular midpoint of the open arc
// (u1, u2); the guess is verified exactly and falls back to the simplest
// rational direction in the arc.
inline Dir center_dir(const Dir& u1, const Dir& u2) {
    double a1 = u1.angle_approx(), a2 = u2.angle_approx();
    if (a2 <= a1) a2 += 6.283185307179586;
    double tm = std::tan((a1 + a2) / 4);
    if (std::isfinite(tm) && std::fabs(tm) < 1e12) {
        for (long long den = 64; den <= (1LL << 40); den *= 64) {
            double scaled = tm * static_cast<double>(den);
            if (std::fabs(scaled) > 9e17) break;
            Dir c = unit_dir_from_tan_half(Rat(std::llround(scaled), den));
            if (strictly_between(u1, c, u2)) return c;
        }
    }
    return rational_dir_between(u1, u2);
}

// Translation of squared length eps_sq aimed near the middle of the open
// arc (u1, u2): a narrow rational window around the midpoint guess keeps
// the rotation search inside the central part of the arc.
inline V2<Quad> realize_center(const Dir& u1, const Dir& u2, const V2<Quad>& a) {
    Dir c = center_dir(u1, u2);
    double width = u2.angle_approx() - u1.angle_approx();
    if (width <= 0) width += 6.283185307179586;
    double th = std::tan(width / 16);
    long long num = std::llround(th * 1048576.0);
    if (num > 0 && num < (1LL << 40)) {
        V2<Rat> r = unit_dir_from_tan_half(Rat(num, 1048576)).rational_vec();
        Quad cx(Quad(r.x)), sx(Quad(r.y));
        Dir w1(c.x() * cx + c.y() * sx, c.y() * cx - c.x() * sx);
        Dir w2(c.x() * cx - c.y() * sx, c.y() * cx + c.x() * sx);
        if (strictly_between(u1, w1, u2) && strictly_between(u1, w2, u2) &&
            cmp_from(u1, w1, w2) < 0)
            return realize_in_open_arc(w1, w2, a);
    }
    return realize_in_open_arc(u1, u2, a);
}

// Translation of squared length eps_sq aimed into a narrow window around an
// exactly unrealizable direction; the window is a rational rotation of
// half-width ~2^-k on each side, so it shrinks as rounds pass and the cover
// check decides whether the approximation suffices.
inline V2<Quad> realize_window(const Dir& d, const V2<Quad>& a, unsigned k) {
    if (k > 512) k = 512;
    V2<Rat> r = unit_dir_from_tan_half(Rat(1, Int(1) << k)).rational_vec();
    Quad cx(r.x), sx(r.y);
    Dir lo(d.x() * cx + d.y() * sx, d.y() * cx - d.x() * sx);
    Dir hi(d.x() * cx - d.y() * sx, d.y() * cx + d.x() * sx);
    return realize_in_open_arc(lo, hi, a);
}

// The intersection of one containing arc per pierced requirement: any
// direction in it serves the same requirements as d.
inline ArcT<Dir> slack_arc(const Dir& d, const std::vector<ArcFamilyT<Dir>>& families) {
    ArcT<Dir> slack = ArcT<Dir>::full_circle();
    for (const auto& fam : families) {
        const ArcT<Dir>* containing = nullptr;
        for (const auto& a : fam)
            if (arc_contains(a, d)) {
                containing = &a;
                break;
            }
        if (!containing) continue;  // d does not serve this requirement
        bool found = false;
        for (const auto& piece : intersect_arcs(slack, *containing))
            if (arc_contains(piece, d)) {
                slack = piece;
                found = true;
                break;
            }
        if (!found) throw degenerate_input("slack arc lost its pivot direction");
    }
    return slack;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Rat round_to_den(const Rat& x, const Int& k) {
    // nearest multiple of 1/k, half rounded up
    Int n = numerator(x) * k, d = denominator(x);
    return Rat(floor_div(2 * n + d, 2 * d), k);
}

inline Rat round_scalar(const Rat& x, const Int& k) { return round_to_den(x, k); }
inline Quad round_scalar(const Quad& x, const Int& k) {
    return Quad(round_to_den(x.a(), k), round_to_den(x.b(), k), x.d());
}

// Replace an uncovered witness by a nearby small-denominator point that is
// still in K and still missed by every translate; keeps coordinate growth
// bounded across refinement rounds. The miss condition is open around the
// witness in Closed mode, so fine enough grids always succeed; the exact
// witness is the fallback.
template <class S>
V2<S> snap_witness(const V2<S>& w, const ConvexPolygon<S>& K,
                   const std::vector<ConvexPolygon<S>>& ts, Mode mode) {
    auto valid = [&](const V2<S>& q) {
        if (!contains(K, q, Mode::Closed)) return false;
        for (const auto& T : ts)
            if (contains(T, q, mode)) return false;
        return true;
    };
    for (Int k(2); k < (Int(1) << 64); k *= 4) {
        V2<S> q{round_scalar(w.x, k), round_scalar(w.y, k)};
        if (valid(q)) return q;
    }
    return w;
}

template <class S>
ConvexPolygon<Quad> lift_polygon(const ConvexPolygon<S>& K) {
    std::vector<V2<Quad>> vs;
    for (const auto& v : K.vertices()) vs.push_back(lift(v));
    return make_polygon(vs);
}

// Rational point near an irrational uncovered witness that still avoids
// every translate. The miss condition is open around the witness in Closed
// mode, so a fine enough enclosure midpoint works.
inline std::optional<V2<Rat>> rationalize_witness(const V2<Quad>& w, const ConvexPolygon<Quad>& Kq,
                                                  const std::vector<ConvexPolygon<Quad>>& ts,
                                                  Mode mode) {
    Mode miss = mode == Mode::Closed ? Mode::Closed : Mode::Interior;
    for (unsigned bits = 4; bits <= 512; bits *= 2) {
        auto [xl, xh] = w.x.bounds(bits);
        auto [yl, yh] = w.y.bounds(bits);
        V2<Rat> q{Rat((xl + xh) / 2), Rat((yl + yh) / 2)};
        V2<Quad> qq{Quad(q.x), Quad(q.y)};
        if (!contains(Kq, qq, Mode::Closed)) continue;
        bool clear = true;
        for (const auto& T : ts)
            if (contains(T, qq, miss)) {
                clear = false;
                break;
            }
        if (clear) return q;
    }
    return std::nullopt;
}

}  // namespace detail

// Quantified illumination count by witness refinement: arc piercing over a
// growing witness set gives lower bounds; realized translations verified by
// the cover residual give matching upper bounds. Closed mode is the
// fixed-step-in-K number, Interior mode the fixed-step-in-int-K number.
template <class S>
CountResult<S> quantified_count(const ConvexPolygon<S>& K, const EpsSpec& eps, Mode mode,
                                std::size_t budget = 64) {
    auto B = circumball(K);
    S eps_sq = eps.eps_sq(B);
    if (sgn(eps_sq) <= 0) throw invalid_input("eps must be positive");
    const V2<S>& cK = B.center;

    int cmp = sgn(eps_sq - B.radius_sq);
    if (mode == Mode::Interior && cmp >= 0) return CountResult<S>::infinite(cK);
    if (mode == Mode::Closed && cmp > 0) return CountResult<S>::infinite(cK);
    if (mode == Mode::Closed && cmp == 0 && !finite_at_circumradius(K).verdict)
        return CountResult<S>::infinite(cK);

    // A known vector of squared length eps_sq, used to realize rotations.
    V2<S> anchor;
    if (eps.kind == EpsSpec::Kind::CircumradiusMultiple) {
        auto contacts = contact_set(K, B);
        anchor = S(eps.value) * (contacts.front() - cK);
    } else {
        anchor = {S(eps.value), S(0)};
    }

    const Rat ambient = detail::ambient_field(K);
    std::vector<V2<S>> X;  // witnesses
    auto add_witness = [&](const V2<S>& p) {
        for (const auto& q : X)
            if (q == p) return false;
        X.push_back(p);
        return true;
    };
    for (std::size_t i = 0; i < K.size(); ++i) {
        add_witness(K.vertex(i));
        add_witness(S(Rat(1, 2)) * (K.vertex(i) + K.vertex(i + 1)));
    }
    add_witness(cK);

    auto field_ok = [&](const std::vector<V2<Quad>>& steps) {
        auto fld = detail::joint_field(steps);
        return fld && !(ambient != 0 && *fld != 0 && *fld != ambient);
    };

    // Verifies a candidate cover; on failure optionally feeds the uncovered
    // interior points back into the witness set and reports one missed point.
    struct Attempt {
        bool covered = false;
        std::size_t added = 0;
        std::optional<V2<S>> missed;
    };
    auto attempt = [&](const std::vector<V2<Quad>>& steps, bool feed) -> Attempt {
        if (steps.empty() || !field_ok(steps)) return {};
        std::vector<V2<S>> native;
        bool fits = true;
        for (const auto& t : steps) {
            auto v = detail::quad_vec_to<S>(t);
            if (!v) {
                fits = false;
                break;
            }
            native.push_back(-*v);
        }
        Attempt out;
        if (fits) {
            auto verdict = cover_residual(K, native, mode);
            if (verdict.covered) return {true, 0, std::nullopt};
            std::vector<ConvexPolygon<S>> tpolys;
            for (const auto& off : native) tpolys.push_back(K.translated(off));
            out.missed = detail::snap_witness(verdict.witnesses.front(), K, tpolys, mode);
            if (feed) {
                if (add_witness(*out.missed)) ++out.added;
                for (std::size_t w = 1; w < verdict.witnesses.size(); ++w)
                    if (add_witness(detail::snap_witness(verdict.witnesses[w], K, tpolys, mode)))
                        ++out.added;
            }
            return out;
        }
        if constexpr (std::is_same_v<S, Rat>) {
            auto Kq = detail::lift_polygon(K);
            std::vector<V2<Quad>> cover_ts;
            for (const auto& t : steps) cover_ts.push_back(-t);
            auto verdict = cover_residual(Kq, cover_ts, mode);
            if (verdict.covered) return {true, 0, std::nullopt};
            std::vector<ConvexPolygon<Quad>> tpolys;
            for (const auto& c : cover_ts) tpolys.push_back(Kq.translated(c));
            for (std::size_t w = 0; w < verdict.witnesses.size(); ++w) {
                auto q = detail::rationalize_witness(verdict.witnesses[w], Kq, tpolys, mode);
                if (!q) continue;
                if (!out.missed) out.missed = *q;
                if (feed && add_witness(*q)) ++out.added;
                if (!feed) break;
            }
            return out;
        }
        return out;
    };

    std::optional<V2<S>> uncoverable;  // witness whose requirement is empty

    // One realized step serving the point x, aimed at the widest arc of its
    // requirement family.
    auto step_for = [&](const V2<S>& x) -> std::optional<V2<Quad>> {
        auto F = circle_polygon_arcs_rounded(K, x, eps_sq, mode, 64);
        if (F.family.empty()) {
            uncoverable = x;
            return std::nullopt;
        }
        const ArcT<Dir>* pick = &F.family.front();
        double widest = -1;
        for (const auto& a : F.family) {
            if (a.full) {
                pick = &a;
                widest = 7;
                break;
            }
            double w = a.e.angle_approx() - a.s.angle_approx();
            if (w <= 0) w += 6.283185307179586;
            if (a.is_point()) w = 0;
            if (w > widest) {
                widest = w;
                pick = &a;
            }
        }
        if (pick->full) return lift(anchor);
        if (!pick->is_point()) return detail::realize_center(pick->s, pick->e, lift(anchor));
        if (auto ex = detail::realize_exact(pick->s, eps_sq, ambient)) return ex;
        return detail::realize_window(pick->s, lift(anchor), 16);
    };

    // Extends a failed candidate cover step by step until it verifies, then
    // prunes it to inclusion-minimality and records it as the best known
    // upper bound. Returns false when no verified extension was found.
    std::optional<std::vector<V2<Quad>>> best;
    auto extend_to_cover = [&](std::vector<V2<Quad>> steps) -> bool {
        for (int k = 0; k < 40; ++k) {
            auto res = attempt(steps, false);
            if (res.covered) {
                for (std::size_t i = 0; i < steps.size() && steps.size() > 1;) {
                    std::vector<V2<Quad>> trial = steps;
                    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
                    if (attempt(trial, false).covered)
                        steps = trial;
                    else
                        ++i;
                }
                if (!best || steps.size() < best->size()) best = std::move(steps);
                return true;
            }
            if (!res.missed) return false;
            auto st = step_for(*res.missed);
            if (!st) return false;
            steps.push_back(std::move(*st));
            if (!field_ok(steps)) return false;
        }
        return false;
    };

    // Seed upper bound: steps c_K - v scaled to length eps, greedily pruned
    // to an inclusion-minimal verified cover. At eps = R these are exactly
    // the contact-chord vectors.
    {
        std::vector<V2<Quad>> seed;
        bool ok = true;
        for (std::size_t i = 0; i < K.size() && ok; ++i) {
            auto ex = detail::realize_exact(Dir(lift(cK - K.vertex(i))), eps_sq, ambient);
            if (ex)
                seed.push_back(*ex);
            else
                ok = false;
        }
        if (ok) extend_to_cover(std::move(seed));
        if (uncoverable) return CountResult<S>::infinite(*uncoverable);
    }

    std::size_t lb = 0;
    for (std::size_t round = 0; round <= budget; ++round) {
        // Endpoint rounding widens requirement arcs, so the piercing value
        // stays a valid lower bound; tighten precision as rounds pass.
        unsigned bits = static_cast<unsigned>(64 + 32 * round);
        bool all_exact = true;
        std::vector<ArcFamilyT<Dir>> families;
        for (const auto& x : X) {
            auto F = circle_polygon_arcs_rounded(K, x, eps_sq, mode, bits);
            if (F.family.empty()) return CountResult<S>::infinite(x);
            all_exact = all_exact && F.exact;
            families.push_back(std::move(F.family));
        }
        PiercingResult<Dir> pierced = min_piercing(families);
        lb = pierced.size();
        if (best && lb >= best->size()) return CountResult<S>::finite(best->size(), *best);

        // Pinned directions realize exactly when possible; otherwise (or when
        // exact pinned steps would mix incompatible radicals) they aim into a
        // shrinking rational window, and the cover check decides.
        bool used_window = false;
        auto build_steps = [&](bool exact_pinned) {
            used_window = false;
            std::vector<V2<Quad>> steps;
            for (const auto& d : pierced.dirs) {
                auto ex = detail::realize_exact(d, eps_sq, ambient);
                if (ex && ex->x.is_rational() && ex->y.is_rational()) {
                    steps.push_back(*ex);
                    continue;
                }
                ArcT<Dir> slack = detail::slack_arc(d, families);
                if (slack.full) {
                    steps.push_back(lift(anchor));
                } else if (!slack.is_point()) {
                    steps.push_back(detail::realize_center(slack.s, slack.e, lift(anchor)));
                } else if (exact_pinned && ex) {
                    steps.push_back(*ex);
                } else {
                    used_window = true;
                    steps.push_back(detail::realize_window(
                        d, lift(anchor), static_cast<unsigned>(8 + 4 * round)));
                }
            }
            return steps;
        };
        std::vector<V2<Quad>> steps = build_steps(true);
        if (!field_ok(steps)) steps = build_steps(false);
        if (!field_ok(steps)) continue;

        auto res = attempt(steps, true);
        if (res.covered) return CountResult<S>::finite(lb, steps);
        // Grow the failed candidate into a verified cover; a tighter upper
        // bound lets the piercing value close the gap in a later round.
        if (!best || best->size() > lb + 1 || round % 4 == 0) extend_to_cover(std::move(steps));
        if (uncoverable) return CountResult<S>::infinite(*uncoverable);
        if (best && lb >= best->size()) return CountResult<S>::finite(best->size(), *best);
        if (res.added == 0 && all_exact && !used_window && !best)
            throw degenerate_input("refinement produced a repeated witness");
    }
    return CountResult<S>::lower_bound(lb);
}

// Step length strictly above the circumradius: no step from the circumcenter
// can stay inside the body, so the count is infinite outright.
template <class S>
CountResult<S> threshold_check(const ConvexPolygon<S>& K, const EpsSpec& eps) {
    auto B = circumball(K);
    S eps_sq = eps.eps_sq(B);
    if (sgn(eps_sq - B.radius_sq) <= 0)
        throw invalid_input("threshold check requires eps strictly above the circumradius");
    return CountResult<S>::infinite(B.center);
}

// Closed form for the disc of radius rho: three steps at mutual angle
// 2*pi/3 suffice exactly while the step fits, otherwise infinite.
struct DiscCount {
    bool finite = false;
    std::size_t count = 0;
    std::vector<V2<Quad>> certificate;
    static DiscCount infinite() { return {}; }
};

inline DiscCount disc_quantified(const Rat& rho, const Rat& eps, Mode mode) {
    if (rho <= 0 || eps <= 0) throw invalid_input("disc parameters must be positive");
    bool finite = mode == Mode::Closed ? eps <= rho : eps < rho;
    if (!finite) return DiscCount::infinite();
    Quad h = Quad::sqrt_of(Rat(3)) / Quad(2);
    Quad e(eps), half(Rat(1, 2));
    DiscCount out;
    out.finite = true;
    out.count = 3;
    out.certificate = {{-e, Quad(0)}, {e * half, e * h}, {e * half, -(e * h)}};
    return out;
}

}  // namespace illum
