#pragma once

#include "illum/mode.hpp"
#include "illum/rat.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace illum {

// Vector in R^n split as (head, last) with head of length n-1; the double
// cone treats the last coordinate as its axis.
struct SplitVector {
    std::vector<Rat> head;
    Rat last;

    std::size_t dim() const { return head.size() + 1; }
};

inline Rat head_norm_sq(const std::vector<Rat>& h) {
    Rat s(0);
    for (const auto& c : h) s += c * c;
    return s;
}

inline Rat inner(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw invalid_input("dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline SplitVector operator+(const SplitVector& a, const SplitVector& b) {
    if (a.dim() != b.dim()) throw invalid_input("dimension mismatch");
    SplitVector out = a;
    for (std::size_t i = 0; i < out.head.size(); ++i) out.head[i] += b.head[i];
    out.last += b.last;
    return out;
}

inline bool operator==(const SplitVector& a, const SplitVector& b) {
    return a.head == b.head && a.last == b.last;
}

// Bodies with closed-form exact membership. Box is [-w_i, w_i]^n around the
// origin; DoubleCone is {x : |head(x)| + |last(x)| <= 1}.
struct AnalyticBody {
    enum class Kind { Box, Ball, DoubleCone };

    Kind kind;
    std::size_t n = 0;
    std::vector<Rat> half_widths;  // Box
    SplitVector center;            // Ball
    Rat radius_sq;                 // Ball

    static AnalyticBody box(std::size_t n, std::vector<Rat> half_widths) {
        if (n < 2 || half_widths.size() != n) throw invalid_input("bad box dimensions");
        for (const auto& w : half_widths)
            if (w <= 0) throw invalid_input("half widths must be positive");
        AnalyticBody b;
        b.kind = Kind::Box;
        b.n = n;
        b.half_widths = std::move(half_widths);
        return b;
    }
    static AnalyticBody ball(SplitVector center, Rat radius_sq) {
        if (center.dim() < 2) throw invalid_input("bad ball dimension");
        if (radius_sq <= 0) throw invalid_input("radius must be positive");
        AnalyticBody b;
        b.kind = Kind::Ball;
        b.n = center.dim();
        b.center = std::move(center);
        b.radius_sq = std::move(radius_sq);
        return b;
    }
    static AnalyticBody double_cone(std::size_t n) {
        if (n < 2) throw invalid_input("bad double cone dimension");
        AnalyticBody b;
        b.kind = Kind::DoubleCone;
        b.n = n;
        return b;
    }
};

// Exact membership. The double cone inequality |h| + |l| <= 1 is decided on
// squares: |l| <= 1 and |h|^2 <= (1 - |l|)^2.
inline bool member(const AnalyticBody& B, const SplitVector& x, Mode mode) {
    if (x.dim() != B.n) throw invalid_input("dimension mismatch");
    bool strict = mode == Mode::Interior;
    auto le = [&](const Rat& a, const Rat& b) { return strict ? a < b : a <= b; };
    switch (B.kind) {
        case AnalyticBody::Kind::Box: {
            for (std::size_t i = 0; i + 1 < B.n; ++i)
                if (!le(abs(x.head[i]), B.half_widths[i])) return false;
            return le(abs(x.last), B.half_widths[B.n - 1]);
        }
        case AnalyticBody::Kind::Ball: {
            Rat d = head_norm_sq(x.head) - Rat(2) * inner(x.head, B.center.head) +
                    head_norm_sq(B.center.head) + (x.last - B.center.last) * (x.last - B.center.last);
            return le(d, B.radius_sq);
        }
        case AnalyticBody::Kind::DoubleCone: {
            Rat al = abs(x.last);
            if (!le(al, Rat(1))) return false;
            Rat slack = Rat(1) - al;
            return le(head_norm_sq(x.head), slack * slack);
        }
    }
    return false;
}

// Two-translate cover of [-1,1]^n by shifts +-(delta, 0, ..., 0), verified
// by exact interval algebra on the first coordinate: the union covers
// [-1,1] iff the two shifted intervals meet, i.e. delta <= 1. The verdict
// is honest for the whole delta range; a failure carries an uncovered
// point.
struct BoxCover {
    std::size_t n = 0;
    Rat delta;
    bool verified = false;
    std::optional<SplitVector> witness;

    std::vector<SplitVector> translations() const {
        SplitVector t;
        t.head.assign(n - 1, Rat(0));
        t.head[0] = delta;
        t.last = Rat(0);
        SplitVector m = t;
        m.head[0] = -delta;
        return {t, m};
    }
};

inline BoxCover box_t_cover(std::size_t n, const Rat& delta) {
    if (n < 2) throw invalid_input("bad box dimension");
    if (delta <= 0 || delta >= 2) throw invalid_input("delta must lie in (0, 2)");
    BoxCover out;
    out.n = n;
    out.delta = delta;
    // +delta shift covers first coordinates [-1+delta, 1]; -delta shift
    // covers [-1, 1-delta]; the rest of the coordinates are unchanged.
    if (delta <= 1) {
        out.verified = true;
    } else {
        out.verified = false;
        SplitVector w;
        w.head.assign(n - 1, Rat(0));
        w.head[0] = Rat(0);  // 0 lies in the gap (1-delta, -1+delta)
        w.last = Rat(0);
        out.witness = std::move(w);
    }
    return out;
}

// Contact point of the unit double cone prescribed for a body point x0, so
// that x0 + x stays in the cone (equivalently x0 lies in the translate
// K - x). Case 3's normalization of the head stays symbolic: the point is
// -head/|head| on the equator, verified purely on squares.
struct ConeTranslate {
    int case_id = 0;                    // 1: apex, 2: axis-dominant, 3: equator
    std::optional<SplitVector> point;   // cases 1 and 2: exact coordinates
    std::vector<Rat> equator_numerator; // case 3: -head(x0), scaled by 1/|head(x0)|
    bool verified = false;
};

inline ConeTranslate doublecone_part1_translate(const SplitVector& x0) {
    AnalyticBody K = AnalyticBody::double_cone(x0.dim());
    if (!member(K, x0, Mode::Closed)) throw invalid_input("point outside the double cone");
    Rat h2 = head_norm_sq(x0.head);
    Rat l = x0.last;
    ConeTranslate out;
    if (h2 == 0 && l == 0) {
        out.case_id = 1;
        SplitVector apex;
        apex.head.assign(x0.head.size(), Rat(0));
        apex.last = Rat(1);
        out.verified = member(K, x0 + apex, Mode::Closed);
        out.point = std::move(apex);
        return out;
    }
    if (h2 < l * l) {
        out.case_id = 2;
        SplitVector pole;
        pole.head.assign(x0.head.size(), Rat(0));
        pole.last = l > 0 ? Rat(-1) : Rat(1);
        out.verified = member(K, x0 + pole, Mode::Closed);
        out.point = std::move(pole);
        return out;
    }
    // |head| >= |last| and x0 != o: x = (-head/|head|, 0). Then the head of
    // x0 + x has norm 1 - |head|, so membership reads |last| <= |head|,
    // exactly the case guard; both sides are checked on squares.
    out.case_id = 3;
    for (const auto& c : x0.head) out.equator_numerator.push_back(-c);
    out.verified = (h2 <= 1) && (l * l <= h2);
    return out;
}

// Refutation that a finite contact set could serve a fresh equator contact
// x0: with c = max over contact inner products (and 0), the displaced point
// (-mu x0', mu c) + x_i leaves the cone for every mu > 0. Pole contacts
// reduce to c < 1; equator contacts to the positivity of
// mu^2 (1 - c^2) + 2 mu (c - <x0', xi'>).
struct RefutationEntry {
    SplitVector contact;
    bool pole = false;
    Rat inner_product;  // equator contacts only
    bool valid = false;
};

struct RefutationTranscript {
    Rat c;
    std::vector<RefutationEntry> entries;
    bool valid = false;
};

inline RefutationTranscript doublecone_refute_iv(const std::vector<SplitVector>& contacts,
                                                 const SplitVector& x0) {
    if (contacts.empty()) throw invalid_input("empty contact set");
    std::size_t n = x0.dim();
    if (head_norm_sq(x0.head) != 1 || x0.last != 0)
        throw invalid_input("x0 must be a rational equator point");
    for (const auto& p : contacts) {
        if (p.dim() != n) throw invalid_input("dimension mismatch");
        bool pole = head_norm_sq(p.head) == 0 && abs(p.last) == 1;
        bool equator = p.last == 0 && head_norm_sq(p.head) == 1;
        if (!pole && !equator) throw invalid_input("contact is neither a pole nor on the equator");
        if (p == x0) throw invalid_input("x0 coincides with a contact");
    }

    RefutationTranscript out;
    out.c = Rat(0);
    for (const auto& p : contacts)
        if (p.last == 0) {
            Rat ip = inner(x0.head, p.head);
            if (ip > out.c) out.c = ip;
        }
    // c = 1 would need an equator contact equal to x0, which is excluded.
    bool c_ok = out.c >= 0 && out.c < 1;

    out.valid = c_ok;
    for (const auto& p : contacts) {
        RefutationEntry e;
        e.contact = p;
        if (p.last != 0) {
            // Pole: membership of (-mu x0', mu c +- 1) needs
            // mu (1 + c) <= 0 or forces c >= 1; both contradict mu > 0,
            // 0 <= c < 1.
            e.pole = true;
            e.valid = c_ok;
        } else {
            // Equator: squared comparison leaves
            // mu^2 (1 - c^2) + 2 mu (c - ip) <= 0, impossible when
            // 1 - c^2 > 0 and c >= ip.
            e.inner_product = inner(x0.head, p.head);
            e.valid = c_ok && out.c >= e.inner_product;
        }
        out.valid = out.valid && e.valid;
        out.entries.push_back(std::move(e));
    }
    return out;
}

// Rational point of the unit sphere in R^m from a rational seed vector:
// inverse stereographic projection (2u, |u|^2 - 1) / (|u|^2 + 1).
inline std::vector<Rat> rational_unit_vector(const std::vector<Rat>& u) {
    if (u.empty()) throw invalid_input("seed must be nonempty");
    Rat s = head_norm_sq(u);
    Rat den = s + 1;
    std::vector<Rat> out;
    for (const auto& c : u) out.push_back(Rat(2) * c / den);
    out.push_back((s - 1) / den);
    return out;
}

}  // namespace illum
