#pragma once

#include "illum/interval.hpp"
#include "illum/rat.hpp"

#include <optional>
#include <utility>

namespace illum {

// Element a + b*sqrt(d) of a real quadratic extension of Q. Values with
// b == 0 are plain rationals and combine with any field; mixing two
// different genuine radicals in arithmetic is an error (sign tests across
// fields go through sign_mixed below).
class Quad {
public:
    Quad() : a_(0), b_(0), d_(0) {}
    Quad(Rat a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT: implicit by design
    Quad(long long a) : a_(a), b_(0), d_(0) {}       // NOLINT

    Quad(Rat a, Rat b, Rat d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ < 0) throw invalid_input("negative radicand");
        normalize();
    }

    static Quad sqrt_of(const Rat& r) { return Quad(Rat(0), Rat(1), r); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    const Rat& rational() const {
        if (!is_rational()) throw invalid_input("Quad value is irrational");
        return a_;
    }

    friend Quad operator+(const Quad& x, const Quad& y) {
        Rat d = join(x, y);
        return Quad(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Quad operator-(const Quad& x, const Quad& y) {
        Rat d = join(x, y);
        return Quad(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend Quad operator-(const Quad& x) { return Quad(-x.a_, -x.b_, x.d_); }
    friend Quad operator*(const Quad& x, const Quad& y) {
        Rat d = join(x, y);
        return Quad(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend Quad operator/(const Quad& x, const Quad& y) {
        Rat d = join(x, y);
        Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
        if (norm == 0) {
            if (y.a_ == 0 && y.b_ == 0) throw invalid_input("division by zero");
            // a^2 == b^2 d with a,b != 0 would make sqrt(d) rational; the
            // constructor collapses that case, so norm == 0 implies y == 0.
            throw invalid_input("division by zero");
        }
        Quad conj(y.a_, -y.b_, d);
        Quad num = x * conj;
        return Quad(num.a_ / norm, num.b_ / norm, d);
    }

    Quad& operator+=(const Quad& y) { return *this = *this + y; }
    Quad& operator-=(const Quad& y) { return *this = *this - y; }
    Quad& operator*=(const Quad& y) { return *this = *this * y; }
    Quad& operator/=(const Quad& y) { return *this = *this / y; }

    int sign() const {
        if (b_ == 0) return sgn(a_);
        if (a_ == 0) return sgn(b_);
        int sa = sgn(a_), sb = sgn(b_);
        if (sa == sb) return sa;
        // Certified double enclosure decides most cases without big-integer
        // products.
        detail::DIv enc = detail::div_add(
            detail::div_enclose(a_),
            detail::div_mul(detail::div_enclose(b_), detail::div_sqrt(detail::div_enclose(d_))));
        if (int s = detail::div_sign(enc); s != 2) return s;
        int cmp = sgn(a_ * a_ - b_ * b_ * d_);  // |a| vs |b|sqrt(d)
        return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
    }

    friend bool operator==(const Quad& x, const Quad& y) { return (x - y).sign() == 0; }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
    friend bool operator<(const Quad& x, const Quad& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Quad& x, const Quad& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Quad& x, const Quad& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Quad& x, const Quad& y) { return (x - y).sign() >= 0; }

    // Rational enclosure with width below 1/2^bits.
    std::pair<Rat, Rat> bounds(unsigned bits) const {
        if (b_ == 0) return {a_, a_};
        auto [lo, hi] = sqrt_bounds(d_, bits + 8);
        if (b_ > 0) return {a_ + b_ * lo, a_ + b_ * hi};
        return {a_ + b_ * hi, a_ + b_ * lo};
    }

    double approx() const {
        auto [lo, hi] = bounds(64);
        return to_double((lo + hi) / 2);
    }

private:
    void normalize() {
        if (b_ == 0 || d_ == 0) {
            b_ = 0;
            d_ = 0;
            return;
        }
        if (auto r = rational_sqrt(d_)) {
            a_ += b_ * *r;
            b_ = 0;
            d_ = 0;
        }
    }

    static Rat join(const Quad& x, const Quad& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw invalid_input("mixed quadratic fields in arithmetic");
        return x.d_;
    }

    Rat a_, b_, d_;
};

inline int sgn(const Quad& x) { return x.sign(); }

namespace detail {

inline DIv div_enclose(const Quad& x) {
    DIv out = div_enclose(x.a());
    if (x.b() != 0)
        out = div_add(out, div_mul(div_enclose(x.b()), div_sqrt(div_enclose(x.d()))));
    return out;
}

}  // namespace detail
inline double to_double(const Quad& x) { return x.approx(); }

// Exact sign of p + q*sqrt(d1) + r*sqrt(d2) + s*sqrt(d1*d2).
inline int sign_mixed(const Rat& p, const Rat& q, const Rat& r, const Rat& s,
                      const Rat& d1, const Rat& d2) {
    Quad A(p, q, d1);  // coefficient of 1
    Quad B(r, s, d1);  // coefficient of sqrt(d2)
    if (d2 == 0 || B.sign() == 0) return A.sign();
    if (A.sign() == 0) return B.sign();
    {
        // Certified double enclosure of the full 4-term value.
        detail::DIv r1 = detail::div_sqrt(detail::div_enclose(d1));
        detail::DIv r2 = detail::div_sqrt(detail::div_enclose(d2));
        detail::DIv enc = detail::div_add(
            detail::div_add(detail::div_enclose(p), detail::div_mul(detail::div_enclose(q), r1)),
            detail::div_add(detail::div_mul(detail::div_enclose(r), r2),
                            detail::div_mul(detail::div_mul(detail::div_enclose(s), r1), r2)));
        if (int sgn_enc = detail::div_sign(enc); sgn_enc != 2) return sgn_enc;
    }
    int sa = A.sign(), sb = B.sign();
    if (sa == sb) return sa;
    int cmp = (A * A - B * B * Quad(d2)).sign();  // |A| vs |B|sqrt(d2)
    return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

// Product of two Quads from possibly different fields, as the 4-term
// expression p + q*sqrt(d1) + r*sqrt(d2) + s*sqrt(d1*d2).
struct Mixed {
    Rat p, q, r, s, d1, d2;

    int sign() const { return sign_mixed(p, q, r, s, d1, d2); }

    Mixed& add_product(const Quad& x, const Quad& y, const Rat& coef = Rat(1)) {
        // x lives in Q(sqrt(d1)), y in Q(sqrt(d2)).
        p += coef * x.a() * y.a();
        q += coef * x.b() * y.a();
        r += coef * x.a() * y.b();
        s += coef * x.b() * y.b();
        return *this;
    }
};

// sqrt of x within Q(sqrt(ambient_d)), when it exists there.
inline std::optional<Quad> sqrt_in_field(const Quad& x, const Rat& ambient_d) {
    if (x.sign() < 0) return std::nullopt;
    if (x.sign() == 0) return Quad(Rat(0));
    if (x.is_rational()) {
        if (auto r = rational_sqrt(x.a())) return Quad(*r);
        if (ambient_d > 0) {
            if (auto q = rational_sqrt(x.a() / ambient_d)) return Quad(Rat(0), *q, ambient_d);
        }
        return std::nullopt;
    }
    if (x.d() != ambient_d) return std::nullopt;
    // (p + q*sqrt(d))^2 = a + b*sqrt(d):  p^2 + q^2 d = a, 2pq = b.
    const Rat &a = x.a(), &b = x.b(), &d = x.d();
    Rat disc = a * a - b * b * d;
    auto rd = rational_sqrt(disc);
    if (!rd) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        Rat p2 = (pick == 0) ? Rat((a + *rd) / 2) : Rat((a - *rd) / 2);
        auto p = rational_sqrt(p2);
        if (!p || *p == 0) continue;
        Rat q = b / (2 * *p);
        Quad cand(*p, q, d);
        if (cand.sign() > 0 && cand * cand == x) return cand;
        cand = -cand;
        if (cand.sign() > 0 && cand * cand == x) return cand;
    }
    return std::nullopt;
}

}  // namespace illum
