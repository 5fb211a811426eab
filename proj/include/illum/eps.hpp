#pragma once

#include "illum/circumball.hpp"

namespace illum {

// Quantification parameter: an exact rational length, or a rational
// multiple of the circumradius (radius_multiple(1) is exactly R(K), whose
// value is known only through R^2). All comparisons happen on squares.
struct EpsSpec {
    enum class Kind { ExactRational, CircumradiusMultiple };

    Kind kind;
    Rat value;  // the length itself, or the multiple of R

    static EpsSpec exact(Rat eps) {
        if (eps <= 0) throw invalid_input("eps must be positive");
        return {Kind::ExactRational, std::move(eps)};
    }
    static EpsSpec radius_multiple(Rat factor) {
        if (factor <= 0) throw invalid_input("eps must be positive");
        return {Kind::CircumradiusMultiple, std::move(factor)};
    }

    template <class S>
    S eps_sq(const CircleSq<S>& B) const {
        S f(value * value);
        return kind == Kind::ExactRational ? f : S(f * B.radius_sq);
    }
};

}  // namespace illum
