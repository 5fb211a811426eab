#include "illum/quad.hpp"
#include "illum/rat.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace illum;

TEST_CASE("rational helpers") {
    CHECK(rat(6, 4) == rat(3, 2));
    CHECK_THROWS_AS(rat(1, 0), invalid_input);
    CHECK(sgn(rat(-3, 7)) == -1);
    CHECK(sgn(Rat(0)) == 0);

    CHECK(to_string(rat(-3, 7)) == "-3/7");
    CHECK(to_string(Rat(5)) == "5");
    CHECK(parse_rat("-3/7") == rat(-3, 7));
    CHECK(parse_rat("42") == Rat(42));
    CHECK_THROWS_AS(parse_rat("1/0"), invalid_input);
    CHECK_THROWS_AS(parse_rat("x"), invalid_input);
}

TEST_CASE("rational square roots") {
    CHECK(rational_sqrt(rat(9, 4)) == rat(3, 2));
    CHECK(rational_sqrt(Rat(0)) == Rat(0));
    CHECK(!rational_sqrt(Rat(2)).has_value());
    CHECK(!rational_sqrt(Rat(-4)).has_value());

    auto [lo, hi] = sqrt_bounds(Rat(2), 40);
    CHECK(lo * lo <= Rat(2));
    CHECK(hi * hi >= Rat(2));
    CHECK(hi - lo <= Rat(Int(1), Int(1) << 40));
}

TEST_CASE("quadratic field arithmetic") {
    Quad r2 = Quad::sqrt_of(Rat(2));
    Quad one(1);

    CHECK(((one + r2) * (one - r2)).rational() == Rat(-1));
    CHECK((r2 * r2).rational() == Rat(2));
    CHECK(Quad(Rat(0), Rat(1), Rat(4)).rational() == Rat(2));  // sqrt(4) collapses
    CHECK((one / r2) == r2 / Quad(2));

    CHECK((r2 - one).sign() == 1);
    CHECK((one - r2).sign() == -1);
    CHECK((Quad(3) - Quad(2) * r2).sign() == 1);  // 3 > 2*sqrt(2)
    CHECK((Quad(2) * r2 - Quad(3)).sign() == -1);
    CHECK(r2 > one);
    CHECK(r2 < Quad(rat(3, 2)));

    Quad r3 = Quad::sqrt_of(Rat(3));
    CHECK_THROWS_AS(r2 + r3, invalid_input);
    CHECK_THROWS_AS(r2 * r3, invalid_input);
    CHECK((r2 + Quad(rat(1, 2))) * Quad(2) == Quad(1) + Quad(2) * r2);

    auto [lo, hi] = r3.bounds(30);
    CHECK(lo * lo <= Rat(3));
    CHECK(hi * hi >= Rat(3));
    CHECK(r3.approx() == Catch::Approx(1.7320508075688772));
    CHECK_THROWS_AS(r2.rational(), invalid_input);
}

TEST_CASE("mixed-field signs") {
    // p + q*sqrt(2) + r*sqrt(3) + s*sqrt(6)
    CHECK(sign_mixed(Rat(1), Rat(1), Rat(-1), Rat(0), Rat(2), Rat(3)) > 0);   // 1+sqrt2-sqrt3
    CHECK(sign_mixed(Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(2), Rat(3)) < 0);  // ... - sqrt6
    CHECK(sign_mixed(Rat(0), Rat(0), Rat(0), Rat(0), Rat(2), Rat(3)) == 0);
    CHECK(sign_mixed(rat(-5, 2), Rat(0), Rat(0), Rat(1), Rat(2), Rat(3)) < 0);  // sqrt(6) < 5/2
    CHECK(sign_mixed(rat(-12, 5), Rat(0), Rat(0), Rat(1), Rat(2), Rat(3)) > 0);

    Quad r2 = Quad::sqrt_of(Rat(2)), r3 = Quad::sqrt_of(Rat(3));
    Mixed m{Rat(0), Rat(0), Rat(0), Rat(0), Rat(2), Rat(3)};
    m.add_product(Quad(1) - r2, Quad(1) - r3);  // 1 - sqrt2 - sqrt3 + sqrt6 > 0
    CHECK(m.sign() > 0);
    Mixed n{Rat(0), Rat(0), Rat(0), Rat(0), Rat(2), Rat(3)};
    n.add_product(Quad(1) - r2, Quad(1) + r3);
    CHECK(n.sign() < 0);
}

TEST_CASE("square roots inside a quadratic field") {
    Rat d2(2), d3(3);
    Quad r2 = Quad::sqrt_of(d2), r3 = Quad::sqrt_of(d3);

    auto s = sqrt_in_field(Quad(12), d3);
    REQUIRE(s);
    CHECK(*s == Quad(2) * r3);

    auto t = sqrt_in_field(Quad(3) + Quad(2) * r2, d2);
    REQUIRE(t);
    CHECK(*t == Quad(1) + r2);

    auto u = sqrt_in_field(Quad(7) + Quad(4) * r3, d3);
    REQUIRE(u);
    CHECK(*u == Quad(2) + r3);

    CHECK(!sqrt_in_field(Quad(2), d3).has_value());
    CHECK(!sqrt_in_field(Quad(-1), d2).has_value());
    CHECK(sqrt_in_field(Quad(rat(9, 4)), d3).value() == Quad(rat(3, 2)));
    CHECK(sqrt_in_field(Quad(0), d2).value() == Quad(0));
}
