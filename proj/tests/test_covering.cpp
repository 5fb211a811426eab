#include "illum/quantified.hpp"
#include "illum/regular.hpp"
#include "gen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace illum;

namespace {

V2<Rat> pt(long long x, long long y) { return {Rat(x), Rat(y)}; }

ConvexPolygon<Rat> rectangle(const Rat& w, const Rat& h) {
    return make_polygon<Rat>({{-w, -h}, {w, -h}, {w, h}, {-w, h}});
}

// Verifies a Finite certificate: every translation has squared length
// eps_sq, and the negated translations yield a closed cover of K.
template <class S>
bool certificate_verifies(const ConvexPolygon<S>& K, const EpsSpec& eps,
                          const std::vector<V2<Quad>>& ts) {
    auto B = circumball(K);
    Quad eps_sq{Quad(eps.eps_sq(B))};
    for (const auto& t : ts)
        if (!(t.x * t.x + t.y * t.y == eps_sq)) return false;
    auto Kq = detail::lift_polygon(K);
    std::vector<V2<Quad>> cov;
    for (const auto& t : ts) cov.push_back(-t);
    return cover_residual(Kq, cov, Mode::Closed).covered;
}

using VerdictR = CountResult<Rat>::Verdict;
using VerdictQ = CountResult<Quad>::Verdict;

}  // namespace

TEST_CASE("classical numbers of the standard bodies") {
    auto Sq = rectangle(Rat(1), Rat(1));
    CHECK(number_i(Sq).value == 2);
    CHECK(number_c(Sq).value == 4);
    CHECK(system_illuminates_all(
        [&] {
            std::vector<V2<Rat>> ds;
            for (const auto& d : number_i(Sq).dirs) ds.push_back(d.rational_vec());
            return ds;
        }(),
        Sq, Mode::Closed));

    auto Tri = regular_triangle(Rat(1));
    CHECK(number_i(Tri).value == 3);
    CHECK(number_c(Tri).value == 3);

    auto Hex = regular_hexagon(Rat(1));
    CHECK(number_i(Hex).value == 2);
    CHECK(number_c(Hex).value == 3);
}

TEST_CASE("translative covering bounds") {
    auto Sq = rectangle(Rat(1), Rat(1));
    auto tb = number_t_bounds(Sq);
    CHECK(tb.lo == 2);
    CHECK(tb.hi == 2);
    CHECK(cover_residual(Sq, tb.hi_certificate, Mode::Closed).covered);

    auto Tri = regular_triangle(Rat(1));
    auto tt = number_t_bounds(Tri);
    CHECK(tt.lo == 3);
    CHECK(tt.hi == 3);
    CHECK(cover_residual(Tri, tt.hi_certificate, Mode::Closed).covered);

    auto Hex = regular_hexagon(Rat(1));
    auto th = number_t_bounds(Hex);
    CHECK(th.lo == 2);
    CHECK(th.lo <= th.hi);
    CHECK(th.hi <= 3);
    CHECK(cover_residual(Hex, th.hi_certificate, Mode::Closed).covered);
}

TEST_CASE("finiteness at the circumradius") {
    CHECK(finite_at_circumradius(rectangle(Rat(1), Rat(1))).verdict);
    CHECK(finite_at_circumradius(rectangle(Rat(2), Rat(1))).verdict);
    CHECK(finite_at_circumradius(rectangle(Rat(3), Rat(2))).verdict);

    // Triangles never qualify: their contact-cone angles sum to pi.
    std::mt19937_64 rng(11);
    for (int it = 0; it < 20; ++it) {
        auto cert = finite_at_circumradius(gen::random_triangle(rng));
        CHECK(!cert.verdict);
        REQUIRE(cert.gap_witness);
        for (const auto& a : cert.arcs) CHECK(!arc_contains(a, *cert.gap_witness));
    }

    // Non-rectangular cyclic quadrilateral: vertices on the unit circle
    // near angles 0, 80, 180, 260 degrees.
    auto Cyc = make_polygon<Rat>({gen::circle_point(Rat(1), Rat(0)),
                                  gen::circle_point(Rat(1), Rat(27, 32)), pt(-1, 0),
                                  gen::circle_point(Rat(1), Rat(-38, 32))});
    CHECK(!finite_at_circumradius(Cyc).verdict);
}

TEST_CASE("contact subset coverage") {
    auto Sq = rectangle(Rat(2), Rat(1));
    auto contacts = contact_set(Sq, circumball(Sq));
    REQUIRE(contacts.size() == 4);
    CHECK(contact_subset_covers(Sq, contacts));
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<V2<Rat>> three;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip) three.push_back(contacts[i]);
        CHECK(!contact_subset_covers(Sq, three));
    }
    CHECK_THROWS_AS(contact_subset_covers(Sq, std::vector<V2<Rat>>{pt(0, 0)}), invalid_input);

    auto Tri = regular_triangle(Rat(1));
    CHECK(!contact_subset_covers(Tri, contact_set(Tri, circumball(Tri))));
}

TEST_CASE("H construction") {
    std::mt19937_64 rng(13);
    std::vector<ConvexPolygon<Rat>> polys = {rectangle(Rat(1), Rat(1)), rectangle(Rat(3), Rat(1))};
    for (int it = 0; it < 15; ++it) polys.push_back(gen::random_cyclic_polygon(rng, 4 + it % 5));
    for (const auto& K : polys) {
        auto H = construct_H(K);
        CHECK(H.size() <= 12);
        if (finite_at_circumradius(K).verdict) CHECK(contact_subset_covers(K, H));
    }
    auto Hex = regular_hexagon(Rat(1));
    auto H = construct_H(Hex);
    CHECK(H.size() <= 12);
    CHECK(contact_subset_covers(Hex, H));
}

TEST_CASE("threshold above the circumradius") {
    auto Sq = rectangle(Rat(1), Rat(1));  // R^2 = 2
    auto r1 = threshold_check(Sq, EpsSpec::exact(Rat(2)));
    CHECK(r1.verdict == VerdictR::Infinite);
    REQUIRE(r1.witness);
    CHECK(*r1.witness == pt(0, 0));

    auto Tri = make_polygon<Rat>({pt(0, 0), pt(4, 0), pt(0, 3)});
    CHECK(threshold_check(Tri, EpsSpec::radius_multiple(Rat(2))).verdict == VerdictR::Infinite);

    CHECK_THROWS_AS(threshold_check(Sq, EpsSpec::radius_multiple(Rat(1))), invalid_input);
    CHECK_THROWS_AS(threshold_check(Sq, EpsSpec::exact(Rat(1))), invalid_input);
}

TEST_CASE("quantified count at the circumradius") {
    // Rectangles: finite with the four vertex chords.
    for (const Rat& w : {Rat(1), Rat(2), Rat(3, 2)}) {
        auto Q = rectangle(w, Rat(1));
        auto r = quantified_count(Q, EpsSpec::radius_multiple(Rat(1)), Mode::Closed);
        REQUIRE(r.verdict == VerdictR::Finite);
        CHECK(r.count == 4);
        REQUIRE(r.certificate.size() == 4);
        for (const auto& t : r.certificate) {
            bool chord = false;
            for (const auto& v : Q.vertices())
                if (t == lift(-v)) chord = true;  // c_K is the origin
            CHECK(chord);
        }
        CHECK(certificate_verifies(Q, EpsSpec::radius_multiple(Rat(1)), r.certificate));
    }

    // Triangles: infinite.
    std::mt19937_64 rng(17);
    for (int it = 0; it < 20; ++it) {
        auto T = gen::random_triangle(rng);
        auto r = quantified_count(T, EpsSpec::radius_multiple(Rat(1)), Mode::Closed);
        CHECK(r.verdict == VerdictR::Infinite);
    }

    // Non-rectangular quadrilaterals: infinite.
    int done = 0;
    while (done < 20) {
        auto Q = done % 2 == 0 ? gen::random_quadrilateral(rng)
                               : gen::random_cyclic_polygon(rng, 4);
        if (gen::is_rectangle(Q)) continue;
        auto r = quantified_count(Q, EpsSpec::radius_multiple(Rat(1)), Mode::Closed);
        CHECK(r.verdict == VerdictR::Infinite);
        ++done;
    }

    // Regular hexagon: three alternating vertex chords.
    auto Hex = regular_hexagon(Rat(1));
    auto rh = quantified_count(Hex, EpsSpec::radius_multiple(Rat(1)), Mode::Closed);
    REQUIRE(rh.verdict == VerdictQ::Finite);
    CHECK(rh.count == 3);
    REQUIRE(rh.certificate.size() == 3);
    std::vector<std::size_t> used;
    for (const auto& t : rh.certificate)
        for (std::size_t i = 0; i < 6; ++i)
            if (t == -lift(Hex.vertex(i))) used.push_back(i);
    REQUIRE(used.size() == 3);  // every translation is a vertex chord
    std::sort(used.begin(), used.end());
    CHECK((used[1] + 6 - used[0]) % 6 == 2);  // alternating vertices
    CHECK((used[2] + 6 - used[1]) % 6 == 2);
    CHECK(certificate_verifies(Hex, EpsSpec::radius_multiple(Rat(1)), rh.certificate));

    // Regular polygons with quadratic coordinates stay finite at R.
    CHECK(finite_at_circumradius(regular_square(Rat(1))).verdict);
    CHECK(finite_at_circumradius(Hex).verdict);
    for (unsigned n = 4; n <= 12; ++n) CHECK(regular_finite_at_circumradius(n));
    CHECK(!regular_finite_at_circumradius(3));
}

TEST_CASE("quantified count in open mode at the circumradius") {
    std::mt19937_64 rng(19);
    auto suite = gen::polygon_suite(10, 2024);
    for (const auto& K : suite) {
        auto r = quantified_count(K, EpsSpec::radius_multiple(Rat(1)), Mode::Interior);
        REQUIRE(r.verdict == VerdictR::Infinite);
        REQUIRE(r.witness);
        CHECK(*r.witness == circumball(K).center);
    }
}

TEST_CASE("quantified count below the circumradius") {
    auto Sq = rectangle(Rat(1), Rat(1));
    auto r = quantified_count(Sq, EpsSpec::radius_multiple(Rat(1, 2)), Mode::Closed);
    REQUIRE(r.verdict == VerdictR::Finite);
    CHECK(certificate_verifies(Sq, EpsSpec::radius_multiple(Rat(1, 2)), r.certificate));

    auto ro = quantified_count(Sq, EpsSpec::exact(Rat(1, 2)), Mode::Interior);
    REQUIRE(ro.verdict == VerdictR::Finite);
    CHECK(ro.count == number_c(Sq).value);

    CHECK_THROWS_AS(quantified_count(Sq, EpsSpec::exact(Rat(-1)), Mode::Closed), invalid_input);
}

TEST_CASE("disc closed form") {
    for (const Rat& e : {Rat(1, 4), Rat(1, 2), Rat(1)}) {
        auto d = disc_quantified(Rat(1), e, Mode::Closed);
        REQUIRE(d.finite);
        CHECK(d.count == 3);
        REQUIRE(d.certificate.size() == 3);
        for (const auto& t : d.certificate) CHECK(t.x * t.x + t.y * t.y == Quad(e * e));
    }
    CHECK(!disc_quantified(Rat(1), Rat(3, 2), Mode::Closed).finite);
    CHECK(!disc_quantified(Rat(1), Rat(1), Mode::Interior).finite);
    CHECK(disc_quantified(Rat(1), Rat(1, 2), Mode::Interior).finite);
    CHECK_THROWS_AS(disc_quantified(Rat(0), Rat(1), Mode::Closed), invalid_input);
}
