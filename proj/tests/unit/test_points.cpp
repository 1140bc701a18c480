#include "congruent/points.hpp"

#include <doctest.h>

#include <algorithm>

using namespace congruent;
using namespace congruent::points;

namespace {

RationalPoint pt(long x, long y) { return {ExactRational(x), ExactRational(y), false}; }

bool contains(const std::vector<RationalPoint>& v, const RationalPoint& P) {
    return std::find(v.begin(), v.end(), P) != v.end();
}

}  // namespace

TEST_SUITE("points") {

TEST_CASE("membership") {
    CHECK(on_curve(Curve(0, -25), pt(-4, 6)));
    CHECK(on_curve(Curve(0, -36), pt(-3, 9)));
    CHECK_FALSE(on_curve(Curve(0, -25), pt(1, 1)));
    CHECK(on_curve(Curve(0, -25), RationalPoint::infinity()));
}

TEST_CASE("group law edge cases") {
    const Curve E(0, -25);
    const RationalPoint P = pt(-4, 6);
    CHECK(add(E, P, RationalPoint::infinity()) == P);
    CHECK(add(E, pt(0, 0), pt(0, 0)).at_infinity);
    CHECK(add(E, P, pt(-4, -6)).at_infinity);
    CHECK(negate(E, P) == pt(-4, -6));
    const auto D = add(E, P, P);
    CHECK(on_curve(E, D));
    CHECK(D.x.to_string() == "1681/144");
}

TEST_CASE("alpha map") {
    const Curve E(0, -25);
    CHECK(alpha_map(E, pt(-4, 6)).d == -1);
    CHECK(alpha_map(E, pt(0, 0)).d == -1);
    CHECK(alpha_map(E, RationalPoint::infinity()).d == 1);
    const RationalPoint Q{ExactRational(BigInt(41), BigInt(16)), ExactRational(BigInt(8405), BigInt(64)), false};
    CHECK(alpha_map(Curve(0, 6724), Q).d == 41);
}

TEST_CASE("triangles from points") {
    auto t = triangle_from_point(5, pt(-4, 6));
    CHECK(t.leg_a.to_string() == "3/2");
    CHECK(t.leg_b.to_string() == "20/3");
    CHECK(t.hyp.to_string() == "41/6");
    t = triangle_from_point(6, pt(-3, 9));
    CHECK(t.leg_a.to_string() == "3");
    CHECK(t.leg_b.to_string() == "4");
    CHECK(t.hyp.to_string() == "5");
    CHECK_THROWS_AS(triangle_from_point(5, pt(5, 0)), std::invalid_argument);
}

TEST_CASE("point search") {
    auto found = point_search(Curve(0, -25), 5);
    CHECK(contains(found, pt(-4, 6)));
    CHECK(contains(found, pt(-4, -6)));
    CHECK(contains(found, pt(0, 0)));
    CHECK(contains(found, pt(5, 0)));
    CHECK(contains(found, pt(-5, 0)));

    found = point_search(Curve(0, -9), 20);
    for (const auto& P : found) CHECK(P.y.is_zero());

    CHECK(contains(point_search(Curve(0, -36), 5), pt(-3, 9)));
}

TEST_CASE("isogeny and its dual compose to doubling") {
    const Curve E(0, -25);
    const RationalPoint P = pt(-4, 6);
    const auto Pbar = isogeny(E, P);
    const Curve Ebar(0, 100);
    CHECK(on_curve(Ebar, Pbar));
    CHECK(isogeny_back(E, Pbar) == add(E, P, P));
}

}
