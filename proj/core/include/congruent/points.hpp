#pragma once

// Exact rational points on y^2 = x^3 + a x^2 + b x: group law, the alpha map,
// a bounded point search and the congruent-number / right-triangle dictionary.

#include "congruent/arith.hpp"
#include "congruent/curve.hpp"

#include <cstdint>
#include <vector>

namespace congruent::points {

using arith::BigInt;
using arith::ExactRational;

struct RationalPoint {
    ExactRational x;
    ExactRational y;
    bool at_infinity = false;

    static RationalPoint infinity() { return {ExactRational(0L), ExactRational(0L), true}; }
    friend bool operator==(const RationalPoint& p, const RationalPoint& q) {
        if (p.at_infinity || q.at_infinity) return p.at_infinity == q.at_infinity;
        return p.x == q.x && p.y == q.y;
    }
};

struct RightTriangle {
    ExactRational leg_a;
    ExactRational leg_b;
    ExactRational hyp;
};

bool on_curve(const Curve& E, const RationalPoint& P);
RationalPoint negate(const Curve& E, const RationalPoint& P);
RationalPoint add(const Curve& E, const RationalPoint& P, const RationalPoint& Q);
RationalPoint multiply(const Curve& E, const RationalPoint& P, std::int64_t k);

// O -> 1, (0,0) -> class(b), otherwise the class of x.
SquareClass alpha_map(const Curve& E, const RationalPoint& P);

// The 2-isogeny E -> Ebar = (-2a, a^2 - 4b): (x, y) -> (y^2/x^2, y (b - x^2)/x^2),
// with O and (0, 0) mapping to O.
RationalPoint isogeny(const Curve& E, const RationalPoint& P);
// The dual direction: a point of isogenous_curve(E) mapped back onto E.
RationalPoint isogeny_back(const Curve& E, const RationalPoint& Pbar);

// P on y^2 = x^3 - n^2 x with y != 0; legs |x^2 - n^2|/|y| and |2 n x|/|y|.
// Throws std::invalid_argument for 2-torsion input.
RightTriangle triangle_from_point(const BigInt& n, const RationalPoint& P);

// Every point with x = d m^2 / e^2 for a candidate class d and coprime
// 0 <= m, 1 <= e <= height_bound (m = 0 only for the origin), both signs of y,
// deduplicated and sorted by (e, |m|, x, y).  The 2-torsion is included.
std::vector<RationalPoint> point_search(const Curve& E, std::int64_t height_bound);

// Squarefree d with d | b (both signs) used as the x-classes in point_search.
std::vector<SquareClass> divisor_classes(const Curve& E);

}  // namespace congruent::points
