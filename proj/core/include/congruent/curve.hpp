#pragma once

// The curve family y^2 = x^3 + a x^2 + b x and square classes in Q*/Q*^2.

#include "congruent/arith.hpp"

namespace congruent {

using arith::BigInt;

struct Curve {
    BigInt a;
    BigInt b;

    Curve() = default;
    // Throws std::invalid_argument for singular models (b = 0 or a^2 = 4b).
    Curve(BigInt a_, BigInt b_);

    BigInt discriminant_factor() const { return a * a - 4 * b; }
    friend bool operator==(const Curve& x, const Curve& y) { return x.a == y.a && x.b == y.b; }
};

// y^2 = x^3 - n^2 x.
Curve congruent_curve(const BigInt& n);

// Squarefree representative of an element of Q*/Q*^2.
struct SquareClass {
    BigInt d;

    friend bool operator==(const SquareClass& x, const SquareClass& y) { return x.d == y.d; }
};

// Canonical order: by |d|, positive before negative.
bool operator<(const SquareClass& x, const SquareClass& y);
SquareClass class_of(const BigInt& n);                 // n != 0
SquareClass class_of(const arith::ExactRational& q);   // q != 0
SquareClass class_product(const SquareClass& x, const SquareClass& y);

}  // namespace congruent
