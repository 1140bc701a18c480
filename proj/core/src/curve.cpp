#include "congruent/curve.hpp"

#include <stdexcept>

namespace congruent {

Curve::Curve(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {
    if (b == 0) throw std::invalid_argument("singular curve: b = 0");
    if (a * a - 4 * b == 0) throw std::invalid_argument("singular curve: a^2 - 4b = 0");
}

Curve congruent_curve(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("congruent_curve: n must be positive");
    return Curve(BigInt(0), BigInt(-n * n));
}

bool operator<(const SquareClass& x, const SquareClass& y) {
    int c = mpz_cmpabs(x.d.get_mpz_t(), y.d.get_mpz_t());
    if (c != 0) return c < 0;
    return x.d > y.d;
}

SquareClass class_of(const BigInt& n) { return {arith::squarefree_part(n)}; }

SquareClass class_of(const arith::ExactRational& q) {
    if (q.is_zero()) throw std::invalid_argument("class_of(0)");
    return class_of(BigInt(q.numerator() * q.denominator()));
}

SquareClass class_product(const SquareClass& x, const SquareClass& y) {
    // For squarefree x, y: x y / gcd(x, y)^2 is the squarefree product.
    BigInt g = arith::gcd(x.d, y.d);
    return {BigInt(x.d * y.d / (g * g))};
}

}  // namespace congruent
