#include "congruent/points.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace congruent::points {

using arith::i128;

bool on_curve(const Curve& E, const RationalPoint& P) {
    if (P.at_infinity) return true;
    const ExactRational& x = P.x;
    ExactRational rhs = x * x * x + ExactRational(E.a) * x * x + ExactRational(E.b) * x;
    return P.y * P.y == rhs;
}

RationalPoint negate(const Curve&, const RationalPoint& P) {
    if (P.at_infinity) return P;
    return {P.x, -P.y, false};
}

RationalPoint add(const Curve& E, const RationalPoint& P, const RationalPoint& Q) {
    if (P.at_infinity) return Q;
    if (Q.at_infinity) return P;
    ExactRational lambda;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return RationalPoint::infinity();  // inverse pair, or 2-torsion doubled
        ExactRational three(3L), two(2L);
        lambda = (three * P.x * P.x + two * ExactRational(E.a) * P.x + ExactRational(E.b)) / (two * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    ExactRational x3 = lambda * lambda - ExactRational(E.a) - P.x - Q.x;
    ExactRational y3 = lambda * (P.x - x3) - P.y;
    return {x3, y3, false};
}

RationalPoint multiply(const Curve& E, const RationalPoint& P, std::int64_t k) {
    RationalPoint base = k < 0 ? negate(E, P) : P;
    std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    RationalPoint acc = RationalPoint::infinity();
    while (n) {
        if (n & 1) acc = add(E, acc, base);
        base = add(E, base, base);
        n >>= 1;
    }
    return acc;
}

SquareClass alpha_map(const Curve& E, const RationalPoint& P) {
    if (P.at_infinity) return {BigInt(1)};
    if (P.x.is_zero()) return class_of(E.b);
    // On the curve x = d m^2 / e^2 with d | b, so trying those d avoids
    // factoring the (possibly huge) numerator and denominator.
    const BigInt xd = P.x.numerator() * P.x.denominator();
    if (arith::abs(E.b) > 1)
        for (const auto& d : arith::signed_squarefree_divisors(E.b))
            if (arith::is_perfect_square(BigInt(xd * d))) return {d};
    return class_of(P.x);
}

RationalPoint isogeny(const Curve& E, const RationalPoint& P) {
    if (P.at_infinity || P.x.is_zero()) return RationalPoint::infinity();
    const ExactRational x2 = P.x * P.x;
    return {P.y * P.y / x2, P.y * (ExactRational(E.b) - x2) / x2, false};
}

RationalPoint isogeny_back(const Curve& E, const RationalPoint& Pbar) {
    const Curve Ebar(BigInt(-2 * E.a), BigInt(E.a * E.a - 4 * E.b));
    // The isogeny of Ebar lands on (4a, 16b); (x, y) -> (x/4, y/8) returns to E.
    RationalPoint Q = isogeny(Ebar, Pbar);
    if (Q.at_infinity) return Q;
    return {Q.x / ExactRational(4L), Q.y / ExactRational(8L), false};
}

RightTriangle triangle_from_point(const BigInt& n, const RationalPoint& P) {
    if (P.at_infinity || P.y.is_zero())
        throw std::invalid_argument("triangle_from_point: 2-torsion point gives no triangle");
    const ExactRational N(n);
    const ExactRational ay = P.y.abs();
    RightTriangle t{(P.x * P.x - N * N).abs() / ay, (ExactRational(2L) * N * P.x).abs() / ay,
                    (P.x * P.x + N * N) / ay};
    if (t.leg_a * t.leg_a + t.leg_b * t.leg_b != t.hyp * t.hyp)
        throw std::logic_error("triangle_from_point: Pythagorean check failed");
    if (t.leg_a * t.leg_b / ExactRational(2L) != N)
        throw std::logic_error("triangle_from_point: area check failed");
    return t;
}

std::vector<SquareClass> divisor_classes(const Curve& E) {
    std::vector<SquareClass> out;
    for (const auto& d : arith::signed_squarefree_divisors(E.b)) out.push_back({d});
    return out;
}

namespace {

struct Found {
    std::int64_t e;
    std::int64_t m;
    RationalPoint point;
};

// x = d m^2 / e^2 is on the curve iff d * (d^2 m^4 + a d m^2 e^2 + b e^4) is a square.
void scan_class_fast(const Curve& E, i128 d, std::int64_t H, std::vector<Found>& out) {
    const i128 a = arith::to_i128(E.a), b = arith::to_i128(E.b);
    // Squares modulo 9 * 5 * 7 * 11 * 13 as a cheap prefilter.
    constexpr std::int64_t kMod = 45045;
    static const std::vector<bool> is_sq = [] {
        std::vector<bool> t(kMod, false);
        for (std::int64_t r = 0; r < kMod; ++r) t[static_cast<std::size_t>(r * r % kMod)] = true;
        return t;
    }();
    auto mod = [](i128 v) {
        std::int64_t r = static_cast<std::int64_t>(v % kMod);
        return r < 0 ? r + kMod : r;
    };
    const std::int64_t dm = mod(d), am = mod(a), bm = mod(b);
    for (std::int64_t e = 1; e <= H; ++e) {
        const i128 e2 = static_cast<i128>(e) * e, e4 = e2 * e2;
        const std::int64_t e2m = mod(e2), e4m = mod(e4);
        for (std::int64_t m = (e == 1 ? 0 : 1); m <= H; ++m) {
            if (std::gcd(m, e) != 1) continue;
            const i128 m2 = static_cast<i128>(m) * m;
            const std::int64_t m2m = mod(m2);
            std::int64_t qm = (dm * dm % kMod * (m2m * m2m % kMod) + am * dm % kMod * m2m % kMod * e2m +
                               bm * e4m) % kMod;
            if (!is_sq[static_cast<std::size_t>(dm * qm % kMod)]) continue;
            const i128 q = d * d * m2 * m2 + a * d * m2 * e2 + b * e4;
            i128 root;
            if (!arith::perfect_square_root_128(d * q, root)) continue;
            // y^2 = d m^2 Q / e^6, so y = m sqrt(d Q) / e^3.
            ExactRational x(arith::from_i128(d * m2), arith::from_i128(e2));
            ExactRational y(arith::from_i128(root * m), arith::from_i128(e2 * e));
            out.push_back({e, m, {x, y, false}});
            if (!y.is_zero()) out.push_back({e, m, {x, -y, false}});
        }
    }
}

void scan_class_exact(const Curve& E, const BigInt& d, std::int64_t H, std::vector<Found>& out) {
    for (std::int64_t e = 1; e <= H; ++e) {
        const BigInt e2 = BigInt(e) * e, e4 = e2 * e2;
        for (std::int64_t m = (e == 1 ? 0 : 1); m <= H; ++m) {
            if (std::gcd(m, e) != 1) continue;
            const BigInt m2 = BigInt(m) * m;
            BigInt q = d * d * m2 * m2 + E.a * d * m2 * e2 + E.b * e4;
            auto root = arith::perfect_square_root(BigInt(d * q));
            if (!root) continue;
            ExactRational x(BigInt(d * m2), e2);
            ExactRational y(BigInt(*root * m), BigInt(e2 * e));
            out.push_back({e, m, {x, y, false}});
            if (!y.is_zero()) out.push_back({e, m, {x, -y, false}});
        }
    }
}

}  // namespace

std::vector<RationalPoint> point_search(const Curve& E, std::int64_t height_bound) {
    if (height_bound < 1) throw std::invalid_argument("point_search: height_bound must be >= 1");
    std::vector<Found> found;
    const BigInt scale = arith::abs(E.a) + arith::abs(E.b) + 1;
    for (const auto& cls : divisor_classes(E)) {
        // |d (d^2 m^4 + a d m^2 e^2 + b e^4)| <= |d|^3 scale H^4 must stay below 2^125.
        BigInt h = height_bound;
        BigInt worst = arith::abs(cls.d) * (cls.d * cls.d) * scale * h * h * h * h;
        if (arith::fits_i128(worst, 125))
            scan_class_fast(E, arith::to_i128(cls.d), height_bound, found);
        else
            scan_class_exact(E, cls.d, height_bound, found);
    }
    for (const auto& f : found)
        if (!on_curve(E, f.point)) throw std::logic_error("point_search: produced a point off the curve");
    std::sort(found.begin(), found.end(), [](const Found& p, const Found& q) {
        if (p.e != q.e) return p.e < q.e;
        if (p.m != q.m) return p.m < q.m;
        if (!(p.point.x == q.point.x)) return p.point.x < q.point.x;
        return p.point.y < q.point.y;
    });
    std::vector<RationalPoint> out;
    for (const auto& f : found)
        if (std::find(out.begin(), out.end(), f.point) == out.end()) out.push_back(f.point);
    return out;
}

}  // namespace congruent::points
