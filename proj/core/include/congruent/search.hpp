#pragma once

// Witness searches for N^2 = b1 m^4 + a m^2 e^2 + b2 e^4.
//
// The plain search scans (m, e) directly.  The lifted search first solves the
// conic N^2 = b1 X^2 + a X Y + b2 Y^2, writes X, Y as binary quadratic forms
// in (u, v), and for each squarefree lambda dividing their resultant solves
// X(u, v) = lambda w^2; the remaining condition lambda Y = square is a quartic
// in two new parameters (s, t).  Solutions of the original quartic with large
// m, e typically have s, t near the square root of m, e, so a scan of the
// same bound reaches much further.  Every hit is re-verified on the original
// quartic; the lifted search never certifies anything negative.

#include "congruent/descent.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace congruent::search {

using arith::BigInt;
using descent::HomogeneousSpace;
using descent::Witness;

// First (m, e) in shell order, or nothing.
std::optional<Witness> plain_search(const HomogeneousSpace& S, std::int64_t bound);

struct BinaryQuadratic {
    BigInt a, b, c;  // a u^2 + b u v + c v^2
    BigInt operator()(const BigInt& u, const BigInt& v) const { return a * u * u + b * u * v + c * v * v; }
};

struct ConicPoint {
    BigInt x, y, z;
};

// Smallest (in max(|x|, |y|)) nonzero integer point of  q(x, y) = k z^2.
std::optional<ConicPoint> small_conic_point(const BinaryQuadratic& q, const BigInt& k, std::int64_t bound);
// Hasse-Minkowski test for q(x, y) = k z^2 (true also when undecidable here).
bool conic_locally_soluble(const BinaryQuadratic& q, const BigInt& k);
// The first `count` such points in the same order.
std::vector<ConicPoint> small_conic_points(const BinaryQuadratic& q, const BigInt& k, std::int64_t bound,
                                          std::size_t count);

// X(u, v), Y(u, v) with (X : Y : N) running over the conic N^2 = b1 X^2 + a X Y + b2 Y^2.
struct ConicParametrization {
    BinaryQuadratic X;
    BinaryQuadratic Y;
};
std::optional<ConicParametrization> parametrize_quartic_conic(const HomogeneousSpace& S, std::int64_t point_bound);

BigInt resultant(const BinaryQuadratic& p, const BinaryQuadratic& q);

struct LiftedOptions {
    std::int64_t conic_bound = 2000;      // first conic point search
    std::int64_t cover_conic_bound = 600; // point search on X(u, v) = lambda w^2
    std::size_t base_points = 4;          // conic parametrizations tried, from distinct small points
};

// Scans coprime parameters (s, t) with max(|s|, |t|) <= parameter_bound.
std::optional<Witness> lifted_search(const HomogeneousSpace& S, std::int64_t parameter_bound,
                                     const LiftedOptions& options = {});

}  // namespace congruent::search
