#pragma once

// Local solvability of N^2 = b1 m^4 + a m^2 e^2 + b2 e^4 at a prime l.
//
// Primitive pairs (m, e) split into two charts: e a unit (scale to (t, 1),
// t in Z_l) or l | e (scale to (1, z), z in l Z_l).  Each chart is explored as
// a tree of residue classes t = c + l^i s; a class is closed as soon as the
// valuation and unit part of the quartic are constant on it, or Hensel's lemma
// puts a root inside it.  The same tree truncated at depth k answers the
// question "is there a primitive solution modulo l^k?" exactly.

#include "congruent/arith.hpp"
#include "congruent/descent.hpp"

#include <cstdint>
#include <optional>

namespace congruent::local {

using arith::BigInt;
using descent::HomogeneousSpace;

enum class Answer { Soluble, Insoluble, Unknown };

struct LiftLimits {
    unsigned max_depth = 96;              // deeper classes are reported Unknown
    std::uint64_t max_nodes = 2'000'000;  // total tree nodes per call
    BigInt max_enumerated_prime = 2'000'000;  // full residue enumeration only below this
};

struct LocalResult {
    Answer answer = Answer::Unknown;
    unsigned certificate_exponent = 0;  // Insoluble: no primitive solution mod l^exponent
    std::uint64_t nodes = 0;
};

// Exact decision over Z_l (Unknown only when a limit is hit).
LocalResult padic_solubility(const HomogeneousSpace& S, const BigInt& ell, const LiftLimits& limits = {});

// Exact: does N^2 = f(m, e) (mod l^k) have a solution with (m, e) not both
// divisible by l?  Unknown only when a limit is hit.
Answer solution_mod_prime_power(const HomogeneousSpace& S, const BigInt& ell, unsigned k,
                                const LiftLimits& limits = {});

// Independent check of the same question by scanning the whole projective
// line mod l^k against a table of squares built by enumerating N.  Returns
// nothing when l^k exceeds max_modulus.
std::optional<bool> scan_solution_mod_prime_power(const HomogeneousSpace& S, const BigInt& ell, unsigned k,
                                                  std::uint64_t max_modulus = 1ULL << 27);

// Literal enumeration of all triples (m, e, N) mod M with (m, e) primitive
// with respect to every prime of M.  Cost M^3; intended for small moduli.
bool naive_solution_mod(const HomogeneousSpace& S, std::uint64_t M);

// Primes at which a class can fail to be locally soluble: l | 2 b (a^2 - 4b).
std::vector<BigInt> bad_primes(const BigInt& a, const BigInt& b);

}  // namespace congruent::local
