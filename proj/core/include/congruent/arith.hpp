#pragma once

// Exact integer and rational primitives shared by every other module.
// Arbitrary precision comes from GMP (mpz_class / mpq_class); a few hot
// loops elsewhere use 128-bit machine integers with explicit range checks.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace congruent::arith {

using BigInt = mpz_class;
using i128 = __int128;
using u128 = unsigned __int128;

struct SquarefreeDecomposition {
    BigInt squarefree_part;          // carries the sign of the input
    BigInt square_root_of_cofactor;  // positive
};

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt abs(const BigInt& a);

// Floor square root of n >= 0.
BigInt isqrt(const BigInt& n);

// k with k*k == n and k >= 0, or nothing; negative input yields nothing.
std::optional<BigInt> perfect_square_root(const BigInt& n);
bool is_perfect_square(const BigInt& n);

// Fast path for 128-bit values; same contract as perfect_square_root.
bool perfect_square_root_128(i128 n, i128& root);

BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& mod);

// Exponent of the prime p in n (n != 0).
unsigned valuation(const BigInt& n, const BigInt& p);

// Deterministic primality.  Miller-Rabin with a fixed witness set is exact
// below 3.3e24; larger inputs fall back to trial division.
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

// Legendre symbol (a/p).  Throws std::invalid_argument unless p is an odd prime.
int legendre(const BigInt& a, const BigInt& p);
// Same value without the primality check; caller guarantees p is an odd prime.
int legendre_unchecked(const BigInt& a, const BigInt& p);

// Hilbert symbol (a, b)_p for a prime p, or the real place when p == 0.
int hilbert_symbol(const BigInt& a, const BigInt& b, const BigInt& p);

// Factorization of |n| (n != 0) into ascending prime powers.  Trial division
// plus Pollard rho; intended for desk-scale inputs, not a general factorizer.
std::vector<PrimePower> factorize(const BigInt& n);
std::vector<BigInt> prime_divisors(const BigInt& n);

// Best-effort prime divisors: trial division and a bounded amount of Pollard
// rho.  A cofactor that resists the budget is returned as one entry, so the
// result may contain a composite; only for heuristics, never for certificates.
std::vector<BigInt> prime_divisors_bounded(const BigInt& n, std::uint64_t rho_iterations);
BigInt radical(const BigInt& n);

SquarefreeDecomposition squarefree_decompose(const BigInt& n);
BigInt squarefree_part(const BigInt& n);
bool is_squarefree(const BigInt& n);

// Signed squarefree divisors of a squarefree kernel: all d with d | rad(n),
// both signs, ordered by (|d|, sign) with positive first.
std::vector<BigInt> signed_squarefree_divisors(const BigInt& n);

// p = a^2 + b^2 with a odd, b even, both positive.  p must be a prime
// congruent to 1 mod 4 (throws std::invalid_argument otherwise).
std::pair<BigInt, BigInt> sum_two_squares(const BigInt& p);

bool fits_int64(const BigInt& n);
i128 to_i128(const BigInt& n);          // caller checks range
BigInt from_i128(i128 v);
bool fits_i128(const BigInt& n, unsigned bits = 126);

std::string to_string(const BigInt& n);

// Exact rational number in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long v) : q_(v) {}
    ExactRational(const BigInt& v) : q_(v) {}
    ExactRational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    ExactRational operator-() const;
    friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.q_ < b.q_; }

    ExactRational abs() const;
    // Exact square root when this is the square of a rational.
    std::optional<ExactRational> sqrt() const;
    // "num/den", or "num" when the denominator is 1.
    std::string to_string() const;
    static ExactRational parse(const std::string& text);

private:
    explicit ExactRational(mpq_class q);
    mpq_class q_;
};

}  // namespace congruent::arith
