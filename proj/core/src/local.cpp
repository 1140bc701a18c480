#include "congruent/local.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace congruent::local {

namespace {

constexpr unsigned kInfinite = UINT_MAX;

// Coefficients H[0..4] of a quartic in the class parameter s.
using Poly = std::array<BigInt, 5>;

unsigned val(const BigInt& x, const BigInt& ell) { return x == 0 ? kInfinite : arith::valuation(x, ell); }

// H(r + l s) as a polynomial in s.
Poly child(const Poly& H, const BigInt& r, const BigInt& ell) {
    Poly P = H;
    for (int i = 0; i < 4; ++i)
        for (int j = 3; j >= i; --j) P[j] += r * P[j + 1];
    BigInt scale = 1;
    for (int k = 0; k <= 4; ++k) {
        P[k] *= scale;
        scale *= ell;
    }
    return P;
}

BigInt pow_ui(const BigInt& base, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Walks the residue-class tree of one chart.  `target` is the exponent k for
// the "solution mod l^k" question, or nothing for the Z_l question.
class Explorer {
public:
    Explorer(const BigInt& ell, std::optional<unsigned> target, const LiftLimits& limits)
        : ell_(ell), two_(ell == 2), target_(target), limits_(limits) {}

    Answer explore(const Poly& H, unsigned level) {
        if (++nodes_ > limits_.max_nodes) return Answer::Unknown;
        const unsigned v0 = val(H[0], ell_);
        unsigned w = kInfinite;
        for (int k = 1; k <= 4; ++k) w = std::min(w, val(H[k], ell_));

        if (target_) {
            if (v0 >= *target_) return Answer::Soluble;  // N = 0 works modulo l^k
        } else {
            if (v0 == kInfinite) return Answer::Soluble;  // a root of the quartic
            const unsigned mu = val(H[1], ell_);
            if (mu != kInfinite && v0 > 2 * mu) return Answer::Soluble;  // Hensel: a root in this class
        }

        if (v0 < w) {
            // Valuation v0 on the whole class; unit part known modulo l^(w - v0).
            if (auto decided = decide_unit(H[0], v0, w, level)) return *decided;
        }

        if (!target_ && level >= limits_.max_depth) return Answer::Unknown;

        if (!two_ && w < v0) {
            // Reduced polynomial is c s^k alone: every unit s behaves the same way.
            int only = -1, count = 0;
            for (int k = 1; k <= 4; ++k)
                if (val(H[k], ell_) == w) {
                    only = k;
                    ++count;
                }
            if (count == 1) {
                const BigInt c = H[only] / pow_ui(ell_, w);
                const bool unit_soluble =
                    (target_ && w >= *target_) ||
                    (w % 2 == 0 && (only % 2 == 1 || arith::legendre_unchecked(c, ell_) == 1));
                if (unit_soluble) return Answer::Soluble;
                note_insoluble(std::max(level + 1, w + 1));
                return explore(child(H, BigInt(0), ell_), level + 1);
            }
        }

        if (ell_ > limits_.max_enumerated_prime) return Answer::Unknown;
        bool unknown = false;
        for (BigInt r = 0; r < ell_; ++r) {
            Answer a = explore(child(H, r, ell_), level + 1);
            if (a == Answer::Soluble) return a;
            if (a == Answer::Unknown) unknown = true;
        }
        return unknown ? Answer::Unknown : Answer::Insoluble;
    }

    unsigned certificate_exponent() const { return certificate_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::optional<Answer> decide_unit(const BigInt& h0, unsigned v0, unsigned w, unsigned level) {
        const BigInt u = h0 / pow_ui(ell_, v0);
        const unsigned precision = w == kInfinite ? kInfinite : w - v0;
        if (!two_) {
            if (v0 % 2 == 0 && arith::legendre_unchecked(u, ell_) == 1) return Answer::Soluble;
            note_insoluble(std::max(level, v0 + 1));
            return Answer::Insoluble;
        }
        if (v0 % 2 == 1) {
            note_insoluble(std::max(level, v0 + 1));
            return Answer::Insoluble;
        }
        // Odd squares are 1 mod 8; modulo 2^r with r < 3 the condition weakens.
        const unsigned need = target_ ? std::min(3u, *target_ - v0) : 3u;
        if (precision < need) return std::nullopt;
        BigInt r = u % 8;
        if (r < 0) r += 8;
        const unsigned long residue = r.get_ui();
        bool square = need == 1 || (need == 2 ? residue % 4 == 1 : residue == 1);
        if (square) return Answer::Soluble;
        note_insoluble(std::max(level, v0 + (residue % 4 == 3 ? 2 : 3)));
        return Answer::Insoluble;
    }

    void note_insoluble(unsigned exponent) {
        certificate_ = std::max(certificate_, target_ ? *target_ : exponent);
    }

    BigInt ell_;
    bool two_;
    std::optional<unsigned> target_;
    LiftLimits limits_;
    std::uint64_t nodes_ = 0;
    unsigned certificate_ = 0;
};

LocalResult run(const HomogeneousSpace& S, const BigInt& ell, std::optional<unsigned> target,
                const LiftLimits& limits) {
    Explorer ex(ell, target, limits);
    // Chart (t : 1), t in Z_l.
    Poly chart_a{S.b2, 0, S.a, 0, S.b1};
    // Chart (1 : z), z = l s.
    Poly chart_b{S.b1, 0, BigInt(S.a * ell * ell), 0, BigInt(S.b2 * pow_ui(ell, 4))};
    Answer a = ex.explore(chart_a, 0);
    Answer b = a == Answer::Soluble ? Answer::Soluble : ex.explore(chart_b, 1);
    LocalResult res;
    res.nodes = ex.nodes();
    if (a == Answer::Soluble || b == Answer::Soluble)
        res.answer = Answer::Soluble;
    else if (a == Answer::Unknown || b == Answer::Unknown)
        res.answer = Answer::Unknown;
    else {
        res.answer = Answer::Insoluble;
        res.certificate_exponent = std::max(1u, ex.certificate_exponent());
    }
    return res;
}

}  // namespace

LocalResult padic_solubility(const HomogeneousSpace& S, const BigInt& ell, const LiftLimits& limits) {
    if (!arith::is_prime(ell)) throw std::invalid_argument("padic_solubility: l must be prime");
    return run(S, ell, std::nullopt, limits);
}

Answer solution_mod_prime_power(const HomogeneousSpace& S, const BigInt& ell, unsigned k, const LiftLimits& limits) {
    if (!arith::is_prime(ell)) throw std::invalid_argument("solution_mod_prime_power: l must be prime");
    if (k == 0) return Answer::Soluble;
    return run(S, ell, k, limits).answer;
}

std::optional<bool> scan_solution_mod_prime_power(const HomogeneousSpace& S, const BigInt& ell, unsigned k,
                                                  std::uint64_t max_modulus) {
    if (k == 0) return true;
    const BigInt big_m = pow_ui(ell, k);
    if (big_m > BigInt(std::to_string(max_modulus))) return std::nullopt;
    const std::uint64_t M = big_m.get_ui();
    const std::uint64_t l = ell.get_ui();
    std::vector<bool> square(M, false);
    for (std::uint64_t n = 0; n < M; ++n) square[n * n % M] = true;
    auto reduce = [&](const BigInt& c) {
        BigInt r = c % big_m;
        if (r < 0) r += big_m;
        return static_cast<std::uint64_t>(r.get_ui());
    };
    const std::uint64_t c4 = reduce(S.b1), c2 = reduce(S.a), c0 = reduce(S.b2);
    // Every primitive pair scales to (t, 1) or to (1, z) with l | z.
    for (std::uint64_t t = 0; t < M; ++t) {
        const std::uint64_t t2 = t * t % M, t4 = t2 * t2 % M;
        if (square[(c4 * t4 % M + c2 * t2 % M + c0) % M]) return true;
    }
    for (std::uint64_t z = 0; z < M; z += l) {
        const std::uint64_t z2 = z * z % M, z4 = z2 * z2 % M;
        if (square[(c4 + c2 * z2 % M + c0 * z4 % M) % M]) return true;
    }
    return false;
}

bool naive_solution_mod(const HomogeneousSpace& S, std::uint64_t M) {
    if (M == 1) return true;
    std::vector<std::uint64_t> primes;
    for (const auto& p : arith::prime_divisors(BigInt(std::to_string(M)))) primes.push_back(p.get_ui());
    const BigInt big_m(std::to_string(M));
    auto reduce = [&](const BigInt& c) {
        BigInt r = c % big_m;
        if (r < 0) r += big_m;
        return static_cast<std::uint64_t>(r.get_ui());
    };
    const std::uint64_t c4 = reduce(S.b1), c2 = reduce(S.a), c0 = reduce(S.b2);
    for (std::uint64_t m = 0; m < M; ++m)
        for (std::uint64_t e = 0; e < M; ++e) {
            bool primitive = true;
            for (auto p : primes)
                if (m % p == 0 && e % p == 0) primitive = false;
            if (!primitive) continue;
            const std::uint64_t m2 = m * m % M, e2 = e * e % M;
            const std::uint64_t rhs = (c4 * (m2 * m2 % M) % M + c2 * (m2 * e2 % M) % M + c0 * (e2 * e2 % M)) % M;
            for (std::uint64_t N = 0; N < M; ++N)
                if (N * N % M == rhs) return true;
        }
    return false;
}

std::vector<BigInt> bad_primes(const BigInt& a, const BigInt& b) {
    return arith::prime_divisors(BigInt(2 * b * (a * a - 4 * b)));
}

}  // namespace congruent::local
