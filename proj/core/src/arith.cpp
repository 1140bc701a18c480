#include "congruent/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace congruent::arith {

namespace {

constexpr std::uint64_t kTrialLimit = 100000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint64_t i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// psi_13: Miller-Rabin with the first 13 prime bases is exact below this bound.
const BigInt& deterministic_mr_limit() {
    static const BigInt limit("3317044064679887385961981");
    return limit;
}

bool miller_rabin(const BigInt& n, unsigned long base) {
    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    BigInt x = powmod(BigInt(base), d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

bool is_probable_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// One nontrivial factor of an odd composite n (Brent's variant of rho).
BigInt pollard_rho(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, q = 1, g = 1, ys;
        std::size_t r = 1;
        const std::size_t m = 128;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        do {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = f(y);
            std::size_t k = 0;
            do {
                ys = y;
                for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(BigInt(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(BigInt(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

// Pollard rho with an iteration budget; nothing when the budget runs out.
std::optional<BigInt> pollard_rho_bounded(const BigInt& n, std::uint64_t iterations) {
    for (unsigned long c = 1; c <= 3; ++c) {
        BigInt x = 2, y = 2, q = 1;
        for (std::uint64_t i = 1; i <= iterations; ++i) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            q = q * abs(BigInt(x - y)) % n;
            if (i % 64 == 0 || i == iterations) {
                BigInt g = gcd(q, n);
                if (g == n) break;
                if (g > 1) return g;
            }
        }
    }
    return std::nullopt;
}

void factor_into(const BigInt& n, std::vector<BigInt>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(BigInt(n / d), out);
}

}  // namespace

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative number");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<BigInt> perfect_square_root(const BigInt& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    return isqrt(n);
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool perfect_square_root_128(i128 n, i128& root) {
    if (n < 0) return false;
    // Quadratic residues mod 64 reject ~81% of non-squares for free.
    constexpr std::uint64_t kSquaresMod64 = 0x0202021202030213ULL;
    if (!((kSquaresMod64 >> (static_cast<unsigned>(n) & 63)) & 1)) return false;
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) return false;
    root = r;
    return true;
}

BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& mod) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    BigInt t = n;
    unsigned v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
        t /= p;
        ++v;
    }
    return v;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > n) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }
    if (n < deterministic_mr_limit()) {
        static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
        for (unsigned long a : bases)
            if (!miller_rabin(n, a)) return false;
        return true;
    }
    // Beyond the deterministic range: exhaustive trial division.
    BigInt limit = isqrt(n);
    for (BigInt d = kTrialLimit + 1; d <= limit; d += 2)
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

bool is_prime(std::uint64_t n) { return is_prime(BigInt(std::to_string(n))); }

int legendre_unchecked(const BigInt& a, const BigInt& p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    BigInt e = powmod(r, BigInt((p - 1) / 2), p);
    return e == 1 ? 1 : -1;
}

int legendre(const BigInt& a, const BigInt& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
        throw std::invalid_argument("legendre: modulus " + p.get_str() + " is not an odd prime");
    return legendre_unchecked(a, p);
}

int hilbert_symbol(const BigInt& a, const BigInt& b, const BigInt& p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    BigInt u = a, v = b;
    const unsigned alpha = valuation(u, p), beta = valuation(v, p);
    for (unsigned i = 0; i < alpha; ++i) u /= p;
    for (unsigned i = 0; i < beta; ++i) v /= p;
    if (p == 2) {
        auto eps = [](const BigInt& x) { BigInt r = x % 4; if (r < 0) r += 4; return r == 3 ? 1 : 0; };
        auto omega = [](const BigInt& x) { BigInt r = x % 8; if (r < 0) r += 8; return (r == 3 || r == 5) ? 1 : 0; };
        int e = eps(u) * eps(v) + static_cast<int>(alpha % 2) * omega(v) + static_cast<int>(beta % 2) * omega(u);
        return e % 2 ? -1 : 1;
    }
    int sign = 1;
    if ((alpha % 2) && (beta % 2) && legendre_unchecked(BigInt(-1), p) == -1) sign = -sign;
    if (beta % 2) sign *= legendre_unchecked(u, p);
    if (alpha % 2) sign *= legendre_unchecked(v, p);
    return sign;
}

std::vector<PrimePower> factorize(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    BigInt m = abs(n);
    std::vector<PrimePower> out;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        out.push_back({BigInt(p), e});
    }
    if (m > 1) {
        std::vector<BigInt> primes;
        factor_into(m, primes);
        std::sort(primes.begin(), primes.end());
        for (const auto& p : primes) {
            if (!out.empty() && out.back().prime == p)
                ++out.back().exponent;
            else
                out.push_back({p, 1});
        }
        std::sort(out.begin(), out.end(),
                  [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    }
    return out;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

std::vector<BigInt> prime_divisors_bounded(const BigInt& n, std::uint64_t rho_iterations) {
    if (n == 0) throw std::invalid_argument("prime_divisors_bounded(0)");
    BigInt m = abs(n);
    std::vector<BigInt> out;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        out.push_back(BigInt(p));
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
    std::vector<BigInt> pending{m};
    while (!pending.empty()) {
        BigInt c = pending.back();
        pending.pop_back();
        if (c == 1) continue;
        if (auto r = perfect_square_root(c); r && *r > 1) {
            pending.push_back(*r);
            continue;
        }
        if (is_probable_prime(c)) {
            out.push_back(c);
            continue;
        }
        auto f = pollard_rho_bounded(c, rho_iterations);
        if (!f) {
            out.push_back(c);
            continue;
        }
        BigInt g = *f, rest = c / g;
        pending.push_back(g);
        pending.push_back(rest);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BigInt radical(const BigInt& n) {
    BigInt r = 1;
    for (const auto& pp : factorize(n)) r *= pp.prime;
    return r;
}

SquarefreeDecomposition squarefree_decompose(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("squarefree_decompose(0)");
    SquarefreeDecomposition d{n < 0 ? BigInt(-1) : BigInt(1), BigInt(1)};
    for (const auto& pp : factorize(n)) {
        if (pp.exponent % 2) d.squarefree_part *= pp.prime;
        for (unsigned i = 0; i < pp.exponent / 2; ++i) d.square_root_of_cofactor *= pp.prime;
    }
    return d;
}

BigInt squarefree_part(const BigInt& n) { return squarefree_decompose(n).squarefree_part; }

bool is_squarefree(const BigInt& n) {
    if (n == 0) return false;
    for (const auto& pp : factorize(n))
        if (pp.exponent > 1) return false;
    return true;
}

std::vector<BigInt> signed_squarefree_divisors(const BigInt& n) {
    std::vector<BigInt> positive{BigInt(1)};
    for (const auto& p : prime_divisors(n)) {
        const std::size_t k = positive.size();
        for (std::size_t i = 0; i < k; ++i) positive.push_back(positive[i] * p);
    }
    std::sort(positive.begin(), positive.end());
    std::vector<BigInt> out;
    for (const auto& d : positive) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

std::pair<BigInt, BigInt> sum_two_squares(const BigInt& p) {
    if (p % 4 != 1 || !is_prime(p))
        throw std::invalid_argument("sum_two_squares: " + p.get_str() + " is not a prime = 1 mod 4");
    // A square root of -1 is c^((p-1)/4) for any non-residue c; try c = 2, 3, ...
    BigInt root;
    for (BigInt c = 2;; ++c) {
        if (legendre_unchecked(c, p) == -1) {
            root = powmod(c, BigInt((p - 1) / 4), p);
            break;
        }
    }
    // Euclidean descent: the first two remainders below sqrt(p) are the answer.
    BigInt a = p, b = root, limit = isqrt(p);
    while (b > limit) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    BigInt other = isqrt(BigInt(p - b * b));
    BigInt x = b, y = other;
    if (mpz_even_p(x.get_mpz_t())) std::swap(x, y);
    if (x * x + y * y != p) throw std::logic_error("sum_two_squares: descent failed");
    return {x, y};
}

bool fits_int64(const BigInt& n) { return n.fits_slong_p(); }

bool fits_i128(const BigInt& n, unsigned bits) {
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= bits;
}

i128 to_i128(const BigInt& n) {
    BigInt m = abs(n);
    BigInt hi = m >> 64;
    BigInt lo = m - (hi << 64);
    u128 v = (static_cast<u128>(mpz_get_ui(hi.get_mpz_t())) << 64) |
             static_cast<u128>(mpz_get_ui(lo.get_mpz_t()));
    i128 r = static_cast<i128>(v);
    return n < 0 ? -r : r;
}

BigInt from_i128(i128 v) {
    bool neg = v < 0;
    u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
    BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(m));
    BigInt r = (hi << 64) + lo;
    return neg ? BigInt(-r) : r;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

// ---------------------------------------------------------------------------

ExactRational::ExactRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("ExactRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-q_)); }

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ + b.q_));
}
ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ - b.q_));
}
ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ * b.q_));
}
ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.is_zero()) throw std::domain_error("ExactRational: division by zero");
    return ExactRational(mpq_class(a.q_ / b.q_));
}

ExactRational ExactRational::abs() const { return sign() < 0 ? -*this : *this; }

std::optional<ExactRational> ExactRational::sqrt() const {
    auto n = perfect_square_root(numerator());
    auto d = perfect_square_root(denominator());
    if (!n || !d) return std::nullopt;
    return ExactRational(*n, *d);
}

std::string ExactRational::to_string() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

ExactRational ExactRational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return ExactRational(BigInt(text));
    return ExactRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

}  // namespace congruent::arith
