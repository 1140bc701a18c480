#include "congruent/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace congruent::search {

using arith::i128;

namespace {

// Squares modulo 45045 = 9 * 5 * 7 * 11 * 13, a second prefilter after mod 64.
constexpr std::int64_t kFilterMod = 45045;

const std::vector<bool>& squares_mod_filter() {
    static const std::vector<bool> table = [] {
        std::vector<bool> t(kFilterMod, false);
        for (std::int64_t r = 0; r < kFilterMod; ++r) t[static_cast<std::size_t>(r * r % kFilterMod)] = true;
        return t;
    }();
    return table;
}

std::int64_t mod_filter(const BigInt& v) {
    BigInt r = v % kFilterMod;
    if (r < 0) r += kFilterMod;
    return r.get_si();
}

std::int64_t mod_filter(i128 v) {
    auto r = static_cast<std::int64_t>(v % kFilterMod);
    return r < 0 ? r + kFilterMod : r;
}

constexpr std::uint64_t kSquaresMod64 = 0x0202021202030213ULL;
inline bool maybe_square_mod64(std::uint64_t low) { return (kSquaresMod64 >> (low & 63)) & 1; }

// Visits the coprime-agnostic pairs of shell k in lexicographic order:
// (1, k), ..., (k-1, k), (k, 1), ..., (k, k).
template <class F>
bool for_each_in_shell(std::int64_t k, F&& f) {
    for (std::int64_t m = 1; m < k; ++m)
        if (f(m, k)) return true;
    for (std::int64_t e = 1; e <= k; ++e)
        if (f(k, e)) return true;
    return false;
}

std::optional<Witness> make_witness(const HomogeneousSpace& S, const BigInt& m, const BigInt& e) {
    if (m == 0 || e == 0 || arith::gcd(m, e) != 1) return std::nullopt;
    auto N = arith::perfect_square_root(S.evaluate(m, e));
    if (!N) return std::nullopt;
    Witness w{m, e, *N};
    if (!descent::verify_witness(S, w)) return std::nullopt;
    return w;
}

std::optional<Witness> plain_search_fast(const HomogeneousSpace& S, std::int64_t bound) {
    const i128 b1 = arith::to_i128(S.b1), a = arith::to_i128(S.a), b2 = arith::to_i128(S.b2);
    const std::uint64_t b1l = static_cast<std::uint64_t>(b1), al = static_cast<std::uint64_t>(a),
                        b2l = static_cast<std::uint64_t>(b2);
    const std::int64_t b1f = mod_filter(b1), af = mod_filter(a), b2f = mod_filter(b2);
    const auto& sq = squares_mod_filter();
    std::vector<i128> p2(static_cast<std::size_t>(bound) + 1), p4(p2.size());
    std::vector<std::int64_t> f2(p2.size()), f4(p2.size());
    for (std::int64_t k = 0; k <= bound; ++k) {
        p2[k] = static_cast<i128>(k) * k;
        p4[k] = p2[k] * p2[k];
        f2[k] = mod_filter(p2[k]);
        f4[k] = mod_filter(p4[k]);
    }
    std::optional<Witness> found;
    auto test = [&](std::int64_t m, std::int64_t e) {
        // Low 64 bits of the value (wrapping arithmetic) give its residue mod 64.
        const std::uint64_t low = b1l * static_cast<std::uint64_t>(p4[m]) +
                                  al * static_cast<std::uint64_t>(p2[m]) * static_cast<std::uint64_t>(p2[e]) +
                                  b2l * static_cast<std::uint64_t>(p4[e]);
        if (!maybe_square_mod64(low)) return false;
        const std::int64_t r = (b1f * f4[m] + af * f2[m] % kFilterMod * f2[e] + b2f * f4[e]) % kFilterMod;
        if (!sq[static_cast<std::size_t>(r)]) return false;
        const i128 value = b1 * p4[m] + a * p2[m] * p2[e] + b2 * p4[e];
        i128 root;
        if (!arith::perfect_square_root_128(value, root)) return false;
        if (std::gcd(m, e) != 1) return false;
        found = make_witness(S, BigInt(m), BigInt(e));
        return found.has_value();
    };
    for (std::int64_t k = 1; k <= bound; ++k)
        if (for_each_in_shell(k, test)) return found;
    return std::nullopt;
}

std::optional<Witness> plain_search_exact(const HomogeneousSpace& S, std::int64_t bound) {
    const auto& sq = squares_mod_filter();
    std::optional<Witness> found;
    auto test = [&](std::int64_t m, std::int64_t e) {
        if (std::gcd(m, e) != 1) return false;
        BigInt value = S.evaluate(BigInt(m), BigInt(e));
        if (value < 0 || !sq[static_cast<std::size_t>(mod_filter(value))]) return false;
        found = make_witness(S, BigInt(m), BigInt(e));
        return found.has_value();
    };
    for (std::int64_t k = 1; k <= bound; ++k)
        if (for_each_in_shell(k, test)) return found;
    return std::nullopt;
}

// The three coordinates of a conic parametrization, each a binary quadratic.
struct TernaryParam {
    std::array<BinaryQuadratic, 3> comp;
};

// Conic A x^2 + B x y + C y^2 - K z^2 = 0 through P0: the second intersection
// of the line P0 + lambda D, with D = (u, v) placed in the two coordinates
// where P0 vanishes least (a coordinate with P0 != 0 is kept at zero).
TernaryParam parametrize_conic(const BinaryQuadratic& q, const BigInt& K, const ConicPoint& P0) {
    const std::array<BigInt, 3> p{P0.x, P0.y, P0.z};
    auto bil2 = [&](const std::array<BigInt, 3>& P, const std::array<BigInt, 3>& Q) {
        return BigInt(2 * q.a * P[0] * Q[0] + q.b * (P[0] * Q[1] + P[1] * Q[0]) + 2 * q.c * P[1] * Q[1] -
                      2 * K * P[2] * Q[2]);
    };
    int fixed = 0;
    while (p[fixed] == 0) ++fixed;
    std::array<int, 2> free{};
    for (int i = 0, j = 0; i < 3; ++i)
        if (i != fixed) free[j++] = i;
    auto point = [&](const BigInt& u, const BigInt& v) {
        std::array<BigInt, 3> D{0, 0, 0};
        D[free[0]] = u;
        D[free[1]] = v;
        BigInt fd = bil2(D, D), bp = bil2(p, D);
        std::array<BigInt, 3> out;
        for (int i = 0; i < 3; ++i) out[i] = fd * p[i] - 2 * bp * D[i];
        return out;
    };
    auto p10 = point(1, 0), p01 = point(0, 1), p11 = point(1, 1);
    TernaryParam t;
    for (int i = 0; i < 3; ++i) t.comp[i] = {p10[i], p11[i] - p10[i] - p01[i], p01[i]};
    return t;
}

BigInt content(const std::vector<BigInt>& coeffs) {
    BigInt g = 0;
    for (const auto& c : coeffs) g = arith::gcd(g, c);
    return g;
}

// Binary forms as coefficient vectors c[i] of s^(d-i) t^i.
using BinaryForm = std::vector<BigInt>;

BinaryForm to_form(const BinaryQuadratic& q) { return {q.a, q.b, q.c}; }

BinaryForm multiply(const BinaryForm& x, const BinaryForm& y) {
    BinaryForm r(x.size() + y.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

BinaryForm add(const BinaryForm& x, const BinaryForm& y) {
    BinaryForm r = x;
    for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
    return r;
}

BinaryForm scale(const BinaryForm& x, const BigInt& k) {
    BinaryForm r = x;
    for (auto& c : r) c *= k;
    return r;
}

// One lambda-cover: lambda Y(U(s, t), V(s, t)) must be a square.
struct Cover {
    std::size_t param = 0;     // index of the conic parametrization
    BigInt lambda;
    BinaryQuadratic U, V;
    BinaryForm H;              // degree 4
    bool fast = false;
    std::array<i128, 5> h{};   // H as 128-bit when `fast`
    std::array<std::int64_t, 5> hf{};
};

// Q(alpha s + beta t, gamma s + delta t).
BinaryQuadratic substitute(const BinaryQuadratic& q, const std::array<BigInt, 4>& M) {
    const BigInt &al = M[0], &be = M[1], &ga = M[2], &de = M[3];
    return {q.a * al * al + q.b * al * ga + q.c * ga * ga,
            2 * q.a * al * be + q.b * (al * de + be * ga) + 2 * q.c * ga * de,
            q.a * be * be + q.b * be * de + q.c * de * de};
}

BinaryForm quartic_of(const BinaryQuadratic& U, const BinaryQuadratic& V, const BinaryQuadratic& Y,
                      const BigInt& lambda) {
    BinaryForm u = to_form(U), v = to_form(V);
    return scale(add(add(scale(multiply(u, u), Y.a), scale(multiply(u, v), Y.b)), scale(multiply(v, v), Y.c)),
                 lambda);
}

// One step of quartic reduction: a positive definite quadratic covariant is
// built from the complex roots of H(x, 1), weighted by 1/|H'(root)|, and
// Gauss-reduced; the returned unimodular matrix (s, t) -> M (s, t) makes the
// cover's small solutions correspond to small parameters.  Nothing is
// returned when H has a root at infinity or the numerics break down.
std::optional<std::array<BigInt, 4>> reduction_step(const BinaryForm& H) {
    using cld = std::complex<long double>;
    if (H[0] == 0) return std::nullopt;
    std::array<long double, 5> c{};
    const long double lead = H[0].get_d();
    for (int i = 0; i < 5; ++i) c[i] = H[i].get_d() / lead;
    auto f = [&](cld x) { return (((x + c[1]) * x + c[2]) * x + c[3]) * x + c[4]; };
    auto df = [&](cld x) { return ((4.0L * x + 3.0L * c[1]) * x + 2.0L * c[2]) * x + c[3]; };
    long double radius = 1;
    for (int i = 1; i < 5; ++i) radius = std::max(radius, 1 + std::pow(std::abs(c[i]), 1.0L / i));
    std::array<cld, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = std::polar(radius * 0.9L, 0.4L + 1.5707963267948966L * i);
    for (int it = 0; it < 500; ++it) {
        long double delta = 0;
        for (int i = 0; i < 4; ++i) {
            cld den = 1;
            for (int j = 0; j < 4; ++j)
                if (j != i) den *= r[i] - r[j];
            if (std::abs(den) == 0) return std::nullopt;
            cld step = f(r[i]) / den;
            r[i] -= step;
            delta = std::max(delta, std::abs(step) / std::max(1.0L, std::abs(r[i])));
        }
        if (delta < 1e-15L) break;
    }
    long double A = 0, B = 0, C = 0;
    for (const auto& z : r) {
        long double d = std::abs(df(z));
        if (!(d > 0) || !std::isfinite(d)) return std::nullopt;
        long double w = 1 / d;
        A += w;
        B -= 2 * w * z.real();
        C += w * std::norm(z);
    }
    if (!(A > 0) || !(4 * A * C - B * B > 0)) return std::nullopt;
    // Gauss reduction; (s, t) = M (s', t').
    long double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (int it = 0; it < 200; ++it) {
        if (std::fabs(B) > A) {
            long double k = std::round(B / (2 * A));
            if (std::fabs(k) > 1e15L) return std::nullopt;
            C = A * k * k - B * k + C;
            B = B - 2 * k * A;
            m01 -= k * m00;
            m11 -= k * m10;
            continue;
        }
        if (A > C) {
            std::swap(A, C);
            B = -B;
            long double n00 = m01, n01 = -m00, n10 = m11, n11 = -m10;
            m00 = n00;
            m01 = n01;
            m10 = n10;
            m11 = n11;
            continue;
        }
        break;
    }
    for (long double v : {m00, m01, m10, m11})
        if (std::fabs(v) > 1e15L) return std::nullopt;
    auto big = [](long double v) { return BigInt(static_cast<long>(std::llround(v))); };
    return std::array<BigInt, 4>{big(m00), big(m01), big(m10), big(m11)};
}

bool real_possible(const ConicParametrization& P, const BigInt& lambda) {
    // lambda X and lambda Y must both be nonnegative somewhere; sample directions.
    for (int i = 0; i < 64; ++i) {
        BigInt u = i < 32 ? BigInt(i - 16) : BigInt(16), v = i < 32 ? BigInt(16) : BigInt(i - 48);
        if (sgn(BigInt(lambda * P.X(u, v))) >= 0 && sgn(BigInt(lambda * P.Y(u, v))) >= 0 &&
            (P.X(u, v) != 0 || P.Y(u, v) != 0))
            return true;
    }
    return false;
}

std::optional<Witness> recover(const HomogeneousSpace& S, const ConicParametrization& P, const Cover& c,
                               const BigInt& s, const BigInt& t) {
    BigInt u = c.U(s, t), v = c.V(s, t);
    BigInt X = P.X(u, v), Y = P.Y(u, v);
    if (X == 0 || Y == 0) return std::nullopt;
    auto m = arith::perfect_square_root(BigInt(c.lambda * X));
    auto e = arith::perfect_square_root(BigInt(c.lambda * Y));
    if (!m || !e) return std::nullopt;
    BigInt g = arith::gcd(*m, *e);
    return make_witness(S, BigInt(*m / g), BigInt(*e / g));
}

}  // namespace

std::optional<Witness> plain_search(const HomogeneousSpace& S, std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
    const BigInt scale = arith::abs(S.b1) + arith::abs(S.a) + arith::abs(S.b2);
    const BigInt h = bound;
    if (arith::fits_i128(BigInt(scale * h * h * h * h), 124)) return plain_search_fast(S, bound);
    return plain_search_exact(S, bound);
}

bool conic_locally_soluble(const BinaryQuadratic& q, const BigInt& k) {
    // 4a q(u, v) = (2au + bv)^2 - D v^2, so q = k w^2 is the conic
    // x^2 - D y^2 = 4ak z^2, soluble iff every Hilbert symbol (D, 4ak)_p is 1.
    if (q.a == 0 || k == 0) return true;
    const BigInt D = q.b * q.b - 4 * q.a * q.c;
    if (D == 0) return true;
    const BigInt c = 4 * q.a * k;
    if (arith::hilbert_symbol(D, c, BigInt(0)) != 1) return false;
    std::vector<BigInt> primes{BigInt(2)};
    for (const BigInt* n : {&D, &c})
        for (const auto& p : arith::prime_divisors_bounded(*n, 20000)) {
            if (!arith::is_prime(p)) return true;  // unfactored cofactor: no verdict
            primes.push_back(p);
        }
    for (const auto& p : primes)
        if (arith::hilbert_symbol(D, c, p) != 1) return false;
    return true;
}

std::vector<ConicPoint> small_conic_points(const BinaryQuadratic& q, const BigInt& k, std::int64_t bound,
                                          std::size_t count) {
    if (k == 0) throw std::invalid_argument("small_conic_point: k must be nonzero");
    std::vector<ConicPoint> out;
    const BigInt scale = arith::abs(q.a) + arith::abs(q.b) + arith::abs(q.c);
    const bool fast = arith::fits_i128(BigInt(scale * bound * bound), 120) && arith::fits_i128(k, 120);
    const i128 qa = fast ? arith::to_i128(q.a) : 0, qb = fast ? arith::to_i128(q.b) : 0,
               qc = fast ? arith::to_i128(q.c) : 0, kk = fast ? arith::to_i128(k) : 1;
    const auto& sq = squares_mod_filter();
    auto check = [&](std::int64_t x, std::int64_t y) {
        if (fast) {
            const i128 v = qa * x * x + qb * x * y + qc * y * y;
            if (v % kk != 0) return false;
            const i128 w = v / kk;
            if (w < 0 || !sq[static_cast<std::size_t>(mod_filter(w))]) return false;
            i128 root;
            if (!arith::perfect_square_root_128(w, root)) return false;
            out.push_back(ConicPoint{BigInt(x), BigInt(y), arith::from_i128(root)});
            return out.size() >= count;
        }
        BigInt X(x), Y(y);
        BigInt v = q(X, Y);
        if (!mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t())) return false;
        auto z = arith::perfect_square_root(BigInt(v / k));
        if (!z) return false;
        out.push_back(ConicPoint{X, Y, *z});
        return out.size() >= count;
    };
    for (std::int64_t r = 1; r <= bound; ++r) {
        // Shell max(|x|, |y|) = r with x >= 0 (the pair and its negative are the same point).
        for (std::int64_t y = -r; y <= r; ++y)
            if (check(r, y)) return out;
        for (std::int64_t x = 0; x < r; ++x) {
            if (check(x, r)) return out;
            if (x > 0 && check(x, -r)) return out;
        }
    }
    return out;
}

std::optional<ConicPoint> small_conic_point(const BinaryQuadratic& q, const BigInt& k, std::int64_t bound) {
    auto pts = small_conic_points(q, k, bound, 1);
    if (pts.empty()) return std::nullopt;
    return pts.front();
}

namespace {

void remove_content(ConicParametrization& P) {
    BigInt g = content({P.X.a, P.X.b, P.X.c, P.Y.a, P.Y.b, P.Y.c});
    if (g > 1)
        for (auto* f : {&P.X, &P.Y}) {
            f->a /= g;
            f->b /= g;
            f->c /= g;
        }
}

BigInt discriminant(const BinaryQuadratic& q) { return q.b * q.b - 4 * q.a * q.c; }

// If X and Y share a double root modulo l, moving it to (1 : 0) makes
// l^2 | a and l | b in both, and u -> u / l is an integral substitution
// that divides both discriminants by l^2.  Returns false when nothing moved.
bool shrink_at(ConicParametrization& P, const BigInt& l) {
    auto divisible = [&](const BinaryQuadratic& f) {
        return mpz_divisible_p(f.a.get_mpz_t(), BigInt(l * l).get_mpz_t()) &&
               mpz_divisible_p(f.b.get_mpz_t(), l.get_mpz_t());
    };
    auto shrink = [&](BinaryQuadratic& f) {
        f.a /= l * l;
        f.b /= l;
    };
    const long lmax = l.fits_slong_p() ? l.get_si() : 0;
    if (lmax == 0 || lmax > 100000) return false;
    // Candidate roots: (1 : j) for j mod l, and (0 : 1).
    for (long j = 0; j <= lmax; ++j) {
        std::array<BigInt, 4> M = j < lmax ? std::array<BigInt, 4>{1, 0, j, 1} : std::array<BigInt, 4>{0, 1, 1, 0};
        ConicParametrization Q{substitute(P.X, M), substitute(P.Y, M)};
        if (!divisible(Q.X) || !divisible(Q.Y)) continue;
        shrink(Q.X);
        shrink(Q.Y);
        remove_content(Q);
        P = Q;
        return true;
    }
    return false;
}

// Make a pair of quadratics primitive at every prime of the common
// discriminant.
void minimize(ConicParametrization& P) {
    remove_content(P);
    for (bool moved = true; moved;) {
        moved = false;
        const BigInt g = arith::gcd(discriminant(P.X), discriminant(P.Y));
        if (g == 0) break;
        for (const auto& l : arith::prime_divisors_bounded(g, 20000)) {
            if (!mpz_divisible_p(g.get_mpz_t(), BigInt(l * l).get_mpz_t())) continue;
            if (shrink_at(P, l)) {
                moved = true;
                break;
            }
        }
    }
}

ConicParametrization quartic_conic_from(const BinaryQuadratic& q, const ConicPoint& P0) {
    TernaryParam t = parametrize_conic(q, BigInt(1), P0);
    ConicParametrization P{t.comp[0], t.comp[1]};
    // Minimize, then reduce the pair with the covariant of X Y.
    minimize(P);
    for (int round = 0; round < 4; ++round) {
        auto M = reduction_step(multiply(to_form(P.X), to_form(P.Y)));
        if (!M || ((*M)[0] == 1 && (*M)[1] == 0 && (*M)[2] == 0 && (*M)[3] == 1)) break;
        P = {substitute(P.X, *M), substitute(P.Y, *M)};
    }
    return P;
}

bool same_parametrization(const ConicParametrization& P, const ConicParametrization& Q) {
    auto eq = [](const BinaryQuadratic& f, const BinaryQuadratic& g) { return f.a == g.a && f.b == g.b && f.c == g.c; };
    return eq(P.X, Q.X) && eq(P.Y, Q.Y);
}

}  // namespace

std::optional<ConicParametrization> parametrize_quartic_conic(const HomogeneousSpace& S, std::int64_t point_bound) {
    BinaryQuadratic q{S.b1, S.a, S.b2};
    auto P0 = small_conic_point(q, BigInt(1), point_bound);
    if (!P0) return std::nullopt;
    return quartic_conic_from(q, *P0);
}

BigInt resultant(const BinaryQuadratic& p, const BinaryQuadratic& q) {
    BigInt ac = p.a * q.c - q.a * p.c;
    BigInt ab = p.a * q.b - q.a * p.b;
    BigInt bc = p.b * q.c - q.b * p.c;
    return ac * ac - ab * bc;
}

std::optional<Witness> lifted_search(const HomogeneousSpace& S, std::int64_t parameter_bound,
                                     const LiftedOptions& options) {
    if (parameter_bound < 1) return std::nullopt;
    const BinaryQuadratic q{S.b1, S.a, S.b2};
    std::vector<ConicParametrization> params;
    for (const auto& P0 : small_conic_points(q, BigInt(1), options.conic_bound, options.base_points)) {
        auto P = quartic_conic_from(q, P0);
        if (std::none_of(params.begin(), params.end(),
                         [&](const ConicParametrization& Q) { return same_parametrization(P, Q); }))
            params.push_back(std::move(P));
    }

    std::vector<Cover> covers;
    const BigInt h = parameter_bound;
    const BigInt h4 = h * h * h * h;
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
        const ConicParametrization& P = params[pi];
        const BigInt R = resultant(P.X, P.Y);
        if (R == 0) continue;
        // gcd(X(u, v), Y(u, v)) divides R for coprime (u, v), so lambda runs over
        // signed squarefree products of primes of R.
        std::vector<BigInt> lambdas{BigInt(1)};
        for (const auto& p : arith::prime_divisors_bounded(R, 20000)) {
            const std::size_t k = lambdas.size();
            for (std::size_t i = 0; i < k; ++i) lambdas.push_back(lambdas[i] * p);
        }
        {
            const std::size_t k = lambdas.size();
            for (std::size_t i = 0; i < k; ++i) lambdas.push_back(-lambdas[i]);
        }
        std::sort(lambdas.begin(), lambdas.end(), [](const BigInt& x, const BigInt& y) {
            int c = mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
            return c != 0 ? c < 0 : x > y;
        });
        for (const auto& lambda : lambdas) {
            if (!real_possible(P, lambda) || !conic_locally_soluble(P.X, lambda)) continue;
            auto Q0 = small_conic_point(P.X, lambda, options.cover_conic_bound);
            if (!Q0) continue;
            TernaryParam t = parametrize_conic(P.X, lambda, *Q0);
            Cover c;
            c.param = pi;
            c.lambda = lambda;
            c.U = t.comp[0];
            c.V = t.comp[1];
            if (BigInt g = content({c.U.a, c.U.b, c.U.c, c.V.a, c.V.b, c.V.c}); g > 1)
                for (auto* f : {&c.U, &c.V}) {
                    f->a /= g;
                    f->b /= g;
                    f->c /= g;
                }
            {
                ConicParametrization W{c.U, c.V};
                minimize(W);
                c.U = W.X;
                c.V = W.Y;
            }
            // A square factor of the content does not change which values are squares.
            auto square_free_quartic = [&] {
                BinaryForm H = quartic_of(c.U, c.V, P.Y, lambda);
                const BigInt r = arith::squarefree_decompose(content(H)).square_root_of_cofactor;
                for (auto& x : H) x /= r * r;
                return H;
            };
            c.H = square_free_quartic();
            for (int round = 0; round < 4; ++round) {
                auto M = reduction_step(c.H);
                if (!M || ((*M)[0] == 1 && (*M)[1] == 0 && (*M)[2] == 0 && (*M)[3] == 1)) break;
                c.U = substitute(c.U, *M);
                c.V = substitute(c.V, *M);
                c.H = square_free_quartic();
            }
            // H(s, t) and H(-s, t) are scanned alike, so either copy is a duplicate.
            BinaryForm mirrored = c.H;
            mirrored[1] = -mirrored[1];
            mirrored[3] = -mirrored[3];
            if (std::any_of(covers.begin(), covers.end(),
                            [&](const Cover& o) { return o.H == c.H || o.H == mirrored; }))
                continue;
            BigInt worst = 0;
            for (const auto& x : c.H) worst += arith::abs(x);
            c.fast = arith::fits_i128(BigInt(worst * h4 * 4), 124);
            if (c.fast)
                for (int i = 0; i < 5; ++i) {
                    c.h[i] = arith::to_i128(c.H[i]);
                    c.hf[i] = mod_filter(c.H[i]);
                }
            covers.push_back(std::move(c));
        }
    }
    if (covers.empty()) return std::nullopt;

    const auto& sq = squares_mod_filter();
    auto test_fast = [&](const Cover& c, std::int64_t s, std::int64_t t) {
        const std::uint64_t su = static_cast<std::uint64_t>(s), tu = static_cast<std::uint64_t>(t);
        std::uint64_t low = static_cast<std::uint64_t>(c.h[0]);
        low = low * su + static_cast<std::uint64_t>(c.h[1]) * tu;
        low = low * su + static_cast<std::uint64_t>(c.h[2]) * tu * tu;
        low = low * su + static_cast<std::uint64_t>(c.h[3]) * tu * tu * tu;
        low = low * su + static_cast<std::uint64_t>(c.h[4]) * tu * tu * tu * tu;
        if (!maybe_square_mod64(low)) return false;
        const std::int64_t sf = mod_filter(static_cast<i128>(s)), tf = mod_filter(static_cast<i128>(t));
        const std::int64_t t2 = tf * tf % kFilterMod, t3 = t2 * tf % kFilterMod, t4 = t3 * tf % kFilterMod;
        std::int64_t acc = c.hf[0];
        acc = (acc * sf + c.hf[1] * tf) % kFilterMod;
        acc = (acc * sf + c.hf[2] * t2) % kFilterMod;
        acc = (acc * sf + c.hf[3] * t3) % kFilterMod;
        acc = (acc * sf + c.hf[4] * t4) % kFilterMod;
        if (!sq[static_cast<std::size_t>(acc)]) return false;
        const i128 S128 = s, T128 = t;
        i128 v = c.h[0];
        v = v * S128 + c.h[1] * T128;
        v = v * S128 + c.h[2] * T128 * T128;
        v = v * S128 + c.h[3] * T128 * T128 * T128;
        v = v * S128 + c.h[4] * T128 * T128 * T128 * T128;
        i128 root;
        return arith::perfect_square_root_128(v, root);
    };
    auto test_exact = [&](const Cover& c, std::int64_t s, std::int64_t t) {
        BigInt S_(s), T_(t), v = 0;
        for (int i = 0; i < 5; ++i) v = v * S_ + c.H[i] * [&] {
            BigInt p = 1;
            for (int j = 0; j < i; ++j) p *= T_;
            return p;
        }();
        return arith::is_perfect_square(v);
    };

    std::optional<Witness> found;
    auto visit = [&](std::int64_t s, std::int64_t t) {
        for (const auto& c : covers) {
            if (!(c.fast ? test_fast(c, s, t) : test_exact(c, s, t))) continue;
            if (std::gcd(s, t) != 1) continue;
            if ((found = recover(S, params[c.param], c, BigInt(s), BigInt(t)))) return true;
        }
        return false;
    };
    for (std::int64_t k = 1; k <= parameter_bound; ++k) {
        // Shell max(|s|, |t|) = k with s >= 0; (s, t) and (-s, -t) give the same point.
        for (std::int64_t t = -k; t <= k; ++t)
            if (visit(k, t)) return found;
        for (std::int64_t s = 0; s < k; ++s) {
            if (visit(s, k)) return found;
            if (s > 0 && visit(s, -k)) return found;
        }
    }
    return std::nullopt;
}

}  // namespace congruent::search
