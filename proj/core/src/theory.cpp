#include "congruent/theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace congruent::theory {

using arith::i128;
using arith::legendre;

namespace {

int mod8(const BigInt& p) {
    BigInt r = p % 8;
    if (r < 0) r += 8;
    return static_cast<int>(r.get_si());
}

int mod4(const BigInt& p) { return mod8(p) % 4; }

bool in_137(const BigInt& p) {
    int r = mod8(p);
    return r == 1 || r == 3 || r == 7;
}

bool in_17(const BigInt& p) {
    int r = mod8(p);
    return r == 1 || r == 7;
}

int leg(const BigInt& a, const BigInt& p) { return legendre(a, p); }

void require_odd_prime(const BigInt& p) {
    if (p < 3 || p % 2 == 0 || !arith::is_prime(p)) throw std::invalid_argument("expected an odd prime, got " + p.get_str());
}

TheoremVerdict verdict(unsigned rank, std::string anchor, std::string citation) {
    TheoremVerdict v;
    v.rank = rank;
    v.congruent = rank >= 1;
    v.anchor = std::move(anchor);
    v.citation = std::move(citation);
    return v;
}

TheoremVerdict no_verdict(std::string anchor, std::string citation) {
    TheoremVerdict v;
    v.condition = kNoVerdict;
    v.anchor = std::move(anchor);
    v.citation = std::move(citation);
    return v;
}

bool square_128(i128 v, i128& root) { return arith::perfect_square_root_128(v, root); }

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::P: return "p";
        case Family::TwoP: return "2p";
        case Family::PQ: return "pq";
        case Family::TwoPQ: return "2pq";
    }
    return "?";
}

BigInt CongruentCase::n() const {
    BigInt v = p;
    if (q) v *= *q;
    if (family == Family::TwoP || family == Family::TwoPQ) v *= 2;
    return v;
}

std::optional<CongruentCase> classify(const BigInt& n) {
    if (n < 3) return std::nullopt;
    auto factors = arith::factorize(n);
    bool two = false;
    std::vector<BigInt> odd;
    for (const auto& f : factors) {
        if (f.exponent != 1) return std::nullopt;
        if (f.prime == 2) two = true;
        else odd.push_back(f.prime);
    }
    if (odd.empty() || odd.size() > 2) return std::nullopt;
    CongruentCase c;
    c.p = odd[0];
    c.p_mod8 = mod8(c.p);
    if (odd.size() == 1) {
        c.family = two ? Family::TwoP : Family::P;
    } else {
        c.family = two ? Family::TwoPQ : Family::PQ;
        c.q = odd[1];
        c.q_mod8 = mod8(*c.q);
        c.legendre_pq = leg(c.p, *c.q);
    }
    return c;
}

TheoremVerdict theorem_rank(const CongruentCase& c) {
    int r = c.p_mod8;
    switch (c.family) {
        case Family::P:
            if (r == 3) return verdict(0, "p.3mod8", "n = p, p = 3 (mod 8): every nontrivial class on the isogenous curve is insoluble, r = 0");
            if (r == 5) return verdict(1, "p.5mod8", "n = p, p = 5 (mod 8): one isogenous class survives and is soluble, r = 1");
            if (r == 7) return verdict(1, "p.7mod8", "n = p, p = 7 (mod 8): one isogenous class survives and is soluble, r = 1");
            {
                TheoremVerdict v;
                v.condition = kRank2Criterion;
                v.anchor = "p.1mod8";
                v.citation = "n = p, p = 1 (mod 8): r = 2 exactly when p is both alpha- and beta-Pythagorean; otherwise r <= 1";
                return v;
            }
        case Family::TwoP:
            if (r == 5) return verdict(0, "2p.5mod8", "n = 2p, p = 5 (mod 8): every nontrivial class on the isogenous curve is insoluble, r = 0");
            if (r == 3 || r == 7)
                return verdict(1, "2p.3,7mod8", "n = 2p, p = 3, 7 (mod 8): the solvable classes give r = 1");
            return no_verdict("2p.1mod8", "n = 2p, p = 1 (mod 8): residue conditions do not determine the rank");
        case Family::PQ:
        case Family::TwoPQ: break;
    }

    // Two primes: order them so that the residue roles match the rules.
    BigInt p = c.p, q = *c.q;
    int rp = mod8(p), rq = mod8(q);
    auto is = [&](int x, int y) { return (rp == x && rq == y); };
    auto swap_to = [&](int x) {
        if (rp != x && rq == x) {
            std::swap(p, q);
            std::swap(rp, rq);
        }
    };
    if (c.family == Family::PQ) {
        if (is(3, 3)) return verdict(0, "pq.3,3", "n = pq, p, q = 3 (mod 8): every nontrivial class on the isogenous curve is insoluble, r = 0");
        swap_to(3);
        if (is(3, 5)) return verdict(1, "pq.3,5", "n = pq, p = 3, q = 5 (mod 8): r = 1");
        if (is(3, 7)) return verdict(1, "pq.3,7", "n = pq, p = 3, q = 7 (mod 8): r = 1");
        swap_to(1);
        if (rp == 1 && rq == 5 && leg(p, q) == -1)
            return verdict(1, "pq.1,5,-1", "n = pq, p = 1, q = 5 (mod 8), (p/q) = -1: r = 1");
        if (rp == 1 && rq == 7 && leg(p, q) == -1)
            return verdict(1, "pq.1,7,-1", "n = pq, p = 1, q = 7 (mod 8), (p/q) = -1: r = 1");
        return no_verdict("pq.other", "n = pq: residue pattern not covered by the rank rules");
    }
    if (is(5, 5)) return verdict(0, "2pq.5,5", "n = 2pq, p, q = 5 (mod 8): every nontrivial class on the isogenous curve is insoluble, r = 0");
    swap_to(1);
    if (rp == 1 && rq == 5 && leg(p, q) == -1)
        return verdict(0, "2pq.1,5,-1", "n = 2pq, p = 1, q = 5 (mod 8), (p/q) = -1: every nontrivial isogenous class is insoluble, r = 0");
    if (rp == 1 && (rq == 3 || rq == 7) && leg(p, q) == -1)
        return verdict(1, "2pq.1,3|7,-1", "n = 2pq, p = 1, q = 3 or 7 (mod 8), (p/q) = -1: r = 1");
    swap_to(5);
    if (rp == 5 && (rq == 3 || rq == 7))
        return verdict(1, "2pq.5,3|7", "n = 2pq, p = 5, q = 3 or 7 (mod 8): r = 1");
    return no_verdict("2pq.other", "n = 2pq: residue pattern not covered by the rank rules");
}

BigInt f1(const BigInt& x, const BigInt& y) {
    BigInt x2 = x * x, y2 = y * y;
    return 4 * x2 * x2 + y2 * y2 + 12 * x2 * y2 + 16 * x2 * x * y + 8 * x * y2 * y;
}

BigInt f2(const BigInt& x, const BigInt& y) {
    BigInt x2 = x * x, y2 = y * y;
    return -4 * x2 * x2 - y2 * y2 - 12 * x2 * y2 + 16 * x2 * x * y + 8 * x * y2 * y;
}

BigInt f3(const BigInt& x, const BigInt& y) {
    BigInt x2 = x * x, y2 = y * y;
    return 16 * x2 * x2 + y2 * y2 + 24 * x2 * y2;
}

const char* pyth_kind_name(PythKind k) {
    switch (k) {
        case PythKind::AlphaMinus: return "alpha-minus";
        case PythKind::AlphaPlus: return "alpha-plus";
        case PythKind::Beta: return "beta";
    }
    return "?";
}

std::pair<BigInt, BigInt> beta_decomposition(const BigInt& x, const BigInt& y, int form) {
    BigInt x2 = x * x, y2 = y * y;
    if (form == 1) {
        BigInt a = 4 * x2 * x2 + y2 * y2 + 4 * x2 * y2 + 8 * x2 * x * y + 4 * x * y2 * y;
        BigInt b = 8 * x2 * y2 + 8 * x2 * x * y + 4 * x * y2 * y;
        return {a, b};
    }
    BigInt b = -4 * x2 * x2 - y2 * y2 - 4 * x2 * y2 + 8 * x2 * x * y + 4 * x * y2 * y;
    BigInt a = -8 * x2 * y2 + 8 * x2 * x * y + 4 * x * y2 * y;
    return {a, b};
}

bool verify_pyth_witness(const BigInt& p, const PythWitness& w) {
    if (w.kind == PythKind::Beta) {
        if (w.y % 2 == 0 || arith::gcd(w.x, w.y) != 1) return false;
        BigInt v = w.form == 1 ? f1(w.x, w.y) : w.form == 2 ? f2(w.x, w.y) : BigInt(0);
        if (v != p) return false;
        auto [a, b] = beta_decomposition(w.x, w.y, w.form);
        if (a != w.a || b != w.b || a + b != p) return false;
        if (!arith::is_perfect_square(a - b)) return false;
        return w.auxiliary_square_root * w.auxiliary_square_root == a * a + b * b;
    }
    if (w.a <= 0 || w.b <= 0 || w.c <= 0) return false;
    if (arith::gcd(w.a, w.b) != 1) return false;
    if (w.a * w.a + w.b * w.b != p * w.c * w.c) return false;
    BigInt s = w.kind == PythKind::AlphaMinus ? BigInt(w.a - 2 * w.b) : BigInt(w.a + 2 * w.b);
    return w.auxiliary_square_root > 0 && w.auxiliary_square_root * w.auxiliary_square_root == s * s + w.b * w.b;
}

namespace {

// Tests both signs for one coprime representation; minus first.
std::optional<PythWitness> alpha_test(const BigInt& a, const BigInt& b, const BigInt& c) {
    for (PythKind kind : {PythKind::AlphaMinus, PythKind::AlphaPlus}) {
        BigInt s = kind == PythKind::AlphaMinus ? BigInt(a - 2 * b) : BigInt(a + 2 * b);
        if (auto r = arith::perfect_square_root(s * s + b * b)) {
            PythWitness w;
            w.a = a;
            w.b = b;
            w.c = c;
            w.kind = kind;
            w.auxiliary_square_root = *r;
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PythWitness> alpha_pm_pythagorean(const BigInt& p, std::int64_t bound) {
    require_odd_prime(p);
    if (bound < 1) throw std::invalid_argument("alpha search bound must be positive");
    // a^2 + b^2 = p c^2 with gcd(a, b) = 1 forces p = 1 (mod 4).
    if (mod4(p) != 1) return std::nullopt;
    // (a + 2b)^2 + b^2 <= 6 p c^2; keep everything inside 126 bits.
    if (!arith::fits_i128(BigInt(p * 8) * bound * bound, 120)) throw std::invalid_argument("alpha search range too large");
    const i128 P = arith::to_i128(p);
    for (std::int64_t c = 1; c <= bound; ++c) {
        const i128 target = P * c * c;
        for (i128 a = 1; 2 * a * a <= 2 * target; ++a) {
            i128 rest = target - a * a;
            if (rest <= 0) break;
            i128 b;
            if (!square_128(rest, b)) continue;
            BigInt A = arith::from_i128(a), B = arith::from_i128(b);
            if (arith::gcd(A, B) != 1) continue;
            i128 root;
            if (square_128((a - 2 * b) * (a - 2 * b) + b * b, root)) {
                return PythWitness{A, B, BigInt(c), PythKind::AlphaMinus, arith::from_i128(root), 0, 0, 0};
            }
            if (square_128((a + 2 * b) * (a + 2 * b) + b * b, root)) {
                return PythWitness{A, B, BigInt(c), PythKind::AlphaPlus, arith::from_i128(root), 0, 0, 0};
            }
        }
    }
    return std::nullopt;
}

std::optional<PythWitness> alpha_c1_test(const BigInt& p) {
    require_odd_prime(p);
    if (mod8(p) != 1) throw std::invalid_argument("the single-representation test needs p = 1 (mod 8)");
    auto [a, b] = arith::sum_two_squares(p);  // a odd, b even; here 4 | b
    return alpha_test(a, b, 1);
}

std::optional<PythWitness> beta_pythagorean(const BigInt& p, std::int64_t bound) {
    require_odd_prime(p);
    if (bound < 1) throw std::invalid_argument("beta search bound must be positive");
    if (bound > 1'000'000) throw std::invalid_argument("beta search bound too large");
    const i128 P = arith::to_i128(p);
    auto eval = [](i128 x, i128 y, int form) {
        i128 x2 = x * x, y2 = y * y;
        i128 even = 4 * x2 * x2 + y2 * y2 + 12 * x2 * y2;
        i128 odd = 16 * x2 * x * y + 8 * x * y2 * y;
        return form == 1 ? even + odd : odd - even;
    };
    auto consider = [&](std::int64_t x, std::int64_t y) -> std::optional<PythWitness> {
        if ((y & 1) == 0 || std::gcd(x, y) != 1) return std::nullopt;
        for (int form : {1, 2}) {
            if (eval(x, y, form) != P) continue;
            PythWitness w;
            w.kind = PythKind::Beta;
            w.x = BigInt(static_cast<long>(x));
            w.y = BigInt(static_cast<long>(y));
            w.form = form;
            auto [a, b] = beta_decomposition(w.x, w.y, form);
            w.a = a;
            w.b = b;
            w.c = 1;
            auto r = arith::perfect_square_root(a * a + b * b);
            w.auxiliary_square_root = r ? *r : BigInt(0);
            if (!verify_pyth_witness(p, w)) throw std::logic_error("beta witness failed re-verification");
            return w;
        }
        return std::nullopt;
    };
    // Both forms are even, so (x, y) and (-x, -y) give the same value; y is
    // odd, hence nonzero, and only y > 0 is scanned.
    for (std::int64_t k = 1; k <= bound; ++k) {
        for (std::int64_t x = -k; x <= k; ++x) {
            if (x == -k || x == k) {
                for (std::int64_t y = 1; y <= k; ++y)
                    if (auto w = consider(x, y)) return w;
            } else {
                if (auto w = consider(x, k)) return w;
            }
        }
    }
    return std::nullopt;
}

Rank2Result rank2_criterion(const BigInt& p, std::int64_t bound) {
    require_odd_prime(p);
    if (mod8(p) != 1) throw std::invalid_argument("rank-2 criterion needs p = 1 (mod 8)");
    Rank2Result out;
    out.alpha_c1_passed = alpha_c1_test(p).has_value();
    out.alpha = alpha_pm_pythagorean(p, bound);
    out.beta = beta_pythagorean(p, bound);
    TheoremVerdict& v = out.verdict;
    v.anchor = "p.1mod8.pythagorean";
    if (out.alpha && out.beta) {
        v.rank = 2;
        v.congruent = true;
        v.citation = "p = 1 (mod 8) is alpha- and beta-Pythagorean, r = 2";
    } else {
        v.condition = kUndecidedAtBound;
        std::string missing = !out.alpha && !out.beta ? "neither detector" : !out.alpha ? "no alpha witness" : "no beta witness";
        v.citation = "p = 1 (mod 8): " + missing + " found at bound " + std::to_string(bound) + ", so r = 2 is not established";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Labelled spaces and their necessary conditions.

namespace {

struct SpaceTemplate {
    const char* label;
    Side side;
    bool signed_label;
    // b1 and b2 for the positive sign as functions of (p, q).
    std::function<BigInt(const BigInt&, const BigInt&)> b1;
    std::function<BigInt(const BigInt&, const BigInt&)> b2;
};

using Fn = std::function<BigInt(const BigInt&, const BigInt&)>;
Fn k(long v) { return [v](const BigInt&, const BigInt&) { return BigInt(v); }; }

std::vector<SpaceTemplate> templates(Family f) {
    // Spaces on E are (d, 0, -n^2/d); on the isogenous curve (d, 0, 4 n^2 / d).
    auto P = [](const BigInt& p, const BigInt&) { return p; };
    auto Q = [](const BigInt&, const BigInt& q) { return q; };
    auto mul = [](Fn a, Fn b) -> Fn { return [a, b](const BigInt& p, const BigInt& q) { return BigInt(a(p, q) * b(p, q)); }; };
    auto neg = [](Fn a) -> Fn { return [a](const BigInt& p, const BigInt& q) { return BigInt(-a(p, q)); }; };
    Fn p = P, q = Q;
    Fn p2 = mul(p, p), q2 = mul(q, q), pq = mul(p, q);
    switch (f) {
        case Family::P:
            return {
                {"a1", Side::Alpha, true, p, neg(p)},
                {"b1", Side::AlphaBar, false, p, mul(k(4), p)},
                {"b2", Side::AlphaBar, false, k(2), mul(k(2), p2)},
                {"b3", Side::AlphaBar, false, mul(k(2), p), mul(k(2), p)},
            };
        case Family::TwoP:
            return {
                {"a1", Side::Alpha, true, p, neg(mul(k(4), p))},
                {"a2", Side::Alpha, true, k(2), neg(mul(k(2), p2))},
                {"a3", Side::Alpha, true, mul(k(2), p), neg(mul(k(2), p))},
                {"b1", Side::AlphaBar, false, k(2), mul(k(8), p2)},
                {"b2", Side::AlphaBar, false, mul(k(2), p), mul(k(8), p)},
                {"b3", Side::AlphaBar, false, p, mul(k(16), p)},
            };
        case Family::PQ:
            return {
                {"a1", Side::Alpha, true, p, neg(mul(p, q2))},
                {"a2", Side::Alpha, true, q, neg(mul(p2, q))},
                {"a3", Side::Alpha, true, pq, neg(pq)},
                {"b1", Side::AlphaBar, false, p, mul(k(4), mul(p, q2))},
                {"b2", Side::AlphaBar, false, q, mul(k(4), mul(p2, q))},
                {"b3", Side::AlphaBar, false, k(2), mul(k(2), mul(p2, q2))},
                {"b4", Side::AlphaBar, false, mul(k(2), p), mul(k(2), mul(p, q2))},
                {"b5", Side::AlphaBar, false, mul(k(2), q), mul(k(2), mul(p2, q))},
                {"b6", Side::AlphaBar, false, pq, mul(k(4), pq)},
                {"b7", Side::AlphaBar, false, mul(k(2), pq), mul(k(2), pq)},
            };
        case Family::TwoPQ:
            return {
                {"a1", Side::Alpha, true, k(2), neg(mul(k(2), mul(p2, q2)))},
                {"a2", Side::Alpha, true, p, neg(mul(k(4), mul(p, q2)))},
                {"a3", Side::Alpha, true, q, neg(mul(k(4), mul(p2, q)))},
                {"a4", Side::Alpha, true, mul(k(2), p), neg(mul(k(2), mul(p, q2)))},
                {"a5", Side::Alpha, true, mul(k(2), q), neg(mul(k(2), mul(p2, q)))},
                {"a6", Side::Alpha, true, pq, neg(mul(k(4), pq))},
                {"a7", Side::Alpha, true, mul(k(2), pq), neg(mul(k(2), pq))},
                {"b1", Side::AlphaBar, false, k(2), mul(k(8), mul(p2, q2))},
                {"b2", Side::AlphaBar, false, p, mul(k(16), mul(p, q2))},
                {"b3", Side::AlphaBar, false, q, mul(k(16), mul(p2, q))},
                {"b4", Side::AlphaBar, false, mul(k(2), p), mul(k(8), mul(p, q2))},
                {"b5", Side::AlphaBar, false, mul(k(2), q), mul(k(8), mul(p2, q))},
                {"b6", Side::AlphaBar, false, pq, mul(k(16), pq)},
                {"b7", Side::AlphaBar, false, mul(k(2), pq), mul(k(8), pq)},
            };
    }
    return {};
}

using Pred = std::function<bool(const BigInt&, const BigInt&)>;

struct ConditionEntry {
    const char* statement;
    Pred predicate;
};

Pred swapped(Pred f) {
    return [f](const BigInt& p, const BigInt& q) { return f(q, p); };
}

const std::map<std::string, ConditionEntry>& conditions(Family f) {
    static const Pred always = [](const BigInt&, const BigInt&) { return true; };
    static const Pred never = [](const BigInt&, const BigInt&) { return false; };

    static const std::map<std::string, ConditionEntry> one_p = {
        {"a1", {"no condition", always}},
        {"b1", {"p = 1 (mod 4)", [](const BigInt& p, const BigInt&) { return mod4(p) == 1; }}},
        {"b2", {"p = 1, 7 (mod 8)", [](const BigInt& p, const BigInt&) { return in_17(p); }}},
        {"b3", {"p = 1 (mod 8)", [](const BigInt& p, const BigInt&) { return mod8(p) == 1; }}},
    };
    static const std::map<std::string, ConditionEntry> two_p = {
        {"a1", {"no condition", always}},
        {"a2", {"p = 1, 3, 7 (mod 8)", [](const BigInt& p, const BigInt&) { return in_137(p); }}},
        {"a3", {"no condition", always}},
        {"b1", {"never soluble", never}},
        {"b2", {"never soluble", never}},
        {"b3", {"p = 1 (mod 8)", [](const BigInt& p, const BigInt&) { return mod8(p) == 1; }}},
    };

    static const Pred pq_a1 = [](const BigInt& p, const BigInt& q) {
        return ((in_137(p) || in_137(q)) && leg(-q, p) == 1) || ((in_17(p) || in_17(q)) && leg(q, p) == 1);
    };
    static const Pred pq_b1 = [](const BigInt& p, const BigInt& q) { return mod4(p) == 1 && leg(p, q) == 1; };
    static const Pred pq_b4 = [](const BigInt& p, const BigInt& q) { return mod4(p) == 1 && leg(2 * p, q) == 1; };
    static const std::map<std::string, ConditionEntry> pq = {
        {"a1", {"[(p or q = 1, 3, 7 (mod 8)) and (-q/p) = 1] or [(p or q = 1, 7 (mod 8)) and (q/p) = 1]", pq_a1}},
        {"a2", {"[(p or q = 1, 3, 7 (mod 8)) and (-p/q) = 1] or [(p or q = 1, 7 (mod 8)) and (p/q) = 1]", swapped(pq_a1)}},
        {"a3", {"no condition", always}},
        {"b1", {"p = 1 (mod 4) and (p/q) = 1", pq_b1}},
        {"b2", {"q = 1 (mod 4) and (q/p) = 1", swapped(pq_b1)}},
        {"b3", {"p, q = 1, 7 (mod 8)", [](const BigInt& p, const BigInt& q) { return in_17(p) && in_17(q); }}},
        {"b4", {"p = 1 (mod 4) and (2p/q) = 1", pq_b4}},
        {"b5", {"q = 1 (mod 4) and (2q/p) = 1", swapped(pq_b4)}},
        {"b6", {"p, q = 1 (mod 4)", [](const BigInt& p, const BigInt& q) { return mod4(p) == 1 && mod4(q) == 1; }}},
        {"b7", {"p, q = 1 (mod 8)", [](const BigInt& p, const BigInt& q) { return mod8(p) == 1 && mod8(q) == 1; }}},
    };

    static const Pred tpq_a2 = [](const BigInt& p, const BigInt& q) {
        return (leg(p, q) == 1 || leg(-p, q) == 1) && (leg(2 * q, p) == 1 || leg(-2 * q, p) == 1);
    };
    // Reducing N^2 = +-2p(m^4 - q^2 e^4) modulo p only shows that +-q is a
    // square there; the sign is not determined (n = 30 has m = e = 1).
    static const Pred tpq_a4 = [](const BigInt& p, const BigInt& q) {
        return (leg(q, p) == 1 || leg(-q, p) == 1) && (leg(2 * p, q) == 1 || leg(-2 * p, q) == 1);
    };
    static const Pred tpq_b2 = [](const BigInt& p, const BigInt& q) { return mod8(p) == 1 && leg(p, q) == 1; };
    static const Pred both_137 = [](const BigInt& p, const BigInt& q) { return in_137(p) && in_137(q); };
    static const std::map<std::string, ConditionEntry> two_pq = {
        {"a1", {"p, q = 1, 3, 7 (mod 8)", both_137}},
        {"a2", {"(p/q) = 1 or (-p/q) = 1, and (2q/p) = 1 or (-2q/p) = 1", tpq_a2}},
        {"a3", {"(q/p) = 1 or (-q/p) = 1, and (2p/q) = 1 or (-2p/q) = 1", swapped(tpq_a2)}},
        {"a4", {"(q/p) = 1 or (-q/p) = 1, and (2p/q) = 1 or (-2p/q) = 1", tpq_a4}},
        {"a5", {"(p/q) = 1 or (-p/q) = 1, and (2q/p) = 1 or (-2q/p) = 1", swapped(tpq_a4)}},
        {"a6", {"p, q = 1, 3, 7 (mod 8)", both_137}},
        {"a7", {"no condition", always}},
        {"b1", {"never soluble", never}},
        {"b2", {"p = 1 (mod 8) and (p/q) = 1", tpq_b2}},
        {"b3", {"q = 1 (mod 8) and (q/p) = 1", swapped(tpq_b2)}},
        {"b4", {"never soluble", never}},
        {"b5", {"never soluble", never}},
        {"b6", {"p, q = 1 (mod 8)", [](const BigInt& p, const BigInt& q) { return mod8(p) == 1 && mod8(q) == 1; }}},
        {"b7", {"never soluble", never}},
    };

    switch (f) {
        case Family::P: return one_p;
        case Family::TwoP: return two_p;
        case Family::PQ: return pq;
        case Family::TwoPQ: return two_pq;
    }
    return one_p;
}

}  // namespace

std::vector<LabeledSpace> labeled_spaces(const CongruentCase& c) {
    const BigInt q = c.q ? *c.q : BigInt(1);
    std::vector<LabeledSpace> out;
    for (const auto& t : templates(c.family)) {
        BigInt b1 = t.b1(c.p, q), b2 = t.b2(c.p, q);
        out.push_back({t.label, t.side, b1, {b1, 0, b2}});
        if (t.signed_label) out.push_back({t.label, t.side, -b1, {-b1, 0, -b2}});
    }
    return out;
}

bool NecessaryCondition::evaluate(const CongruentCase& c) const {
    return predicate(c.p, c.q ? *c.q : BigInt(1));
}

NecessaryCondition necessary_condition(const std::string& label, const CongruentCase& c) {
    const auto& table = conditions(c.family);
    auto it = table.find(label);
    if (it == table.end())
        throw std::invalid_argument("unknown space label '" + label + "' for n = " + family_name(c.family));
    return {c.family, label, it->second.statement, it->second.predicate};
}

bool factorization_identity_check(const BigInt& m, const BigInt& e) {
    BigInt m2 = m * m, e2 = e * e;
    BigInt lhs = m2 * m2 + 4 * e2 * e2;
    BigInt rhs = (m2 - 2 * m * e + 2 * e2) * (m2 + 2 * m * e + 2 * e2);
    return lhs == rhs;
}

namespace {

// Solves |2xy| = two_xy, 2x^2 + y^2 + 2xy = other with gcd(2x, y) = 1; x > 0 preferred.
std::optional<std::pair<BigInt, BigInt>> solve_xy(std::int64_t two_xy, std::int64_t other) {
    if (two_xy % 2 != 0) return std::nullopt;
    std::int64_t prod = two_xy / 2;
    for (std::int64_t ax = 1; ax <= prod; ++ax) {
        if (prod % ax != 0) continue;
        std::int64_t ay = prod / ax;
        for (std::int64_t sx : {1, -1}) {
            for (std::int64_t sy : {1, -1}) {
                std::int64_t x = sx * ax, y = sy * ay;
                if ((y & 1) == 0 || std::gcd(x, y) != 1) continue;
                if (2 * x * x + y * y + 2 * x * y == other) return std::make_pair(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)));
            }
        }
    }
    return std::nullopt;
}

}  // namespace

TripleSurvey pyth_triples_square_diff(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("triple bound must be positive");
    TripleSurvey out;
    for (std::int64_t s = 2; s <= bound; ++s) {
        for (std::int64_t t = 1; t < s; ++t) {
            if (((s - t) & 1) == 0 || std::gcd(s, t) != 1) continue;
            BigInt odd_leg = BigInt(static_cast<long>(s * s - t * t));
            BigInt even_leg = BigInt(static_cast<long>(2 * s * t));
            BigInt diff = odd_leg - even_leg;
            int lemma_case = diff > 0 ? 1 : 2;
            auto root = arith::perfect_square_root(arith::abs(diff));
            if (!root) continue;
            auto xy = lemma_case == 1 ? solve_xy(t, s) : solve_xy(s, t);
            if (!xy) {
                out.unsolved.emplace_back(s, t);
                continue;
            }
            TripleParametrization r;
            r.s = s;
            r.t = t;
            r.odd_leg = odd_leg;
            r.even_leg = even_leg;
            r.hyp = BigInt(static_cast<long>(s * s + t * t));
            r.difference_root = *root;
            r.lemma_case = lemma_case;
            r.x = xy->first;
            r.y = xy->second;
            // Re-verify s, t from (x, y).
            BigInt big = 2 * r.x * r.x + r.y * r.y + 2 * r.x * r.y;
            BigInt small = arith::abs(BigInt(2 * r.x * r.y));
            bool ok = lemma_case == 1 ? (big == s && small == t) : (small == s && big == t);
            if (!ok) throw std::logic_error("triple parametrization failed re-verification");
            out.records.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace congruent::theory
