#pragma once

// Residue-class theory for n in {p, 2p, pq, 2pq}: classification of n, the
// rank verdicts that follow from Legendre-symbol conditions on the
// homogeneous spaces, the Pythagorean characterisation of rank 2 for
// p = 1 (mod 8), and the quartic forms f1, f2, f3 that go with it.

#include "congruent/arith.hpp"
#include "congruent/descent.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace congruent::theory {

using arith::BigInt;

enum class Family { P, TwoP, PQ, TwoPQ };

const char* family_name(Family f);

struct CongruentCase {
    Family family = Family::P;
    BigInt p;                      // odd prime; for two primes p < q
    std::optional<BigInt> q;
    int p_mod8 = 0;
    std::optional<int> q_mod8;
    std::optional<int> legendre_pq;  // (p/q)

    BigInt n() const;
};

// n = p, 2p, pq or 2pq with p, q distinct odd primes; nothing otherwise.
std::optional<CongruentCase> classify(const BigInt& n);

struct TheoremVerdict {
    std::optional<unsigned> rank;
    std::optional<bool> congruent;
    std::optional<std::string> condition;  // deferred / undecided tag
    std::string anchor;                    // stable short identifier
    std::string citation;                  // human-readable statement of the rule applied
};

// Deferred tag used for p = 1 (mod 8).
inline constexpr const char* kRank2Criterion = "rank2-criterion";
inline constexpr const char* kNoVerdict = "no-verdict";
inline constexpr const char* kUndecidedAtBound = "undecided-at-bound";

TheoremVerdict theorem_rank(const CongruentCase& c);

BigInt f1(const BigInt& x, const BigInt& y);
BigInt f2(const BigInt& x, const BigInt& y);
BigInt f3(const BigInt& x, const BigInt& y);

enum class PythKind { AlphaMinus, AlphaPlus, Beta };
const char* pyth_kind_name(PythKind k);

// Alpha kinds: p c^2 = a^2 + b^2, gcd(a, b) = 1 and (a -/+ 2b)^2 + b^2 =
// auxiliary_square_root^2.  Beta: (x, y) with gcd(2x, y) = 1 and
// f_form(x, y) = p; (a, b) is then the induced decomposition p = a + b with
// a - b and a^2 + b^2 both squares (auxiliary_square_root = sqrt(a^2 + b^2)).
struct PythWitness {
    BigInt a, b, c;
    PythKind kind = PythKind::AlphaMinus;
    BigInt auxiliary_square_root;
    BigInt x, y;   // Beta only
    int form = 0;  // Beta only: 1 or 2
};

bool verify_pyth_witness(const BigInt& p, const PythWitness& w);

// Searches c = 1, 2, ..., bound and, for each c, a ascending over coprime
// a^2 + b^2 = p c^2, testing the minus sign before the plus sign.  Throws
// std::invalid_argument for even or non-prime p.
std::optional<PythWitness> alpha_pm_pythagorean(const BigInt& p, std::int64_t bound);

// The single-representation test: p = a^2 + b^2 with a odd, b even, and
// (a -/+ 2b)^2 + b^2 a square.  Requires p = 1 (mod 8).  A negative answer
// does not rule out witnesses with c > 1 (257 and 457 are counterexamples).
std::optional<PythWitness> alpha_c1_test(const BigInt& p);

// Shells max(|x|, |y|) = 1, 2, ..., bound with y > 0 (the forms are even, so
// (-x, -y) repeats (x, y)); within a shell x then y ascending; f1 before f2.  Throws std::invalid_argument for even or non-prime p.
std::optional<PythWitness> beta_pythagorean(const BigInt& p, std::int64_t bound);

// (a, b) with a + b = f_form(x, y), a - b = (2x^2 - y^2)^2 for form 1.
std::pair<BigInt, BigInt> beta_decomposition(const BigInt& x, const BigInt& y, int form);

struct Rank2Result {
    TheoremVerdict verdict;
    std::optional<PythWitness> alpha;
    std::optional<PythWitness> beta;
    bool alpha_c1_passed = false;
};

// Rank 2 exactly when both detectors produce witnesses; otherwise the
// verdict is left undecided at the bound.  Throws unless p = 1 (mod 8).
Rank2Result rank2_criterion(const BigInt& p, std::int64_t bound);

enum class Side { Alpha, AlphaBar };  // curve E or its isogenous curve

struct LabeledSpace {
    std::string label;  // "a1", "b3", ...
    Side side = Side::Alpha;
    BigInt d;           // the square class (b1)
    descent::HomogeneousSpace space;
};

// Every labelled space of the family, in label order; a signed label
// expands into its positive and negative class.
std::vector<LabeledSpace> labeled_spaces(const CongruentCase& c);

struct NecessaryCondition {
    Family family = Family::P;
    std::string label;
    std::string statement;
    // Evaluated on (p, q); q is ignored for the one-prime families.
    std::function<bool(const BigInt& p, const BigInt& q)> predicate;

    bool evaluate(const CongruentCase& c) const;
};

// Throws std::invalid_argument for a label the family does not have.
NecessaryCondition necessary_condition(const std::string& label, const CongruentCase& c);

// m^4 + 4 e^4 == (m^2 - 2me + 2e^2)(m^2 + 2me + 2e^2), evaluated exactly.
bool factorization_identity_check(const BigInt& m, const BigInt& e);

struct TripleParametrization {
    std::int64_t s = 0, t = 0;            // primitive triple parameters, s > t
    BigInt odd_leg, even_leg, hyp;        // s^2 - t^2, 2st, s^2 + t^2
    BigInt difference_root;               // |legs difference| = root^2
    int lemma_case = 0;                   // 1: odd leg larger, 2: even leg larger
    BigInt x, y;                          // gcd(2x, y) = 1
};

struct TripleSurvey {
    std::vector<TripleParametrization> records;
    // Triples whose legs differ by a square but admit no (x, y); a nonempty
    // list would contradict the parametrisation lemmas.
    std::vector<std::pair<std::int64_t, std::int64_t>> unsolved;
};

// Primitive triples from coprime s > t >= 1 of opposite parity with s <= bound.
// Case 1: s = 2x^2 + y^2 + 2xy, t = |2xy|.  Case 2: s = |2xy|, t = 2x^2 + y^2 + 2xy.
TripleSurvey pyth_triples_square_diff(std::int64_t bound);

}  // namespace congruent::theory
