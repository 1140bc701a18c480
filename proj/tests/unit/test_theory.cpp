#include "congruent/theory.hpp"

#include <doctest.h>

#include <algorithm>

using namespace congruent;
using namespace congruent::theory;

namespace {

CongruentCase case_of(long n) {
    auto c = classify(n);
    REQUIRE(c);
    return *c;
}

const TripleParametrization* find_triple(const TripleSurvey& survey, std::int64_t s, std::int64_t t) {
    for (const auto& r : survey.records)
        if (r.s == s && r.t == t) return &r;
    return nullptr;
}

}  // namespace

TEST_SUITE("theory") {

TEST_CASE("classification") {
    auto c = case_of(41);
    CHECK(c.family == Family::P);
    CHECK(c.p == 41);
    CHECK(c.p_mod8 == 1);

    c = case_of(2605);
    CHECK(c.family == Family::PQ);
    CHECK(c.p == 5);
    CHECK(*c.q == 521);
    CHECK(c.p_mod8 == 5);
    CHECK(*c.q_mod8 == 1);

    CHECK(case_of(14).family == Family::TwoP);
    CHECK(case_of(130).family == Family::TwoPQ);
    CHECK_FALSE(classify(12));
    CHECK_FALSE(classify(2));
    CHECK_FALSE(classify(105));
    CHECK_FALSE(classify(1));
}

TEST_CASE("rank verdicts") {
    auto v = theorem_rank(case_of(3));
    REQUIRE(v.rank);
    CHECK(*v.rank == 0);
    CHECK(*v.congruent == false);

    v = theorem_rank(case_of(2 * 5 * 13));
    REQUIRE(v.rank);
    CHECK(*v.rank == 0);

    v = theorem_rank(case_of(21));
    REQUIRE(v.rank);
    CHECK(*v.rank == 1);
    CHECK(*v.congruent == true);

    v = theorem_rank(case_of(41));
    CHECK_FALSE(v.rank);
    CHECK(*v.condition == kRank2Criterion);

    v = theorem_rank(case_of(2 * 17));
    CHECK_FALSE(v.rank);
    CHECK(*v.condition == kNoVerdict);
    CHECK_FALSE(v.anchor.empty());
}

TEST_CASE("quartic forms") {
    CHECK(f1(1, 1) == 41);
    CHECK(f2(1, 1) == 7);
    CHECK(f1(-1, 7) == 137);
    CHECK(f3(1, 1) == 41);
    CHECK(f3(2, 1) == 353);
}

TEST_CASE("alpha detector") {
    auto w = alpha_pm_pythagorean(37, 1000);
    REQUIRE(w);
    CHECK(w->a == 22);
    CHECK(w->b == 21);
    CHECK(w->c == 5);
    CHECK(w->kind == PythKind::AlphaMinus);
    CHECK(w->auxiliary_square_root == 29);

    w = alpha_pm_pythagorean(149, 1000);
    REQUIRE(w);
    CHECK(w->a == 10);
    CHECK(w->b == 7);
    CHECK(w->c == 1);
    CHECK(w->kind == PythKind::AlphaPlus);
    CHECK(w->auxiliary_square_root == 25);

    w = alpha_pm_pythagorean(41, 1000);
    REQUIRE(w);
    CHECK(w->a == 5);
    CHECK(w->b == 4);
    CHECK(w->c == 1);

    CHECK_FALSE(alpha_pm_pythagorean(17, 1000));
    CHECK_THROWS_AS(alpha_pm_pythagorean(18, 10), std::invalid_argument);
}

TEST_CASE("single-representation alpha test and its counterexamples") {
    CHECK(alpha_c1_test(41));
    CHECK_FALSE(alpha_c1_test(17));
    // Both have a witness, but only with c = 5.
    for (long p : {257L, 457L}) {
        CHECK_FALSE(alpha_c1_test(p));
        auto w = alpha_pm_pythagorean(p, 1000);
        REQUIRE(w);
        CHECK(w->c == 5);
        CHECK(verify_pyth_witness(p, *w));
    }
}

TEST_CASE("beta detector") {
    auto w = beta_pythagorean(41, 1000);
    REQUIRE(w);
    CHECK(w->x == 1);
    CHECK(w->y == 1);
    CHECK(w->form == 1);

    w = beta_pythagorean(7, 1000);
    REQUIRE(w);
    CHECK(w->x == 1);
    CHECK(w->y == 1);
    CHECK(w->form == 2);

    CHECK_FALSE(beta_pythagorean(17, 50));
    CHECK_THROWS_AS(beta_pythagorean(22, 10), std::invalid_argument);

    auto [a, b] = beta_decomposition(1, 1, 1);
    CHECK(a == 21);
    CHECK(b == 20);
}

TEST_CASE("rank-two criterion") {
    auto r = rank2_criterion(41, 1000);
    REQUIRE(r.verdict.rank);
    CHECK(*r.verdict.rank == 2);
    CHECK(r.alpha_c1_passed);

    r = rank2_criterion(17, 1000);
    CHECK_FALSE(r.verdict.rank);
    CHECK(*r.verdict.condition == kUndecidedAtBound);
    CHECK_FALSE(r.alpha);
    CHECK_FALSE(r.beta);

    r = rank2_criterion(137, 1000);
    REQUIRE(r.beta);
    CHECK(f1(r.beta->x, r.beta->y) == 137);
    CHECK(r.verdict.rank == (r.alpha ? std::optional<unsigned>(2) : std::nullopt));

    CHECK_THROWS_AS(rank2_criterion(13, 10), std::invalid_argument);
}

TEST_CASE("necessary conditions") {
    auto c = necessary_condition("b3", case_of(17));
    CHECK(c.evaluate(case_of(17)));
    CHECK_FALSE(c.evaluate(case_of(13)));

    c = necessary_condition("b6", case_of(5 * 13));
    CHECK(c.evaluate(case_of(5 * 13)));
    CHECK_FALSE(c.evaluate(case_of(3 * 13)));

    c = necessary_condition("b2", case_of(2 * 17 * 19));
    CHECK(c.evaluate(case_of(2 * 17 * 19)));       // (17/19) = 1
    CHECK_FALSE(c.evaluate(case_of(2 * 17 * 23)));  // (17/23) = -1
    CHECK_FALSE(c.evaluate(case_of(2 * 13 * 19)));  // 13 is not 1 mod 8

    CHECK_THROWS_AS(necessary_condition("b9", case_of(3)), std::invalid_argument);
}

TEST_CASE("labelled spaces") {
    const auto spaces = labeled_spaces(case_of(41));
    auto it = std::find_if(spaces.begin(), spaces.end(), [](const LabeledSpace& s) { return s.label == "b1"; });
    REQUIRE(it != spaces.end());
    CHECK(it->side == Side::AlphaBar);
    CHECK(it->space == descent::HomogeneousSpace{41, 0, 164});

    // Each labelled space belongs to its curve: b1 = d and b1 * b2 = b.
    for (long n : {3L, 14L, 41L, 2L * 17L, 3L * 7L, 5L * 13L, 2L * 3L * 5L, 2L * 7L * 17L}) {
        const Curve E = congruent_curve(n);
        const Curve Ebar = descent::isogenous_curve(E);
        for (const auto& s : labeled_spaces(case_of(n))) {
            const Curve& C = s.side == Side::Alpha ? E : Ebar;
            CHECK_MESSAGE(s.space.b1 == s.d, "n = " << n << " " << s.label);
            CHECK_MESSAGE(s.space.a == C.a, "n = " << n << " " << s.label);
            CHECK_MESSAGE(s.space.b1 * s.space.b2 == C.b, "n = " << n << " " << s.label);
        }
    }
    // n = 2p: the class p space is (p, 0, -4p).
    const auto two_p = labeled_spaces(case_of(2 * 3));
    CHECK(std::any_of(two_p.begin(), two_p.end(), [](const LabeledSpace& s) {
        return s.label == "a1" && s.space == descent::HomogeneousSpace{3, 0, -12};
    }));
}

TEST_CASE("factorization identity") {
    CHECK(factorization_identity_check(1, 1));
    CHECK(factorization_identity_check(3, 2));
    CHECK(factorization_identity_check(1, 4));
}

TEST_CASE("triples whose legs differ by a square") {
    const auto survey = pyth_triples_square_diff(20);
    CHECK(survey.unsolved.empty());

    auto r = find_triple(survey, 5, 2);
    REQUIRE(r);
    CHECK(r->odd_leg == 21);
    CHECK(r->even_leg == 20);
    CHECK(r->lemma_case == 1);
    CHECK(r->x == 1);
    CHECK(r->y == 1);

    r = find_triple(survey, 2, 1);
    REQUIRE(r);
    CHECK(r->lemma_case == 2);
    CHECK(r->odd_leg == 3);
    CHECK(r->even_leg == 4);

    r = find_triple(survey, 12, 5);
    REQUIRE(r);
    CHECK(r->odd_leg == 119);
    CHECK(r->even_leg == 120);
    CHECK(r->hyp == 169);
}

}
