#include "congruent/arith.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace congruent::arith;

TEST_SUITE("arith") {

TEST_CASE("legendre symbol examples") {
    CHECK(legendre(1, 5) == 1);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 5) == -1);
    CHECK(legendre(10, 5) == 0);
    CHECK(legendre(-1, 13) == 1);
    CHECK(legendre(-1, 7) == -1);
}

TEST_CASE("legendre rejects even or composite moduli") {
    CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(legendre(3, 15), std::invalid_argument);
}

TEST_CASE("perfect squares") {
    auto r0 = perfect_square_root(0);
    REQUIRE(r0);
    CHECK(*r0 == 0);
    auto r1 = perfect_square_root(1681);
    REQUIRE(r1);
    CHECK(*r1 == 41);
    CHECK_FALSE(is_perfect_square(325));
    CHECK_FALSE(is_perfect_square(-4));
}

TEST_CASE("squarefree decomposition") {
    auto d = squarefree_decompose(18);
    CHECK(d.squarefree_part == 2);
    CHECK(d.square_root_of_cofactor == 3);
    d = squarefree_decompose(-25);
    CHECK(d.squarefree_part == -1);
    CHECK(d.square_root_of_cofactor == 5);
    d = squarefree_decompose(2605);
    CHECK(d.squarefree_part == 2605);
    CHECK(d.square_root_of_cofactor == 1);
    CHECK_THROWS(squarefree_decompose(0));
}

TEST_CASE("primality") {
    CHECK(is_prime(BigInt(521)));
    CHECK_FALSE(is_prime(BigInt(1)));
    CHECK_FALSE(is_prime(BigInt(2605)));
    CHECK(is_prime(BigInt("1000000000039")));
    CHECK_FALSE(is_prime(BigInt("3215031751")));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("sum of two squares, odd part first") {
    CHECK(sum_two_squares(41) == std::make_pair(BigInt(5), BigInt(4)));
    CHECK(sum_two_squares(17) == std::make_pair(BigInt(1), BigInt(4)));
    CHECK(sum_two_squares(149) == std::make_pair(BigInt(7), BigInt(10)));
    CHECK_THROWS_AS(sum_two_squares(43), std::invalid_argument);
}

TEST_CASE("exact rationals stay in lowest terms") {
    ExactRational q(BigInt(6), BigInt(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK((q + ExactRational(BigInt(1), BigInt(2))).to_string() == "-1");
    CHECK(ExactRational::parse("41/16").to_string() == "41/16");
    auto s = ExactRational(BigInt(1681), BigInt(36)).sqrt();
    REQUIRE(s);
    CHECK(s->to_string() == "41/6");
}

TEST_CASE("hilbert symbols") {
    CHECK(hilbert_symbol(-1, -1, 0) == -1);
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(-1, -1, 3) == 1);
    CHECK(hilbert_symbol(2, 3, 3) == -1);
    CHECK(hilbert_symbol(5, 7, 5) == -1);
}

}
