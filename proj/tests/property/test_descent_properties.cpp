#include "congruent/descent.hpp"
#include "congruent/local.hpp"
#include "congruent/points.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace congruent;
using namespace congruent::descent;

namespace {

std::vector<long> squarefree_upto(long limit) {
    std::vector<long> out;
    for (long n = 1; n <= limit; ++n)
        if (arith::is_squarefree(BigInt(n))) out.push_back(n);
    return out;
}

bool power_of_two(std::size_t k) { return k != 0 && (k & (k - 1)) == 0; }

// Re-checks an obstruction by enumeration, independent of the lifting code.
bool obstruction_reverifies(const HomogeneousSpace& S, const LocallyObstructed& o) {
    const auto& c = o.certificate;
    BigInt modulus = 1;
    for (unsigned i = 0; i < c.exponent; ++i) modulus *= c.prime;
    if (modulus != o.modulus) return false;
    if (modulus <= 64 && local::naive_solution_mod(S, modulus.get_ui())) return false;
    auto scan = local::scan_solution_mod_prime_power(S, c.prime, c.exponent);
    return scan && !*scan;
}

std::set<BigInt> proven_set(const DescentImage& image) {
    std::set<BigInt> out;
    for (const auto& c : image.proven_classes()) out.insert(c.d);
    return out;
}

}  // namespace

TEST_SUITE("descent") {

TEST_CASE("oracle equivalence for squarefree n up to 50") {
    EngineOptions options;
    options.bound = 1000;
    options.lifted_bound = 0;
    for (long n : squarefree_upto(50)) {
        const Curve E = congruent_curve(n);
        const auto descent_image = proven_set(compute_image(E, options));
        // point_search lists affine points only; the identity maps to class 1.
        std::set<BigInt> oracle{points::alpha_map(E, points::RationalPoint::infinity()).d};
        for (const auto& P : points::point_search(E, 1000)) oracle.insert(points::alpha_map(E, P).d);
        CHECK_MESSAGE(descent_image == oracle, "n = " << n);
    }
}

TEST_CASE("every status re-verifies") {
    // Witnesses by exact arithmetic, obstructions by residue enumeration,
    // and each proven class is also checked against both local sieves.
    EngineOptions options;
    options.bound = 300;
    for (long n : squarefree_upto(300)) {
        const Curve E = congruent_curve(n);
        for (const Curve& C : {E, isogenous_curve(E)}) {
            const auto image = compute_image(C, options);
            for (const auto& entry : image.classes) {
                if (const auto* p = std::get_if<ProvenSolvable>(&entry.status)) {
                    if (p->witness) CHECK_MESSAGE(verify_witness(entry.space, *p->witness), "n = " << n);
                    CHECK_FALSE(is_obstructed(local_obstruction(entry.space, default_moduli(entry.space))));
                    CHECK_FALSE(is_obstructed(local_solvability(entry.space, C)));
                } else if (const auto* o = std::get_if<LocallyObstructed>(&entry.status)) {
                    CHECK_MESSAGE(obstruction_reverifies(entry.space, *o), "n = " << n << " class " << entry.cls.d);
                }
            }
        }
    }
}

TEST_CASE("images are groups and counts are powers of two") {
    EngineOptions options;
    options.bound = 300;
    for (long n : squarefree_upto(400)) {
        const Curve E = congruent_curve(n);
        const auto image = compute_image(E, options);
        const auto bar = compute_image(isogenous_curve(E), options);
        for (const auto* im : {&image, &bar}) {
            CHECK(power_of_two(im->proven_count()));
            const auto proven = im->proven_classes();
            for (const auto& x : proven)
                for (const auto& y : proven) {
                    const auto* e = im->find(class_product(x, y));
                    REQUIRE(e);
                    CHECK_FALSE(is_obstructed(e->status));
                    CHECK(is_proven(e->status));
                }
        }
        const auto b = rank_bounds(image, bar);
        CHECK(b.lower <= b.upper);
    }
}

TEST_CASE("monotonicity in the search bound and the moduli") {
    for (long n : squarefree_upto(120)) {
        const Curve E = congruent_curve(n);
        for (const Curve& C : {E, isogenous_curve(E)}) {
            for (const auto& cls : candidate_classes(C)) {
                const HomogeneousSpace S = space_for(C, cls);
                // Search bound.
                bool proven_before = false;
                for (std::int64_t bound : {5, 20, 80, 320}) {
                    const bool proven = is_proven(search_homogeneous(S, bound));
                    CHECK_FALSE((proven_before && !proven));
                    proven_before = proven;
                }
                // Moduli: each default modulus alone, then growing prefixes.
                const auto moduli = default_moduli(S);
                std::vector<BigInt> prefix;
                bool obstructed_before = false;
                for (const auto& m : moduli) {
                    prefix.push_back(m);
                    const bool obstructed = is_obstructed(local_obstruction(S, prefix));
                    CHECK_FALSE((obstructed_before && !obstructed));
                    obstructed_before = obstructed;
                    if (is_obstructed(local_obstruction(S, {m}))) CHECK(obstructed);
                }
            }
        }
    }
}

}
