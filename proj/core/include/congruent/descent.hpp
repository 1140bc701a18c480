#pragma once

// 2-isogeny descent on y^2 = x^3 + a x^2 + b x.
//
// A square class d | b lies in the image of alpha exactly when the quartic
//     N^2 = d m^4 + a m^2 e^2 + (b/d) e^4
// has a solution with m e != 0 (plus the two trivial classes coming from O
// and (0,0)).  Membership is certified by an explicit witness, non-membership
// by a congruence obstruction modulo a prime power; anything else stays
// undecided and only widens the reported rank interval.

#include "congruent/arith.hpp"
#include "congruent/curve.hpp"
#include "congruent/points.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace congruent::descent {

using arith::BigInt;
using arith::ExactRational;
using congruent::Curve;
using congruent::SquareClass;
using points::RationalPoint;

inline constexpr const char* kEngineVersion = "1.0.0";

struct HomogeneousSpace {
    BigInt b1;
    BigInt a;
    BigInt b2;

    BigInt evaluate(const BigInt& m, const BigInt& e) const;
    friend bool operator==(const HomogeneousSpace& x, const HomogeneousSpace& y) {
        return x.b1 == y.b1 && x.a == y.a && x.b2 == y.b2;
    }
};

HomogeneousSpace space_for(const Curve& E, const SquareClass& d);

struct Witness {
    BigInt m;
    BigInt e;
    BigInt N;
};

// N^2 = b1 m^4 + a m^2 e^2 + b2 e^4, gcd(m, e) = 1 and m e != 0.
bool verify_witness(const HomogeneousSpace& S, const Witness& w);

enum class MembershipSource {
    Identity,     // image of the point at infinity
    TwoTorsion,   // image of (0,0)
    Search,       // plain (m, e) scan
    LiftedSearch, // search on a two-cover of the quartic
    Closure,      // product of two proven classes, witness from point addition
};

struct ProvenSolvable {
    MembershipSource source = MembershipSource::Search;
    std::optional<Witness> witness;   // absent only for Identity / TwoTorsion
    std::vector<SquareClass> factors; // Closure: the two classes multiplied
};

struct ObstructionCertificate {
    BigInt prime;                     // the obstruction lives at this prime
    unsigned exponent = 0;            // no primitive solution modulo prime^exponent
    std::string method;               // "residue-scan" or "lifting"
    std::uint64_t residue_classes = 0; // projective classes (m:e) examined
};

struct LocallyObstructed {
    BigInt modulus;
    ObstructionCertificate certificate;
};

struct Undecided {
    std::int64_t search_bound = 0;
};

using SolvabilityStatus = std::variant<ProvenSolvable, LocallyObstructed, Undecided>;

inline bool is_proven(const SolvabilityStatus& s) { return std::holds_alternative<ProvenSolvable>(s); }
inline bool is_obstructed(const SolvabilityStatus& s) { return std::holds_alternative<LocallyObstructed>(s); }
const char* status_kind(const SolvabilityStatus& s);
const char* source_name(MembershipSource s);

struct ClassEntry {
    SquareClass cls;
    HomogeneousSpace space;
    SolvabilityStatus status;
};

struct DescentImage {
    Curve curve;
    std::vector<ClassEntry> classes;      // canonical class order
    std::vector<SquareClass> guaranteed;  // class(1) and class(b)

    const ClassEntry* find(const SquareClass& d) const;
    std::size_t proven_count() const;
    std::size_t not_obstructed_count() const;
    std::vector<SquareClass> proven_classes() const;
};

struct RankBounds {
    unsigned lower = 0;
    unsigned upper = 0;
    std::vector<std::string> provenance;
};

// Moduli selection for the local sieve.
struct ModuliPolicy {
    enum class Kind {
        Adaptive,  // exact p-adic decision at every bad prime (lifting)
        Default,   // default_moduli(S)
        Explicit,  // the given list
    };
    Kind kind = Kind::Adaptive;
    std::vector<BigInt> moduli;

    static ModuliPolicy adaptive() { return {}; }
    static ModuliPolicy defaults() { return {Kind::Default, {}}; }
    static ModuliPolicy explicit_list(std::vector<BigInt> m) { return {Kind::Explicit, std::move(m)}; }
};

struct EngineOptions {
    std::int64_t bound = 1000;         // plain search: 1 <= m, e <= bound
    std::int64_t lifted_bound = -1;    // two-cover parameter bound; -1 = same as bound, 0 = off
    ModuliPolicy moduli;
    unsigned jobs = 1;
};

// Curve(-2a, a^2 - 4b); throws when the image is singular.
Curve isogenous_curve(const Curve& E);

// Squarefree d dividing the squarefree kernel of b whose quartic is solvable
// over the reals; always contains 1 and class(b).
std::vector<SquareClass> candidate_classes(const Curve& E);

// Scans coprime 1 <= m, e <= bound by shells max(m, e) ascending.
SolvabilityStatus search_homogeneous(const HomogeneousSpace& S, std::int64_t bound);

// Residue sieve: LocallyObstructed at the first modulus with no primitive
// solution, otherwise Undecided.
SolvabilityStatus local_obstruction(const HomogeneousSpace& S, const std::vector<BigInt>& moduli);

// {8, 16, 32} followed by q, q^2 for each odd prime q | b1 b2 (ascending q).
std::vector<BigInt> default_moduli(const HomogeneousSpace& S);

// Exact local decision at every prime dividing 2 b (a^2 - 4b); an obstruction
// is reported with the smallest prime power the lifting procedure needed.
SolvabilityStatus local_solvability(const HomogeneousSpace& S, const Curve& E);

// The per-class decision used by compute_image: local test per the moduli
// policy, then the plain search, then the lifted search.
SolvabilityStatus decide_space(const Curve& E, const HomogeneousSpace& S, const EngineOptions& options);

DescentImage compute_image(const Curve& E, const EngineOptions& options = {});

// Throws std::logic_error when upper < lower.
RankBounds rank_bounds(const DescentImage& image, const DescentImage& isogenous_image);

// (b1 m^2 / e^2, b1 m N / e^3); throws std::logic_error if it misses the curve.
RationalPoint point_from_witness(const Curve& E, const HomogeneousSpace& S, const Witness& w);

// Inverse of point_from_witness for a point with alpha image d; nothing when
// x/d is not a rational square.
std::optional<Witness> witness_from_point(const HomogeneousSpace& S, const RationalPoint& P);

}  // namespace congruent::descent
