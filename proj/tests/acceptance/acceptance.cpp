// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  Bounds, ranges and runtime limits are fixed below.

#include "congruent/arith.hpp"
#include "congruent/descent.hpp"
#include "congruent/local.hpp"
#include "congruent/points.hpp"
#include "congruent/theory.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

using namespace congruent;
using namespace congruent::descent;

namespace {

// Pinned parameters.
constexpr double kCriterion1Seconds = 1.0;
constexpr double kCriterion2Seconds = 600.0;
constexpr double kCriterion3Seconds = 5.0;
constexpr std::int64_t kPrimeSearchBound = 10000;   // plain (m, e) bound for p < 500
constexpr std::int64_t kPrimeLiftedBound = 20000;   // two-cover parameter bound for p < 500
constexpr std::int64_t kPairSearchBound = 1000;     // PQ / TwoPQ bracketing sweep
constexpr std::int64_t kRemarkBound = 10000;        // N = 2605
constexpr std::int64_t kConditionSearchBound = 100; // necessary-condition suite
constexpr std::int64_t kOracleBound = 1000;         // oracle equivalence
constexpr long kExactnessLimit = 300;               // squarefree n for the exactness sweep

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail << "first failure: " << why << "; ";
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<long> odd_primes(long limit) {
    std::vector<long> out;
    for (long p = 3; p < limit; p += 2)
        if (arith::is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
    return out;
}

bool power_of_two(std::size_t k) { return k != 0 && (k & (k - 1)) == 0; }

RankBounds bounds_for(const BigInt& n, const EngineOptions& options, DescentImage* bar_out = nullptr) {
    const Curve E = congruent_curve(n);
    auto image = compute_image(E, options);
    auto bar = compute_image(isogenous_curve(E), options);
    auto b = rank_bounds(image, bar);
    if (bar_out) *bar_out = std::move(bar);
    return b;
}

// Runs work items on all cores; items must be independent.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (std::size_t i = next++; i < count; i = next++) body(i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(loop);
    loop();
    for (auto& t : pool) t.join();
}

void criterion_1(Outcome& out) {
    using namespace theory;
    const auto t0 = Clock::now();
    struct FormCase {
        BigInt (*f)(const BigInt&, const BigInt&);
        long x, y, value;
        const char* name;
    };
    for (const auto& c : {FormCase{f1, 1, 1, 41, "f1(1,1)"}, FormCase{f1, -1, 7, 137, "f1(-1,7)"},
                          FormCase{f2, 1, 1, 7, "f2(1,1)"}, FormCase{f3, 1, 1, 41, "f3(1,1)"},
                          FormCase{f3, 2, 1, 353, "f3(2,1)"}})
        if (c.f(BigInt(c.x), BigInt(c.y)) != c.value) out.fail(c.name);
    struct AlphaCase {
        long p, a, b, c;
    };
    for (const auto& c : {AlphaCase{37, 22, 21, 5}, AlphaCase{41, 5, 4, 1}, AlphaCase{149, 10, 7, 1}}) {
        auto w = alpha_pm_pythagorean(BigInt(c.p), 1000);
        if (!w || w->a != c.a || w->b != c.b || w->c != c.c || !verify_pyth_witness(BigInt(c.p), *w))
            out.fail("alpha witness for " + std::to_string(c.p));
    }
    if (alpha_pm_pythagorean(BigInt(17), 1000) || beta_pythagorean(BigInt(17), 1000)) out.fail("17 accepted");
    const double t = seconds_since(t0);
    if (t >= kCriterion1Seconds) out.fail("runtime");
    out.detail << "5 form values, 3 alpha witnesses, 17 rejected by both detectors";
}

void criterion_2(Outcome& out) {
    const auto t0 = Clock::now();
    std::mutex mutex;
    // Primes below 500.
    EngineOptions prime_options;
    prime_options.bound = kPrimeSearchBound;
    prime_options.lifted_bound = kPrimeLiftedBound;
    std::vector<long> primes;
    for (long p : odd_primes(500))
        if (p % 8 != 1) primes.push_back(p);
    std::size_t prime_ok = 0;
    parallel_for(primes.size(), [&](std::size_t i) {
        const long p = primes[i];
        DescentImage bar;
        const auto b = bounds_for(BigInt(p), prime_options, &bar);
        const unsigned want = p % 8 == 3 ? 0 : 1;
        bool ok = b.lower == want && b.upper == want;
        if (want == 0)
            for (const auto& c : bar.classes)
                if (c.cls.d != 1 && !is_obstructed(c.status)) ok = false;
        std::lock_guard<std::mutex> lock(mutex);
        if (ok)
            ++prime_ok;
        else
            out.fail("p = " + std::to_string(p) + " gave [" + std::to_string(b.lower) + ", " +
                     std::to_string(b.upper) + "]");
    });
    // Two-prime cases below 2000 whose residue pattern has a verdict.
    EngineOptions pair_options;
    pair_options.bound = kPairSearchBound;
    pair_options.lifted_bound = kPairSearchBound;
    std::vector<std::pair<long, unsigned>> pairs;
    for (long n = 6; n < 2000; ++n) {
        auto c = theory::classify(BigInt(n));
        if (!c || (c->family != theory::Family::PQ && c->family != theory::Family::TwoPQ)) continue;
        const auto v = theory::theorem_rank(*c);
        if (v.rank) pairs.emplace_back(n, *v.rank);
    }
    std::size_t pair_ok = 0, pair_exact = 0;
    parallel_for(pairs.size(), [&](std::size_t i) {
        const auto [n, r] = pairs[i];
        const auto b = bounds_for(BigInt(n), pair_options);
        const bool ok = b.lower <= r && r <= b.upper && (r != 0 || b.upper == 0);
        std::lock_guard<std::mutex> lock(mutex);
        if (ok) {
            ++pair_ok;
            if (b.lower == b.upper) ++pair_exact;
        } else {
            out.fail("n = " + std::to_string(n) + " theorem rank " + std::to_string(r) + " vs [" +
                     std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]");
        }
    });
    const double t = seconds_since(t0);
    if (t >= kCriterion2Seconds) out.fail("runtime");
    out.detail << prime_ok << "/" << primes.size() << " primes p < 500 (p = 3, 5, 7 mod 8) exact at bound "
               << kPrimeSearchBound << " (two-cover parameters " << kPrimeLiftedBound << "); " << pair_ok << "/"
               << pairs.size() << " two-prime n < 2000 bracketed (" << pair_exact << " exact)";
}

void criterion_3(Outcome& out) {
    const auto t0 = Clock::now();
    const Curve E = congruent_curve(41);
    const auto image = compute_image(E);
    const auto bar = compute_image(isogenous_curve(E));
    const auto b = rank_bounds(image, bar);
    if (b.lower != 2 || b.upper != 2) out.fail("bounds");
    auto witness = [&](long d) -> const Witness* {
        const auto* c = bar.find({BigInt(d)});
        if (!c || !is_proven(c->status)) return nullptr;
        const auto& w = std::get<ProvenSolvable>(c->status).witness;
        return w ? &*w : nullptr;
    };
    const Witness* w1 = witness(41);
    const Witness* w2 = witness(2);
    if (!w1 || w1->m != 1 || w1->e != 4) out.fail("witness for (41, 0, 164)");
    if (!w2 || w2->m > 1 || w2->e > 1) out.fail("witness for (2, 0, 3362)");
    if (seconds_since(t0) >= kCriterion3Seconds) out.fail("runtime");
    out.detail << "lower = upper = 2";
    if (w1 && w2)
        out.detail << ", witnesses (" << w1->m << ", " << w1->e << ") and (" << w2->m << ", " << w2->e << ")";
}

void criterion_4(Outcome& out) {
    EngineOptions options;
    options.bound = kRemarkBound;
    const auto b = bounds_for(BigInt(2605), options);
    if (!(b.lower <= 3 && 3 <= b.upper)) out.fail("3 not bracketed");
    if (b.upper != 3) out.fail("upper bound is not 3");
    out.detail << "bounds [" << b.lower << ", " << b.upper << "] at bound " << kRemarkBound
               << "; stretch (lower = 3): " << (b.lower == 3 ? "reached" : "not reached");
}

void criterion_5(Outcome& out) {
    std::size_t cases = 0, witnesses = 0;
    const auto primes = odd_primes(151);
    std::vector<theory::CongruentCase> all;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (long n : {primes[i], 2 * primes[i]})
            if (auto c = theory::classify(BigInt(n))) all.push_back(*c);
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            for (long n : {primes[i] * primes[j], 2 * primes[i] * primes[j]})
                if (auto c = theory::classify(BigInt(n))) all.push_back(*c);
    }
    std::mutex mutex;
    parallel_for(all.size(), [&](std::size_t i) {
        const auto& c = all[i];
        std::size_t found = 0;
        std::vector<std::string> bad;
        for (const auto& s : theory::labeled_spaces(c)) {
            const auto status = search_homogeneous(s.space, kConditionSearchBound);
            if (!is_proven(status)) continue;
            ++found;
            const auto& w = *std::get<ProvenSolvable>(status).witness;
            if (!verify_witness(s.space, w) || !theory::necessary_condition(s.label, c).evaluate(c))
                bad.push_back("n = " + c.n().get_str() + " space " + s.label);
        }
        std::lock_guard<std::mutex> lock(mutex);
        ++cases;
        witnesses += found;
        for (const auto& b : bad) out.fail(b);
    });
    out.detail << cases << " cases with p, q <= 150, " << witnesses << " witnesses at bound "
               << kConditionSearchBound << ", all satisfying their conditions";
}

void criterion_6(Outcome& out) {
    EngineOptions options;
    options.bound = kOracleBound;
    options.lifted_bound = 0;
    std::size_t curves = 0, pairs = 0;
    for (long n = 1; n <= 50; ++n) {
        if (!arith::is_squarefree(BigInt(n))) continue;
        ++curves;
        const Curve E = congruent_curve(n);
        std::set<BigInt> descent_image;
        for (const auto& c : compute_image(E, options).proven_classes()) descent_image.insert(c.d);
        const auto found = points::point_search(E, kOracleBound);
        std::set<BigInt> oracle{points::alpha_map(E, points::RationalPoint::infinity()).d};
        for (const auto& P : found) oracle.insert(points::alpha_map(E, P).d);
        if (descent_image != oracle) out.fail("image mismatch for n = " + std::to_string(n));
        // Homomorphism on pairs drawn from the first points found.
        const std::size_t k = std::min<std::size_t>(found.size(), 8);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const auto R = points::add(E, found[i], found[j]);
                if (points::alpha_map(E, R) !=
                    class_product(points::alpha_map(E, found[i]), points::alpha_map(E, found[j])))
                    out.fail("homomorphism for n = " + std::to_string(n));
                ++pairs;
            }
    }
    out.detail << curves << " squarefree n <= 50 match the point-search oracle (bound " << kOracleBound << "); "
               << pairs << " sampled pairs respect alpha(P + Q) = alpha(P) alpha(Q)";
}

bool obstruction_reverifies(const HomogeneousSpace& S, const LocallyObstructed& o) {
    const auto& c = o.certificate;
    BigInt modulus = 1;
    for (unsigned i = 0; i < c.exponent; ++i) modulus *= c.prime;
    if (modulus != o.modulus) return false;
    if (modulus <= 64 && local::naive_solution_mod(S, modulus.get_ui())) return false;
    auto scan = local::scan_solution_mod_prime_power(S, c.prime, c.exponent);
    return scan && !*scan;
}

void criterion_7(Outcome& out) {
    EngineOptions options;
    options.bound = 300;
    std::size_t witnesses = 0, obstructions = 0, triangles = 0, images = 0;
    for (long n = 1; n <= kExactnessLimit; ++n) {
        if (!arith::is_squarefree(BigInt(n))) continue;
        const Curve E = congruent_curve(n);
        for (int side = 0; side < 2; ++side) {
            const Curve C = side == 0 ? E : isogenous_curve(E);
            const auto image = compute_image(C, options);
            ++images;
            if (!power_of_two(image.proven_count()) || !power_of_two(image.not_obstructed_count()))
                out.fail("image size not a power of two for n = " + std::to_string(n));
            for (const auto& entry : image.classes) {
                if (const auto* p = std::get_if<ProvenSolvable>(&entry.status)) {
                    if (!p->witness) continue;
                    ++witnesses;
                    if (!verify_witness(entry.space, *p->witness)) out.fail("witness, n = " + std::to_string(n));
                    const auto P = point_from_witness(C, entry.space, *p->witness);
                    if (!points::on_curve(C, P) || points::alpha_map(C, P) != entry.cls)
                        out.fail("point, n = " + std::to_string(n));
                    if (side != 0 || P.y.is_zero()) continue;
                    const auto t = points::triangle_from_point(BigInt(n), P);
                    ++triangles;
                    if (t.leg_a * t.leg_b / arith::ExactRational(2L) != arith::ExactRational(n) ||
                        t.leg_a * t.leg_a + t.leg_b * t.leg_b != t.hyp * t.hyp)
                        out.fail("triangle, n = " + std::to_string(n));
                } else if (const auto* o = std::get_if<LocallyObstructed>(&entry.status)) {
                    ++obstructions;
                    if (!obstruction_reverifies(entry.space, *o))
                        out.fail("obstruction, n = " + std::to_string(n) + " class " + entry.cls.d.get_str());
                }
            }
        }
    }
    out.detail << witnesses << " witnesses and points, " << triangles << " triangles, " << obstructions
               << " obstruction certificates re-verified; " << images << " images of power-of-two size";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        void (*run)(Outcome&);
    };
    const Criterion criteria[] = {
        {1, "worked example regression", criterion_1},
        {2, "family rank verdicts", criterion_2},
        {3, "rank two at p = 41", criterion_3},
        {4, "N = 2605 bracket", criterion_4},
        {5, "necessary-condition suite", criterion_5},
        {6, "oracle equivalence and homomorphism", criterion_6},
        {7, "exactness invariants", criterion_7},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome out;
        const auto t0 = Clock::now();
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double t = seconds_since(t0);
        all = all && out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") ["
                  << std::fixed << std::setprecision(2) << t << " s]: " << out.detail.str() << std::endl;
    }
    return all ? 0 : 1;
}
