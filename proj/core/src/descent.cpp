#include "congruent/descent.hpp"

#include "congruent/local.hpp"
#include "congruent/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace congruent::descent {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned floor_log2(std::size_t n) {
    unsigned r = 0;
    while (n > 1) {
        n >>= 1;
        ++r;
    }
    return r;
}

BigInt pow_ui(const BigInt& base, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::string describe(const SquareClass& d) { return d.d.get_str(); }

// A point whose alpha image is the class, used to build closure witnesses.
RationalPoint representative(const Curve& E, const ClassEntry& entry) {
    const auto& p = std::get<ProvenSolvable>(entry.status);
    if (p.source == MembershipSource::Identity) return RationalPoint::infinity();
    if (p.source == MembershipSource::TwoTorsion) return {ExactRational(0L), ExactRational(0L), false};
    return point_from_witness(E, entry.space, *p.witness);
}

}  // namespace

SolvabilityStatus decide_space(const Curve& E, const HomogeneousSpace& S, const EngineOptions& options) {
    SolvabilityStatus local;
    switch (options.moduli.kind) {
        case ModuliPolicy::Kind::Adaptive:
            local = local_solvability(S, E);
            break;
        case ModuliPolicy::Kind::Default:
            local = local_obstruction(S, default_moduli(S));
            break;
        case ModuliPolicy::Kind::Explicit:
            local = local_obstruction(S, options.moduli.moduli);
            break;
    }
    if (is_obstructed(local)) return local;

    if (auto w = search::plain_search(S, options.bound)) return ProvenSolvable{MembershipSource::Search, *w, {}};
    const std::int64_t lifted = options.lifted_bound < 0 ? options.bound : options.lifted_bound;
    if (lifted > 0)
        if (auto w = search::lifted_search(S, lifted))
            return ProvenSolvable{MembershipSource::LiftedSearch, *w, {}};
    return Undecided{options.bound};
}

BigInt HomogeneousSpace::evaluate(const BigInt& m, const BigInt& e) const {
    BigInt m2 = m * m, e2 = e * e;
    return b1 * m2 * m2 + a * m2 * e2 + b2 * e2 * e2;
}

HomogeneousSpace space_for(const Curve& E, const SquareClass& d) {
    if (d.d == 0 || !mpz_divisible_p(E.b.get_mpz_t(), d.d.get_mpz_t()))
        throw std::invalid_argument("space_for: class " + d.d.get_str() + " does not divide b");
    return {d.d, E.a, BigInt(E.b / d.d)};
}

bool verify_witness(const HomogeneousSpace& S, const Witness& w) {
    if (w.m == 0 || w.e == 0) return false;
    if (arith::gcd(w.m, w.e) != 1) return false;
    return w.N * w.N == S.evaluate(w.m, w.e);
}

const char* status_kind(const SolvabilityStatus& s) {
    if (std::holds_alternative<ProvenSolvable>(s)) return "proven_solvable";
    if (std::holds_alternative<LocallyObstructed>(s)) return "locally_obstructed";
    return "undecided";
}

const char* source_name(MembershipSource s) {
    switch (s) {
        case MembershipSource::Identity: return "identity";
        case MembershipSource::TwoTorsion: return "two_torsion";
        case MembershipSource::Search: return "search";
        case MembershipSource::LiftedSearch: return "lifted_search";
        case MembershipSource::Closure: return "closure";
    }
    return "unknown";
}

const ClassEntry* DescentImage::find(const SquareClass& d) const {
    for (const auto& c : classes)
        if (c.cls == d) return &c;
    return nullptr;
}

std::size_t DescentImage::proven_count() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const ClassEntry& c) { return is_proven(c.status); }));
}

std::size_t DescentImage::not_obstructed_count() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const ClassEntry& c) { return !is_obstructed(c.status); }));
}

std::vector<SquareClass> DescentImage::proven_classes() const {
    std::vector<SquareClass> out;
    for (const auto& c : classes)
        if (is_proven(c.status)) out.push_back(c.cls);
    return out;
}

Curve isogenous_curve(const Curve& E) { return Curve(BigInt(-2 * E.a), BigInt(E.a * E.a - 4 * E.b)); }

std::vector<SquareClass> candidate_classes(const Curve& E) {
    const BigInt disc = E.discriminant_factor();
    std::vector<SquareClass> out;
    for (const auto& d : arith::signed_squarefree_divisors(E.b)) {
        if (d < 0) {
            // d t^2 + a t + b/d must be >= 0 for some real t = (m/e)^2 > 0.
            const BigInt b2 = E.b / d;
            if (!(b2 > 0 || (E.a > 0 && disc > 0))) continue;
        }
        out.push_back({d});
    }
    return out;
}

SolvabilityStatus search_homogeneous(const HomogeneousSpace& S, std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("search_homogeneous: bound must be >= 1");
    if (auto w = search::plain_search(S, bound)) return ProvenSolvable{MembershipSource::Search, *w, {}};
    return Undecided{bound};
}

SolvabilityStatus local_obstruction(const HomogeneousSpace& S, const std::vector<BigInt>& moduli) {
    if (moduli.empty()) throw std::invalid_argument("local_obstruction: moduli must be nonempty");
    for (const auto& M : moduli) {
        if (M < 1) throw std::invalid_argument("local_obstruction: moduli must be positive");
        if (M == 1) continue;
        for (const auto& pp : arith::factorize(M)) {
            auto answer = local::solution_mod_prime_power(S, pp.prime, pp.exponent);
            if (answer == local::Answer::Insoluble) {
                BigInt q = pow_ui(pp.prime, pp.exponent);
                ObstructionCertificate cert{pp.prime, pp.exponent, "residue-scan",
                                            BigInt(q + q / pp.prime).get_ui()};
                return LocallyObstructed{M, cert};
            }
        }
    }
    return Undecided{0};
}

std::vector<BigInt> default_moduli(const HomogeneousSpace& S) {
    std::vector<BigInt> out{8, 16, 32};
    BigInt prod = S.b1 * S.b2;
    if (prod == 0) return out;
    for (const auto& q : arith::prime_divisors(prod)) {
        if (q == 2) continue;
        out.push_back(q);
        out.push_back(q * q);
    }
    return out;
}

SolvabilityStatus local_solvability(const HomogeneousSpace& S, const Curve& E) {
    for (const auto& ell : local::bad_primes(E.a, E.b)) {
        auto r = local::padic_solubility(S, ell);
        if (r.answer != local::Answer::Insoluble) continue;
        // The lifting tree names the depth it needed; the truncated search must agree.
        if (local::solution_mod_prime_power(S, ell, r.certificate_exponent) != local::Answer::Insoluble)
            throw std::logic_error("local_solvability: obstruction at " + ell.get_str() +
                                   " does not hold modulo the reported power");
        BigInt q = pow_ui(ell, r.certificate_exponent);
        return LocallyObstructed{q, {ell, r.certificate_exponent, "lifting", r.nodes}};
    }
    return Undecided{0};
}

DescentImage compute_image(const Curve& E, const EngineOptions& options) {
    if (options.bound < 1) throw std::invalid_argument("compute_image: bound must be >= 1");
    DescentImage image;
    image.curve = E;
    const SquareClass one{BigInt(1)}, bclass = class_of(E.b);
    image.guaranteed = {one};
    if (!(bclass == one)) image.guaranteed.push_back(bclass);

    const auto candidates = candidate_classes(E);
    image.classes.resize(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        image.classes[i].cls = candidates[i];
        image.classes[i].space = space_for(E, candidates[i]);
    }

    // Per-class work is independent; results land in fixed slots, so the
    // outcome does not depend on scheduling.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < image.classes.size();) {
            auto& entry = image.classes[i];
            if (entry.cls == one)
                entry.status = ProvenSolvable{MembershipSource::Identity, std::nullopt, {}};
            else if (entry.cls == bclass)
                entry.status = ProvenSolvable{MembershipSource::TwoTorsion, std::nullopt, {}};
            else
                entry.status = decide_space(E, entry.space, options);
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(candidates.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Close the proven set under multiplication; each new member gets a
    // witness derived from the sum of representative points.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < image.classes.size() && !changed; ++i) {
            if (!is_proven(image.classes[i].status)) continue;
            for (std::size_t j = i + 1; j < image.classes.size() && !changed; ++j) {
                if (!is_proven(image.classes[j].status)) continue;
                const SquareClass prod = class_product(image.classes[i].cls, image.classes[j].cls);
                auto it = std::find_if(image.classes.begin(), image.classes.end(),
                                       [&](const ClassEntry& c) { return c.cls == prod; });
                if (it == image.classes.end())
                    throw std::logic_error("compute_image: product class " + describe(prod) +
                                           " is not a candidate (internal inconsistency)");
                if (is_proven(it->status)) continue;
                if (is_obstructed(it->status))
                    throw std::logic_error("compute_image: class " + describe(prod) +
                                           " is both a product of members and locally obstructed");
                RationalPoint P = points::add(E, representative(E, image.classes[i]),
                                              representative(E, image.classes[j]));
                auto w = witness_from_point(it->space, P);
                if (!w || !verify_witness(it->space, *w))
                    throw std::logic_error("compute_image: closure witness for " + describe(prod) + " failed");
                it->status = ProvenSolvable{MembershipSource::Closure, *w,
                                            {image.classes[i].cls, image.classes[j].cls}};
                changed = true;
            }
        }
    }

    for (const auto& c : image.classes) {
        if (const auto* p = std::get_if<ProvenSolvable>(&c.status); p && p->witness)
            if (!verify_witness(c.space, *p->witness))
                throw std::logic_error("compute_image: witness for " + describe(c.cls) + " does not verify");
    }
    return image;
}

RankBounds rank_bounds(const DescentImage& image, const DescentImage& isogenous_image) {
    RankBounds r;
    const std::size_t pa = image.proven_count(), pb = isogenous_image.proven_count();
    const std::size_t ua = image.not_obstructed_count(), ub = isogenous_image.not_obstructed_count();
    // Images are subgroups: round counts down to powers of two.
    const unsigned la = floor_log2(pa), lb = floor_log2(pb), ha = floor_log2(ua), hb = floor_log2(ub);
    r.lower = la + lb >= 2 ? la + lb - 2 : 0;
    if (ha + hb < 2)
        throw std::logic_error("rank_bounds: fewer than 4 classes survive the sieve (internal inconsistency)");
    r.upper = ha + hb - 2;
    if (r.upper < r.lower) throw std::logic_error("rank_bounds: upper bound below lower bound");

    std::ostringstream os;
    os << "image proven " << pa << (is_power_of_two(pa) ? "" : " (rounded down)") << ", not obstructed " << ua
       << "; isogenous image proven " << pb << (is_power_of_two(pb) ? "" : " (rounded down)")
       << ", not obstructed " << ub;
    r.provenance.push_back(os.str());
    for (const auto* img : {&image, &isogenous_image}) {
        for (const auto& c : img->classes) {
            std::ostringstream line;
            line << "curve (" << img->curve.a.get_str() << ", " << img->curve.b.get_str() << ") class "
                 << c.cls.d.get_str() << ": " << status_kind(c.status);
            if (const auto* p = std::get_if<ProvenSolvable>(&c.status)) {
                line << " via " << source_name(p->source);
                if (p->witness)
                    line << " (m, e, N) = (" << p->witness->m.get_str() << ", " << p->witness->e.get_str() << ", "
                         << p->witness->N.get_str() << ")";
            } else if (const auto* o = std::get_if<LocallyObstructed>(&c.status)) {
                line << " modulo " << o->modulus.get_str();
            } else {
                line << " at bound " << std::get<Undecided>(c.status).search_bound;
            }
            r.provenance.push_back(line.str());
        }
    }
    return r;
}

RationalPoint point_from_witness(const Curve& E, const HomogeneousSpace& S, const Witness& w) {
    if (w.e == 0) throw std::invalid_argument("point_from_witness: e must be nonzero");
    const ExactRational x(BigInt(S.b1 * w.m * w.m), BigInt(w.e * w.e));
    const ExactRational y(BigInt(S.b1 * w.m * w.N), BigInt(w.e * w.e * w.e));
    RationalPoint P{x, y, false};
    if (!points::on_curve(E, P))
        throw std::logic_error("point_from_witness: recovered point is not on the curve");
    return P;
}

std::optional<Witness> witness_from_point(const HomogeneousSpace& S, const RationalPoint& P) {
    if (P.at_infinity || P.x.is_zero()) return std::nullopt;
    const ExactRational ratio = P.x / ExactRational(S.b1);
    if (ratio.sign() <= 0) return std::nullopt;
    auto root = ratio.sqrt();
    if (!root) return std::nullopt;
    const BigInt m = root->numerator(), e = root->denominator();
    // y = b1 m N / e^3.
    const ExactRational N = P.y * ExactRational(BigInt(e * e * e)) / ExactRational(BigInt(S.b1 * m));
    if (!N.is_integer()) return std::nullopt;
    return Witness{m, e, arith::abs(N.numerator())};
}

}  // namespace congruent::descent
