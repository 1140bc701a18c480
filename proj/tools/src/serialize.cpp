#include "congruent_cli/serialize.hpp"

namespace congruent::cli {

json to_json(const arith::BigInt& v) { return v.get_str(); }

json to_json(const arith::ExactRational& q) { return q.to_string(); }

json to_json(const Curve& E) { return json{{"a", to_json(E.a)}, {"b", to_json(E.b)}}; }

json to_json(const points::RationalPoint& P) {
    if (P.at_infinity) return json{{"infinity", true}};
    return json{{"x", to_json(P.x)}, {"y", to_json(P.y)}};
}

json to_json(const points::RightTriangle& t) {
    return json{{"leg_a", to_json(t.leg_a)}, {"leg_b", to_json(t.leg_b)}, {"hyp", to_json(t.hyp)}};
}

json to_json(const descent::HomogeneousSpace& S) {
    return json{{"b1", to_json(S.b1)}, {"a", to_json(S.a)}, {"b2", to_json(S.b2)}};
}

json to_json(const descent::Witness& w) {
    return json{{"m", to_json(w.m)}, {"e", to_json(w.e)}, {"N", to_json(w.N)}};
}

json to_json(const descent::SolvabilityStatus& s) {
    json j;
    j["status"] = descent::status_kind(s);
    if (const auto* p = std::get_if<descent::ProvenSolvable>(&s)) {
        j["source"] = descent::source_name(p->source);
        if (p->witness) j["witness"] = to_json(*p->witness);
        if (!p->factors.empty()) {
            json f = json::array();
            for (const auto& c : p->factors) f.push_back(to_json(c.d));
            j["factors"] = f;
        }
    } else if (const auto* o = std::get_if<descent::LocallyObstructed>(&s)) {
        j["modulus"] = to_json(o->modulus);
        j["certificate"] = json{{"prime", to_json(o->certificate.prime)},
                                {"exponent", o->certificate.exponent},
                                {"method", o->certificate.method},
                                {"residue_classes", o->certificate.residue_classes}};
    } else {
        j["search_bound"] = std::get<descent::Undecided>(s).search_bound;
    }
    return j;
}

json to_json(const descent::DescentImage& image, bool with_points) {
    json classes = json::array();
    for (const auto& c : image.classes) {
        json j;
        j["class"] = to_json(c.cls.d);
        j["space"] = to_json(c.space);
        const json status = to_json(c.status);
        for (auto it = status.begin(); it != status.end(); ++it) j[it.key()] = it.value();
        if (with_points)
            if (const auto* p = std::get_if<descent::ProvenSolvable>(&c.status); p && p->witness)
                j["point"] = to_json(descent::point_from_witness(image.curve, c.space, *p->witness));
        classes.push_back(j);
    }
    return json{{"curve", to_json(image.curve)},
                {"classes", classes},
                {"proven", image.proven_count()},
                {"not_obstructed", image.not_obstructed_count()}};
}

json to_json(const descent::RankBounds& b) {
    return json{{"lower", b.lower}, {"upper", b.upper}, {"provenance", b.provenance}};
}

json to_json(const theory::CongruentCase& c) {
    json j;
    j["family"] = theory::family_name(c.family);
    j["p"] = to_json(c.p);
    j["q"] = c.q ? to_json(*c.q) : json(nullptr);
    j["p_mod8"] = c.p_mod8;
    j["q_mod8"] = c.q_mod8 ? json(*c.q_mod8) : json(nullptr);
    j["legendre_pq"] = c.legendre_pq ? json(*c.legendre_pq) : json(nullptr);
    return j;
}

json to_json(const theory::TheoremVerdict& v) {
    json j;
    j["rank"] = v.rank ? json(*v.rank) : json(nullptr);
    j["congruent"] = v.congruent ? json(*v.congruent) : json(nullptr);
    j["condition"] = v.condition ? json(*v.condition) : json(nullptr);
    j["anchor"] = v.anchor;
    j["citation"] = v.citation;
    return j;
}

json to_json(const theory::PythWitness& w) {
    json j;
    j["kind"] = theory::pyth_kind_name(w.kind);
    j["a"] = to_json(w.a);
    j["b"] = to_json(w.b);
    j["c"] = to_json(w.c);
    j["auxiliary_square_root"] = to_json(w.auxiliary_square_root);
    if (w.kind == theory::PythKind::Beta) {
        j["x"] = to_json(w.x);
        j["y"] = to_json(w.y);
        j["form"] = w.form == 1 ? "f1" : "f2";
    }
    return j;
}

json to_json(const theory::Rank2Result& r) {
    return json{{"verdict", to_json(r.verdict)},
                {"alpha", r.alpha ? to_json(*r.alpha) : json(nullptr)},
                {"beta", r.beta ? to_json(*r.beta) : json(nullptr)},
                {"alpha_c1_passed", r.alpha_c1_passed}};
}

}  // namespace congruent::cli
