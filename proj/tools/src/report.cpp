#include "congruent_cli/report.hpp"

#include "congruent_cli/cache.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace congruent::cli {

using arith::BigInt;

namespace {

json config_json(const RunConfig& config) {
    json moduli = "adaptive";
    if (config.moduli_override) {
        moduli = json::array();
        for (const auto& m : *config.moduli_override) moduli.push_back(to_json(m));
    }
    return json{{"bound", config.search_bound},
                {"lifted_bound", config.lifted_bound < 0 ? config.search_bound : config.lifted_bound},
                {"moduli", moduli}};
}

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

std::string agreement_of(const std::optional<unsigned>& claimed, unsigned lower, unsigned upper) {
    if (!claimed) return "no-verdict";
    if (*claimed < lower || *claimed > upper) return "violation";
    return lower == upper ? "agree" : "bracketed";
}

json compute_rank(const BigInt& n, const RunConfig& config, unsigned jobs) {
    json body;
    body["command"] = "rank";
    body["n"] = to_json(n);
    body["engine_version"] = descent::kEngineVersion;
    body["config"] = config_json(config);

    const auto cls = theory::classify(n);
    body["classification"] = cls ? to_json(*cls) : json(nullptr);
    body["supported_shape"] = cls.has_value();
    json warnings = json::array();
    if (!cls) warnings.push_back("n is not of the form p, 2p, pq or 2pq; reporting the raw descent only");

    std::optional<unsigned> claimed;
    std::string claimed_source;
    if (cls) {
        const auto verdict = theory::theorem_rank(*cls);
        body["theorem"] = to_json(verdict);
        if (verdict.rank) {
            claimed = verdict.rank;
            claimed_source = "theorem";
        }
        if (verdict.condition && *verdict.condition == theory::kRank2Criterion) {
            const auto r2 = theory::rank2_criterion(cls->p, config.search_bound);
            body["rank2_criterion"] = to_json(r2);
            if (r2.verdict.rank) {
                claimed = r2.verdict.rank;
                claimed_source = "rank2-criterion";
            }
        } else {
            body["rank2_criterion"] = nullptr;
        }
    } else {
        body["theorem"] = nullptr;
        body["rank2_criterion"] = nullptr;
    }

    const Curve E = congruent_curve(n);
    const Curve Ebar = descent::isogenous_curve(E);
    const auto options = engine_options(config, jobs);
    const auto image = descent::compute_image(E, options);
    const auto image_bar = descent::compute_image(Ebar, options);
    const auto bounds = descent::rank_bounds(image, image_bar);
    body["descent"] = json{{"image", to_json(image)}, {"isogenous_image", to_json(image_bar)},
                           {"bounds", to_json(bounds)}};

    const std::string agreement = agreement_of(claimed, bounds.lower, bounds.upper);
    json rank;
    if (agreement == "violation") {
        rank = json{{"value", nullptr}, {"source", nullptr}, {"descent_incomplete", bounds.lower != bounds.upper},
                    {"congruent", nullptr}};
        warnings.push_back("the " + claimed_source + " rank " + std::to_string(*claimed) +
                           " lies outside the descent bounds");
    } else if (bounds.lower == bounds.upper) {
        rank = json{{"value", bounds.lower}, {"source", "descent"}, {"descent_incomplete", false},
                    {"congruent", bounds.lower > 0}};
    } else if (claimed) {
        rank = json{{"value", *claimed}, {"source", claimed_source}, {"descent_incomplete", true},
                    {"congruent", *claimed > 0}};
    } else {
        // A proven point of infinite order already settles congruence.
        rank = json{{"value", nullptr}, {"source", nullptr}, {"descent_incomplete", true},
                    {"congruent", bounds.lower > 0 ? json(true) : json(nullptr)}};
    }
    rank["conclusion"] = rank["congruent"].is_null() ? "undetermined"
                         : rank["congruent"].get<bool>() ? "congruent" : "not congruent";
    body["rank"] = rank;
    body["agreement"] = agreement;
    body["warnings"] = warnings;
    std::string status = agreement == "violation" ? "inconsistent" : rank["value"].is_null() ? "undecided" : "decided";
    body["status"] = status;
    return body;
}

int rank_exit_code(const json& body) {
    const std::string status = body["status"];
    if (status == "inconsistent") return kInconsistent;
    if (!body["supported_shape"].get<bool>()) return kUnsupportedShape;
    return status == "decided" ? kSuccess : kUndecided;
}

json rank_key(const BigInt& n, const RunConfig& config) {
    json key = config_json(config);
    key["command"] = "rank";
    key["n"] = to_json(n);
    key["engine_version"] = descent::kEngineVersion;
    return key;
}

json rank_with_cache(const BigInt& n, const RunConfig& config, ResultCache* cache, unsigned jobs) {
    if (cache) {
        const json key = rank_key(n, config);
        if (auto hit = cache->lookup(key)) return *hit;
        json body = compute_rank(n, config, jobs);
        if (body["status"] != "inconsistent") cache->store(key, body);
        return body;
    }
    return compute_rank(n, config, jobs);
}

}  // namespace

void validate(const RunConfig& config) {
    if (config.search_bound < 1) throw std::invalid_argument("--bound must be at least 1");
    if (config.lifted_bound < -1) throw std::invalid_argument("--lifted-bound must be -1, 0 or positive");
    if (config.parallelism < 1) throw std::invalid_argument("--jobs must be at least 1");
    if (config.moduli_override) {
        if (config.moduli_override->empty()) throw std::invalid_argument("--moduli needs at least one modulus");
        for (const auto& m : *config.moduli_override)
            if (m < 2) throw std::invalid_argument("--moduli entries must be at least 2");
    }
}

descent::EngineOptions engine_options(const RunConfig& config, unsigned jobs) {
    descent::EngineOptions o;
    o.bound = config.search_bound;
    o.lifted_bound = config.lifted_bound;
    o.jobs = std::max(1u, jobs);
    if (config.moduli_override) o.moduli = descent::ModuliPolicy::explicit_list(*config.moduli_override);
    return o;
}

Report rank_report(const BigInt& n, const RunConfig& config, ResultCache* cache) {
    validate(config);
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    Report r;
    r.kind = "rank";
    try {
        r.body = rank_with_cache(n, config, cache, config.parallelism);
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
        r.body = json{{"command", "rank"}, {"n", to_json(n)}, {"status", "inconsistent"}, {"error", e.what()}};
        r.exit_code = kInconsistent;
        return r;
    }
    r.exit_code = rank_exit_code(r.body);
    return r;
}

Report triangle_report(const BigInt& n, const RunConfig& config) {
    validate(config);
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    Report r;
    r.kind = "triangle";
    r.body["command"] = "triangle";
    r.body["n"] = to_json(n);
    r.body["config"] = config_json(config);
    const Curve E = congruent_curve(n);

    std::optional<points::RationalPoint> found;
    std::string source;
    // Small points first: they give the simplest triangles.
    const std::int64_t point_bound = std::min<std::int64_t>(config.search_bound, 60);
    for (const auto& P : points::point_search(E, point_bound)) {
        if (!P.at_infinity && !P.y.is_zero()) {
            found = P;
            source = "point_search";
            break;
        }
    }
    if (!found) {
        const auto options = engine_options(config, config.parallelism);
        const auto image = descent::compute_image(E, options);
        for (const auto& c : image.classes) {
            const auto* p = std::get_if<descent::ProvenSolvable>(&c.status);
            if (p && p->witness && p->witness->N != 0) {
                found = descent::point_from_witness(E, c.space, *p->witness);
                source = "descent_witness";
                break;
            }
        }
        if (!found) {
            const Curve Ebar = descent::isogenous_curve(E);
            const auto image_bar = descent::compute_image(Ebar, options);
            for (const auto& c : image_bar.classes) {
                const auto* p = std::get_if<descent::ProvenSolvable>(&c.status);
                if (p && p->witness && p->witness->N != 0) {
                    auto Q = points::isogeny_back(E, descent::point_from_witness(Ebar, c.space, *p->witness));
                    if (!Q.at_infinity && !Q.y.is_zero()) {
                        found = Q;
                        source = "isogenous_witness";
                        break;
                    }
                }
            }
        }
    }
    if (!found) {
        r.body["found"] = false;
        r.body["point"] = nullptr;
        r.body["triangle"] = nullptr;
        r.exit_code = kUndecided;
        return r;
    }
    if (!points::on_curve(E, *found)) throw std::logic_error("triangle: point is not on the curve");
    const auto t = points::triangle_from_point(n, *found);
    r.body["found"] = true;
    r.body["source"] = source;
    r.body["point"] = to_json(*found);
    json tri = to_json(t);
    tri["area"] = to_json(n);
    r.body["triangle"] = tri;
    return r;
}

SurveyRange parse_range(const std::string& text) {
    // Optional "p≡r mod 8," prefix, then "<family><limit".
    static const std::regex pattern(
        R"(^\s*(?:p\s*(?:≡|=|==)\s*([0-7])\s*(?:\(\s*mod\s*8\s*\)|mod\s*8)\s*,\s*)?(2pq|pq|2p|p)\s*<\s*([0-9]+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("unrecognised survey range '" + text + "'");
    SurveyRange r;
    r.text = text;
    if (m[1].matched) r.p_residue = std::stoi(m[1].str());
    const std::string fam = m[2].str();
    r.family = fam == "p" ? theory::Family::P : fam == "2p" ? theory::Family::TwoP : fam == "pq" ? theory::Family::PQ
                                                                                                : theory::Family::TwoPQ;
    r.limit = BigInt(m[3].str());
    if (r.limit > 10'000'000) throw std::invalid_argument("survey limit too large (max 10^7)");
    return r;
}

std::vector<BigInt> survey_members(const SurveyRange& range) {
    const long limit = range.limit.get_si();
    const bool twice = range.family == theory::Family::TwoP || range.family == theory::Family::TwoPQ;
    const bool two_primes = range.family == theory::Family::PQ || range.family == theory::Family::TwoPQ;
    const long factor = twice ? 2 : 1;
    // Largest prime that can occur: the other factor is at least 3 for two primes.
    const long prime_cap = (limit - 1) / factor / (two_primes ? 3 : 1);
    std::vector<long> primes;
    for (long p = 2; p <= prime_cap; ++p)
        if (arith::is_prime(static_cast<std::uint64_t>(p))) primes.push_back(p);

    auto residue_ok = [&](long p, long q) {
        if (!range.p_residue) return true;
        return p % 8 == *range.p_residue || (q > 0 && q % 8 == *range.p_residue);
    };
    std::vector<BigInt> out;
    if (!two_primes) {
        // The plain family keeps p = 2 as a row (reported through the raw descent).
        for (long p : primes)
            if ((p != 2 || !twice) && factor * p < limit && residue_ok(p, 0)) out.emplace_back(factor * p);
    } else {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const long p = primes[i];
            if (p == 2) continue;
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                const long q = primes[j];
                if (factor * p * q >= limit) break;
                if (residue_ok(p, q)) out.emplace_back(factor * p * q);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Report survey_report(const SurveyRange& range, const RunConfig& config, ResultCache* cache) {
    validate(config);
    const auto members = survey_members(range);
    std::vector<json> bodies(members.size());
    std::vector<std::string> errors(members.size());
    parallel_for(members.size(), config.parallelism, [&](std::size_t i) {
        try {
            bodies[i] = rank_with_cache(members[i], config, cache, 1);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });

    Report r;
    r.kind = "survey";
    json rows = json::array();
    std::map<std::string, int> counts{{"agree", 0}, {"bracketed", 0}, {"no-verdict", 0}, {"violation", 0}};
    int decided = 0, rank2 = 0;
    json diagnostic = nullptr;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!errors[i].empty()) {
            diagnostic = json{{"n", to_json(members[i])}, {"error", errors[i]}};
            counts["violation"]++;
            break;
        }
        const json& b = bodies[i];
        const json none = nullptr;
        const json& c = b["classification"].is_null() ? none : b["classification"];
        auto field = [](const json& obj, const char* key) {
            return obj.is_object() && obj.contains(key) ? obj[key] : json(nullptr);
        };
        json row;
        row["n"] = b["n"];
        for (const char* key : {"family", "p", "q", "p_mod8", "q_mod8", "legendre_pq"}) row[key] = field(c, key);
        row["theorem_rank"] = field(b["theorem"], "rank");
        row["theorem_condition"] = field(b["theorem"], "condition");
        row["anchor"] = field(b["theorem"], "anchor");
        row["rank2_detected"] = b["rank2_criterion"].is_null()
                                    ? json(nullptr)
                                    : json(!b["rank2_criterion"]["verdict"]["rank"].is_null());
        row["lower"] = b["descent"]["bounds"]["lower"];
        row["upper"] = b["descent"]["bounds"]["upper"];
        row["rank"] = b["rank"]["value"];
        row["rank_source"] = b["rank"]["source"];
        row["agreement"] = b["agreement"];
        rows.push_back(row);
        counts[b["agreement"].get<std::string>()]++;
        if (!b["rank"]["value"].is_null()) ++decided;
        if (row["rank2_detected"] == true) ++rank2;
        if (b["agreement"] == "violation") {
            diagnostic = b;
            break;
        }
    }
    r.body["command"] = "survey";
    r.body["range"] = range.text;
    r.body["engine_version"] = descent::kEngineVersion;
    r.body["config"] = config_json(config);
    r.body["rows"] = rows;
    r.body["summary"] = json{{"rows", rows.size()},
                             {"agree", counts["agree"]},
                             {"bracketed", counts["bracketed"]},
                             {"no_verdict", counts["no-verdict"]},
                             {"decided", decided},
                             {"undecided", static_cast<int>(rows.size()) - decided},
                             {"rank2_detections", rank2},
                             {"violations", counts["violation"]}};
    if (!diagnostic.is_null()) {
        r.body["aborted"] = true;
        r.body["diagnostic"] = diagnostic;
        r.exit_code = kInconsistent;
    } else {
        r.body["aborted"] = false;
        r.exit_code = decided == static_cast<int>(rows.size()) ? kSuccess : kUndecided;
    }
    return r;
}

Report forms_report(std::int64_t max_value, std::int64_t bound) {
    if (max_value < 2) throw std::invalid_argument("--max-value must be at least 2");
    if (bound < 1 || bound > 10000) throw std::invalid_argument("--range must be between 1 and 10000");
    struct Hit {
        BigInt value;
        int form;
        std::int64_t x, y;
    };
    std::map<std::pair<long, int>, Hit> first;  // (value, form) -> smallest representation
    const BigInt limit(max_value);
    for (std::int64_t x = -bound; x <= bound; ++x) {
        for (std::int64_t y = -bound; y <= bound; ++y) {
            if ((y & 1) == 0 || std::gcd(x, y) != 1) continue;
            const BigInt X(x), Y(y);
            const BigInt vals[3] = {theory::f1(X, Y), theory::f2(X, Y), theory::f3(X, Y)};
            for (int f = 0; f < 3; ++f) {
                const BigInt& v = vals[f];
                if (v < 2 || v > limit || !arith::is_prime(v)) continue;
                auto key = std::make_pair(v.get_si(), f + 1);
                auto it = first.find(key);
                auto better = [&](const Hit& h) {
                    auto size = [](std::int64_t a, std::int64_t b) { return std::max(std::abs(a), std::abs(b)); };
                    // Smallest max(|x|, |y|), then prefer nonnegative coordinates.
                    auto rank = [&](std::int64_t a, std::int64_t b) {
                        return std::make_tuple(size(a, b), a < 0, b < 0, std::abs(a), std::abs(b));
                    };
                    return rank(x, y) < rank(h.x, h.y);
                };
                if (it == first.end() || better(it->second)) first[key] = Hit{v, f + 1, x, y};
            }
        }
    }
    json rows = json::array();
    for (const auto& [key, h] : first)
        rows.push_back(json{{"value", to_json(h.value)}, {"form", "f" + std::to_string(h.form)}, {"x", h.x}, {"y", h.y}});
    Report r;
    r.kind = "forms";
    r.body = json{{"command", "forms"}, {"max_value", max_value}, {"range", bound}, {"rows", rows}};
    return r;
}

Report descent_report(const BigInt& b1, const BigInt& a, const BigInt& b2, const RunConfig& config) {
    validate(config);
    if (b1 == 0 || b2 == 0) throw std::invalid_argument("b1 and b2 must be nonzero");
    const Curve E(a, BigInt(b1 * b2));
    const descent::HomogeneousSpace S{b1, a, b2};
    const auto status = descent::decide_space(E, S, engine_options(config, 1));
    Report r;
    r.kind = "descent";
    r.body["command"] = "descent";
    r.body["engine_version"] = descent::kEngineVersion;
    r.body["config"] = config_json(config);
    r.body["curve"] = to_json(E);
    r.body["space"] = to_json(S);
    r.body["result"] = to_json(status);
    if (const auto* p = std::get_if<descent::ProvenSolvable>(&status); p && p->witness)
        r.body["point"] = to_json(descent::point_from_witness(E, S, *p->witness));
    r.exit_code = std::holds_alternative<descent::Undecided>(status) ? kUndecided : kSuccess;
    return r;
}

namespace {

std::string str(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_cell(const json& v) {
    std::string s = v.is_null() ? "" : str(v);
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

std::string csv_table(const json& rows, const std::vector<std::string>& columns) {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << (i ? "," : "") << csv_cell(row.contains(columns[i]) ? row[columns[i]] : json(nullptr));
        os << '\n';
    }
    return os.str();
}

json class_rows(const json& image, const std::string& side) {
    json rows = json::array();
    for (const auto& c : image["classes"]) {
        json row{{"side", side}, {"class", c["class"]}, {"status", c["status"]}};
        row["source"] = c.contains("source") ? c["source"] : json(nullptr);
        row["m"] = c.contains("witness") ? c["witness"]["m"] : json(nullptr);
        row["e"] = c.contains("witness") ? c["witness"]["e"] : json(nullptr);
        row["N"] = c.contains("witness") ? c["witness"]["N"] : json(nullptr);
        row["modulus"] = c.contains("modulus") ? c["modulus"] : json(nullptr);
        rows.push_back(row);
    }
    return rows;
}

const std::vector<std::string> kSurveyColumns = {"n",      "family",      "p",     "q",     "p_mod8",
                                                 "q_mod8", "legendre_pq", "theorem_rank", "theorem_condition",
                                                 "rank2_detected", "lower", "upper", "rank", "rank_source",
                                                 "agreement"};
const std::vector<std::string> kClassColumns = {"side", "class", "status", "source", "m", "e", "N", "modulus"};

std::string render_csv(const Report& r) {
    const json& b = r.body;
    if (r.kind == "survey") return csv_table(b["rows"], kSurveyColumns);
    if (r.kind == "forms") return csv_table(b["rows"], {"value", "form", "x", "y"});
    if (r.kind == "rank" && b.contains("descent")) {
        json rows = class_rows(b["descent"]["image"], "image");
        for (const auto& row : class_rows(b["descent"]["isogenous_image"], "isogenous_image")) rows.push_back(row);
        return csv_table(rows, kClassColumns);
    }
    if (r.kind == "triangle") {
        json row{{"n", b["n"]}, {"found", b["found"]}};
        if (b["found"] == true) {
            row["leg_a"] = b["triangle"]["leg_a"];
            row["leg_b"] = b["triangle"]["leg_b"];
            row["hyp"] = b["triangle"]["hyp"];
        }
        return csv_table(json::array({row}), {"n", "found", "leg_a", "leg_b", "hyp"});
    }
    if (r.kind == "descent") {
        json row{{"b1", b["space"]["b1"]}, {"a", b["space"]["a"]}, {"b2", b["space"]["b2"]},
                 {"status", b["result"]["status"]}};
        row["m"] = b["result"].contains("witness") ? b["result"]["witness"]["m"] : json(nullptr);
        row["e"] = b["result"].contains("witness") ? b["result"]["witness"]["e"] : json(nullptr);
        row["N"] = b["result"].contains("witness") ? b["result"]["witness"]["N"] : json(nullptr);
        row["modulus"] = b["result"].contains("modulus") ? b["result"]["modulus"] : json(nullptr);
        return csv_table(json::array({row}), {"b1", "a", "b2", "status", "m", "e", "N", "modulus"});
    }
    return csv_table(json::array({b}), {"command", "status"});
}

void text_image(std::ostringstream& os, const std::string& title, const json& image) {
    os << title << " y^2 = x^3 + (" << str(image["curve"]["a"]) << ")x^2 + (" << str(image["curve"]["b"]) << ")x\n";
    for (const auto& c : image["classes"]) {
        os << "  class " << str(c["class"]) << ": " << str(c["status"]);
        if (c.contains("source")) os << " (" << str(c["source"]) << ")";
        if (c.contains("witness"))
            os << " m=" << str(c["witness"]["m"]) << " e=" << str(c["witness"]["e"]) << " N=" << str(c["witness"]["N"]);
        if (c.contains("modulus")) os << " modulo " << str(c["modulus"]);
        os << '\n';
    }
}

std::string render_text(const Report& r) {
    const json& b = r.body;
    std::ostringstream os;
    if (r.kind == "rank") {
        os << "n = " << str(b["n"]);
        if (b.contains("classification") && !b["classification"].is_null())
            os << "  (" << str(b["classification"]["family"]) << ")";
        os << '\n';
        if (b.contains("error")) {
            os << "internal inconsistency: " << str(b["error"]) << '\n';
            return os.str();
        }
        if (!b["theorem"].is_null())
            os << "theorem: " << str(b["theorem"]["citation"]) << '\n';
        if (!b["rank2_criterion"].is_null())
            os << "rank-2 criterion: " << str(b["rank2_criterion"]["verdict"]["citation"]) << '\n';
        text_image(os, "image on", b["descent"]["image"]);
        text_image(os, "image on", b["descent"]["isogenous_image"]);
        os << "descent bounds: " << str(b["descent"]["bounds"]["lower"]) << " <= r <= "
           << str(b["descent"]["bounds"]["upper"]) << '\n';
        os << "rank: " << str(b["rank"]["value"]);
        if (!b["rank"]["source"].is_null()) os << " (" << str(b["rank"]["source"]) << ")";
        if (b["rank"]["descent_incomplete"] == true) os << " [descent-incomplete]";
        os << "\n" << str(b["n"]) << " is " << str(b["rank"]["conclusion"]) << "\nagreement: " << str(b["agreement"]) << '\n';
        for (const auto& w : b["warnings"]) os << "warning: " << str(w) << '\n';
    } else if (r.kind == "triangle") {
        if (b["found"] == true)
            os << "n = " << str(b["n"]) << ": legs " << str(b["triangle"]["leg_a"]) << ", "
               << str(b["triangle"]["leg_b"]) << ", hypotenuse " << str(b["triangle"]["hyp"]) << " (from point "
               << str(b["point"]["x"]) << ", " << str(b["point"]["y"]) << ")\n";
        else
            os << "n = " << str(b["n"]) << ": no point of infinite order found at bound "
               << str(b["config"]["bound"]) << '\n';
    } else if (r.kind == "survey") {
        os << "survey " << str(b["range"]) << '\n';
        os << "n\tfamily\ttheorem\tlower\tupper\trank\tagreement\n";
        for (const auto& row : b["rows"])
            os << str(row["n"]) << '\t' << str(row["family"]) << '\t' << str(row["theorem_rank"]) << '\t'
               << str(row["lower"]) << '\t' << str(row["upper"]) << '\t' << str(row["rank"]) << '\t'
               << str(row["agreement"]) << '\n';
        const json& s = b["summary"];
        os << "rows " << str(s["rows"]) << ", agree " << str(s["agree"]) << ", bracketed " << str(s["bracketed"])
           << ", no verdict " << str(s["no_verdict"]) << ", undecided " << str(s["undecided"])
           << ", rank-2 detections " << str(s["rank2_detections"]) << ", violations " << str(s["violations"]) << '\n';
    } else if (r.kind == "forms") {
        for (const auto& row : b["rows"])
            os << str(row["value"]) << " = " << str(row["form"]) << "(" << str(row["x"]) << ", " << str(row["y"])
               << ")\n";
    } else if (r.kind == "descent") {
        os << "space N^2 = " << str(b["space"]["b1"]) << " m^4 + " << str(b["space"]["a"]) << " m^2 e^2 + "
           << str(b["space"]["b2"]) << " e^4: " << str(b["result"]["status"]);
        if (b["result"].contains("witness"))
            os << " (m, e, N) = (" << str(b["result"]["witness"]["m"]) << ", " << str(b["result"]["witness"]["e"])
               << ", " << str(b["result"]["witness"]["N"]) << ")";
        if (b["result"].contains("modulus")) os << " modulo " << str(b["result"]["modulus"]);
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
    switch (format) {
        case Format::Json: return report.body.dump(2) + "\n";
        case Format::Csv: return render_csv(report);
        case Format::Text: return render_text(report);
    }
    return {};
}

}  // namespace congruent::cli
