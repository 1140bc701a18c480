#include "congruent_cli/cli.hpp"

#include "congruent_cli/cache.hpp"
#include "congruent_cli/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <memory>
#include <ostream>
#include <sstream>

namespace congruent::cli {

namespace {

arith::BigInt parse_integer(const std::string& text, const char* what) {
    arith::BigInt v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw std::invalid_argument(std::string(what) + " must be an integer, got '" + text + "'");
    return v;
}

std::vector<arith::BigInt> parse_moduli(const std::string& text) {
    std::vector<arith::BigInt> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_integer(item, "--moduli entry"));
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank bounds and exact ranks for congruent-number curves y^2 = x^3 - n^2 x"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig config;
    std::string format = "json";
    std::string moduli;
    std::string cache_path;
    if (const char* env = std::getenv(kCacheEnvVar)) cache_path = env;

    app.add_option("--bound", config.search_bound, "Plain search bound for m, e (default 1000)");
    app.add_option("--lifted-bound", config.lifted_bound,
                   "Parameter bound on two-covers of unresolved quartics (-1: same as --bound, 0: off)");
    app.add_option("--moduli", moduli, "Comma-separated moduli for the local sieve (default: exact local test)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache", cache_path, std::string("JSON-lines result cache (default: $") + kCacheEnvVar + ")");
    app.add_option("--jobs", config.parallelism, "Worker threads")->check(CLI::PositiveNumber);

    std::string n_text;
    auto* rank = app.add_subcommand("rank", "Theorem verdict, descent bounds and rank of E_n");
    rank->add_option("n", n_text, "Positive integer")->required();

    auto* triangle = app.add_subcommand("triangle", "Rational right triangle of area n, if one is found");
    triangle->add_option("n", n_text, "Positive integer")->required();

    std::string range_text;
    auto* survey = app.add_subcommand("survey", "Sweep a family and compare verdicts with descent");
    survey->add_option("range", range_text, "e.g. \"p<500\", \"2pq<2000\", \"p=1 mod 8, p<300\"")->required();

    std::int64_t max_value = 1000, form_range = 20;
    auto* forms = app.add_subcommand("forms", "Prime values of the quartic forms f1, f2, f3");
    forms->add_option("--max-value", max_value, "Largest value listed");
    forms->add_option("--range", form_range, "Bound on |x| and |y|");

    std::string b1_text, a_text, b2_text;
    auto* raw = app.add_subcommand("descent", "Decide one quartic N^2 = b1 m^4 + a m^2 e^2 + b2 e^4");
    raw->add_option("--b1", b1_text)->required();
    raw->add_option("--a", a_text)->required();
    raw->add_option("--b2", b2_text)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        config.output_format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
        if (!moduli.empty()) config.moduli_override = parse_moduli(moduli);
        if (!cache_path.empty()) config.cache_path = cache_path;
        validate(config);

        std::unique_ptr<ResultCache> cache;
        if (config.cache_path) cache = std::make_unique<ResultCache>(*config.cache_path);

        Report report;
        if (*rank) {
            report = rank_report(parse_integer(n_text, "n"), config, cache.get());
        } else if (*triangle) {
            report = triangle_report(parse_integer(n_text, "n"), config);
        } else if (*survey) {
            report = survey_report(parse_range(range_text), config, cache.get());
        } else if (*forms) {
            report = forms_report(max_value, form_range);
        } else {
            report = descent_report(parse_integer(b1_text, "--b1"), parse_integer(a_text, "--a"),
                                    parse_integer(b2_text, "--b2"), config);
        }
        out << render(report, config.output_format);
        if (report.exit_code == kInconsistent) err << "error: internal inconsistency, see the diagnostic in the report\n";
        return report.exit_code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInconsistent;
    }
}

}  // namespace congruent::cli
