#pragma once

// Command implementations.  Each command produces a JSON document (the
// canonical output) and an exit code; text and CSV are renderings of it.

#include "congruent_cli/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace congruent::cli {

class ResultCache;

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kUndecided = 2,
    kUnsupportedShape = 3,
    kInconsistent = 4,
};

enum class Format { Json, Csv, Text };

struct RunConfig {
    std::int64_t search_bound = 1000;
    std::int64_t lifted_bound = -1;  // -1: same as search_bound, 0: off
    std::optional<std::vector<arith::BigInt>> moduli_override;
    Format output_format = Format::Json;
    std::optional<std::string> cache_path;
    unsigned parallelism = 1;
};

// Throws std::invalid_argument when the configuration is unusable.
void validate(const RunConfig& config);

descent::EngineOptions engine_options(const RunConfig& config, unsigned jobs);

struct Report {
    std::string kind;  // "rank", "triangle", "survey", "forms", "descent"
    json body;
    int exit_code = kSuccess;
};

Report rank_report(const arith::BigInt& n, const RunConfig& config, ResultCache* cache = nullptr);
Report triangle_report(const arith::BigInt& n, const RunConfig& config);

struct SurveyRange {
    theory::Family family = theory::Family::P;
    arith::BigInt limit;               // n < limit
    std::optional<int> p_residue;      // p mod 8 filter
    std::string text;                  // the range as given
};

// Accepts "p<500", "2p<200", "pq<2000", "2pq<2000" and a residue filter
// such as "p≡1 mod 8, p<300" (an ASCII '=' may replace '≡').
SurveyRange parse_range(const std::string& text);
std::vector<arith::BigInt> survey_members(const SurveyRange& range);

Report survey_report(const SurveyRange& range, const RunConfig& config, ResultCache* cache = nullptr);
Report forms_report(std::int64_t max_value, std::int64_t bound);
Report descent_report(const arith::BigInt& b1, const arith::BigInt& a, const arith::BigInt& b2,
                      const RunConfig& config);

std::string render(const Report& report, Format format);

}  // namespace congruent::cli
