#pragma once

// Verification campaigns: pull instances from a source, run the selected
// checks on each, and collect everything into one report.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mopkit/generate.hpp"
#include "mopkit/mop.hpp"

namespace mopkit {

enum class Check
{
    Lemmas,
    Theorem1,
    Theorem2,
    KnownBounds,
    ExtremalValues,
};

std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);
/// Comma-separated names, or "all". Throws std::invalid_argument.
std::vector<Check> parse_checks(std::string_view list);

/// Where instances come from. Text form (see parse_source):
///   enumerate:<lo>-<hi>            every mop with lo <= n <= hi
///   random:<count>:<n>:<seed>      count samples of order n
///   family:<Name>=<p>[,<Name>=<p>...]  with <p> either a value or <a>..<b>
///   file:<path>                    a JSONL corpus
struct Source
{
    enum class Kind
    {
        Enumerate,
        Random,
        Families,
        File,
    };

    Kind kind = Kind::Enumerate;
    int lo = 0, hi = 0;  // Enumerate
    int count = 0, n = 0;  // Random
    std::uint64_t seed = 0;
    std::vector<FamilySpec> families;
    std::filesystem::path path;
};

Source parse_source(std::string_view text);
std::string describe(const Source& s);

/// Sample i of a random corpus uses seed + i, so `random` and `verify` agree.
std::vector<Mop> random_corpus(int n, int count, std::uint64_t seed);

struct CampaignConfig
{
    Source source;
    std::vector<Check> checks;
    bool exact = false;
    /// Exact solving is skipped above this order. Unset means 20 for random
    /// sources and no limit otherwise.
    std::optional<int> exact_max_n;
    /// Largest subset size the exact solvers try. Unset means floor(n/3) + 1.
    std::optional<int> size_cap;
    int threads = 0;  // 0: hardware concurrency, 1: single-threaded
};

struct InstanceReport
{
    std::string id;
    std::optional<FamilySpec> family;
    int n = 0;
    int n2 = 0;

    std::optional<int> iota1_exact;
    std::optional<int> iota0_exact;
    std::optional<int> gamma_exact;
    bool exact_attempted = false;

    std::optional<int> theorem1_size;
    std::optional<int> theorem2_size;
    std::optional<int> coloring_size;

    int bound_n_over_5 = 0;
    int bound_theorem2 = 0;
    bool theorem2_high = false;  // 3*n2 > n
    int bound_n_over_3 = 0;
    int bound_n_over_4 = 0;

    // Unset: the check was not selected or does not apply to this instance.
    std::vector<std::pair<Check, std::optional<bool>>> flags;
    std::vector<std::string> failures;
    double time_ms = 0;

    bool passed() const;
};

struct SourceError
{
    int line = 0;
    std::string message;
};

struct CampaignSummary
{
    int instances = 0;
    int passed = 0;
    int failed = 0;
    int source_errors = 0;
    std::vector<std::string> failing_ids;
    // Largest size/bound ratio seen (0 when nothing was measured).
    double worst_theorem1 = 0;
    double worst_theorem2 = 0;
    double worst_iota1_exact = 0;
    double elapsed_ms = 0;
};

struct BoundReport
{
    std::string source;
    std::vector<Check> checks;
    bool exact = false;
    std::vector<InstanceReport> instances;
    std::vector<SourceError> errors;
    CampaignSummary summary;

    bool all_passed() const { return summary.failed == 0 && summary.source_errors == 0; }
};

/// Runs one campaign. Throws std::runtime_error when a file source cannot be read;
/// malformed lines inside it are recorded and the campaign continues.
BoundReport verify_corpus(const CampaignConfig& cfg);

/// Runs the selected checks on a single instance.
InstanceReport check_instance(const Mop& m, std::string id, std::optional<FamilySpec> family,
                              const CampaignConfig& cfg);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const InstanceReport& report);

/// Drops every timing field so reports from identical configs compare equal.
nlohmann::json strip_timing(nlohmann::json report);

/// One-paragraph human summary.
std::string summary_text(const BoundReport& report);

}  // namespace mopkit
