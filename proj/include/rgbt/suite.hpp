#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rgbt {

enum class CheckStatus : std::uint8_t { pass, fail, skip };

std::string check_status_name(CheckStatus s);

/// First failing instance of a check, as graph and tiling file texts.
struct Counterexample {
    std::string graph;
    std::string tiling;
    std::string note;
};

struct CheckResult {
    int criterion = 0;
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::map<std::string, long long> counts;
    double seconds = 0;
    double budget = 0;                  // seconds
    std::string detail;
    std::optional<Counterexample> counterexample;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool ok() const;
};

struct SuiteOptions {
    int max_vertices = 20;              // corpus graphs above this are skipped
    std::uint64_t seed = 0;
};

/// core, canal, kempe, atlas or all. Throws InputError for other names.
std::vector<int> suite_criteria(const std::string& name);

/// Runs one acceptance criterion, 1..10. A check over budget fails.
CheckResult run_check(int criterion, const SuiteOptions& opt = {});
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

} // namespace rgbt
