#ifndef REFLINV_REPORT_HPP
#define REFLINV_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reflinv/matrix_group.hpp"

namespace reflinv {

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kDefaultSeed = 20240521;

std::string tool_version();

enum class Command { Info, Molien, Invariants, Harmonics, Eigenspace, VerifyAll };

std::string command_name(Command c);

struct ReportOptions {
    std::string source;               // how the group was specified, echoed in the report
    std::vector<std::string> weights; // weight texts; a seeded generic weight is used when empty
    std::optional<unsigned> max_degree;
    unsigned precision = 128;
    std::uint64_t seed = kDefaultSeed;
    bool timings = false;
    std::size_t equivariance_trials = 20;
};

// Status strings used for the per-result keys.
inline constexpr const char *kPass = "pass";
inline constexpr const char *kFail = "fail";
inline constexpr const char *kNotRun = "not-run";
inline constexpr const char *kNonGeneric = "non-generic: theorem out of scope";

struct Report {
    std::string json; // pretty-printed, trailing newline
    std::string text; // human-readable rendering of the same content
    bool passed = true;
    std::vector<std::string> failing_keys;
};

// Runs the stages needed by `command` and assembles the report. Weight texts
// are parsed first; a ParseError or InvalidArgument there propagates.
Report run_report(Command command, const ReflectionGroup &g, const ReportOptions &options);

} // namespace reflinv

#endif
