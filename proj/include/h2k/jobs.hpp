#pragma once

// CLI front-end logic, kept out of main() so it can be driven from tests.
// Verdicts are data in the output, never exit codes: 0 = success,
// 2 = input error (error name on stderr), 3 = internal invariant violation.

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "h2k/obstruction.hpp"

namespace h2k {

struct JobSpec {
    // exactly one input
    std::optional<std::string> pd;
    std::optional<std::array<long, 3>> pretzel;
    std::optional<std::string> matrix_json;
    bool unknot = false;

    // options
    std::optional<int> f0;
    std::optional<long> gamma;
    std::optional<long> gamma_star;
    std::optional<long> known_band_count;
    std::optional<long> max_bound;
    std::string format = "json";  // json | csv | text
    bool oracle = false;
};

struct ScanSpec {
    std::array<long, 2> p_range{}, q_range{}, r_range{};
    bool oracle = false;
};

// Builds the Goeritz matrix named by the spec's input variant.
GoeritzResult goeritz_from_job(const JobSpec& spec);

// analyze: full pipeline, report in the requested format.
void run_analyze(const JobSpec& spec, std::ostream& out);

// mq: just the certified table as JSON.
void run_mq(const JobSpec& spec, std::ostream& out);

// scan: one CSV row per triple in lexicographic order, invalid triples
// reported with a skip reason.
void run_scan(const ScanSpec& spec, std::ostream& out);

// Exception-to-exit-code mapping used by main().
int run_job_catching(const std::function<void()>& body, std::ostream& err);

}  // namespace h2k
