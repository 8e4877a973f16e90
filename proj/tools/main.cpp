// h2obstruct: obstructions to unknotting a knot with a single twisted-band
// move, from pretzel parameters, a PD-code diagram or a raw Goeritz matrix.
//
//   h2obstruct analyze --pretzel 13,4,11 --gamma 2 --format text
//   h2obstruct mq --matrix '[[17,-4],[-4,15]]'
//   h2obstruct scan --pretzel-range 1,9 1,9 1,9
//
// Exit codes: 0 success (verdicts are data, not exit codes), 2 bad input,
// 3 internal invariant violation.

#include <array>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h2k/jobs.hpp"

namespace {

std::array<long, 3> parse_triple(const std::string& s, const char* what) {
    std::array<long, 3> out{};
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        size_t next = s.find(',', pos);
        std::string tok = next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        if (tok.empty() || (i < 2) != (next != std::string::npos))
            throw h2k::InvalidArgument(std::string(what) + " must be three comma-separated integers");
        try {
            out[i] = std::stol(tok);
        } catch (const std::exception&) {
            throw h2k::InvalidArgument(std::string(what) + ": bad integer '" + tok + "'");
        }
        pos = next + 1;
    }
    return out;
}

std::array<long, 2> parse_range(const std::string& s, const char* what) {
    size_t comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw h2k::InvalidArgument(std::string(what) + " must be 'lo,hi'");
    try {
        return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw h2k::InvalidArgument(std::string(what) + ": bad integer in range '" + s + "'");
    }
}

void add_input_flags(CLI::App* cmd, h2k::JobSpec& spec, std::string& pretzel_arg,
                     bool matrix_only) {
    if (!matrix_only) {
        cmd->add_option("--pd", spec.pd, "PD code, terms X(a,b,c,d) separated by whitespace");
        cmd->add_option("--pretzel", pretzel_arg, "pretzel parameters p,q,r");
        cmd->add_flag("--unknot", spec.unknot, "analyze the unknot (empty Goeritz matrix)");
        cmd->add_option("--f0", spec.f0, "face index to use as the unbounded region (PD input)")
            ->check(CLI::NonNegativeNumber);
    }
    cmd->add_option("--matrix", spec.matrix_json, "Goeritz matrix as JSON rows");
    cmd->add_option("--max-bound", spec.max_bound,
                    "cap for the enumeration bound (error when exceeded)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--oracle", spec.oracle,
                  "cross-check the table against the naive scanner; loud failure on mismatch");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"obstructions to band-unknotting number one"};
    app.require_subcommand(1);

    h2k::JobSpec spec;
    std::string pretzel_arg;

    CLI::App* analyze = app.add_subcommand("analyze", "run the full obstruction pipeline");
    add_input_flags(analyze, spec, pretzel_arg, false);
    analyze->add_option("--gamma", spec.gamma, "crosscap number (upper bound input)")
        ->check(CLI::NonNegativeNumber);
    analyze->add_option("--gamma-star", spec.gamma_star,
                        "four-dimensional crosscap number (lower bound input)")
        ->check(CLI::NonNegativeNumber);
    analyze->add_option("--bands", spec.known_band_count,
                        "known number of band moves reaching the unknot (upper bound input)")
        ->check(CLI::NonNegativeNumber);
    analyze->add_option("--format", spec.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    CLI::App* mq = app.add_subcommand("mq", "print the certified per-class minima table");
    add_input_flags(mq, spec, pretzel_arg, false);

    h2k::ScanSpec scan_spec;
    std::vector<std::string> range_args;
    CLI::App* scan = app.add_subcommand("scan", "batch-scan a pretzel family, CSV output");
    scan->add_option("--pretzel-range", range_args, "three ranges lo,hi for p, q, r")
        ->expected(3);
    scan->add_flag("--oracle", scan_spec.oracle, "cross-check every table; loud failure on mismatch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "InvalidArgument: " << e.what() << '\n';
        return 2;
    }

    return h2k::run_job_catching(
        [&] {
            if (!pretzel_arg.empty()) spec.pretzel = parse_triple(pretzel_arg, "--pretzel");
            if (analyze->parsed()) {
                h2k::run_analyze(spec, std::cout);
            } else if (mq->parsed()) {
                h2k::run_mq(spec, std::cout);
            } else {
                if (range_args.size() != 3)
                    throw h2k::InvalidArgument("scan requires --pretzel-range lo,hi lo,hi lo,hi");
                scan_spec.p_range = parse_range(range_args[0], "p");
                scan_spec.q_range = parse_range(range_args[1], "q");
                scan_spec.r_range = parse_range(range_args[2], "r");
                h2k::run_scan(scan_spec, std::cout);
            }
        },
        std::cerr);
}
