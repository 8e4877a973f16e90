#include "h2k/jobs.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "h2k/serialize.hpp"

namespace h2k {

namespace {

int input_variant_count(const JobSpec& spec) {
    return int(spec.pd.has_value()) + int(spec.pretzel.has_value()) +
           int(spec.matrix_json.has_value()) + int(spec.unknot);
}

json job_input_echo(const JobSpec& spec) {
    json j = json::object();
    if (spec.pd) j["pd"] = *spec.pd;
    if (spec.pretzel) j["pretzel"] = {(*spec.pretzel)[0], (*spec.pretzel)[1], (*spec.pretzel)[2]};
    if (spec.matrix_json) {
        try {
            j["matrix"] = json::parse(*spec.matrix_json);
        } catch (const json::parse_error& e) {
            throw InvalidArgument(std::string("matrix JSON: ") + e.what());
        }
    }
    if (spec.unknot) j["unknot"] = true;
    if (spec.f0) j["f0"] = *spec.f0;
    return j;
}

json job_options_echo(const JobSpec& spec) {
    json j = json::object();
    if (spec.gamma) j["gamma"] = *spec.gamma;
    if (spec.gamma_star) j["gamma_star"] = *spec.gamma_star;
    if (spec.known_band_count) j["bands"] = *spec.known_band_count;
    if (spec.max_bound) j["max_bound"] = *spec.max_bound;
    j["format"] = spec.format;
    return j;
}

AnalyzeOptions analyze_options(const JobSpec& spec) {
    AnalyzeOptions opts;
    opts.gamma = spec.gamma;
    opts.gamma_star = spec.gamma_star;
    opts.known_band_count = spec.known_band_count;
    if (spec.max_bound) opts.max_bound = Integer(*spec.max_bound);
    return opts;
}

// --oracle: recompute the table minima with the naive scanner over a box
// covering the certified one and fail loudly on any disagreement.
void cross_check_table(const IntSymMatrix& q, const FiniteAbelianGroup& group,
                       const MQTable& table) {
    auto brute = mq_bruteforce(q, group, covering_radius(q, table));
    for (unsigned long i = 0; i < table.p; ++i) {
        if (!brute[i] || brute[i]->first != table.values[i] || brute[i]->second != table.witnesses[i])
            throw InternalError("oracle mismatch at class " + std::to_string(i));
    }
}

}  // namespace

GoeritzResult goeritz_from_job(const JobSpec& spec) {
    if (input_variant_count(spec) != 1)
        throw InvalidArgument("exactly one of --pd, --pretzel, --matrix, --unknot is required");
    return goeritz_from_input_json(job_input_echo(spec));
}

void run_analyze(const JobSpec& spec, std::ostream& out) {
    if (spec.format != "json" && spec.format != "csv" && spec.format != "text")
        throw InvalidArgument("unknown format '" + spec.format + "'");
    GoeritzResult g = goeritz_from_job(spec);
    ObstructionReport rep = analyze(g, analyze_options(spec));
    if (spec.oracle && rep.table) cross_check_table(g.Q, rep.group, *rep.table);

    if (spec.format == "json") {
        json echo = job_input_echo(spec);
        out << to_json(rep, job_options_echo(spec), &echo).dump(2) << '\n';
    } else if (spec.format == "csv") {
        out << report_csv(rep);
    } else {
        out << report_text(rep);
    }
}

void run_mq(const JobSpec& spec, std::ostream& out) {
    GoeritzResult g = goeritz_from_job(spec);
    FiniteAbelianGroup group = group_of(g.Q);
    std::optional<Integer> max_bound;
    if (spec.max_bound) max_bound = Integer(*spec.max_bound);
    MQTable table = mq_table(g.Q, group, max_bound);
    if (spec.oracle) cross_check_table(g.Q, group, table);
    out << to_json(table).dump(2) << '\n';
}

void run_scan(const ScanSpec& spec, std::ostream& out) {
    auto check_range = [](const std::array<long, 2>& r, const char* name) {
        if (r[0] < 1 || r[1] < r[0])
            throw InvalidArgument(std::string("malformed ") + name + " range [" +
                                  std::to_string(r[0]) + "," + std::to_string(r[1]) + "]");
    };
    check_range(spec.p_range, "p");
    check_range(spec.q_range, "q");
    check_range(spec.r_range, "r");

    out << "p,q,r,det,theorem,lickorish,lower,upper,skip_reason\n";
    for (long p = spec.p_range[0]; p <= spec.p_range[1]; ++p)
        for (long q = spec.q_range[0]; q <= spec.q_range[1]; ++q)
            for (long r = spec.r_range[0]; r <= spec.r_range[1]; ++r) {
                out << p << ',' << q << ',' << r << ',';
                try {
                    GoeritzResult g = goeritz_from_pretzel(p, q, r);
                    ObstructionReport rep = analyze(g);
                    if (spec.oracle && rep.table) cross_check_table(g.Q, rep.group, *rep.table);
                    out << verdict_csv_fields(rep) << ",\n";
                } catch (const InputError& e) {
                    out << ",,,,," << e.name() << '\n';
                }
            }
}

int run_job_catching(const std::function<void()>& body, std::ostream& err) {
    try {
        body();
        return 0;
    } catch (const InternalError& e) {
        err << e.what() << '\n';  // what() carries "Name: detail"
        return 3;
    } catch (const InputError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "InternalError: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace h2k
