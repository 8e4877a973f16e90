#include "h2k/serialize.hpp"

#include <sstream>

namespace h2k {

json to_json(const Integer& n) {
    if (!n.fits_slong_p())
        throw InternalError("integer " + n.get_str() + " too large for JSON output");
    return json(n.get_si());
}

json to_json(const IntVector& v) {
    json a = json::array();
    for (const Integer& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const IntSymMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const MQTable& t) {
    json j;
    j["p"] = t.p;
    j["generator"] = to_json(t.generator);
    json values = json::array();
    for (const Rational& v : t.values) values.push_back(to_string(v));
    j["values"] = values;
    json witnesses = json::array();
    for (const IntVector& w : t.witnesses) witnesses.push_back(to_json(w));
    j["witnesses"] = witnesses;
    j["certified_radius"] = to_string(t.certified_radius);
    return j;
}

IntSymMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw InvalidArgument("matrix JSON must be an array of arrays");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw InvalidArgument("matrix JSON must be an array of arrays");
        std::vector<Integer> row;
        for (const auto& x : r) {
            if (!x.is_number_integer()) throw InvalidArgument("matrix entries must be integers");
            row.emplace_back(static_cast<long>(x.get<long long>()));
        }
        rows.push_back(std::move(row));
    }
    return IntSymMatrix(rows);
}

GoeritzResult goeritz_from_input_json(const json& j) {
    if (!j.is_object()) throw InvalidArgument("input must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "pd" && key != "pretzel" && key != "matrix" && key != "unknot" && key != "f0")
            throw InvalidArgument("unknown input key '" + key + "'");
    }
    int variants = int(j.contains("pd")) + int(j.contains("pretzel")) + int(j.contains("matrix")) +
                   int(j.contains("unknot"));
    if (variants != 1)
        throw InvalidArgument("input requires exactly one of pd, pretzel, matrix, unknot");

    std::optional<int> f0;
    if (j.contains("f0")) {
        if (!j.contains("pd")) throw InvalidArgument("f0 applies only to pd input");
        if (!j["f0"].is_number_integer()) throw InvalidArgument("f0 must be an integer");
        f0 = j["f0"].get<int>();
    }
    if (j.contains("pd")) {
        if (!j["pd"].is_string()) throw InvalidArgument("pd must be a string");
        return goeritz_from_pd(parse_pd(j["pd"].get<std::string>()), f0);
    }
    if (j.contains("pretzel")) {
        const json& t = j["pretzel"];
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
            !t[1].is_number_integer() || !t[2].is_number_integer())
            throw InvalidArgument("pretzel must be an array of three integers");
        return goeritz_from_pretzel(t[0].get<long>(), t[1].get<long>(), t[2].get<long>());
    }
    if (j.contains("matrix")) return goeritz_from_matrix(matrix_from_json(j["matrix"]));
    if (j["unknot"] != json(true)) throw InvalidArgument("unknot must be true");
    return goeritz_from_matrix(IntSymMatrix());
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::obstructed: return "obstructed";
        case Verdict::not_obstructed: return "not_obstructed";
        case Verdict::vacuous: return "vacuous";
    }
    throw InternalError("unknown verdict");
}

std::string failure_kind_name(FailureKind k) {
    switch (k) {
        case FailureKind::not_integer: return "not_integer";
        case FailureKind::odd_integer: return "odd_integer";
        case FailureKind::positive_value: return "positive_value";
    }
    throw InternalError("unknown failure kind");
}

namespace {

std::string theorem_reason_name(TheoremReason r) {
    switch (r) {
        case TheoremReason::none: return "";
        case TheoremReason::noncyclic_group: return "noncyclic_group";
        case TheoremReason::all_pairs_fail: return "all_pairs_fail";
        case TheoremReason::order_one: return "order_one";
    }
    throw InternalError("unknown theorem reason");
}

json theorem_to_json(const TheoremReport& t) {
    json j;
    j["verdict"] = verdict_name(t.verdict);
    j["reason"] = t.reason == TheoremReason::none ? json() : json(theorem_reason_name(t.reason));
    if (t.witness) {
        j["witness"] = {{"epsilon", t.witness->first}, {"a", t.witness->second}};
    } else {
        j["witness"] = json();
    }
    json trials = json::array();
    for (const TheoremTrial& trial : t.trials) {
        json row;
        row["epsilon"] = trial.epsilon;
        row["a"] = trial.a;
        if (trial.passed) {
            row["outcome"] = "pass";
        } else {
            row["outcome"] = "fail";
            row["i"] = trial.fail_i;
            row["kind"] = failure_kind_name(trial.kind);
            row["I"] = to_string(trial.value);
        }
        trials.push_back(row);
    }
    j["trials"] = trials;
    return j;
}

json lickorish_to_json(const LickorishReport& l) {
    json j;
    j["verdict"] = verdict_name(l.verdict);
    j["cyclic"] = l.cyclic;
    j["lambda"] = l.lambda ? json(to_string(*l.lambda)) : json();
    j["x"] = l.solution_x ? json(*l.solution_x) : json();
    j["achieved"] = l.achieved ? json(to_string(*l.achieved)) : json();
    return j;
}

json bounds_to_json(const BoundsReport& b) {
    json j;
    j["lower"] = b.lower;
    j["upper"] = b.upper ? json(*b.upper) : json();
    j["exact"] = b.exact ? json(*b.exact) : json();
    j["inputs_used"] = {{"determinant_nontrivial", b.inputs_used.determinant_nontrivial},
                        {"theorem_obstruction", b.inputs_used.theorem_obstruction},
                        {"lickorish_obstruction", b.inputs_used.lickorish_obstruction},
                        {"gamma", b.inputs_used.gamma},
                        {"gamma_star", b.inputs_used.gamma_star},
                        {"known_band_count", b.inputs_used.known_band_count}};
    return j;
}

}  // namespace

json input_echo(const GoeritzResult& g) {
    // Fallback echo reconstructed from the result alone; the CLI passes the
    // verbatim input instead (it still has the original PD text).
    json j;
    switch (g.provenance) {
        case Provenance::pretzel: {
            const auto& t = *g.pretzel_params;
            j["pretzel"] = {t[0], t[1], t[2]};
            break;
        }
        case Provenance::pd_code:
            j["pd"] = json();
            if (g.f0_face) j["f0"] = *g.f0_face;
            break;
        case Provenance::raw_matrix:
            if (g.Q.dim() == 0) j["unknot"] = true;
            else j["matrix"] = to_json(g.Q);
            break;
    }
    return j;
}

std::string input_id(const GoeritzResult& g) {
    switch (g.provenance) {
        case Provenance::pretzel: {
            const auto& t = *g.pretzel_params;
            std::ostringstream os;
            os << "pretzel(" << t[0] << "," << t[1] << "," << t[2] << ")";
            return os.str();
        }
        case Provenance::pd_code:
            return "pd(k=" + std::to_string(g.Q.dim()) + ")";
        case Provenance::raw_matrix:
            if (g.Q.dim() == 0) return "unknot";
            return "matrix(k=" + std::to_string(g.Q.dim()) + ")";
    }
    throw InternalError("unknown provenance");
}

json to_json(const ObstructionReport& rep, const json& options_echo, const json* input_override) {
    json j;
    j["input"] = input_override ? *input_override : input_echo(rep.input);
    j["options"] = options_echo;
    j["Q"] = to_json(rep.input.Q);
    j["mirrored"] = rep.input.mirrored;
    j["p"] = to_json(rep.group.order);
    j["generator"] = rep.group.cyclic ? to_json(rep.group.generator) : json();
    j["mq_table"] = rep.table ? to_json(*rep.table) : json();
    j["theorem"] = theorem_to_json(rep.theorem);
    j["lickorish"] = lickorish_to_json(rep.lickorish);
    j["u2_bounds"] = bounds_to_json(rep.bounds);
    return j;
}

std::string verdict_csv_fields(const ObstructionReport& rep) {
    std::ostringstream os;
    os << rep.group.order.get_str() << ',' << verdict_name(rep.theorem.verdict) << ','
       << verdict_name(rep.lickorish.verdict) << ',' << rep.bounds.lower << ',';
    if (rep.bounds.upper) os << *rep.bounds.upper;
    return os.str();
}

std::string report_csv(const ObstructionReport& rep) {
    std::ostringstream os;
    os << "id,p,theorem,lickorish,lower,upper\n";
    os << input_id(rep.input) << ',' << verdict_csv_fields(rep) << '\n';
    return os.str();
}

std::string report_text(const ObstructionReport& rep) {
    std::ostringstream os;
    os << "input: " << input_id(rep.input) << '\n';
    os << "Q: " << to_json(rep.input.Q).dump() << "  (mirrored: " << (rep.input.mirrored ? "yes" : "no")
       << ")\n";
    os << "det: " << rep.group.order.get_str() << '\n';
    if (rep.group.cyclic) {
        os << "group: cyclic of order " << rep.group.order.get_str();
        if (rep.group.order > 1) os << ", generator " << to_json(rep.group.generator).dump();
        os << '\n';
    } else {
        os << "group: not cyclic, invariant factors ";
        json f = json::array();
        for (const Integer& d : rep.group.invariant_factors) f.push_back(to_json(d));
        os << f.dump() << '\n';
    }
    if (rep.table) {
        os << "M_Q(0): " << to_string(rep.table->values[0]) << "  (certified radius "
           << to_string(rep.table->certified_radius) << ")\n";
    }
    os << "theorem: " << verdict_name(rep.theorem.verdict);
    if (rep.theorem.witness)
        os << " (witness epsilon=" << rep.theorem.witness->first << ", a=" << rep.theorem.witness->second
           << ")";
    else if (rep.theorem.verdict == Verdict::obstructed)
        os << " (" << theorem_reason_name(rep.theorem.reason) << ", " << rep.theorem.trials.size()
           << " trials)";
    os << '\n';
    os << "lickorish: " << verdict_name(rep.lickorish.verdict);
    if (rep.lickorish.lambda) os << " (lambda = " << to_string(*rep.lickorish.lambda);
    if (rep.lickorish.solution_x)
        os << ", x = " << *rep.lickorish.solution_x << " gives " << to_string(*rep.lickorish.achieved);
    if (rep.lickorish.lambda) os << ")";
    os << '\n';
    os << "u2 bounds: [" << rep.bounds.lower << ", ";
    if (rep.bounds.upper) os << *rep.bounds.upper;
    else os << "-";
    os << "]\n";
    if (rep.bounds.exact) os << "u2 = " << *rep.bounds.exact << '\n';
    else if (rep.bounds.upper) os << "u2 in [" << rep.bounds.lower << ", " << *rep.bounds.upper << "]\n";
    else os << "u2 >= " << rep.bounds.lower << '\n';
    return os.str();
}

}  // namespace h2k
