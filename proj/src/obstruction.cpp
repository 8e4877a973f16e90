#include "h2k/obstruction.hpp"

#include <algorithm>
#include <numeric>

namespace h2k {

namespace {

// Failure precedence is integrality, then parity, then sign.
std::optional<FailureKind> check_value(const Rational& v) {
    if (!is_integral(v)) return FailureKind::not_integer;
    if (mpz_odd_p(v.get_num().get_mpz_t())) return FailureKind::odd_integer;
    if (v > 0) return FailureKind::positive_value;
    return std::nullopt;
}

std::vector<Rational> closed_form_cache(unsigned long p, unsigned long upto) {
    std::vector<Rational> out;
    out.reserve(upto + 1);
    for (unsigned long i = 0; i <= upto; ++i)
        out.push_back(closed_form_rank1(Integer(p), Integer(i)));
    return out;
}

}  // namespace

TheoremReport theorem_noncyclic_report() {
    TheoremReport rep;
    rep.verdict = Verdict::obstructed;
    rep.reason = TheoremReason::noncyclic_group;
    return rep;
}

TheoremReport theorem_check(const MQTable& table) {
    TheoremReport rep;
    const unsigned long p = table.p;
    if (p == 1) {
        rep.verdict = Verdict::vacuous;
        rep.reason = TheoremReason::order_one;
        return rep;
    }

    const unsigned long half = p / 2;  // I(i) == I(p - i), so i <= half suffices
    std::vector<Rational> closed = closed_form_cache(p, half);

    for (int epsilon : {+1, -1}) {
        for (unsigned long a = 1; a < p; ++a) {
            if (std::gcd(a, p) != 1) continue;
            TheoremTrial trial;
            trial.epsilon = epsilon;
            trial.a = a;
            trial.passed = true;
            for (unsigned long i = 0; i <= half; ++i) {
                unsigned long idx = static_cast<unsigned long>(
                    (static_cast<unsigned __int128>(a) * i) % p);
                Rational I = epsilon > 0 ? Rational(table.values[idx] - closed[i])
                                         : Rational(-table.values[idx] - closed[i]);
                if (auto kind = check_value(I)) {
                    trial.passed = false;
                    trial.fail_i = i;
                    trial.kind = *kind;
                    trial.value = I;
                    break;
                }
            }
            rep.trials.push_back(trial);
            if (trial.passed) {
                rep.verdict = Verdict::not_obstructed;
                rep.reason = TheoremReason::none;
                rep.witness = std::make_pair(epsilon, a);
                return rep;
            }
        }
    }
    rep.verdict = Verdict::obstructed;
    rep.reason = TheoremReason::all_pairs_fail;
    return rep;
}

bool verify_theorem_witness(const MQTable& table, int epsilon, unsigned long a) {
    const unsigned long p = table.p;
    if (p == 1) return true;
    if (std::gcd(a, p) != 1) return false;
    for (unsigned long i = 0; i < p; ++i) {
        unsigned long idx =
            static_cast<unsigned long>((static_cast<unsigned __int128>(a) * i) % p);
        Rational I = Rational(epsilon) * table.values[idx] -
                     closed_form_rank1(Integer(p), Integer(i));
        if (check_value(I)) return false;
    }
    return true;
}

LickorishReport lickorish_check(const GoeritzResult& g, const FiniteAbelianGroup& group) {
    LickorishReport rep;
    rep.cyclic = group.cyclic;
    if (!group.cyclic) {
        rep.verdict = Verdict::obstructed;
        return rep;
    }
    if (group.order == 1) {
        rep.verdict = Verdict::not_obstructed;
        rep.lambda = Rational(0);
        rep.solution_x = 0;
        rep.achieved = Rational(0);
        return rep;
    }

    const unsigned long p = to_ulong_checked(group.order, "group order");
    // lambda(g0, g0) = g0^t Q^{-1} g0 mod 1, as a fraction with denominator p.
    IntMatrixRows adj = adjugate_rows(g.Q.rows());
    Integer num = 0;
    for (int i = 0; i < g.Q.dim(); ++i)
        for (int j = 0; j < g.Q.dim(); ++j) num += adj[i][j] * group.generator[i] * group.generator[j];
    Integer q = mod_floor(num, group.order);
    rep.lambda = make_rational(q, group.order);

    for (unsigned long x = 0; x < p; ++x) {
        Integer t = mod_floor(q * x * x, group.order);
        if (t == 1 || t == group.order - 1) {
            rep.verdict = Verdict::not_obstructed;
            rep.solution_x = x;
            rep.achieved = make_rational(t == 1 ? Integer(1) : Integer(-1), group.order);
            return rep;
        }
    }
    rep.verdict = Verdict::obstructed;
    return rep;
}

BoundsReport u2_bounds(const TheoremReport& thm, const LickorishReport& lick, const Integer& p,
                       std::optional<long> gamma, std::optional<long> gamma_star,
                       std::optional<long> known_band_count) {
    if ((gamma && *gamma < 0) || (gamma_star && *gamma_star < 0) ||
        (known_band_count && *known_band_count < 0))
        throw InvalidArgument("crosscap and band-count inputs must be non-negative");
    if (gamma && gamma_star && *gamma_star > *gamma)
        throw InconsistentBounds("gamma_star " + std::to_string(*gamma_star) +
                                 " exceeds gamma " + std::to_string(*gamma));

    BoundsReport rep;
    rep.lower = 0;
    if (p != 1) {
        rep.lower = 1;
        rep.inputs_used.determinant_nontrivial = true;
    }
    if (thm.verdict == Verdict::obstructed) {
        rep.lower = std::max(rep.lower, 2L);
        rep.inputs_used.theorem_obstruction = true;
    }
    if (lick.verdict == Verdict::obstructed) {
        rep.lower = std::max(rep.lower, 2L);
        rep.inputs_used.lickorish_obstruction = true;
    }
    if (gamma_star) {
        rep.lower = std::max(rep.lower, *gamma_star);
        rep.inputs_used.gamma_star = true;
    }
    if (gamma) {
        rep.upper = *gamma;
        rep.inputs_used.gamma = true;
    }
    if (known_band_count) {
        rep.upper = rep.upper ? std::min(*rep.upper, *known_band_count) : *known_band_count;
        rep.inputs_used.known_band_count = true;
    }
    if (rep.upper && rep.lower > *rep.upper)
        throw InconsistentBounds("lower bound " + std::to_string(rep.lower) +
                                 " exceeds upper bound " + std::to_string(*rep.upper));
    if (rep.upper && rep.lower == *rep.upper) rep.exact = rep.lower;
    return rep;
}

ObstructionReport analyze(const GoeritzResult& g, const AnalyzeOptions& opts) {
    ObstructionReport rep;
    rep.input = g;
    rep.group = group_of(g.Q);
    rep.lickorish = lickorish_check(g, rep.group);
    if (rep.group.cyclic) {
        rep.table = mq_table(g.Q, rep.group, opts.max_bound);
        rep.theorem = theorem_check(*rep.table);
    } else {
        rep.theorem = theorem_noncyclic_report();
    }
    rep.bounds = u2_bounds(rep.theorem, rep.lickorish, rep.group.order, opts.gamma,
                           opts.gamma_star, opts.known_band_count);
    return rep;
}

}  // namespace h2k
