#pragma once

// The two obstructions to unknotting with a single twisted-band move, and
// the combinator that turns them plus externally supplied crosscap data
// into bounds on the band-unknotting number u2.

#include <optional>
#include <utility>
#include <vector>

#include "h2k/diagram.hpp"
#include "h2k/quadform.hpp"

namespace h2k {

enum class Verdict { obstructed, not_obstructed, vacuous };

enum class TheoremReason { none, noncyclic_group, all_pairs_fail, order_one };

enum class FailureKind { not_integer, odd_integer, positive_value };

// One (epsilon, a) trial: either a full pass or its first failure, with the
// failing index, the failure kind (checked integrality -> parity -> sign)
// and the exact value of I at that index.
struct TheoremTrial {
    int epsilon = 1;
    unsigned long a = 1;
    bool passed = false;
    unsigned long fail_i = 0;
    FailureKind kind = FailureKind::not_integer;
    Rational value;
};

struct TheoremReport {
    Verdict verdict = Verdict::vacuous;
    TheoremReason reason = TheoremReason::none;
    std::vector<TheoremTrial> trials;
    std::optional<std::pair<int, unsigned long>> witness;  // (epsilon, a)
};

struct LickorishReport {
    Verdict verdict = Verdict::obstructed;
    bool cyclic = false;
    std::optional<Rational> lambda;          // lambda(g0, g0) in [0, 1)
    std::optional<unsigned long> solution_x;  // q * x^2 == +-1 (mod p)
    std::optional<Rational> achieved;         // the realized +-1/p
};

struct BoundsInputsUsed {
    bool determinant_nontrivial = false;
    bool theorem_obstruction = false;
    bool lickorish_obstruction = false;
    bool gamma = false;
    bool gamma_star = false;
    bool known_band_count = false;
};

struct BoundsReport {
    long lower = 0;
    std::optional<long> upper;
    std::optional<long> exact;
    BoundsInputsUsed inputs_used;
};

struct AnalyzeOptions {
    std::optional<long> gamma;
    std::optional<long> gamma_star;
    std::optional<long> known_band_count;
    std::optional<Integer> max_bound;
};

struct ObstructionReport {
    GoeritzResult input;
    FiniteAbelianGroup group;
    std::optional<MQTable> table;  // absent when the group is not cyclic
    TheoremReport theorem;
    LickorishReport lickorish;
    BoundsReport bounds;
};

// Tests, for every sign epsilon and every unit a mod p, whether
// I(i) = epsilon * values[a*i mod p] - closed_form_rank1(p, i) is an even
// integer <= 0 for all i. Trials run with epsilon = +1 first and units
// ascending; each scans i upward (the symmetry I(i) == I(p-i) halves the
// range) and stops at its first failure. A fully passing trial settles the
// verdict as not_obstructed with that witness.
TheoremReport theorem_check(const MQTable& table);

// The report analyze() emits when the group is not cyclic: no isomorphism
// from Z/pZ exists, so the verdict is obstructed without any trials.
TheoremReport theorem_noncyclic_report();

// Straight-line witness verification over every i in [0, p) with no
// symmetry shortcut; used to replay reported witnesses independently.
bool verify_theorem_witness(const MQTable& table, int epsilon, unsigned long a);

// Cyclicity plus solvability of q*x^2 == +-1 (mod p) for the linking-form
// value lambda(g0, g0) = q/p, by exhaustive scan over x in [0, p).
LickorishReport lickorish_check(const GoeritzResult& g, const FiniteAbelianGroup& group);

// Bounds on u2: at least 1 when det != 1, at least 2 when either
// obstruction fires, at least gamma_star; at most min(gamma, band count).
// Throws InconsistentBounds when the inputs force lower > upper.
BoundsReport u2_bounds(const TheoremReport& thm, const LickorishReport& lick, const Integer& p,
                       std::optional<long> gamma, std::optional<long> gamma_star,
                       std::optional<long> known_band_count);

// Full pipeline: group, table and theorem check (cyclic case), linking
// form check, bounds.
ObstructionReport analyze(const GoeritzResult& g, const AnalyzeOptions& opts = {});

}  // namespace h2k
