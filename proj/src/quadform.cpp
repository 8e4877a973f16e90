#include "h2k/quadform.hpp"

#include <algorithm>

namespace h2k {

namespace {

bool class_generates(const FiniteAbelianGroup& g, const Integer& coord) {
    Integer d;
    mpz_gcd(d.get_mpz_t(), coord.get_mpz_t(), g.order.get_mpz_t());
    return d == 1;
}

}  // namespace

FiniteAbelianGroup group_of(const IntSymMatrix& q) {
    Integer det = determinant(q);
    if (det == 0 || mpz_even_p(det.get_mpz_t()))
        throw EvenDeterminant("group_of requires an odd nonzero determinant, got " + det.get_str());

    FiniteAbelianGroup g;
    g.k = q.dim();
    g.order = abs(det);
    g.snf = smith_normal_form(q);
    for (const Integer& d : g.snf.diagonal)
        if (d > 1) g.invariant_factors.push_back(d);
    g.cyclic = g.invariant_factors.size() <= 1;

    if (!g.cyclic || g.order == 1) return g;

    // The nontrivial invariant factor sits at the last diagonal position
    // (entries ascend along the divisibility chain). The Smith coordinate of
    // x is row L of U applied to x, modulo the factor.
    const int L = g.k - 1;
    g.smith_row = g.snf.U[L];

    IntVector candidate(g.k, 0);
    bool found = false;
    for (int j = g.k - 1; j >= 0 && !found; --j) {
        Integer coord = mod_floor(g.smith_row[j], g.order);
        if (class_generates(g, coord)) {
            candidate.assign(g.k, 0);
            candidate[j] = 1;
            g.generator_coord_inverse = mod_inverse(coord, g.order);
            found = true;
        }
    }
    if (!found) {
        // No standard basis vector generates; use the Smith basis image
        // U^{-1} e_L, whose coordinate is 1 by construction.
        IntMatrixRows adjU = adjugate_rows(g.snf.U);
        Integer detU = determinant_rows(g.snf.U);
        for (int i = 0; i < g.k; ++i)
            candidate[i] = (detU == 1) ? adjU[i][L] : Integer(-adjU[i][L]);
        g.generator_coord_inverse = 1;
    }
    g.generator = candidate;
    return g;
}

bool is_characteristic(const IntSymMatrix& q, const IntVector& xi) {
    if (static_cast<int>(xi.size()) != q.dim()) return false;
    for (int i = 0; i < q.dim(); ++i) {
        Integer diff = xi[i] - q.at(i, i);
        if (mpz_odd_p(diff.get_mpz_t())) return false;
    }
    return true;
}

Integer class_index(const IntVector& xi, const FiniteAbelianGroup& g) {
    if (!g.cyclic) throw NonCyclic("class_index requires a cyclic group");
    if (static_cast<int>(xi.size()) != g.k)
        throw InvalidArgument("vector length does not match group rank");
    if (g.order == 1) return 0;
    Integer coord = 0;
    for (int j = 0; j < g.k; ++j) coord += g.smith_row[j] * xi[j];
    return mod_floor(coord * g.generator_coord_inverse, g.order);
}

Rational closed_form_rank1(const Integer& p, const Integer& i) {
    if (p <= 0 || mpz_even_p(p.get_mpz_t()))
        throw EvenModulus("closed_form_rank1 requires a positive odd modulus, got " + p.get_str());
    if (i < 0 || i >= p)
        throw OutOfRange("closed_form_rank1 index " + i.get_str() + " outside [0, " + p.get_str() + ")");
    // For even i the nearest odd representative of the class is i - p, for
    // odd i it is i itself.
    Integer base = mpz_even_p(i.get_mpz_t()) ? Integer(p - i) : i;
    return make_rational(base * base - p, 4 * p);
}

namespace {

// Witness preference: first the representative whose leading nonzero entry
// is positive, then the lexicographically smaller vector. This keeps table
// output deterministic independent of enumeration order.
bool leading_negative(const IntVector& v) {
    for (const Integer& x : v) {
        if (x != 0) return x < 0;
    }
    return false;
}

bool witness_preferred(const IntVector& a, const IntVector& b) {
    const bool na = leading_negative(a), nb = leading_negative(b);
    if (na != nb) return !na;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Candidate {
    Integer form_num;  // xi^t adj(Q) xi, i.e. det * (form value)
    IntVector xi;
};

struct EnumContext {
    IntMatrixRows adj;
    Integer det;
    const FiniteAbelianGroup* g;
    unsigned long p;
    std::vector<std::optional<Candidate>> best;

    void offer(const IntVector& xi, const Integer& s) {
        unsigned long c = to_ulong_checked(class_index(xi, *g), "class index");
        auto& slot = best[c];
        if (!slot || s < slot->form_num ||
            (s == slot->form_num && witness_preferred(xi, slot->xi)))
            slot = Candidate{s, xi};
    }
};

Integer form_value_num(const IntMatrixRows& adj, const IntVector& xi) {
    const int k = static_cast<int>(xi.size());
    Integer s = 0;
    for (int i = 0; i < k; ++i) {
        if (xi[i] == 0) continue;
        Integer row = 0;
        for (int j = 0; j < k; ++j) row += adj[i][j] * xi[j];
        s += row * xi[i];
    }
    return s;
}

// Odometer over the parity-constrained box: coordinate i ranges over values
// of parity Q_ii in [-bound_i, bound_i]. Calls fn for every vector.
template <typename Fn>
void scan_box(const IntSymMatrix& q, const std::vector<Integer>& bounds, Fn&& fn) {
    const int k = q.dim();
    IntVector lo(k), cur(k);
    for (int i = 0; i < k; ++i) {
        Integer b = bounds[i];
        Integer start = -b;
        if (mpz_odd_p(Integer(start - q.at(i, i)).get_mpz_t())) start += 1;
        if (start > b) return;  // box too small for this parity
        lo[i] = start;
        cur[i] = start;
    }
    for (;;) {
        fn(cur);
        int i = k - 1;
        for (; i >= 0; --i) {
            cur[i] += 2;
            if (cur[i] <= bounds[i]) break;
            cur[i] = lo[i];
        }
        if (i < 0) return;
    }
}

void require_table_preconditions(const IntSymMatrix& q, const FiniteAbelianGroup& g) {
    if (!g.cyclic) throw NonCyclic("mq_table requires a cyclic group");
    if (!is_positive_definite(q)) throw Indefinite("mq_table requires a positive-definite matrix");
}

}  // namespace

MQTable mq_table(const IntSymMatrix& q, const FiniteAbelianGroup& g,
                 const std::optional<Integer>& max_bound) {
    require_table_preconditions(q, g);

    EnumContext ctx;
    ctx.adj = adjugate_rows(q.rows());
    ctx.det = determinant(q);
    ctx.g = &g;
    ctx.p = to_ulong_checked(g.order, "group order");

    const int k = q.dim();
    Integer bound = std::max(q.trace(), Integer(k));

    for (;;) {
        if (max_bound && bound > *max_bound)
            throw InvalidArgument("enumeration bound " + bound.get_str() +
                                  " exceeds the configured maximum " + max_bound->get_str());
        ctx.best.assign(ctx.p, std::nullopt);
        Integer cap = bound * ctx.det;
        std::vector<Integer> bounds(k);
        for (int i = 0; i < k; ++i) bounds[i] = isqrt(bound * q.at(i, i));
        scan_box(q, bounds, [&](const IntVector& xi) {
            Integer s = form_value_num(ctx.adj, xi);
            if (s <= cap) ctx.offer(xi, s);
        });
        bool complete = std::all_of(ctx.best.begin(), ctx.best.end(),
                                    [](const auto& c) { return c.has_value(); });
        if (complete) break;
        bound *= 2;
    }

    MQTable out;
    out.p = ctx.p;
    out.generator = g.generator;
    out.certified_radius = bound;
    out.values.reserve(ctx.p);
    out.witnesses.reserve(ctx.p);
    const Integer kd = Integer(k) * ctx.det;
    for (unsigned long i = 0; i < ctx.p; ++i) {
        out.values.push_back(make_rational(ctx.best[i]->form_num - kd, 4 * ctx.det));
        out.witnesses.push_back(ctx.best[i]->xi);
    }
    return out;
}

std::vector<std::optional<std::pair<Rational, IntVector>>> mq_bruteforce(
    const IntSymMatrix& q, const FiniteAbelianGroup& g, long radius) {
    require_table_preconditions(q, g);
    if (radius < 0) throw InvalidArgument("negative brute-force radius");

    const int k = q.dim();
    IntMatrixRows adj = adjugate_rows(q.rows());
    Integer det = determinant(q);
    unsigned long p = to_ulong_checked(g.order, "group order");

    // scan_box no-ops when the radius admits no coordinate of the required
    // parity, which covers the radius-0 / odd-diagonal corner.
    std::vector<std::optional<Candidate>> best(p);
    std::vector<Integer> bounds(k, Integer(radius));
    scan_box(q, bounds, [&](const IntVector& xi) {
        Integer s = form_value_num(adj, xi);
        unsigned long c = to_ulong_checked(class_index(xi, g), "class index");
        auto& slot = best[c];
        if (!slot || s < slot->form_num ||
            (s == slot->form_num && witness_preferred(xi, slot->xi)))
            slot = Candidate{s, xi};
    });

    std::vector<std::optional<std::pair<Rational, IntVector>>> out(p);
    const Integer kd = Integer(k) * det;
    for (unsigned long i = 0; i < p; ++i)
        if (best[i])
            out[i] = std::make_pair(make_rational(best[i]->form_num - kd, 4 * det), best[i]->xi);
    return out;
}

long covering_radius(const IntSymMatrix& q, const MQTable& table) {
    Integer r = 0;
    for (int i = 0; i < q.dim(); ++i)
        r = std::max(r, isqrt(table.certified_radius * q.at(i, i)));
    return static_cast<long>(to_ulong_checked(r, "covering radius"));
}

}  // namespace h2k
