#pragma once

// The finite quotient group presented by a symmetric matrix Q, the
// partition of characteristic vectors into its classes, and the exact table
// of per-class minima of (xi^t Q^{-1} xi - k)/4 computed by certified
// lattice enumeration. Also the rank-one closed form those minima reduce to
// for a 1x1 matrix (p).

#include <optional>
#include <vector>

#include "h2k/exactmat.hpp"

namespace h2k {

// G = Z^k / Q Z^k together with a distinguished generating class when G is
// cyclic. Class arithmetic goes through the Smith basis: the class of x is
// determined by (U x) mod diag, and for cyclic G by the single coordinate
// carrying the nontrivial invariant factor.
struct FiniteAbelianGroup {
    int k = 0;
    Integer order = 1;                    // == |det Q|
    std::vector<Integer> invariant_factors;  // SNF diagonal entries > 1
    bool cyclic = true;
    IntVector generator;                  // g0; empty when order == 1
    SNFDecomposition snf;

    // cached data for class_index: row of U at the nontrivial factor and
    // the inverse of g0's Smith coordinate mod order
    IntVector smith_row;
    Integer generator_coord_inverse = 1;
};

// Exact per-class minima. values[i] and witnesses[i] belong to the class of
// i*g0; certified_radius is the enumeration bound at which every class held
// a candidate, making the minima provably global.
struct MQTable {
    unsigned long p = 1;
    IntVector generator;
    std::vector<Rational> values;
    std::vector<IntVector> witnesses;
    Integer certified_radius;
};

// Group presented by Q. Requires det(Q) odd and nonzero (EvenDeterminant
// otherwise). When cyclic, the reported generator is the highest-index
// standard basis vector whose class generates, falling back to the Smith
// basis image when no basis vector does.
FiniteAbelianGroup group_of(const IntSymMatrix& q);

// Index i in [0, p) with xi == i*g0 modulo Q Z^k. Requires G cyclic.
Integer class_index(const IntVector& xi, const FiniteAbelianGroup& g);

// True iff xi[i] == Q[i][i] (mod 2) for all i.
bool is_characteristic(const IntSymMatrix& q, const IntVector& xi);

// Certified table for positive-definite Q with odd determinant and cyclic
// group. Enumerates characteristic vectors inside the ellipsoid
// xi^t Q^{-1} xi <= B for doubling B, starting at max(trace Q, k), inside
// the box |xi_i| <= floor(sqrt(B * Q_ii)). Stops once every class holds a
// candidate. max_bound, when given, caps B (InvalidArgument when exceeded).
MQTable mq_table(const IntSymMatrix& q, const FiniteAbelianGroup& g,
                 const std::optional<Integer>& max_bound = std::nullopt);

// Uncertified per-class minima over the plain box |xi_i| <= radius. Test
// oracle; classes not reached inside the box are absent.
std::vector<std::optional<std::pair<Rational, IntVector>>> mq_bruteforce(
    const IntSymMatrix& q, const FiniteAbelianGroup& g, long radius);

// Minimum of (xi^2/p - 1)/4 over odd xi with xi == i mod p, in closed form:
// ((p - i)^2/p - 1)/4 for even i, (i^2/p - 1)/4 for odd i, with the
// representative convention i in {0, ..., p-1}.
Rational closed_form_rank1(const Integer& p, const Integer& i);

// Box radius that provably contains every certified witness of `table`,
// suitable as an mq_bruteforce radius for oracle comparisons.
long covering_radius(const IntSymMatrix& q, const MQTable& table);

}  // namespace h2k
