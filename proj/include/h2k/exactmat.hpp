#pragma once

// Exact integer linear algebra for small dense symmetric matrices:
// fraction-free determinants, adjugates, Sylvester definiteness tests and
// Smith normal form with unimodular transformation matrices.

#include <vector>

#include "h2k/numeric.hpp"

namespace h2k {

// Square symmetric integer matrix. Symmetry is checked at construction and
// instances are immutable afterwards, so they are safe to share across
// threads. k == 0 is allowed and stands for the empty form (determinant 1).
class IntSymMatrix {
public:
    IntSymMatrix() = default;

    explicit IntSymMatrix(const std::vector<std::vector<Integer>>& rows);

    // Convenience for literals in tests and builders.
    static IntSymMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    int dim() const { return k_; }
    const Integer& at(int i, int j) const { return a_[static_cast<size_t>(i) * k_ + j]; }

    IntSymMatrix negated() const;
    Integer trace() const;

    std::vector<std::vector<Integer>> rows() const;

    friend bool operator==(const IntSymMatrix&, const IntSymMatrix&) = default;

private:
    int k_ = 0;
    std::vector<Integer> a_;  // row-major, size k*k
};

// Unimodular U, V and diagonal D with U*M*V == D, diagonal entries
// non-negative and each dividing the next.
struct SNFDecomposition {
    int k = 0;
    std::vector<std::vector<Integer>> U, V;
    std::vector<Integer> diagonal;
};

// Exact determinant via fraction-free (Bareiss) elimination; 1 for k == 0.
Integer determinant(const IntSymMatrix& m);

// Adjugate A with M*A == det(M)*I, defined for every M including singular ones.
IntSymMatrix adjugate(const IntSymMatrix& m);

// True iff every leading principal minor is positive; true for k == 0.
bool is_positive_definite(const IntSymMatrix& m);

// Smith normal form by elementary row/column operations with
// smallest-nonzero-pivot selection in a fixed scan order, so the output is
// deterministic for a given input.
SNFDecomposition smith_normal_form(const IntSymMatrix& m);

// x^t M^{-1} x as an exact rational, computed as x^t adj(M) x / det(M).
// Throws SingularMatrix when det(M) == 0.
Rational eval_inverse_form(const IntSymMatrix& m, const IntVector& x);

// Helpers shared with the other modules; general (not necessarily
// symmetric) k x k integer matrices as vectors of rows.
using IntMatrixRows = std::vector<std::vector<Integer>>;

Integer determinant_rows(const IntMatrixRows& m);
IntMatrixRows adjugate_rows(const IntMatrixRows& m);
IntVector mat_vec(const IntMatrixRows& m, const IntVector& x);
IntMatrixRows mat_mul(const IntMatrixRows& a, const IntMatrixRows& b);

}  // namespace h2k
