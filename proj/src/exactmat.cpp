#include "h2k/exactmat.hpp"

#include <algorithm>
#include <utility>

namespace h2k {

IntSymMatrix::IntSymMatrix(const std::vector<std::vector<Integer>>& rows_in) {
    k_ = static_cast<int>(rows_in.size());
    a_.resize(static_cast<size_t>(k_) * k_);
    for (int i = 0; i < k_; ++i) {
        if (static_cast<int>(rows_in[i].size()) != k_)
            throw InvalidArgument("matrix is not square");
        for (int j = 0; j < k_; ++j) a_[static_cast<size_t>(i) * k_ + j] = rows_in[i][j];
    }
    for (int i = 0; i < k_; ++i)
        for (int j = i + 1; j < k_; ++j)
            if (at(i, j) != at(j, i))
                throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
}

IntSymMatrix IntSymMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> v;
    for (const auto& r : rows) {
        std::vector<Integer> row;
        for (long x : r) row.emplace_back(x);
        v.push_back(std::move(row));
    }
    return IntSymMatrix(v);
}

IntSymMatrix IntSymMatrix::negated() const {
    std::vector<std::vector<Integer>> v(k_, std::vector<Integer>(k_));
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) v[i][j] = -at(i, j);
    return IntSymMatrix(v);
}

Integer IntSymMatrix::trace() const {
    Integer t = 0;
    for (int i = 0; i < k_; ++i) t += at(i, i);
    return t;
}

std::vector<std::vector<Integer>> IntSymMatrix::rows() const {
    std::vector<std::vector<Integer>> v(k_, std::vector<Integer>(k_));
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) v[i][j] = at(i, j);
    return v;
}

namespace {

// Bareiss fraction-free elimination with row pivoting. Returns the exact
// determinant; every intermediate value stays an integer.
Integer bareiss_det(IntMatrixRows m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (int t = 0; t < k - 1; ++t) {
        int piv = -1;
        for (int r = t; r < k; ++r)
            if (m[r][t] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != t) { std::swap(m[piv], m[t]); sign = -sign; }
        for (int i = t + 1; i < k; ++i) {
            for (int j = t + 1; j < k; ++j) {
                Integer num = m[i][j] * m[t][t] - m[i][t] * m[t][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][t] = 0;
        }
        prev = m[t][t];
    }
    return sign > 0 ? m[k - 1][k - 1] : Integer(-m[k - 1][k - 1]);
}

}  // namespace

Integer determinant_rows(const IntMatrixRows& m) { return bareiss_det(m); }

Integer determinant(const IntSymMatrix& m) { return bareiss_det(m.rows()); }

IntMatrixRows adjugate_rows(const IntMatrixRows& m) {
    const int k = static_cast<int>(m.size());
    IntMatrixRows out(k, std::vector<Integer>(k));
    if (k == 0) return out;
    IntMatrixRows minor(k - 1, std::vector<Integer>(k - 1));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            // adj[i][j] = (-1)^{i+j} * minor(j, i)
            for (int r = 0, rr = 0; r < k; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < k; ++c) {
                    if (c == i) continue;
                    minor[rr][cc] = m[r][c];
                    ++cc;
                }
                ++rr;
            }
            Integer d = bareiss_det(minor);
            out[i][j] = ((i + j) % 2 == 0) ? d : Integer(-d);
        }
    }
    return out;
}

IntSymMatrix adjugate(const IntSymMatrix& m) {
    return IntSymMatrix(adjugate_rows(m.rows()));
}

bool is_positive_definite(const IntSymMatrix& m) {
    // Pivot-free Bareiss: after step t the pivot m[t][t] equals the leading
    // principal minor of order t+1, so all minors positive <=> all pivots
    // positive, and a non-positive pivot settles the answer immediately.
    IntMatrixRows a = m.rows();
    const int k = m.dim();
    Integer prev = 1;
    for (int t = 0; t < k; ++t) {
        if (a[t][t] <= 0) return false;
        for (int i = t + 1; i < k; ++i) {
            for (int j = t + 1; j < k; ++j) {
                Integer num = a[i][j] * a[t][t] - a[i][t] * a[t][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][t] = 0;
        }
        prev = a[t][t];
    }
    return true;
}

IntVector mat_vec(const IntMatrixRows& m, const IntVector& x) {
    const int k = static_cast<int>(m.size());
    IntVector out(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out[i] += m[i][j] * x[j];
    return out;
}

IntMatrixRows mat_mul(const IntMatrixRows& a, const IntMatrixRows& b) {
    const int k = static_cast<int>(a.size());
    IntMatrixRows out(k, std::vector<Integer>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (int j = 0; j < k; ++j) out[i][j] += a[i][t] * b[t][j];
    return out;
}

Rational eval_inverse_form(const IntSymMatrix& m, const IntVector& x) {
    if (static_cast<int>(x.size()) != m.dim())
        throw InvalidArgument("vector length does not match matrix dimension");
    Integer det = determinant(m);
    if (det == 0) throw SingularMatrix("eval_inverse_form requires det != 0");
    IntMatrixRows adj = adjugate_rows(m.rows());
    Integer s = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += adj[i][j] * x[i] * x[j];
    return make_rational(s, det);
}

namespace {

struct SNFWork {
    int k;
    IntMatrixRows a, u, v;

    void swap_rows(int i, int j) { std::swap(a[i], a[j]); std::swap(u[i], u[j]); }

    void swap_cols(int i, int j) {
        for (int r = 0; r < k; ++r) { std::swap(a[r][i], a[r][j]); std::swap(v[r][i], v[r][j]); }
    }

    void add_row(int dst, int src, const Integer& f) {
        for (int c = 0; c < k; ++c) { a[dst][c] += f * a[src][c]; u[dst][c] += f * u[src][c]; }
    }

    void add_col(int dst, int src, const Integer& f) {
        for (int r = 0; r < k; ++r) { a[r][dst] += f * a[r][src]; v[r][dst] += f * v[r][src]; }
    }

    void negate_row(int i) {
        for (int c = 0; c < k; ++c) { a[i][c] = -a[i][c]; u[i][c] = -u[i][c]; }
    }

    // Smallest nonzero |entry| in the trailing submatrix, first hit in
    // row-major order on ties; false when the submatrix is zero.
    bool find_pivot(int t, int& pr, int& pc) const {
        bool found = false;
        Integer best;
        for (int r = t; r < k; ++r)
            for (int c = t; c < k; ++c) {
                if (a[r][c] == 0) continue;
                Integer v2 = abs(a[r][c]);
                if (!found || v2 < best) { found = true; best = v2; pr = r; pc = c; }
            }
        return found;
    }

    // Clear row t and column t below/right of the pivot at (t,t).
    // Returns true once every off-pivot entry in row/column t is zero.
    bool reduce_at(int t) {
        bool clean = true;
        for (int i = t + 1; i < k; ++i) {
            if (a[i][t] == 0) continue;
            Integer q;
            mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
            if (q != 0) add_row(i, t, Integer(-q));
            if (a[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < k; ++j) {
            if (a[t][j] == 0) continue;
            Integer q;
            mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
            if (q != 0) add_col(j, t, Integer(-q));
            if (a[t][j] != 0) clean = false;
        }
        return clean;
    }

    void diagonalize_from(int t) {
        for (; t < k; ++t) {
            for (;;) {
                int pr = 0, pc = 0;
                if (!find_pivot(t, pr, pc)) return;  // trailing zeros
                if (pr != t) swap_rows(t, pr);
                if (pc != t) swap_cols(t, pc);
                if (reduce_at(t)) break;
            }
        }
    }
};

}  // namespace

SNFDecomposition smith_normal_form(const IntSymMatrix& m) {
    const int k = m.dim();
    SNFWork w;
    w.k = k;
    w.a = m.rows();
    w.u.assign(k, std::vector<Integer>(k, 0));
    w.v.assign(k, std::vector<Integer>(k, 0));
    for (int i = 0; i < k; ++i) { w.u[i][i] = 1; w.v[i][i] = 1; }

    w.diagonalize_from(0);

    // Enforce the divisibility chain: pull the offending diagonal entry into
    // column t and rediagonalize. Each pass strictly shrinks d_t, so this
    // terminates.
    for (int t = 0; t + 1 < k; ++t) {
        for (;;) {
            if (w.a[t][t] == 0) break;
            int bad = -1;
            for (int j = t + 1; j < k; ++j)
                if (w.a[j][j] % w.a[t][t] != 0) { bad = j; break; }
            if (bad < 0) break;
            w.add_col(t, bad, Integer(1));
            w.diagonalize_from(t);
        }
    }

    for (int t = 0; t < k; ++t)
        if (w.a[t][t] < 0) w.negate_row(t);

    SNFDecomposition out;
    out.k = k;
    out.U = std::move(w.u);
    out.V = std::move(w.v);
    out.diagonal.resize(k);
    for (int t = 0; t < k; ++t) out.diagonal[t] = w.a[t][t];

    // U*M*V == diag must hold exactly; anything else is a bug.
    IntMatrixRows check = mat_mul(mat_mul(out.U, m.rows()), out.V);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Integer want = (i == j) ? out.diagonal[i] : Integer(0);
            if (check[i][j] != want) throw InternalError("smith normal form verification failed");
        }
    for (int i = 0; i + 1 < k; ++i) {
        if (out.diagonal[i] < 0) throw InternalError("smith normal form sign normalization failed");
        if (out.diagonal[i] != 0 && out.diagonal[i + 1] % out.diagonal[i] != 0)
            throw InternalError("smith normal form divisibility chain failed");
        if (out.diagonal[i] == 0 && out.diagonal[i + 1] != 0)
            throw InternalError("smith normal form zero ordering failed");
    }
    return out;
}

}  // namespace h2k
