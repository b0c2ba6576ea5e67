#pragma once

// Dense integer matrices plus the lattice algorithms the workbench relies on:
// row-style Hermite normal form, Smith normal form with transforms, exact
// determinants/inverses, and sum/dual/intersection of full-rank rational
// lattices (rows span the lattice, scaled by a common denominator).

#include <cstddef>
#include <optional>
#include <vector>

#include "qfw/numeric.hpp"

namespace qfw {

struct IMat {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const IMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    static IMat identity(size_t n) {
        IMat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < cols; ++k) std::swap(at(i, k), at(j, k));
    }

    // row i -= q * row j
    void submul_row(size_t i, size_t j, const Int& q) {
        if (q == 0) return;
        for (size_t k = 0; k < cols; ++k) at(i, k) -= q * at(j, k);
    }

    void negate_row(size_t i) {
        for (size_t k = 0; k < cols; ++k) at(i, k) = -at(i, k);
    }
};

inline Int content(const IMat& m) {
    Int g = 0;
    for (const auto& x : m.a) g = int_gcd(g, x);
    return g;
}

// Row-style HNF: returns a matrix whose rows are an echelon basis of the row
// lattice of m.  Pivots are positive, entries above a pivot are reduced into
// [0, pivot), zero rows are dropped.  For a full-rank square input the result
// is upper triangular with positive diagonal.
inline IMat hnf(IMat m) {
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        // Euclidean elimination below `row` in this column.
        while (true) {
            size_t best = m.rows;
            for (size_t i = row; i < m.rows; ++i) {
                if (m.at(i, col) == 0) continue;
                if (best == m.rows ||
                    cmp(abs(m.at(i, col)), abs(m.at(best, col))) < 0)
                    best = i;
            }
            if (best == m.rows) break;  // column is zero below `row`
            m.swap_rows(row, best);
            bool clean = true;
            for (size_t i = row + 1; i < m.rows; ++i) {
                if (m.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(),
                           m.at(row, col).get_mpz_t());
                m.submul_row(i, row, q);
                if (m.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m.at(row, col) == 0) continue;
        if (m.at(row, col) < 0) m.negate_row(row);
        for (size_t i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(),
                       m.at(row, col).get_mpz_t());
            m.submul_row(i, row, q);
        }
        ++row;
    }
    IMat out(row, m.cols);
    for (size_t i = 0; i < row; ++i)
        for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(IMat m) {
    if (m.rows != m.cols) throw internal_error("det: matrix not square");
    size_t n = m.rows;
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// Exact inverse of a nonsingular integer matrix: returns (N, den) with
// inverse = N/den, den > 0, gcd(content(N), den) not necessarily 1.
inline std::pair<IMat, Int> inverse(const IMat& m) {
    if (m.rows != m.cols) throw internal_error("inverse: matrix not square");
    size_t n = m.rows;
    // Gauss-Jordan over exact rationals.
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) w[i][j] = Rat(m.at(i, j));
        w[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && w[piv][col] == 0) ++piv;
        if (piv == n) throw internal_error("inverse: singular matrix");
        std::swap(w[col], w[piv]);
        Rat p = w[col][col];
        for (size_t j = 0; j < 2 * n; ++j) w[col][j] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[col][j];
        }
    }
    Int den = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            den = int_lcm(den, w[i][n + j].get_den());
    IMat out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat v = w[i][n + j] * den;
            out.at(i, j) = v.get_num();  // exact: den cleared every denominator
        }
    return {out, den};
}

inline IMat transpose(const IMat& m) {
    IMat t(m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline IMat mat_mul(const IMat& x, const IMat& y) {
    if (x.cols != y.rows) throw internal_error("mat_mul: shape mismatch");
    IMat z(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (size_t j = 0; j < y.cols; ++j)
                z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

// Smith normal form with transforms: U*A*V = D, U and V unimodular, D diagonal
// with d_i >= 0 and d_i | d_{i+1}.
struct Smith {
    IMat U, D, V;
};

inline Smith snf(IMat A) {
    size_t m = A.rows, n = A.cols;
    IMat U = IMat::identity(m), V = IMat::identity(n);
    auto col_submul = [&](IMat& M, size_t j, size_t k, const Int& q) {
        if (q == 0) return;
        for (size_t i = 0; i < M.rows; ++i) M.at(i, j) -= q * M.at(i, k);
    };
    auto col_swap = [&](IMat& M, size_t j, size_t k) {
        if (j == k) return;
        for (size_t i = 0; i < M.rows; ++i) std::swap(M.at(i, j), M.at(i, k));
    };
    size_t t = 0;
    while (t < m && t < n) {
        // Locate a nonzero entry of minimal absolute value in the trailing block.
        size_t pi = m, pj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (A.at(i, j) == 0) continue;
                if (pi == m || cmp(abs(A.at(i, j)), abs(A.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m) break;  // trailing block is zero
        A.swap_rows(t, pi);
        U.swap_rows(t, pi);
        col_swap(A, t, pj);
        col_swap(V, t, pj);
        bool dirty = false;
        for (size_t i = t + 1; i < m; ++i) {
            if (A.at(i, t) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A.at(i, t).get_mpz_t(), A.at(t, t).get_mpz_t());
            A.submul_row(i, t, q);
            U.submul_row(i, t, q);
            if (A.at(i, t) != 0) dirty = true;
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (A.at(t, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A.at(t, j).get_mpz_t(), A.at(t, t).get_mpz_t());
            col_submul(A, j, t, q);
            col_submul(V, j, t, q);
            if (A.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // euclidean size dropped; repeat at same t
        // Pivot now divides its row and column; enforce divisibility of the
        // remaining block.
        bool fixed = false;
        for (size_t i = t + 1; i < m && !fixed; ++i)
            for (size_t j = t + 1; j < n && !fixed; ++j)
                if (A.at(i, j) % A.at(t, t) != 0) {
                    // Fold row i into row t and restart this pivot.
                    A.submul_row(t, i, Int(-1));
                    U.submul_row(t, i, Int(-1));
                    fixed = true;
                }
        if (fixed) continue;
        if (A.at(t, t) < 0) {
            A.negate_row(t);
            U.negate_row(t);
        }
        ++t;
    }
    return Smith{U, A, V};
}

inline std::vector<Int> snf_divisors(const IMat& A) {
    Smith s = snf(A);
    std::vector<Int> d;
    size_t n = std::min(s.D.rows, s.D.cols);
    for (size_t i = 0; i < n; ++i)
        if (s.D.at(i, i) != 0) d.push_back(s.D.at(i, i));
    return d;
}

// ---------------------------------------------------------------------------
// Full-rank rational lattices in Q^n: rows of B span the lattice, scaled by
// 1/den.  Canonical form: B in HNF, den > 0, gcd(content(B), den) = 1.
// ---------------------------------------------------------------------------

struct Lattice {
    IMat B;
    Int den = 1;
};

inline Lattice lat_canon(IMat B, Int den) {
    if (den == 0) throw internal_error("lattice: zero denominator");
    if (den < 0) {
        den = -den;
        for (auto& x : B.a) x = -x;
    }
    B = hnf(std::move(B));
    Int g = int_gcd(content(B), den);
    if (g > 1) {
        for (auto& x : B.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    return Lattice{std::move(B), den};
}

inline bool lat_equal(const Lattice& x, const Lattice& y) {
    return x.den == y.den && x.B == y.B;
}

inline Lattice lat_sum(const Lattice& x, const Lattice& y) {
    if (x.B.cols != y.B.cols) throw internal_error("lat_sum: dimension mismatch");
    Int den = int_lcm(x.den, y.den);
    Int fx = den / x.den, fy = den / y.den;
    IMat s(x.B.rows + y.B.rows, x.B.cols);
    for (size_t i = 0; i < x.B.rows; ++i)
        for (size_t j = 0; j < s.cols; ++j) s.at(i, j) = x.B.at(i, j) * fx;
    for (size_t i = 0; i < y.B.rows; ++i)
        for (size_t j = 0; j < s.cols; ++j) s.at(x.B.rows + i, j) = y.B.at(i, j) * fy;
    return lat_canon(std::move(s), den);
}

// Dual lattice with respect to the standard dot product; requires a full-rank
// square basis.
inline Lattice lat_dual(const Lattice& x) {
    if (x.B.rows != x.B.cols)
        throw internal_error("lat_dual: basis not square/full-rank");
    auto [inv, iden] = inverse(x.B);
    // dual(B/den) = den * (B^{-1})^T = den * inv^T / iden
    IMat t = transpose(inv);
    for (auto& v : t.a) v *= x.den;
    return lat_canon(std::move(t), iden);
}

inline Lattice lat_intersect(const Lattice& x, const Lattice& y) {
    return lat_dual(lat_sum(lat_dual(x), lat_dual(y)));
}

// Solve row * B = v exactly over the integers for upper-triangular full-rank
// B (as produced by hnf of a full-rank square matrix).  Returns nullopt if no
// integer solution exists.
inline std::optional<std::vector<Int>> solve_upper(const IMat& B,
                                                   const std::vector<Int>& v) {
    if (B.rows != B.cols || v.size() != B.cols)
        throw internal_error("solve_upper: shape mismatch");
    size_t n = B.rows;
    std::vector<Int> y(n);
    for (size_t j = 0; j < n; ++j) {
        Int acc = v[j];
        for (size_t i = 0; i < j; ++i) acc -= y[i] * B.at(i, j);
        if (B.at(j, j) == 0) {
            if (acc != 0) return std::nullopt;
            y[j] = 0;
            continue;
        }
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(),
                    B.at(j, j).get_mpz_t());
        if (r != 0) return std::nullopt;
        y[j] = q;
    }
    return y;
}

// Membership of v/vden in lattice x (x.B upper-triangular canonical).
inline bool lat_contains(const Lattice& x, const std::vector<Int>& v, const Int& vden) {
    // v/vden in B/den  <=>  v * den / vden in row span of B (integrally).
    Int l = int_lcm(x.den, vden);
    Int f = l / vden;
    if (l != x.den) {
        // Scale the lattice basis instead of the vector to stay integral.
        IMat B = x.B;
        Int fb = l / x.den;
        for (auto& e : B.a) e *= fb;
        B = hnf(std::move(B));
        std::vector<Int> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] * f;
        return solve_upper(B, w).has_value();
    }
    std::vector<Int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] * f;
    return solve_upper(x.B, w).has_value();
}

}  // namespace qfw
