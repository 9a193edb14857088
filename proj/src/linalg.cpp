#include "fpfun/linalg.hpp"

#include <stdexcept>

namespace fpfun {

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d;
    for (int i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
}

int SmithDecomposition::rank() const {
    int r = 0;
    for (int i = 0; i < std::min(S.rows(), S.cols()); ++i)
        if (S(i, i) != 0) ++r;
    return r;
}

namespace {

// Truncated quotient; with min-abs pivoting this is a plain Euclidean step.
Int tquo(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    SmithDecomposition d{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& S = d.S;

    for (int t = 0; t < std::min(m, n); ++t) {
        // pivot: minimal nonzero absolute value in the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (S(i, j) != 0 &&
                    (pi < 0 || abs_int(S(i, j)) < abs_int(S(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        S.swap_rows(t, pi);
        d.U.swap_rows(t, pi);
        S.swap_cols(t, pj);
        d.V.swap_cols(t, pj);

        for (;;) {
            // clear column t below the pivot
            for (int i = t + 1; i < m; ++i)
                while (S(i, t) != 0) {
                    Int q = tquo(S(i, t), S(t, t));
                    S.add_row_multiple(i, t, q);
                    d.U.add_row_multiple(i, t, q);
                    if (S(i, t) != 0) {  // remainder became the smaller pivot
                        S.swap_rows(t, i);
                        d.U.swap_rows(t, i);
                    }
                }
            // clear row t right of the pivot
            bool row_clean = true;
            for (int j = t + 1; j < n; ++j)
                while (S(t, j) != 0) {
                    Int q = tquo(S(t, j), S(t, t));
                    S.add_col_multiple(j, t, q);
                    d.V.add_col_multiple(j, t, q);
                    if (S(t, j) != 0) {
                        S.swap_cols(t, j);
                        d.V.swap_cols(t, j);
                        row_clean = false;
                    }
                }
            if (!row_clean) continue;  // column may be dirty again
            bool col_clean = true;
            for (int i = t + 1; i < m; ++i)
                if (S(i, t) != 0) col_clean = false;
            if (!col_clean) continue;

            // divisibility chain: fold any non-multiple into the pivot row
            int bad_i = -1, bad_j = -1;
            for (int i = t + 1; i < m && bad_i < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        bad_i = i;
                        bad_j = j;
                        break;
                    }
            if (bad_i < 0) break;
            S.add_row_multiple(t, bad_i, Int(-1));
            d.U.add_row_multiple(t, bad_i, Int(-1));
        }

        if (S(t, t) < 0) {
            S.negate_row(t);
            d.U.negate_row(t);
        }
    }
    return d;
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    const int m = a.rows(), n = a.cols(), k = b.cols();
    SmithDecomposition d = snf(a);
    IntMatrix c = d.U * b;
    IntMatrix y(n, k);
    const int diag = std::min(m, n);
    for (int i = 0; i < m; ++i) {
        const Int* di = (i < diag) ? &d.S(i, i) : nullptr;
        for (int j = 0; j < k; ++j) {
            if (di && *di != 0) {
                if (c(i, j) % *di != 0) return std::nullopt;
                y(i, j) = c(i, j) / *di;
            } else if (c(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    return d.V * y;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    const int n = a.cols();
    SmithDecomposition d = snf(a);
    const int diag = std::min(a.rows(), n);
    std::vector<int> js;
    for (int j = 0; j < n; ++j)
        if (j >= diag || d.S(j, j) == 0) js.push_back(j);
    return d.V.columns(js);
}

int rank_over_fractions(const IntMatrix& a) { return snf(a).rank(); }

IntMatrix lattice_column_basis(const IntMatrix& a) {
    IntMatrix x = a;
    const int m = x.rows(), n = x.cols();
    int t = 0;
    for (int r = 0; r < m && t < n; ++r) {
        int j0 = -1;
        for (int j = t; j < n; ++j)
            if (x(r, j) != 0) {
                j0 = j;
                break;
            }
        if (j0 < 0) continue;
        x.swap_cols(t, j0);
        for (int j = t + 1; j < n; ++j)
            while (x(r, j) != 0) {
                if (abs_int(x(r, j)) < abs_int(x(r, t))) x.swap_cols(t, j);
                x.add_col_multiple(j, t, tquo(x(r, j), x(r, t)));
            }
        if (x(r, t) < 0) x.negate_col(t);
        ++t;
    }
    std::vector<int> js(t);
    for (int j = 0; j < t; ++j) js[j] = j;
    return x.columns(js);
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix x = a;
    Int prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (x(t, t) == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (x(i, t) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            x.swap_rows(t, p);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j) {
                Int num = x(i, j) * x(t, t) - x(i, t) * x(t, j);
                mpz_divexact(x(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = x(t, t);
    }
    return sign > 0 ? x(n - 1, n - 1) : Int(-x(n - 1, n - 1));
}

}  // namespace fpfun
