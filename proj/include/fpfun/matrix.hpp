#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "fpfun/arith.hpp"

namespace fpfun {

/// Dense matrix over the base ring, row-major. Zero-dimension matrices are
/// first-class: identity conventions apply to empty products.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {
        assert(rows >= 0 && cols >= 0);
    }
    /// Construct from rows; all rows must have equal length.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[size_t(i) * cols_ + j];
    }
    const Int& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[size_t(i) * cols_ + j];
    }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& c) const;

    IntMatrix column(int j) const;
    /// Matrix formed by the listed columns, in order.
    IntMatrix columns(const std::vector<int>& js) const;

    void swap_rows(int i, int k);
    void swap_cols(int j, int k);
    /// row i -= q * row k
    void add_row_multiple(int i, int k, const Int& q);
    /// col j -= q * col k
    void add_col_multiple(int j, int k, const Int& q);
    void negate_row(int i);
    void negate_col(int j);

    std::string to_string() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

/// [A | B]
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [A ; B]
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// diag(A, B) as blocks
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
/// Kronecker product A (x) B
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
/// Column-major vectorization as a single column.
IntMatrix vec(const IntMatrix& m);
/// Inverse of vec for the given shape.
IntMatrix unvec(const IntMatrix& v, int rows, int cols);

}  // namespace fpfun
