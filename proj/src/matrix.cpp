#include "fpfun/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fpfun {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
        for (long x : r) a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += x * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix out = *this;
    for (auto& x : out.a_) x = -x;
    return out;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix out = *this;
    for (auto& x : out.a_) x *= c;
    return out;
}

IntMatrix IntMatrix::column(int j) const { return columns({j}); }

IntMatrix IntMatrix::columns(const std::vector<int>& js) const {
    IntMatrix out(rows_, int(js.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t k = 0; k < js.size(); ++k) out(i, int(k)) = (*this)(i, js[k]);
    return out;
}

void IntMatrix::swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_cols(int j, int k) {
    if (j == k) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
}

void IntMatrix::add_row_multiple(int i, int k, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < cols_; ++j) (*this)(i, j) -= q * (*this)(k, j);
}

void IntMatrix::add_col_multiple(int j, int k, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < rows_; ++i) (*this)(i, j) -= q * (*this)(i, k);
}

void IntMatrix::negate_row(int i) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(int j) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix out(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
    }
    return out;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

IntMatrix vec(const IntMatrix& m) {
    IntMatrix v(m.rows() * m.cols(), 1);
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) v(j * m.rows() + i, 0) = m(i, j);
    return v;
}

IntMatrix unvec(const IntMatrix& v, int rows, int cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) throw std::invalid_argument("unvec: shape mismatch");
    IntMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = v(j * rows + i, 0);
    return m;
}

}  // namespace fpfun
