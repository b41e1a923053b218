#include "deltasym/matrix.hpp"

namespace dsym {

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = a_[i][j];
    return m;
}

MatrixQ MatrixQ::mul(const MatrixQ& o) const {
    if (cols_ != o.rows_) throw Error(ErrorKind::dimension, "matrix product shape mismatch");
    MatrixQ m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (a_[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a_[i][k] * o.a_[k][j];
        }
    return m;
}

std::vector<Scalar> MatrixQ::mul_vec(const std::vector<Scalar>& v) const {
    if (cols_ != v.size()) throw Error(ErrorKind::dimension, "matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += a_[i][j] * v[j];
    return out;
}

MatrixQ MatrixQ::rref(std::vector<std::size_t>* pivot_cols) const {
    MatrixQ m = *this;
    if (pivot_cols) pivot_cols->clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && m.a_[pivot][col].is_zero()) ++pivot;
        if (pivot == rows_) continue;
        std::swap(m.a_[row], m.a_[pivot]);
        Scalar inv = Scalar(1) / m.a_[row][col];
        for (std::size_t j = col; j < cols_; ++j) m.a_[row][j] *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || m.a_[i][col].is_zero()) continue;
            Scalar f = m.a_[i][col];
            for (std::size_t j = col; j < cols_; ++j) m.a_[i][j] -= f * m.a_[row][j];
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return m;
}

std::size_t MatrixQ::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::optional<std::vector<Scalar>> MatrixQ::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw Error(ErrorKind::dimension, "solve right-hand side shape mismatch");
    MatrixQ aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = a_[i][j];
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots;
    MatrixQ r = aug.rref(&pivots);
    // A pivot in the augmented column means no solution exists.
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Scalar> x(cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, cols_);
    return x;
}

std::vector<std::vector<Scalar>> MatrixQ::nullspace() const {
    std::vector<std::size_t> pivots;
    MatrixQ r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(cols_);
        v[free_col] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

MatrixQ MatrixQ::inverse() const {
    if (rows_ != cols_) throw Error(ErrorKind::dimension, "inverse of non-square matrix");
    if (rows_ == 0) return MatrixQ(0, 0);
    MatrixQ aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = a_[i][j];
        aug.at(i, cols_ + i) = Scalar(1);
    }
    std::vector<std::size_t> pivots;
    MatrixQ r = aug.rref(&pivots);
    if (pivots.size() != rows_ || pivots.back() != rows_ - 1)
        throw Error(ErrorKind::domain, "matrix is singular");
    MatrixQ inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
    return inv;
}

} // namespace dsym
