// Dense matrices over exact complex rationals, with the handful of
// eliminations the solvers need: rank, solve, nullspace, inverse.
//
// Pivoting is deterministic (first nonzero entry in column order), so every
// derived object (nullspace basis, particular solution) is reproducible
// across runs and platforms.
#pragma once

#include "deltasym/scalar.hpp"

#include <optional>
#include <vector>

namespace dsym {

class MatrixQ {
public:
    MatrixQ() : rows_(0), cols_(0) {}
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<Scalar>(cols)) {}

    static MatrixQ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i][j]; }

    MatrixQ transpose() const;
    MatrixQ mul(const MatrixQ& o) const;
    std::vector<Scalar> mul_vec(const std::vector<Scalar>& v) const;

    /// Reduced row echelon form; pivot columns reported in order.
    MatrixQ rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    std::size_t rank() const;

    /// One exact solution of A x = b with free variables set to zero, or
    /// nullopt when the system is inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    /// Basis of the right nullspace, one vector per free column, in column
    /// order; each has 1 in its free coordinate.
    std::vector<std::vector<Scalar>> nullspace() const;

    /// Inverse of a square matrix; throws when singular.
    MatrixQ inverse() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Scalar>> a_;
};

} // namespace dsym
