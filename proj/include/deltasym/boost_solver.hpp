// Exact solver for the boost equation N_1 v = u on rotation-invariant
// homogeneous polynomials, plus the certified bounds on the inverse matrix
// and the completion pipeline that renders a pair of point-supported
// functionals fully Lorentz-invariant without changing their difference.
//
// The 2D analogue has a nontrivial cokernel; cokernel_2d computes certified
// representatives of it, which is exactly the obstruction that makes the
// two-dimensional completion impossible.
#pragma once

#include "deltasym/delta_expansion.hpp"
#include "deltasym/matrix.hpp"
#include "deltasym/poly.hpp"

#include <utility>
#include <vector>

namespace dsym {

/// Basis p0^(n-2k) * |p|^(2k), k = 0..n/2, of the rotation-invariant
/// homogeneous polynomials of degree n in momentum variables.
std::vector<Poly> basis_F(int n);

/// Basis p0^(n-2k-1) * |p|^(2k) * p1, k = 0..(n-1)/2, of the space the boost
/// N_1 maps basis_F(n) into. Requires n >= 1; the space is trivial at n = 0.
std::vector<Poly> basis_G(int n);

/// Matrix of N_1 = p1*D0 + p0*D1 from basis_F(n) to basis_G(n), computed by
/// applying the operator and expanding the images in basis_G(n).
MatrixQ boost_matrix(int n);

/// Checks and certificates around the boost matrix and its inverse. The same
/// report type serves the inverse checks and the solver coefficient bound;
/// each producer fills the fields relevant to it and the `pass` conjunction.
struct SplitReport {
    int n = 0;
    MatrixQ matrix;  // boost matrix on the chosen bases
    MatrixQ inverse; // inverse of the matrix (restricted to its first n/2
                     // columns when n is even)

    // inverse_bound_check fields
    std::vector<Scalar> last_column;        // computed last column of the inverse
    std::vector<Scalar> last_column_closed; // double-factorial closed form, absolute values
    bool closed_form_ok = false;
    bool monotone_ok = false;    // |entries| grow along diagonals toward the last column
    bool entry_bound_ok = false; // every squared entry stays within 2^n
    Rational max_entry_sq;       // largest squared entry of the inverse

    // coefficient_bound_check fields
    Rational max_input_sq;             // largest squared coefficient of u
    Rational max_solution_sq;          // largest squared coefficient of the solution
    bool coefficient_bound_ok = false; // solution within 6^(n/2) times the input
    bool residual_zero = false;        // N_1 v - u vanished exactly

    bool pass = false;
};

/// Inverts the boost matrix exactly and certifies the closed form of its
/// last column, the monotone growth of the entries, and the 2^(n/2) bound.
SplitReport inverse_bound_check(int n);

/// Solves N_1 v0 = u with v0 in span(basis_F(n)). For even n the coefficient
/// of |p|^n in v0 is fixed to 0, which resolves the one-dimensional kernel.
/// Preconditions on u: M_23-invariance, casimir eigenvalue 2, and membership
/// in span(basis_G(n)); each failure raises its own domain error.
Poly solve_boost_equation(const Poly& u, int n);

/// Solves as above and certifies that the solution's largest coefficient
/// magnitude is at most 6^(n/2) times that of u, comparing exact squares.
SplitReport coefficient_bound_check(const Poly& u, int n);

/// Completion pipeline: given (v_plus, v_minus) whose difference is Lorentz
/// invariant, returns (w_plus, w_minus) with the same difference and each
/// output annihilated by all six generators. Projects both inputs onto their
/// rotation-invariant parts degree by degree, then removes the boost defect
/// of the projected v_plus by solving N_1 v = u per degree.
std::pair<DeltaExpansion, DeltaExpansion> invariant_completion(const DeltaExpansion& v_plus,
                                                               const DeltaExpansion& v_minus);

/// Cokernel of N_1 = p1*D0 + p0*D1 on degree-n homogeneous polynomials in
/// two momentum variables (p0, p1): one representative per class, certified
/// to lie outside the image by an exact rank computation. The basis is
/// {(p0^2 - p1^2)^(n/2)} for even n and empty for odd n.
std::vector<Poly> cokernel_2d(int n);

} // namespace dsym
