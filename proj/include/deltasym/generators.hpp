// The six first-order generators in four variables, plus the second-order
// operators built from them. Index 0 is the distinguished (time-like)
// variable; indices 1..3 are spatial.
//
//   boost    N_j  = v_j d_0 + v_0 d_j          (j = 1..3)
//   rotation M_ij = v_j d_i - v_i d_j          (i, j spatial, M_ji = -M_ij)
//
// Their commutation relations close: [N_j, M_ij] = N_i, [N_i, N_j] = -M_ij,
// and the rotation part closes among itself. The quadratic rotation operator
// casimir_so3 = -(M_12^2 + M_13^2 + M_23^2) has eigenvalue l(l+1) on
// harmonic polynomials of degree l.
#pragma once

#include "deltasym/delta_expansion.hpp"
#include "deltasym/diff_op.hpp"

namespace dsym {

/// N_j for j in 1..3.
DiffOp boost_generator(std::size_t j, VarSpace space);

/// M_ij for spatial i != j.
DiffOp rotation_generator(std::size_t i, std::size_t j, VarSpace space);

/// All six generators in a fixed order with stable display names:
/// N1, N2, N3, M12, M13, M23.
struct NamedOp {
    std::string name;
    DiffOp op;
};
std::vector<NamedOp> all_generators(VarSpace space);

/// -(M12^2 + M13^2 + M23^2).
DiffOp casimir_so3(VarSpace space);

/// d0^2 - d1^2 - d2^2 - d3^2.
DiffOp wave_operator(VarSpace space);

/// d1^2 + d2^2 + d3^2.
DiffOp spatial_laplacian(VarSpace space);

/// The invariant functional (wave_operator)^l applied to delta.
DeltaExpansion box_delta(int l);

/// The momentum polynomial p0^2 - p1^2 - p2^2 - p3^2.
Poly momentum_square();

} // namespace dsym
