// Growth diagnostics for delta expansions and the small norm calculus on the
// associated weighted sequence spaces.
#pragma once

#include "deltasym/delta_expansion.hpp"

#include <vector>

namespace dsym {

/// Weight parameters of one sequence-space norm: the exponent beta, the
/// inverse scale B, and the seminorm order N.
struct ClassParams {
    Rational beta;
    Rational b;
    int n = 0;
};

/// Norm of the dual basis functional at kappa:
/// B^(-|kappa|) * prod_j kappa_j^(-beta*kappa_j) with 0^0 = 1.
/// The value is an exact rational precisely when every beta*kappa_j is an
/// integer; otherwise only the float approximation is meaningful.
struct DualNorm {
    bool exact = false;
    Rational value;
    double approx = 0.0;
};
DualNorm dual_norm(const MultiIndex& k, const ClassParams& params);

/// The sequence m_n = n^beta * max_{|kappa|=n} |c_kappa|^(1/n) for
/// 1 <= n <= n_max; orders with no terms contribute 0. No verdict is
/// attached: a finite truncation cannot decide the limit, so classification
/// stays with the caller.
std::vector<double> growth_sequence(const DeltaExpansion& v, const Rational& beta, int n_max);

/// Inputs of the norm-interpolation witness: three scales with b0 < b1 and
/// b0 < b, a seminorm order, and a contraction factor in (0, 1).
struct AcyclicityParams {
    Rational b0;
    Rational b1;
    Rational b;
    int n1 = 0;
    Rational eps1;
};

/// The witness itself: a = log(b/b0)/log(b1/b0), eps = eps1^a,
/// n = ceil(a*n1). When a equals a fraction p/q with p, q <= 64 this is
/// detected by exact comparison of rational powers, and a and n are exact.
struct AcyclicityWitness {
    double a = 0.0;
    bool a_exact = false;
    Rational a_rational;
    double eps = 0.0;
    long n = 0;
};
AcyclicityWitness acyclicity_params(const AcyclicityParams& p);

} // namespace dsym
