// Exact division of polynomials by coordinate powers. The centerpiece writes
// a polynomial whose low-order terms vanish as a combination
// f = sum_i x_i^(m+1) * f_i, and a four-variable refinement rewrites the
// coordinate powers through the entries of the Hermitian matrix form so that
// every term carries a high power of a single entry.
#pragma once

#include "deltasym/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dsym {

/// Divides f by the coordinate x_i. The quotient is exact; if some term of f
/// has no x_i factor, a domain error names that term.
Poly divide_by_coordinate(const Poly& f, std::size_t i);

/// Writes f = sum_i x_i^e * out[i], bucketing each term of f under the first
/// variable whose exponent reaches e. A term with every exponent below e is
/// an obstruction and raises a domain error naming it.
std::vector<Poly> coordinate_power_decompose(const Poly& f, int e);

/// The jet-vanishing decomposition: checks that every term of f has total
/// degree above m*dim (equivalently, all derivatives of order <= m*dim vanish
/// at 0), then returns f_i with sum_i x_i^(m+1) * f_i = f. The degree check
/// guarantees the bucketing never hits an obstruction.
std::vector<Poly> lemma3_decompose(const Poly& f, int m);

/// Splits a four-variable polynomial over the entries of the Hermitian
/// matrix form: f = sum u_(rho,sigma)^s2 * result[(rho,sigma)] with rho,
/// sigma in {1, 2}. Computed by decomposing f over coordinate powers
/// x_i^(2*s2) and expanding each such power binomially through the two
/// entries that combine to x_i; every binomial term puts at least s2 on one
/// entry, which fixes the bucket.
std::map<std::pair<int, int>, Poly> sl2_matrix_split(const Poly& f, int s2);

} // namespace dsym
