// Harmonic analysis in the three spatial momentum variables p1, p2, p3.
//
// A "spatial" polynomial is a momentum polynomial of full dimension 4 that
// does not involve p0. Every homogeneous spatial polynomial of degree m
// splits uniquely as sum_k |p|^(2k) h_k with h_k harmonic (killed by the
// spatial laplacian) of degree m - 2k; the rotation-invariant part of any
// polynomial is obtained by keeping the degree-0 harmonic component of each
// piece, which is a polynomial in p0 and |p|^2.
#pragma once

#include "deltasym/poly.hpp"

#include <utility>
#include <vector>

namespace dsym {

bool is_spatial(const Poly& p);

/// |p|^(2k) = (p1^2 + p2^2 + p3^2)^k.
Poly radial_power(int k);

/// Split a homogeneous degree-n momentum polynomial as sum of p0^(n-l) Q_l
/// with Q_l spatial of degree l; pairs returned with ascending l, zero parts
/// omitted.
std::vector<std::pair<int, Poly>> grade_by_p0(const Poly& p);

/// Dimension of the degree-l harmonic space; always 2l + 1.
std::size_t dim_harmonic(int l);

/// Basis of harmonic spatial polynomials of exact degree m (cached). The
/// basis is the canonical nullspace basis of the laplacian matrix in
/// lexicographic monomial order; its size is 2m + 1.
const std::vector<Poly>& harmonic_basis(int m);

/// Unique splitting of a homogeneous spatial polynomial of degree m into
/// pairs (k, h) with q = sum |p|^(2k) h and h harmonic of degree m - 2k.
/// Entries are returned for every k up to m/2, including zero ones.
std::vector<std::pair<int, Poly>> harmonic_decompose(const Poly& q);

/// Rotation-invariant part of an arbitrary momentum polynomial: for each
/// p0-power and spatial degree, the radial component of the splitting.
Poly so3_project(const Poly& p);

/// Exact rotation from the Cayley transform of the skew matrix built on
/// parameters (a, b, c): a 4 x 4 substitution matrix acting on the spatial
/// variables and fixing index 0. Useful for invariance checks.
std::vector<std::vector<Scalar>> cayley_rotation4(const Rational& a, const Rational& b,
                                                  const Rational& c);

} // namespace dsym
