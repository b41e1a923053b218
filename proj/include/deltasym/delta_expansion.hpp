// Finite sums  sum_k c_k d^k(delta)  of derivatives of the point-supported
// delta functional, in position variables. The conventions fixed here and
// used throughout:
//
//   pairing        (d^k delta, f) = (-1)^|k| (d^k f)(0)
//   multiplication x^m * d^k delta = (-1)^|m| k!/(k-m)! d^(k-m) delta  (m <= k)
//   transform      fourier(d^k delta) = (-i)^|k| p^k
//
// so fourier(v) is the polynomial p -> (v, exp(i p.x)). Applying a
// first-order generator acts in the adjoint way that matches the transform:
// multiplication by x_mu on this side corresponds to -i d/dp_mu on the
// polynomial side.
#pragma once

#include "deltasym/diff_op.hpp"
#include "deltasym/poly.hpp"

#include <map>

namespace dsym {

class DeltaExpansion {
public:
    using Terms = std::map<MultiIndex, Scalar>;

    explicit DeltaExpansion(std::size_t dim = 4) : dim_(dim) {}

    /// The plain delta functional.
    static DeltaExpansion delta(std::size_t dim = 4);
    /// coeff * d^k(delta).
    static DeltaExpansion term(std::size_t dim, const MultiIndex& k, const Scalar& coeff = Scalar(1));

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const MultiIndex& k) const;
    void add_term(const MultiIndex& k, const Scalar& c);

    /// Largest derivative order present; -1 for zero.
    int order() const;
    std::vector<int> orders_present() const;
    /// The part whose derivative order is exactly n.
    DeltaExpansion order_part(int n) const;

    DeltaExpansion operator-() const;
    DeltaExpansion& operator+=(const DeltaExpansion& o);
    DeltaExpansion& operator-=(const DeltaExpansion& o);
    DeltaExpansion& operator*=(const Scalar& c);

    friend DeltaExpansion operator+(DeltaExpansion a, const DeltaExpansion& b) { return a += b; }
    friend DeltaExpansion operator-(DeltaExpansion a, const DeltaExpansion& b) { return a -= b; }
    friend DeltaExpansion operator*(DeltaExpansion a, const Scalar& c) { return a *= c; }
    friend DeltaExpansion operator*(const Scalar& c, DeltaExpansion a) { return a *= c; }
    friend bool operator==(const DeltaExpansion& a, const DeltaExpansion& b);

    /// Pair with a position polynomial: (v, f).
    Scalar pair(const Poly& f) const;

    /// Multiply by a position polynomial.
    DeltaExpansion mul_poly(const Poly& f) const;

    /// d^a of the whole expansion.
    DeltaExpansion deriv(const MultiIndex& a) const;

    /// Pullback under x -> -x; flips the sign of odd-order terms.
    DeltaExpansion reflect() const;
    bool is_even() const { return reflect() == *this; }
    bool is_odd() const { return reflect() == -*this; }

    /// Apply a position-space operator in the adjoint sense: for a term
    /// c(x) d^a the action is  v -> -(-1)^|a| d^a (c * v),  which for the
    /// first-order generators reproduces the usual transformation law.
    DeltaExpansion apply_operator(const DiffOp& op) const;

    /// The polynomial p -> (v, exp(i p.x)).
    Poly fourier() const;

    /// Inverse of fourier(); accepts any momentum polynomial.
    static DeltaExpansion fourier_inv(const Poly& phat);

    /// Canonical text form using "d[a,b,c,d]" for d^(a,b,c,d)(delta).
    std::string str() const;

private:
    std::size_t dim_;
    Terms terms_;
};

} // namespace dsym
