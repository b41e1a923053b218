// Differential operators with polynomial coefficients, in a fixed variable
// space: sums of terms c(v) * d^k. Composition uses the Leibniz rule and
// results are kept in a canonical collected form (coefficients to the left of
// derivatives, one entry per derivative index), so equality of operators is
// equality of the collected maps.
#pragma once

#include "deltasym/poly.hpp"

#include <map>

namespace dsym {

class DiffOp {
public:
    using Terms = std::map<MultiIndex, Poly>;

    DiffOp() : dim_(4), space_(VarSpace::position) {}
    DiffOp(std::size_t dim, VarSpace space) : dim_(dim), space_(space) {}

    static DiffOp zero(std::size_t dim, VarSpace space) { return DiffOp(dim, space); }
    /// The operator c(v) * d^k.
    static DiffOp term(const Poly& coeff, const MultiIndex& k);
    /// The plain derivative d/dv_i.
    static DiffOp derivative(std::size_t dim, VarSpace space, std::size_t i);

    std::size_t dim() const { return dim_; }
    VarSpace space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& k, const Poly& coeff);

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    DiffOp& operator*=(const Scalar& c);

    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const Scalar& c) { return a *= c; }
    friend DiffOp operator*(const Scalar& c, DiffOp a) { return a *= c; }
    friend bool operator==(const DiffOp& a, const DiffOp& b);

    /// Apply to a polynomial: sum of c * d^k f.
    Poly apply(const Poly& f) const;

    /// Operator composition: (this.compose(o)).apply(f) == this.apply(o.apply(f)).
    DiffOp compose(const DiffOp& o) const;

    std::string str() const;

private:
    void check_compatible(std::size_t dim, VarSpace space, const char* op) const;

    std::size_t dim_;
    VarSpace space_;
    Terms terms_;
};

/// A.compose(B) - B.compose(A).
DiffOp commutator(const DiffOp& a, const DiffOp& b);

} // namespace dsym
