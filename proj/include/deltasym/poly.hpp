// Sparse polynomials with exact complex-rational coefficients.
//
// A Poly lives in a fixed dimension (1, 2, or 4) and is tagged with the
// variable space it refers to: position variables x0..x{d-1} or momentum
// variables p0..p{d-1}. Operations that combine two polynomials require both
// tags and dimensions to match; this catches a class of plumbing mistakes in
// the transform-heavy code paths at the point of error rather than far away.
#pragma once

#include "deltasym/multi_index.hpp"
#include "deltasym/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace dsym {

enum class VarSpace { position, momentum };

class Poly {
public:
    using Terms = std::map<MultiIndex, Scalar>;

    Poly() : dim_(4), space_(VarSpace::position) {}
    Poly(std::size_t dim, VarSpace space) : dim_(dim), space_(space) {}

    static Poly zero(std::size_t dim, VarSpace space) { return Poly(dim, space); }
    static Poly constant(std::size_t dim, VarSpace space, const Scalar& c);
    /// The monomial coeff * v^k.
    static Poly monomial(std::size_t dim, VarSpace space, const MultiIndex& k,
                         const Scalar& coeff = Scalar(1));
    /// The single variable v_i (0-based).
    static Poly variable(std::size_t dim, VarSpace space, std::size_t i);

    std::size_t dim() const { return dim_; }
    VarSpace space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of v^k (zero if absent).
    Scalar coeff(const MultiIndex& k) const;
    void set_coeff(const MultiIndex& k, const Scalar& c);
    void add_term(const MultiIndex& k, const Scalar& c);

    /// Largest total order among terms; -1 for the zero polynomial.
    int degree() const;
    /// True when every term has the same total order (vacuously for zero).
    bool is_homogeneous() const;
    /// The part of exact total order n.
    Poly homogeneous_part(int n) const;
    /// All total orders present, ascending.
    std::vector<int> orders_present() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Scalar& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    /// Partial derivative d/dv_i.
    Poly differentiate(std::size_t i) const;
    /// Iterated partial derivative d^k.
    Poly differentiate(const MultiIndex& k) const;
    /// Integer power (n >= 0).
    Poly pow(int n) const;

    /// Substitute v_i -> sum_j m[i][j] * v_j (square matrix of scalars).
    Poly substitute_linear(const std::vector<std::vector<Scalar>>& m) const;

    /// Evaluate at a point, exact.
    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// Re-tag the same coefficients as living in the other variable space.
    Poly with_space(VarSpace space) const;

    /// Canonical text form: terms by ascending total order, and inside one
    /// order with earlier variables carrying higher powers first. "0" for the
    /// zero polynomial.
    std::string str() const;

private:
    void check_compatible(const Poly& o, const char* op) const;

    std::size_t dim_;
    VarSpace space_;
    Terms terms_;
};

/// Variable names for a space and dimension: x0..x{d-1} or p0..p{d-1}.
std::vector<std::string> variable_names(std::size_t dim, VarSpace space);

} // namespace dsym
