// Multi-indices: tuples of non-negative exponents used for monomials and
// derivative orders. The dimension is the tuple length (1, 2, or 4 here).
#pragma once

#include "deltasym/scalar.hpp"

#include <compare>
#include <string>
#include <vector>

namespace dsym {

struct MultiIndex {
    std::vector<int> e;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim) : e(dim, 0) {}
    MultiIndex(std::initializer_list<int> v) : e(v) {}

    std::size_t dim() const { return e.size(); }
    int operator[](std::size_t i) const { return e[i]; }
    int& operator[](std::size_t i) { return e[i]; }

    /// Total order |k| = sum of entries.
    int order() const {
        int s = 0;
        for (int v : e) s += v;
        return s;
    }

    /// Componentwise k <= m.
    bool leq(const MultiIndex& m) const {
        if (dim() != m.dim()) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    MultiIndex plus(const MultiIndex& m) const {
        MultiIndex r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    /// Componentwise difference; requires m <= *this.
    MultiIndex minus(const MultiIndex& m) const {
        MultiIndex r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) {
            r.e[i] -= m.e[i];
            if (r.e[i] < 0) throw Error(ErrorKind::internal, "multi-index subtraction went negative");
        }
        return r;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) = default;
};

/// k! = product of factorials of the entries, exact.
Integer factorial(int n);
Integer mi_factorial(const MultiIndex& k);

/// Binomial coefficient C(n, k), exact; zero when k < 0 or k > n.
Integer binomial(int n, int k);

/// Product of componentwise binomials C(a_i, b_i).
Integer mi_binomial(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices of the given dimension and exact total order, in
/// lexicographic order.
std::vector<MultiIndex> multi_indices_of_order(std::size_t dim, int order);

/// "x0^2*x1" style monomial text; empty string for the zero index.
/// `names` supplies the per-coordinate variable names.
std::string monomial_string(const MultiIndex& k, const std::vector<std::string>& names);

} // namespace dsym
