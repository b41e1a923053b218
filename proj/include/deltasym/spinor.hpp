// Spinor-valued calculus: polynomials in two spinor components and their
// conjugates whose coefficients are polynomials, delta expansions, or
// differential operators. Houses the rank-2s covariant built from the
// Hermitian matrix form of a 4-vector, the representation map it induces on
// point-supported functionals together with its inverse modulo the wave
// operator kernel, the Clebsch-Gordan bookkeeping for doubled spins, and the
// SL(2,C)-to-Lorentz homomorphism.
#pragma once

#include "deltasym/delta_expansion.hpp"
#include "deltasym/diff_op.hpp"
#include "deltasym/poly.hpp"
#include "deltasym/report.hpp"

#include <array>
#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace dsym {

/// Monomial in the spinor variables: exponents of (wb1, wb2) and (w1, w2).
struct SpinorKey {
    MultiIndex wbar = MultiIndex(2);
    MultiIndex w = MultiIndex(2);

    friend bool operator==(const SpinorKey&, const SpinorKey&) = default;
    friend auto operator<=>(const SpinorKey&, const SpinorKey&) = default;
};

namespace detail {
inline bool coeff_is_plain_one(const Poly& f) {
    return f.terms().size() == 1 && f.terms().begin()->first.order() == 0 &&
           f.terms().begin()->second == Scalar(1);
}
inline bool coeff_is_plain_one(const DeltaExpansion&) { return false; }
inline bool coeff_is_plain_one(const DiffOp&) { return false; }
} // namespace detail

/// Finite sum of spinor monomials with coefficients of type T (Poly,
/// DeltaExpansion, or DiffOp). Zero coefficients are pruned, so equality of
/// values is equality of the stored maps.
template <typename T>
class SpinorPoly {
public:
    using Terms = std::map<SpinorKey, T>;

    SpinorPoly() = default;

    /// A single spinor-free term.
    static SpinorPoly scalar_term(const T& value) {
        SpinorPoly r;
        r.add_term(SpinorKey{}, value);
        return r;
    }

    static SpinorPoly term(const SpinorKey& key, const T& value) {
        SpinorPoly r;
        r.add_term(key, value);
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Pointer to the coefficient at a key, or nullptr when absent.
    const T* coeff_ptr(const SpinorKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add_term(const SpinorKey& key, const T& value) {
        if (value.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, value);
            return;
        }
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }

    SpinorPoly operator-() const {
        SpinorPoly r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
        return r;
    }

    SpinorPoly& operator+=(const SpinorPoly& o) {
        for (const auto& [k, v] : o.terms_) add_term(k, v);
        return *this;
    }
    SpinorPoly& operator-=(const SpinorPoly& o) {
        for (const auto& [k, v] : o.terms_) add_term(k, -v);
        return *this;
    }
    SpinorPoly& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend SpinorPoly operator+(SpinorPoly a, const SpinorPoly& b) { return a += b; }
    friend SpinorPoly operator-(SpinorPoly a, const SpinorPoly& b) { return a -= b; }
    friend SpinorPoly operator*(SpinorPoly a, const Scalar& c) { return a *= c; }
    friend SpinorPoly operator*(const Scalar& c, SpinorPoly a) { return a *= c; }
    friend bool operator==(const SpinorPoly& a, const SpinorPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Product, available when T itself multiplies (polynomial coefficients).
    friend SpinorPoly operator*(const SpinorPoly& a, const SpinorPoly& b) {
        SpinorPoly r;
        for (const auto& [ka, va] : a.terms_)
            for (const auto& [kb, vb] : b.terms_)
                r.add_term(SpinorKey{ka.wbar.plus(kb.wbar), ka.w.plus(kb.w)}, va * vb);
        return r;
    }

    /// Applies f to every coefficient, dropping zero results.
    template <typename F>
    auto map_coeffs(F&& f) const -> SpinorPoly<decltype(f(std::declval<const T&>()))> {
        SpinorPoly<decltype(f(std::declval<const T&>()))> r;
        for (const auto& [k, v] : terms_) r.add_term(k, f(v));
        return r;
    }

    /// Common (wbar-order, w-order) of all terms; zero has bidegree (0, 0).
    std::pair<int, int> bidegree() const {
        if (terms_.empty()) return {0, 0};
        auto first = terms_.begin()->first;
        std::pair<int, int> d{first.wbar.order(), first.w.order()};
        for (const auto& [k, v] : terms_)
            if (k.wbar.order() != d.first || k.w.order() != d.second)
                throw Error(ErrorKind::domain, "value is not bihomogeneous");
        return d;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : terms_) {
            std::string mono;
            const char* names[4] = {"wb1", "wb2", "w1", "w2"};
            int exps[4] = {k.wbar[0], k.wbar[1], k.w[0], k.w[1]};
            for (int j = 0; j < 4; ++j) {
                if (exps[j] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[j];
                if (exps[j] > 1) mono += "^" + std::to_string(exps[j]);
            }
            std::string term;
            if (mono.empty())
                term = v.str();
            else if (detail::coeff_is_plain_one(v))
                term = mono;
            else
                term = "(" + v.str() + ")*" + mono;
            if (!out.empty()) out += " + ";
            out += term;
        }
        return out;
    }

private:
    Terms terms_;
};

/// Doubled-spin representation label: r = r2/2, s = s2/2. Doubling keeps the
/// Clebsch-Gordan bookkeeping in plain integers.
struct RepLabel {
    int r2 = 0;
    int s2 = 0;

    friend bool operator==(const RepLabel&, const RepLabel&) = default;
    friend auto operator<=>(const RepLabel&, const RepLabel&) = default;
};

/// Entry (a, b), 0-based, of the Hermitian matrix form of the coordinate
/// vector: [[v0 - v3, -v1 + i v2], [-v1 - i v2, v0 + v3]].
Poly matrix_form_entry(int a, int b, VarSpace space);

/// The degree-s2 covariant: the s2-th power of the spinor-sandwiched
/// Hermitian matrix form of the coordinate vector. Bidegree (s2, s2) with
/// homogeneous degree-s2 coefficients; (s2+1)^2 monomial slots.
SpinorPoly<Poly> covariant_poly(int s2, VarSpace space);

/// The derivative counterpart of the degree-1 covariant: same matrix
/// pattern, with (D0, -D1, -D2, -D3) in place of the coordinates.
SpinorPoly<DiffOp> tilde_derivative();

/// Applies a spinor polynomial of operators slot by slot: spinor monomials
/// multiply, operator coefficients act on polynomial coefficients.
SpinorPoly<Poly> apply_spinor_op(const SpinorPoly<DiffOp>& op, const SpinorPoly<Poly>& f);

/// Verifies the two derivative identities behind the covariant calculus:
/// applying the derivative covariant to p^2 gives twice the degree-1
/// covariant, and applying it to the degree-1 covariant gives zero.
Report check_covariant_identities();

/// Whether the s2-fold derivative covariant annihilates (p^2)^l; true
/// exactly when l <= s2 - 1.
bool kernel_test(int s2, int l);

/// Multiplies the degree-s2 covariant into a point-supported functional,
/// slot by slot. Linear in v; kills any v of order below s2.
SpinorPoly<DeltaExpansion> make_covariant(const DeltaExpansion& v, int s2);

/// Inverse of make_covariant up to its kernel: returns a functional v with
/// make_covariant(v, s2) == w along with the list of orders 2l, l < s2,
/// where wave-operator powers of delta span the ambiguity. The returned v
/// has zero coefficient on the order-(2l) pure-time-derivative direction for
/// each ambiguous order, which pins it uniquely.
std::pair<DeltaExpansion, std::vector<int>> extract_invariant(const SpinorPoly<DeltaExpansion>& w,
                                                              int s2);

/// Irreducible pieces of (r, s) x (s, r): the full rectangle of labels from
/// |r2 - s2| to r2 + s2 in steps of 2 in each slot, ascending.
std::vector<RepLabel> cg_decompose(const RepLabel& rep);

/// Parity of the degree-s2p covariant under negating the vector variables;
/// equals (-1)^s2p.
int reflection_parity(int s2p);

/// Substitutes linear spinor changes of variables: each wbar_a becomes the
/// m_wbar[a]-combination of (wb1, wb2), and likewise for w with m_w.
SpinorPoly<Poly> substitute_spinor(const SpinorPoly<Poly>& f,
                                   const std::array<std::array<Scalar, 2>, 2>& m_wbar,
                                   const std::array<std::array<Scalar, 2>, 2>& m_w);

/// The Lorentz matrix of a unimodular 2x2 complex matrix: the unique real
/// Lambda with matrix_form(Lambda x) = A * matrix_form(x) * A^dagger.
/// Validates det A = 1 and that Lambda preserves the Minkowski form.
std::vector<std::vector<Scalar>> sl2_to_lorentz(const std::vector<std::vector<Scalar>>& a);

/// Verifies that the degree-1 covariant is invariant under the simultaneous
/// substitution x -> Lambda(A) x, w -> (A^dagger)^{-1} w, and the conjugate
/// action on wbar. The report records this convention.
Report covariance_check(const std::vector<std::vector<Scalar>>& a);

} // namespace dsym
