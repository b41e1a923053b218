#include "deltasym/poly.hpp"

#include <algorithm>

namespace dsym {

Poly Poly::constant(std::size_t dim, VarSpace space, const Scalar& c) {
    Poly p(dim, space);
    p.add_term(MultiIndex(dim), c);
    return p;
}

Poly Poly::monomial(std::size_t dim, VarSpace space, const MultiIndex& k, const Scalar& coeff) {
    if (k.dim() != dim) throw Error(ErrorKind::dimension, "monomial index dimension mismatch");
    Poly p(dim, space);
    p.add_term(k, coeff);
    return p;
}

Poly Poly::variable(std::size_t dim, VarSpace space, std::size_t i) {
    if (i >= dim) throw Error(ErrorKind::dimension, "variable index out of range");
    MultiIndex k(dim);
    k[i] = 1;
    return monomial(dim, space, k);
}

Scalar Poly::coeff(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
}

void Poly::set_coeff(const MultiIndex& k, const Scalar& c) {
    if (k.dim() != dim_) throw Error(ErrorKind::dimension, "coefficient index dimension mismatch");
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

void Poly::add_term(const MultiIndex& k, const Scalar& c) {
    if (k.dim() != dim_) throw Error(ErrorKind::dimension, "term index dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.order());
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        if (d < 0)
            d = k.order();
        else if (k.order() != d)
            return false;
    }
    return true;
}

Poly Poly::homogeneous_part(int n) const {
    Poly out(dim_, space_);
    for (const auto& [k, c] : terms_)
        if (k.order() == n) out.terms_.emplace(k, c);
    return out;
}

std::vector<int> Poly::orders_present() const {
    std::vector<int> out;
    for (const auto& [k, c] : terms_) {
        int n = k.order();
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Poly::check_compatible(const Poly& o, const char* op) const {
    if (dim_ != o.dim_)
        throw Error(ErrorKind::dimension, std::string("dimension mismatch in ") + op);
    if (space_ != o.space_)
        throw Error(ErrorKind::dimension, std::string("variable-space mismatch in ") + op);
}

Poly Poly::operator-() const {
    Poly out(dim_, space_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o, "polynomial addition");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o, "polynomial subtraction");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    check_compatible(o, "polynomial multiplication");
    Poly out(dim_, space_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) out.add_term(ka.plus(kb), ca * cb);
    terms_ = std::move(out.terms_);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.dim_ == b.dim_ && a.space_ == b.space_ && a.terms_ == b.terms_;
}

Poly Poly::differentiate(std::size_t i) const {
    if (i >= dim_) throw Error(ErrorKind::dimension, "derivative index out of range");
    Poly out(dim_, space_);
    for (const auto& [k, c] : terms_) {
        if (k[i] == 0) continue;
        MultiIndex m = k;
        m[i] -= 1;
        out.add_term(m, c * Scalar(k[i]));
    }
    return out;
}

Poly Poly::differentiate(const MultiIndex& k) const {
    if (k.dim() != dim_) throw Error(ErrorKind::dimension, "derivative index dimension mismatch");
    Poly out = *this;
    for (std::size_t i = 0; i < dim_; ++i)
        for (int r = 0; r < k[i]; ++r) out = out.differentiate(i);
    return out;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw Error(ErrorKind::domain, "negative polynomial power");
    Poly out = constant(dim_, space_, Scalar(1));
    for (int r = 0; r < n; ++r) out *= *this;
    return out;
}

Poly Poly::substitute_linear(const std::vector<std::vector<Scalar>>& m) const {
    if (m.size() != dim_) throw Error(ErrorKind::dimension, "substitution matrix has wrong size");
    for (const auto& row : m)
        if (row.size() != dim_) throw Error(ErrorKind::dimension, "substitution matrix has wrong size");
    std::vector<Poly> images;
    for (std::size_t i = 0; i < dim_; ++i) {
        Poly img(dim_, space_);
        for (std::size_t j = 0; j < dim_; ++j) {
            MultiIndex k(dim_);
            k[j] = 1;
            img.add_term(k, m[i][j]);
        }
        images.push_back(std::move(img));
    }
    Poly out(dim_, space_);
    for (const auto& [k, c] : terms_) {
        Poly term = constant(dim_, space_, c);
        for (std::size_t i = 0; i < dim_; ++i)
            for (int r = 0; r < k[i]; ++r) term *= images[i];
        out += term;
    }
    return out;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != dim_) throw Error(ErrorKind::dimension, "evaluation point has wrong size");
    Scalar out;
    for (const auto& [k, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < dim_; ++i)
            for (int r = 0; r < k[i]; ++r) t *= point[i];
        out += t;
    }
    return out;
}

Poly Poly::with_space(VarSpace space) const {
    Poly out(dim_, space);
    out.terms_ = terms_;
    return out;
}

std::vector<std::string> variable_names(std::size_t dim, VarSpace space) {
    std::vector<std::string> out;
    const char* base = space == VarSpace::position ? "x" : "p";
    for (std::size_t i = 0; i < dim; ++i) out.push_back(base + std::to_string(i));
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = variable_names(dim_, space_);
    // Collect term keys sorted by ascending total order, then lexicographic.
    std::vector<const MultiIndex*> keys;
    for (const auto& [k, c] : terms_) keys.push_back(&k);
    std::stable_sort(keys.begin(), keys.end(), [](const MultiIndex* a, const MultiIndex* b) {
        if (a->order() != b->order()) return a->order() < b->order();
        return *b < *a;
    });
    std::string out;
    for (const MultiIndex* kp : keys) {
        const Scalar& c = terms_.at(*kp);
        std::string mono = monomial_string(*kp, names);
        std::string term;
        if (mono.empty()) {
            term = to_string(c);
        } else if (c == Scalar(1)) {
            term = mono;
        } else if (c == Scalar(-1)) {
            term = "-" + mono;
        } else if (c.re != 0 && c.im != 0) {
            term = "(" + to_string(c) + ")*" + mono;
        } else {
            term = to_string(c) + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

} // namespace dsym
