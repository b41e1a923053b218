#include "deltasym/delta_expansion.hpp"

#include <algorithm>

namespace dsym {

DeltaExpansion DeltaExpansion::delta(std::size_t dim) {
    return term(dim, MultiIndex(dim));
}

DeltaExpansion DeltaExpansion::term(std::size_t dim, const MultiIndex& k, const Scalar& coeff) {
    if (k.dim() != dim) throw Error(ErrorKind::dimension, "delta term index dimension mismatch");
    DeltaExpansion v(dim);
    v.add_term(k, coeff);
    return v;
}

Scalar DeltaExpansion::coeff(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
}

void DeltaExpansion::add_term(const MultiIndex& k, const Scalar& c) {
    if (k.dim() != dim_) throw Error(ErrorKind::dimension, "delta term index dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int DeltaExpansion::order() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.order());
    return d;
}

std::vector<int> DeltaExpansion::orders_present() const {
    std::vector<int> out;
    for (const auto& [k, c] : terms_) {
        int n = k.order();
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DeltaExpansion DeltaExpansion::order_part(int n) const {
    DeltaExpansion out(dim_);
    for (const auto& [k, c] : terms_)
        if (k.order() == n) out.terms_.emplace(k, c);
    return out;
}

DeltaExpansion DeltaExpansion::operator-() const {
    DeltaExpansion out(dim_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

DeltaExpansion& DeltaExpansion::operator+=(const DeltaExpansion& o) {
    if (dim_ != o.dim_) throw Error(ErrorKind::dimension, "dimension mismatch in delta addition");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

DeltaExpansion& DeltaExpansion::operator-=(const DeltaExpansion& o) {
    if (dim_ != o.dim_) throw Error(ErrorKind::dimension, "dimension mismatch in delta subtraction");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

DeltaExpansion& DeltaExpansion::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool operator==(const DeltaExpansion& a, const DeltaExpansion& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

Scalar DeltaExpansion::pair(const Poly& f) const {
    if (f.space() != VarSpace::position)
        throw Error(ErrorKind::dimension, "pairing expects a position polynomial");
    if (f.dim() != dim_) throw Error(ErrorKind::dimension, "pairing dimension mismatch");
    std::vector<Scalar> origin(dim_, Scalar(0));
    Scalar out;
    for (const auto& [k, c] : terms_) {
        Scalar sign = (k.order() % 2 == 0) ? Scalar(1) : Scalar(-1);
        out += c * sign * f.differentiate(k).evaluate(origin);
    }
    return out;
}

DeltaExpansion DeltaExpansion::mul_poly(const Poly& f) const {
    if (f.space() != VarSpace::position)
        throw Error(ErrorKind::dimension, "delta multiplication expects a position polynomial");
    if (f.dim() != dim_) throw Error(ErrorKind::dimension, "delta multiplication dimension mismatch");
    DeltaExpansion out(dim_);
    for (const auto& [k, ck] : terms_) {
        for (const auto& [m, cm] : f.terms()) {
            if (!m.leq(k)) continue;
            // x^m d^k delta = (-1)^|m| k!/(k-m)! d^(k-m) delta.
            MultiIndex r = k.minus(m);
            Rational ratio{mi_factorial(k) / mi_factorial(r)};
            Scalar sign = (m.order() % 2 == 0) ? Scalar(1) : Scalar(-1);
            out.add_term(r, ck * cm * sign * Scalar(ratio));
        }
    }
    return out;
}

DeltaExpansion DeltaExpansion::deriv(const MultiIndex& a) const {
    if (a.dim() != dim_) throw Error(ErrorKind::dimension, "delta derivative dimension mismatch");
    DeltaExpansion out(dim_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k.plus(a), c);
    return out;
}

DeltaExpansion DeltaExpansion::reflect() const {
    DeltaExpansion out(dim_);
    for (const auto& [k, c] : terms_)
        out.terms_.emplace(k, (k.order() % 2 == 0) ? c : -c);
    return out;
}

DeltaExpansion DeltaExpansion::apply_operator(const DiffOp& op) const {
    if (op.space() != VarSpace::position)
        throw Error(ErrorKind::dimension, "delta operators act in position variables");
    if (op.dim() != dim_) throw Error(ErrorKind::dimension, "operator dimension mismatch");
    DeltaExpansion out(dim_);
    for (const auto& [a, c] : op.terms()) {
        Scalar sign = (a.order() % 2 == 0) ? Scalar(-1) : Scalar(1);
        out += sign * mul_poly(c).deriv(a);
    }
    return out;
}

Poly DeltaExpansion::fourier() const {
    Poly out(dim_, VarSpace::momentum);
    for (const auto& [k, c] : terms_) out.add_term(k, c * i_power(-k.order()));
    return out;
}

DeltaExpansion DeltaExpansion::fourier_inv(const Poly& phat) {
    if (phat.space() != VarSpace::momentum)
        throw Error(ErrorKind::dimension, "inverse transform expects a momentum polynomial");
    DeltaExpansion out(phat.dim());
    for (const auto& [k, c] : phat.terms()) out.add_term(k, c * i_power(k.order()));
    return out;
}

std::string DeltaExpansion::str() const {
    if (terms_.empty()) return "0";
    std::vector<const MultiIndex*> keys;
    for (const auto& [k, c] : terms_) keys.push_back(&k);
    std::stable_sort(keys.begin(), keys.end(), [](const MultiIndex* a, const MultiIndex* b) {
        if (a->order() != b->order()) return a->order() < b->order();
        return *b < *a;
    });
    std::string out;
    for (const MultiIndex* kp : keys) {
        const Scalar& c = terms_.at(*kp);
        std::string mono = "d[";
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i) mono += ",";
            mono += std::to_string((*kp)[i]);
        }
        mono += "]";
        std::string term;
        if (c == Scalar(1))
            term = mono;
        else if (c == Scalar(-1))
            term = "-" + mono;
        else if (c.re != 0 && c.im != 0)
            term = "(" + to_string(c) + ")*" + mono;
        else
            term = to_string(c) + "*" + mono;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

} // namespace dsym
