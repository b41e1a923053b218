#include "deltasym/diff_op.hpp"

namespace dsym {

DiffOp DiffOp::term(const Poly& coeff, const MultiIndex& k) {
    if (k.dim() != coeff.dim())
        throw Error(ErrorKind::dimension, "operator term index dimension mismatch");
    DiffOp op(coeff.dim(), coeff.space());
    op.add_term(k, coeff);
    return op;
}

DiffOp DiffOp::derivative(std::size_t dim, VarSpace space, std::size_t i) {
    if (i >= dim) throw Error(ErrorKind::dimension, "derivative index out of range");
    MultiIndex k(dim);
    k[i] = 1;
    return term(Poly::constant(dim, space, Scalar(1)), k);
}

void DiffOp::check_compatible(std::size_t dim, VarSpace space, const char* op) const {
    if (dim_ != dim) throw Error(ErrorKind::dimension, std::string("dimension mismatch in ") + op);
    if (space_ != space)
        throw Error(ErrorKind::dimension, std::string("variable-space mismatch in ") + op);
}

void DiffOp::add_term(const MultiIndex& k, const Poly& coeff) {
    check_compatible(coeff.dim(), coeff.space(), "operator term");
    if (k.dim() != dim_) throw Error(ErrorKind::dimension, "operator term index dimension mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp out(dim_, space_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    check_compatible(o.dim_, o.space_, "operator addition");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    check_compatible(o.dim_, o.space_, "operator subtraction");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

DiffOp& DiffOp::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.dim_ == b.dim_ && a.space_ == b.space_ && a.terms_ == b.terms_;
}

Poly DiffOp::apply(const Poly& f) const {
    check_compatible(f.dim(), f.space(), "operator application");
    Poly out(dim_, space_);
    for (const auto& [k, c] : terms_) out += c * f.differentiate(k);
    return out;
}

DiffOp DiffOp::compose(const DiffOp& o) const {
    check_compatible(o.dim_, o.space_, "operator composition");
    DiffOp out(dim_, space_);
    // (c1 d^a)(c2 d^b) = c1 * sum over g <= a of C(a, g) (d^g c2) d^(a-g+b).
    for (const auto& [a, c1] : terms_) {
        // Enumerate g componentwise below a.
        std::vector<MultiIndex> gs{MultiIndex(dim_)};
        for (std::size_t i = 0; i < dim_; ++i) {
            std::vector<MultiIndex> next;
            for (const MultiIndex& g : gs)
                for (int v = 0; v <= a[i]; ++v) {
                    MultiIndex g2 = g;
                    g2[i] = v;
                    next.push_back(g2);
                }
            gs = std::move(next);
        }
        for (const auto& [b, c2] : o.terms_) {
            for (const MultiIndex& g : gs) {
                Poly dc2 = c2.differentiate(g);
                if (dc2.is_zero()) continue;
                Scalar w{Rational(mi_binomial(a, g))};
                out.add_term(a.minus(g).plus(b), c1 * dc2 * w);
            }
        }
    }
    return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a.compose(b) - b.compose(a); }

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = variable_names(dim_, space_);
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string dpart;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (k[i] == 0) continue;
            if (!dpart.empty()) dpart += "*";
            dpart += "D" + names[i];
            if (k[i] > 1) dpart += "^" + std::to_string(k[i]);
        }
        std::string term;
        if (dpart.empty())
            term = "(" + c.str() + ")";
        else if (c == Poly::constant(dim_, space_, Scalar(1)))
            term = dpart;
        else
            term = "(" + c.str() + ")*" + dpart;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

} // namespace dsym
