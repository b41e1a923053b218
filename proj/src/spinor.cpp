#include "deltasym/spinor.hpp"

#include "deltasym/generators.hpp"
#include "deltasym/matrix.hpp"

#include <set>
#include <string>

namespace dsym {

Poly matrix_form_entry(int a, int b, VarSpace space) {
    Poly v0 = Poly::variable(4, space, 0);
    Poly v1 = Poly::variable(4, space, 1);
    Poly v2 = Poly::variable(4, space, 2);
    Poly v3 = Poly::variable(4, space, 3);
    if (a == 0 && b == 0) return v0 - v3;
    if (a == 0 && b == 1) return v2 * Scalar::i() - v1;
    if (a == 1 && b == 0) return (v2 * Scalar::i() + v1) * Scalar(-1);
    return v0 + v3;
}

namespace {

using Mat2 = std::array<std::array<Scalar, 2>, 2>;

SpinorKey unit_key(int a, int b) {
    SpinorKey k;
    k.wbar[a] = 1;
    k.w[b] = 1;
    return k;
}

} // namespace

SpinorPoly<Poly> covariant_poly(int s2, VarSpace space) {
    if (s2 < 0) throw Error(ErrorKind::domain, "negative doubled spin");
    if (s2 == 0)
        return SpinorPoly<Poly>::scalar_term(Poly::constant(4, space, Scalar(1)));
    SpinorPoly<Poly> base;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) base.add_term(unit_key(a, b), matrix_form_entry(a, b, space));
    SpinorPoly<Poly> r = base;
    for (int j = 1; j < s2; ++j) r = r * base;
    return r;
}

SpinorPoly<DiffOp> tilde_derivative() {
    DiffOp d0 = DiffOp::derivative(4, VarSpace::momentum, 0);
    DiffOp d1 = DiffOp::derivative(4, VarSpace::momentum, 1);
    DiffOp d2 = DiffOp::derivative(4, VarSpace::momentum, 2);
    DiffOp d3 = DiffOp::derivative(4, VarSpace::momentum, 3);
    // The matrix-form pattern with (d0, -d1, -d2, -d3) in the vector slots.
    SpinorPoly<DiffOp> r;
    r.add_term(unit_key(0, 0), d0 + d3);
    r.add_term(unit_key(0, 1), d1 - d2 * Scalar::i());
    r.add_term(unit_key(1, 0), d1 + d2 * Scalar::i());
    r.add_term(unit_key(1, 1), d0 - d3);
    return r;
}

SpinorPoly<Poly> apply_spinor_op(const SpinorPoly<DiffOp>& op, const SpinorPoly<Poly>& f) {
    SpinorPoly<Poly> r;
    for (const auto& [ko, o] : op.terms())
        for (const auto& [kf, g] : f.terms())
            r.add_term(SpinorKey{ko.wbar.plus(kf.wbar), ko.w.plus(kf.w)}, o.apply(g));
    return r;
}

Report check_covariant_identities() {
    Report rep("covariant-identities");
    SpinorPoly<DiffOp> op = tilde_derivative();

    SpinorPoly<Poly> lhs1 = apply_spinor_op(op, SpinorPoly<Poly>::scalar_term(momentum_square()));
    SpinorPoly<Poly> rhs1 = covariant_poly(1, VarSpace::momentum) * Scalar(2);
    rep.add_check("derivative covariant applied to p^2 doubles the covariant", rhs1.str(),
                  lhs1.str(), lhs1 == rhs1);

    SpinorPoly<Poly> lhs2 = apply_spinor_op(op, covariant_poly(1, VarSpace::momentum));
    rep.add_check("derivative covariant annihilates the degree-1 covariant", "0", lhs2.str(),
                  lhs2.is_zero());

    SpinorPoly<Poly> one =
        SpinorPoly<Poly>::scalar_term(Poly::constant(4, VarSpace::momentum, Scalar(1)));
    SpinorPoly<Poly> lhs3 = apply_spinor_op(op, one);
    rep.add_check("derivative covariant annihilates constants", "0", lhs3.str(), lhs3.is_zero());
    return rep;
}

bool kernel_test(int s2, int l) {
    if (s2 < 1) throw Error(ErrorKind::domain, "kernel test needs doubled spin at least 1");
    if (l < 0) throw Error(ErrorKind::domain, "negative power");
    SpinorPoly<Poly> f = SpinorPoly<Poly>::scalar_term(momentum_square().pow(l));
    SpinorPoly<DiffOp> op = tilde_derivative();
    for (int j = 0; j < s2 && !f.is_zero(); ++j) f = apply_spinor_op(op, f);
    return f.is_zero();
}

SpinorPoly<DeltaExpansion> make_covariant(const DeltaExpansion& v, int s2) {
    if (v.dim() != 4)
        throw Error(ErrorKind::dimension, "the covariant product works in 4 variables");
    if (s2 < 0) throw Error(ErrorKind::domain, "negative doubled spin");
    return covariant_poly(s2, VarSpace::position)
        .map_coeffs([&](const Poly& c) { return v.mul_poly(c); });
}

namespace {

// Linear coordinates adapted to the covariant: the four matrix-form entries
// u1 = x0-x3, u2 = -x1+i*x2, u3 = -x1-i*x2, u4 = x0+x3 as new variables. In
// these coordinates the corner slots of the covariant are pure powers of a
// single variable, so most of the extraction system reads off directly.
//
// A functional's coefficient polynomial converts to u-derivative
// coordinates via substitution with U^T, and back with (U^-1)^T, where the
// rows of U are the u-forms. The multiplication rule between u-monomials
// and u-derivatives of delta is then the same factorial formula as in the
// original coordinates.
std::vector<std::vector<Scalar>> to_u_matrix() {
    Scalar i = Scalar::i();
    return {{Scalar(1), Scalar(0), Scalar(0), Scalar(1)},
            {Scalar(0), Scalar(-1), Scalar(-1), Scalar(0)},
            {Scalar(0), i, -i, Scalar(0)},
            {Scalar(-1), Scalar(0), Scalar(0), Scalar(1)}};
}

std::vector<std::vector<Scalar>> from_u_matrix() {
    Scalar h{Rational(1, 2)};
    Scalar ih = Scalar::i() * h;
    return {{h, Scalar(0), Scalar(0), -h},
            {Scalar(0), -h, -ih, Scalar(0)},
            {Scalar(0), -h, ih, Scalar(0)},
            {h, Scalar(0), Scalar(0), h}};
}

// The covariant with the adapted coordinates as the polynomial variables:
// slot (a, b) of the degree-1 covariant is exactly the variable with index
// 2a + b.
SpinorPoly<Poly> covariant_in_u(int s2) {
    SpinorPoly<Poly> base;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            base.add_term(unit_key(a, b), Poly::variable(4, VarSpace::position, 2 * a + b));
    SpinorPoly<Poly> r = base;
    for (int j = 1; j < s2; ++j) r = r * base;
    return r;
}

Poly delta_as_poly(const DeltaExpansion& d) {
    Poly p(4, VarSpace::position);
    for (const auto& [k, c] : d.terms()) p.add_term(k, c);
    return p;
}

DeltaExpansion poly_as_delta(const Poly& p) {
    DeltaExpansion d(4);
    for (const auto& [k, c] : p.terms()) d.add_term(k, c);
    return d;
}

} // namespace

std::pair<DeltaExpansion, std::vector<int>> extract_invariant(const SpinorPoly<DeltaExpansion>& w,
                                                              int s2) {
    if (s2 < 0) throw Error(ErrorKind::domain, "negative doubled spin");
    std::vector<int> ambiguity;
    for (int l = 0; l < s2; ++l) ambiguity.push_back(2 * l);

    if (s2 == 0) {
        auto bid = w.bidegree();
        if (bid.first != 0 || bid.second != 0)
            throw Error(ErrorKind::domain, "covariant data must have bidegree (0, 0)");
        const DeltaExpansion* v = w.coeff_ptr(SpinorKey{});
        return {v ? *v : DeltaExpansion(4), ambiguity};
    }

    for (const auto& [k, d] : w.terms())
        if (d.dim() != 4)
            throw Error(ErrorKind::dimension, "the covariant product works in 4 variables");
    if (!w.is_zero()) {
        auto bid = w.bidegree();
        if (bid.first != s2 || bid.second != s2)
            throw Error(ErrorKind::domain, "covariant data must have bidegree (s2, s2)");
    }

    // Slots in adapted coordinates, and the derivative orders they carry.
    std::map<SpinorKey, Poly> w_u;
    std::set<int> grades;
    auto to_u = to_u_matrix();
    for (const auto& [k, d] : w.terms()) {
        Poly p = delta_as_poly(d).substitute_linear(to_u);
        for (int t : p.orders_present()) grades.insert(t);
        w_u.emplace(k, std::move(p));
    }

    SpinorPoly<Poly> cov_u = covariant_in_u(s2);
    Scalar sign = (s2 % 2 == 0) ? Scalar(1) : Scalar(-1);
    auto w_u_coeff = [&](const SpinorKey& k, const MultiIndex& mu) {
        auto it = w_u.find(k);
        return it == w_u.end() ? Scalar(0) : it->second.coeff(mu);
    };

    Poly solution_u(4, VarSpace::position);
    for (int t : grades) {
        std::string grade_msg = "inconsistent system at grade " + std::to_string(t);
        std::vector<MultiIndex> mus = multi_indices_of_order(4, t);

        // Corner slots carry a single u-power, so each of their equations
        // determines one unknown outright.
        std::map<MultiIndex, Scalar> assigned;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                SpinorKey corner;
                corner.wbar[a] = s2;
                corner.w[b] = s2;
                for (const MultiIndex& mu : mus) {
                    MultiIndex kappa = mu;
                    kappa[2 * a + b] += s2;
                    Scalar factor = sign * Scalar(Rational(mi_factorial(kappa), mi_factorial(mu)));
                    Scalar value = w_u_coeff(corner, mu) / factor;
                    auto it = assigned.find(kappa);
                    if (it == assigned.end())
                        assigned.emplace(kappa, value);
                    else if (it->second != value)
                        throw Error(ErrorKind::inconsistent, grade_msg);
                }
            }

        // The unknowns the corners cannot reach have every exponent below
        // s2; collect them and solve the remaining slot equations exactly.
        std::vector<MultiIndex> small;
        std::map<MultiIndex, std::size_t> small_index;
        for (const MultiIndex& kappa : multi_indices_of_order(4, t + s2)) {
            bool reached = false;
            for (std::size_t j = 0; j < 4; ++j)
                if (kappa[j] >= s2) reached = true;
            if (!reached) {
                small_index.emplace(kappa, small.size());
                small.push_back(kappa);
            }
        }

        std::vector<std::vector<Scalar>> rows;
        std::vector<Scalar> rhs;
        for (const auto& [slot, c_poly] : cov_u.terms()) {
            for (const MultiIndex& mu : mus) {
                std::vector<Scalar> row(small.size());
                Scalar constant;
                bool nontrivial = false;
                for (const auto& [m, cm] : c_poly.terms()) {
                    MultiIndex kappa = mu.plus(m);
                    Scalar factor =
                        cm * sign * Scalar(Rational(mi_factorial(kappa), mi_factorial(mu)));
                    auto known = assigned.find(kappa);
                    if (known != assigned.end()) {
                        constant += factor * known->second;
                    } else {
                        row[small_index.at(kappa)] += factor;
                        nontrivial = true;
                    }
                }
                Scalar target = w_u_coeff(slot, mu) - constant;
                if (!nontrivial) {
                    if (!target.is_zero()) throw Error(ErrorKind::inconsistent, grade_msg);
                    continue;
                }
                rows.push_back(std::move(row));
                rhs.push_back(target);
            }
        }
        if (!small.empty()) {
            MatrixQ system(rows.size(), small.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < small.size(); ++c) system.at(r, c) = rows[r][c];
            auto sol = system.solve(rhs);
            if (!sol) throw Error(ErrorKind::inconsistent, grade_msg);
            for (std::size_t c = 0; c < small.size(); ++c) assigned.emplace(small[c], (*sol)[c]);
        } else {
            for (const Scalar& target : rhs)
                if (!target.is_zero()) throw Error(ErrorKind::inconsistent, grade_msg);
        }

        for (const auto& [kappa, value] : assigned) solution_u.add_term(kappa, value);
    }

    DeltaExpansion v = poly_as_delta(solution_u.substitute_linear(from_u_matrix()));

    // Pin the ambiguous directions: zero the coefficient of the pure
    // time-derivative of each kernel order by subtracting wave powers.
    for (int l = s2 - 1; l >= 0; --l) {
        MultiIndex marker(4);
        marker[0] = 2 * l;
        Scalar gamma = v.coeff(marker);
        if (!gamma.is_zero()) v -= box_delta(l) * gamma;
    }

    if (!(make_covariant(v, s2) == w))
        throw Error(ErrorKind::internal, "extracted functional fails the defining product");
    return {v, ambiguity};
}

std::vector<RepLabel> cg_decompose(const RepLabel& rep) {
    if (rep.r2 < 0 || rep.s2 < 0) throw Error(ErrorKind::domain, "negative doubled spin");
    int lo = rep.r2 >= rep.s2 ? rep.r2 - rep.s2 : rep.s2 - rep.r2;
    int hi = rep.r2 + rep.s2;
    std::vector<RepLabel> out;
    for (int r = lo; r <= hi; r += 2)
        for (int s = lo; s <= hi; s += 2) out.push_back({r, s});
    return out;
}

int reflection_parity(int s2p) {
    if (s2p < 0) throw Error(ErrorKind::domain, "negative doubled spin");
    SpinorPoly<Poly> cov = covariant_poly(s2p, VarSpace::momentum);
    std::vector<std::vector<Scalar>> neg(4, std::vector<Scalar>(4));
    for (int j = 0; j < 4; ++j) neg[j][j] = Scalar(-1);
    SpinorPoly<Poly> flipped =
        cov.map_coeffs([&](const Poly& c) { return c.substitute_linear(neg); });
    if (flipped == cov) return 1;
    if (flipped == -cov) return -1;
    throw Error(ErrorKind::internal, "covariant has no definite parity");
}

namespace {

Mat2 as_mat2(const std::vector<std::vector<Scalar>>& a) {
    if (a.size() != 2 || a[0].size() != 2 || a[1].size() != 2)
        throw Error(ErrorKind::dimension, "expected a 2x2 matrix");
    return {{{a[0][0], a[0][1]}, {a[1][0], a[1][1]}}};
}

Mat2 mul2(const Mat2& x, const Mat2& y) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

Mat2 conj_transpose(const Mat2& x) {
    return {{{x[0][0].conj(), x[1][0].conj()}, {x[0][1].conj(), x[1][1].conj()}}};
}

// Basis dual to the matrix form: S_0 = identity, S_j = minus the j-th Pauli
// matrix, so that matrix_form(x) = sum_mu x_mu S_mu and tr(S_mu S_nu) =
// 2 delta_mu_nu.
std::array<Mat2, 4> s_basis() {
    Scalar i = Scalar::i();
    Mat2 s0{{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}};
    Mat2 s1{{{Scalar(0), Scalar(-1)}, {Scalar(-1), Scalar(0)}}};
    Mat2 s2{{{Scalar(0), i}, {-i, Scalar(0)}}};
    Mat2 s3{{{Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(1)}}};
    return {s0, s1, s2, s3};
}

} // namespace

std::vector<std::vector<Scalar>> sl2_to_lorentz(const std::vector<std::vector<Scalar>>& a) {
    Mat2 m = as_mat2(a);
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != Scalar(1))
        throw Error(ErrorKind::domain, "determinant must be 1");
    Mat2 mdag = conj_transpose(m);
    auto s = s_basis();

    std::vector<std::vector<Scalar>> lambda(4, std::vector<Scalar>(4));
    std::array<Mat2, 4> image;
    for (int mu = 0; mu < 4; ++mu) {
        image[mu] = mul2(mul2(m, s[mu]), mdag);
        for (int nu = 0; nu < 4; ++nu) {
            Scalar tr = (s[nu][0][0] * image[mu][0][0] + s[nu][0][1] * image[mu][1][0] +
                         s[nu][1][0] * image[mu][0][1] + s[nu][1][1] * image[mu][1][1]);
            Scalar entry = tr / Scalar(2);
            if (entry.im != 0) throw Error(ErrorKind::internal, "image matrix is not real");
            lambda[nu][mu] = entry;
        }
    }

    // The defining identity must reassemble exactly.
    for (int mu = 0; mu < 4; ++mu) {
        Mat2 sum{};
        for (int nu = 0; nu < 4; ++nu)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) sum[i][j] += lambda[nu][mu] * s[nu][i][j];
        if (!(sum == image[mu]))
            throw Error(ErrorKind::internal, "matrix-form identity failed to reassemble");
    }

    // Minkowski form preservation: Lambda^T eta Lambda = eta.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Scalar acc;
            for (int k = 0; k < 4; ++k) {
                Scalar eta = (k == 0) ? Scalar(1) : Scalar(-1);
                acc += lambda[k][i] * eta * lambda[k][j];
            }
            Scalar want = (i == j) ? ((i == 0) ? Scalar(1) : Scalar(-1)) : Scalar(0);
            if (acc != want)
                throw Error(ErrorKind::internal, "image does not preserve the Minkowski form");
        }
    return lambda;
}

SpinorPoly<Poly> substitute_spinor(const SpinorPoly<Poly>& f,
                                   const std::array<std::array<Scalar, 2>, 2>& m_wbar,
                                   const std::array<std::array<Scalar, 2>, 2>& m_w) {
    if (f.is_zero()) return f;
    const Poly& sample = f.terms().begin()->second;
    Poly one = Poly::constant(sample.dim(), sample.space(), Scalar(1));
    auto lin = [&](bool bar, int a) {
        SpinorPoly<Poly> r;
        for (int b = 0; b < 2; ++b) {
            SpinorKey k;
            (bar ? k.wbar : k.w)[b] = 1;
            r.add_term(k, one * (bar ? m_wbar[a][b] : m_w[a][b]));
        }
        return r;
    };
    SpinorPoly<Poly> out;
    for (const auto& [k, c] : f.terms()) {
        SpinorPoly<Poly> term = SpinorPoly<Poly>::scalar_term(c);
        for (int a = 0; a < 2; ++a) {
            for (int e = 0; e < k.wbar[a]; ++e) term = term * lin(true, a);
            for (int e = 0; e < k.w[a]; ++e) term = term * lin(false, a);
        }
        out += term;
    }
    return out;
}

Report covariance_check(const std::vector<std::vector<Scalar>>& a) {
    auto lambda = sl2_to_lorentz(a); // validates shape and determinant
    Report rep("covariance-check");
    rep.set_input("convention",
                  "x -> Lambda(A) x, w -> (A^dagger)^-1 w, wbar -> conj((A^dagger)^-1) wbar");

    Mat2 mdag = conj_transpose(as_mat2(a));
    // det(A^dagger) = 1, so the inverse is the adjugate.
    Mat2 minv{{{mdag[1][1], -mdag[0][1]}, {-mdag[1][0], mdag[0][0]}}};
    Mat2 minv_conj{{{minv[0][0].conj(), minv[0][1].conj()}, {minv[1][0].conj(), minv[1][1].conj()}}};

    SpinorPoly<Poly> cov = covariant_poly(1, VarSpace::position);
    SpinorPoly<Poly> transformed = substitute_spinor(
        cov.map_coeffs([&](const Poly& c) { return c.substitute_linear(lambda); }), minv_conj,
        minv);
    rep.add_check("degree-1 covariant invariance", cov.str(), transformed.str(),
                  transformed == cov);
    return rep;
}

} // namespace dsym
