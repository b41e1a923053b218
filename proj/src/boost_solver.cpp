#include "deltasym/boost_solver.hpp"

#include "deltasym/generators.hpp"
#include "deltasym/harmonic.hpp"

#include <string>

namespace dsym {

namespace {

Poly p0_power(int j) {
    MultiIndex k(4);
    k[0] = j;
    return Poly::monomial(4, VarSpace::momentum, k);
}

// The monomial p0^(n-2l-1) * p1 * p2^(2l) appears in exactly one basis_G
// element, namely the l-th, and there with coefficient 1. Reading it off a
// polynomial therefore gives that polynomial's l-th coordinate in basis_G,
// provided the polynomial lies in the span at all.
MultiIndex g_marker(int n, int l) {
    MultiIndex k(4);
    k[0] = n - 2 * l - 1;
    k[1] = 1;
    k[2] = 2 * l;
    return k;
}

Integer double_factorial(int m) {
    Integer r = 1;
    for (int j = m; j >= 2; j -= 2) r *= j;
    return r;
}

Integer int_pow(Integer base, int e) {
    Integer r = 1;
    for (int j = 0; j < e; ++j) r *= base;
    return r;
}

} // namespace

std::vector<Poly> basis_F(int n) {
    if (n < 0) throw Error(ErrorKind::domain, "negative degree");
    std::vector<Poly> out;
    for (int k = 0; 2 * k <= n; ++k) out.push_back(p0_power(n - 2 * k) * radial_power(k));
    return out;
}

std::vector<Poly> basis_G(int n) {
    if (n < 1) throw Error(ErrorKind::domain, "the boost image space is trivial at degree 0");
    std::vector<Poly> out;
    Poly p1 = Poly::variable(4, VarSpace::momentum, 1);
    for (int k = 0; 2 * k + 1 <= n; ++k) out.push_back(p0_power(n - 2 * k - 1) * radial_power(k) * p1);
    return out;
}

MatrixQ boost_matrix(int n) {
    if (n < 1) throw Error(ErrorKind::domain, "the boost matrix needs degree at least 1");
    std::vector<Poly> f = basis_F(n);
    std::vector<Poly> g = basis_G(n);
    DiffOp n1 = boost_generator(1, VarSpace::momentum);

    MatrixQ a(g.size(), f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        Poly image = n1.apply(f[k]);
        Poly reassembled(4, VarSpace::momentum);
        for (std::size_t l = 0; l < g.size(); ++l) {
            a.at(l, k) = image.coeff(g_marker(n, static_cast<int>(l)));
            reassembled += g[l] * a.at(l, k);
        }
        if (reassembled != image)
            throw Error(ErrorKind::internal, "boost image fell outside the image basis span");
    }
    return a;
}

SplitReport inverse_bound_check(int n) {
    SplitReport rep;
    rep.n = n;
    rep.matrix = boost_matrix(n);

    // Odd n: the matrix is square and invertible. Even n: drop the last
    // column (the |p|^n direction spans the kernel) to get a square system.
    std::size_t cols = (n % 2 == 1) ? rep.matrix.cols() : rep.matrix.cols() - 1;
    MatrixQ restricted(rep.matrix.rows(), cols);
    for (std::size_t i = 0; i < rep.matrix.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) restricted.at(i, j) = rep.matrix.at(i, j);
    rep.inverse = restricted.inverse();

    std::size_t m = rep.inverse.rows();
    std::size_t last = m - 1;
    Integer top = double_factorial(n % 2 == 1 ? n - 1 : n - 2);
    rep.closed_form_ok = true;
    for (std::size_t k = 0; k < m; ++k) {
        Scalar e = rep.inverse.at(k, last);
        rep.last_column.push_back(e);
        Integer den = double_factorial(n - 2 * static_cast<int>(k)) *
                      double_factorial(2 * static_cast<int>(k));
        Scalar closed{Rational(top, den)};
        rep.last_column_closed.push_back(closed);
        if (e.abs_sq() != closed.abs_sq()) rep.closed_form_ok = false;
    }

    // Monotone growth along diagonals toward the last column: stepping from
    // (k, l) to (k+1, l+1) never decreases the absolute value. Together with
    // the triangular shape this puts the maximum in the last column.
    rep.monotone_ok = true;
    for (std::size_t k = 0; k + 1 < m; ++k)
        for (std::size_t l = k; l + 1 < m; ++l)
            if (rep.inverse.at(k, l).abs_sq() > rep.inverse.at(k + 1, l + 1).abs_sq())
                rep.monotone_ok = false;

    Rational bound_sq{int_pow(2, n)};
    rep.entry_bound_ok = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rational sq = rep.inverse.at(i, j).abs_sq();
            if (sq > rep.max_entry_sq) rep.max_entry_sq = sq;
            if (sq > bound_sq) rep.entry_bound_ok = false;
        }

    rep.pass = rep.closed_form_ok && rep.monotone_ok && rep.entry_bound_ok;
    return rep;
}

Poly solve_boost_equation(const Poly& u, int n) {
    if (u.dim() != 4 || u.space() != VarSpace::momentum)
        throw Error(ErrorKind::dimension, "boost solve expects a momentum polynomial in 4 variables");
    if (n < 1) throw Error(ErrorKind::domain, "the boost equation needs degree at least 1");
    if (!rotation_generator(2, 3, VarSpace::momentum).apply(u).is_zero())
        throw Error(ErrorKind::domain, "right-hand side is not M23-invariant");
    if (casimir_so3(VarSpace::momentum).apply(u) != u * Scalar(2))
        throw Error(ErrorKind::domain, "right-hand side does not have casimir eigenvalue 2");

    std::vector<Poly> g = basis_G(n);
    std::vector<Scalar> c(g.size());
    Poly reassembled(4, VarSpace::momentum);
    for (std::size_t l = 0; l < g.size(); ++l) {
        c[l] = u.coeff(g_marker(n, static_cast<int>(l)));
        reassembled += g[l] * c[l];
    }
    if (reassembled != u)
        throw Error(ErrorKind::domain, "right-hand side is outside the span of the image basis");

    // For odd n the boost matrix is already square (|F| = |G|); for even n
    // dropping the last column, i.e. pinning the |p|^n coefficient to zero,
    // leaves a square invertible system. Both cases give |G| columns.
    std::size_t cols = g.size();
    MatrixQ a = boost_matrix(n);
    MatrixQ restricted(a.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) restricted.at(i, j) = a.at(i, j);
    std::vector<Scalar> coeffs = restricted.inverse().mul_vec(c);

    std::vector<Poly> f = basis_F(n);
    Poly v(4, VarSpace::momentum);
    for (std::size_t k = 0; k < coeffs.size(); ++k) v += f[k] * coeffs[k];
    if (boost_generator(1, VarSpace::momentum).apply(v) != u)
        throw Error(ErrorKind::internal, "boost solve produced a nonzero residual");
    return v;
}

SplitReport coefficient_bound_check(const Poly& u, int n) {
    SplitReport rep;
    rep.n = n;
    Poly v = solve_boost_equation(u, n);

    for (const auto& [k, s] : u.terms()) {
        Rational sq = s.abs_sq();
        if (sq > rep.max_input_sq) rep.max_input_sq = sq;
    }
    for (const auto& [k, s] : v.terms()) {
        Rational sq = s.abs_sq();
        if (sq > rep.max_solution_sq) rep.max_solution_sq = sq;
    }
    // |c| <= 6^(n/2) * |c'| compared through exact squares.
    rep.coefficient_bound_ok = rep.max_solution_sq <= Rational(int_pow(6, n)) * rep.max_input_sq;
    rep.residual_zero = boost_generator(1, VarSpace::momentum).apply(v) == u;
    rep.pass = rep.coefficient_bound_ok && rep.residual_zero;
    return rep;
}

namespace {

// so3_project applied to each homogeneous component.
Poly project_all(const Poly& p) {
    Poly out(4, VarSpace::momentum);
    for (int n : p.orders_present()) out += so3_project(p.homogeneous_part(n));
    return out;
}

} // namespace

std::pair<DeltaExpansion, DeltaExpansion> invariant_completion(const DeltaExpansion& v_plus,
                                                               const DeltaExpansion& v_minus) {
    if (v_plus.dim() != 4 || v_minus.dim() != 4)
        throw Error(ErrorKind::dimension, "the completion pipeline works in 4 variables");

    Poly p_plus = v_plus.fourier();
    Poly p_minus = v_minus.fourier();

    Poly diff = p_plus - p_minus;
    auto gens = all_generators(VarSpace::momentum);
    for (int deg : diff.orders_present()) {
        Poly part = diff.homogeneous_part(deg);
        for (const auto& [name, op] : gens)
            if (!op.apply(part).is_zero())
                throw Error(ErrorKind::domain, "difference is not invariant: " + name +
                                                   " fails at degree " + std::to_string(deg));
    }

    Poly proj_plus = project_all(p_plus);
    Poly proj_minus = project_all(p_minus);

    // Remove the boost defect of the projected plus part, one degree at a
    // time. The same correction applies to both sides, so their difference
    // is untouched.
    DiffOp n1 = boost_generator(1, VarSpace::momentum);
    Poly correction(4, VarSpace::momentum);
    for (int deg : proj_plus.orders_present()) {
        Poly u = n1.apply(proj_plus.homogeneous_part(deg));
        if (u.is_zero()) continue;
        try {
            correction += solve_boost_equation(u, deg);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::domain)
                throw Error(ErrorKind::internal,
                            std::string("completion consistency check failed: ") + e.what());
            throw;
        }
    }

    Poly w_plus = proj_plus - correction;
    Poly w_minus = proj_minus - correction;
    for (const auto& [name, op] : gens)
        if (!op.apply(w_plus).is_zero() || !op.apply(w_minus).is_zero())
            throw Error(ErrorKind::internal, "completion output is not annihilated by " + name);

    return {DeltaExpansion::fourier_inv(w_plus), DeltaExpansion::fourier_inv(w_minus)};
}

std::vector<Poly> cokernel_2d(int n) {
    if (n < 0) throw Error(ErrorKind::domain, "negative degree");

    // Monomials p0^(n-k) p1^k, k = 0..n, and the matrix of N_1 on them.
    auto mono = [&](int k) {
        MultiIndex e(2);
        e[0] = n - k;
        e[1] = k;
        return e;
    };
    MultiIndex d0(2), d1(2);
    d0[0] = 1;
    d1[1] = 1;
    DiffOp n1 = DiffOp::term(Poly::variable(2, VarSpace::momentum, 1), d0) +
                DiffOp::term(Poly::variable(2, VarSpace::momentum, 0), d1);
    MatrixQ m(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        Poly image = n1.apply(Poly::monomial(2, VarSpace::momentum, mono(k)));
        for (int r = 0; r <= n; ++r) m.at(r, k) = image.coeff(mono(r));
    }

    // N_1 is self-adjoint for the pairing <p^a, p^b> = a! [a = b], so its
    // kernel is a complement of its image: kernel vectors represent cokernel
    // classes. Certify each one by an exact rank comparison.
    std::vector<std::vector<Scalar>> null = m.nullspace();
    std::size_t rank = m.rank();
    if (null.size() + rank != static_cast<std::size_t>(n + 1))
        throw Error(ErrorKind::internal, "rank and kernel dimensions are inconsistent");

    std::vector<Poly> out;
    for (const auto& vec : null) {
        // Clear denominators and make the first nonzero entry positive.
        Integer lcm_den = 1;
        for (const Scalar& s : vec)
            if (!s.is_zero()) {
                lcm_den = boost::multiprecision::lcm(lcm_den, denominator(s.re));
                lcm_den = boost::multiprecision::lcm(lcm_den, denominator(s.im));
            }
        Scalar scale{Rational(lcm_den)};
        for (const Scalar& s : vec)
            if (!s.is_zero()) {
                if ((s * scale).re < 0) scale = -scale;
                break;
            }

        MatrixQ aug(n + 1, n + 2);
        for (int r = 0; r <= n; ++r) {
            for (int k = 0; k <= n; ++k) aug.at(r, k) = m.at(r, k);
            aug.at(r, n + 1) = vec[r];
        }
        if (aug.rank() != rank + 1)
            throw Error(ErrorKind::internal, "cokernel representative lies in the image");

        Poly rep(2, VarSpace::momentum);
        for (int k = 0; k <= n; ++k) rep.add_term(mono(k), vec[k] * scale);
        out.push_back(std::move(rep));
    }

    std::size_t expected = (n % 2 == 0) ? 1 : 0;
    if (out.size() != expected)
        throw Error(ErrorKind::internal, "cokernel dimension differs from the certified count");
    return out;
}

} // namespace dsym
