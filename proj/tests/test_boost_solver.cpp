#include "deltasym/boost_solver.hpp"
#include "deltasym/generators.hpp"
#include "deltasym/harmonic.hpp"
#include "deltasym/rng.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

using namespace dsym;

namespace {

Poly pvar(int i) { return Poly::variable(4, VarSpace::momentum, i); }

// Entry-by-entry comparison against small integers.
void check_matrix(const MatrixQ& m, const std::vector<std::vector<long>>& want) {
    REQUIRE(m.rows() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        REQUIRE(m.cols() == want[i].size());
        for (std::size_t j = 0; j < want[i].size(); ++j) CHECK(m.at(i, j) == Scalar(want[i][j]));
    }
}

} // namespace

TEST_CASE("bases of the invariant and image spaces") {
    auto f0 = basis_F(0);
    REQUIRE(f0.size() == 1);
    CHECK(f0[0] == Poly::constant(4, VarSpace::momentum, Scalar(1)));

    auto f3 = basis_F(3);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0] == pvar(0).pow(3));
    CHECK(f3[1] == pvar(0) * radial_power(1));

    CHECK(basis_F(4).size() == 3);
    CHECK(basis_F(40).size() == 21);

    CHECK_THROWS_AS(basis_G(0), Error);
    auto g1 = basis_G(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == pvar(1));

    auto g3 = basis_G(3);
    REQUIRE(g3.size() == 2);
    CHECK(g3[0] == pvar(0).pow(2) * pvar(1));
    CHECK(g3[1] == radial_power(1) * pvar(1));

    // Every basis_G element has casimir eigenvalue 2 and is M23-invariant.
    DiffOp cas = casimir_so3(VarSpace::momentum);
    DiffOp m23 = rotation_generator(2, 3, VarSpace::momentum);
    for (int n : {1, 2, 3, 6, 9}) {
        for (const Poly& g : basis_G(n)) {
            CHECK(cas.apply(g) == g * Scalar(2));
            CHECK(m23.apply(g).is_zero());
        }
    }
}

TEST_CASE("boost matrix matches the two-diagonal closed form") {
    check_matrix(boost_matrix(1), {{1}});
    check_matrix(boost_matrix(3), {{3, 2}, {0, 1}});
    check_matrix(boost_matrix(4), {{4, 2, 0}, {0, 2, 4}});

    for (int n = 1; n <= 10; ++n) {
        MatrixQ a = boost_matrix(n);
        for (std::size_t k = 0; k < a.rows(); ++k)
            for (std::size_t l = 0; l < a.cols(); ++l) {
                long want = 0;
                if (l == k) want = n - 2 * static_cast<long>(k);
                if (l == k + 1) want = 2 * (static_cast<long>(k) + 1);
                CHECK(a.at(k, l) == Scalar(want));
            }
    }
}

TEST_CASE("inverse checks: closed form, monotone growth, entry bound") {
    SplitReport r3 = inverse_bound_check(3);
    CHECK(r3.pass);
    CHECK(r3.inverse.at(0, 1) == Scalar(Rational(-2, 3)));
    REQUIRE(r3.last_column_closed.size() == 2);
    CHECK(r3.last_column_closed[0] == Scalar(Rational(2, 3)));
    CHECK(r3.last_column_closed[1] == Scalar(1));

    SplitReport r2 = inverse_bound_check(2);
    CHECK(r2.pass);
    REQUIRE(r2.inverse.rows() == 1);
    CHECK(r2.inverse.at(0, 0) == Scalar(Rational(1, 2)));
    CHECK(r2.last_column_closed[0] == Scalar(Rational(1, 2)));

    SplitReport r5 = inverse_bound_check(5);
    CHECK(r5.pass);
    CHECK(r5.inverse.at(1, 2).abs_sq() == Rational(16, 9)); // |entry| = 4/3

    for (int n = 1; n <= 12; ++n) {
        SplitReport r = inverse_bound_check(n);
        CHECK(r.closed_form_ok);
        CHECK(r.monotone_ok);
        CHECK(r.entry_bound_ok);
        // The restricted matrix times its inverse is the identity.
        std::size_t m = r.inverse.rows();
        MatrixQ restricted(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) restricted.at(i, j) = r.matrix.at(i, j);
        MatrixQ prod = restricted.mul(r.inverse);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                CHECK(prod.at(i, j) == (i == j ? Scalar(1) : Scalar(0)));
    }
}

TEST_CASE("boost equation: frozen solves") {
    CHECK(solve_boost_equation(pvar(1), 1) == pvar(0));
    CHECK(solve_boost_equation(pvar(0).pow(2) * pvar(1), 3) ==
          pvar(0).pow(3) * Scalar(Rational(1, 3)));
    Poly v2 = solve_boost_equation(pvar(0) * pvar(1), 2);
    CHECK(v2 == pvar(0).pow(2) * Scalar(Rational(1, 2)));
    // Even degrees carry no |p|^n component.
    MultiIndex sq(4);
    sq[1] = 2;
    CHECK(v2.coeff(sq) == Scalar(0));
}

TEST_CASE("boost equation: each precondition has its own error") {
    // Not M23-invariant.
    CHECK_THROWS_WITH_AS(solve_boost_equation(pvar(0).pow(2) * pvar(2), 3), // p0^2 p2
                         "right-hand side is not M23-invariant", Error);
    // M23-invariant but wrong casimir eigenvalue.
    CHECK_THROWS_WITH_AS(solve_boost_equation(pvar(0).pow(3), 3),
                         "right-hand side does not have casimir eigenvalue 2", Error);
    // Passes both operator checks at the wrong degree: outside the span.
    CHECK_THROWS_WITH_AS(solve_boost_equation(pvar(1), 3),
                         "right-hand side is outside the span of the image basis", Error);
}

TEST_CASE("random right-hand sides solve exactly within the bound") {
    Rng rng(31);
    for (int n = 1; n <= 8; ++n) {
        auto g = basis_G(n);
        for (int rep = 0; rep < 3; ++rep) {
            Poly u(4, VarSpace::momentum);
            for (const Poly& gk : g)
                u += gk * Scalar(Rational(rng.range(-9, 9)), Rational(rng.range(-9, 9)));
            Poly v = solve_boost_equation(u, n);
            CHECK(boost_generator(1, VarSpace::momentum).apply(v) == u);
            SplitReport rep2 = coefficient_bound_check(u, n);
            CHECK(rep2.pass);
            CHECK(rep2.residual_zero);
        }
    }
}

TEST_CASE("completion keeps the difference and makes both sides invariant") {
    DeltaExpansion zero(4);

    // Already invariant: nothing changes.
    auto [a_plus, a_minus] = invariant_completion(DeltaExpansion::delta(), zero);
    CHECK(a_plus == DeltaExpansion::delta());
    CHECK(a_minus == zero);

    // Equal non-invariant parts cancel entirely.
    DeltaExpansion d0 = DeltaExpansion::term(4, MultiIndex{1, 0, 0, 0});
    auto [b_plus, b_minus] = invariant_completion(d0, d0);
    CHECK(b_plus == zero);
    CHECK(b_minus == zero);

    // A non-invariant difference is rejected with the offending generator.
    DeltaExpansion bad = DeltaExpansion::fourier_inv(pvar(0) * pvar(1));
    CHECK_THROWS_AS(invariant_completion(bad, zero), Error);
    try {
        invariant_completion(bad, zero);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
        CHECK(std::string(e.what()).find("degree 2") != std::string::npos);
    }

    // Mixed case: an invariant difference dressed with equal junk on both
    // sides plus junk on one side that projection and solving must remove.
    DeltaExpansion diff = box_delta(2) + DeltaExpansion::delta() * Scalar(Rational(1, 3));
    DeltaExpansion junk = DeltaExpansion::term(4, MultiIndex{2, 1, 0, 0}, Scalar(2)) +
                          DeltaExpansion::term(4, MultiIndex{0, 1, 1, 1}, Scalar::i());
    auto [w_plus, w_minus] = invariant_completion(diff + junk, junk);
    CHECK(w_plus - w_minus == diff);
    for (const auto& [name, op] : all_generators(VarSpace::momentum)) {
        INFO(name);
        CHECK(op.apply(w_plus.fourier()).is_zero());
        CHECK(op.apply(w_minus.fourier()).is_zero());
    }
}

TEST_CASE("two-dimensional cokernel") {
    auto c0 = cokernel_2d(0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0] == Poly::constant(2, VarSpace::momentum, Scalar(1)));

    CHECK(cokernel_2d(1).empty());
    CHECK(cokernel_2d(7).empty());

    Poly p0 = Poly::variable(2, VarSpace::momentum, 0);
    Poly p1 = Poly::variable(2, VarSpace::momentum, 1);
    Poly q = p0 * p0 - p1 * p1;
    for (int n = 2; n <= 12; n += 2) {
        auto c = cokernel_2d(n);
        REQUIRE(c.size() == 1);
        CHECK(c[0] == q.pow(n / 2));
    }
}
