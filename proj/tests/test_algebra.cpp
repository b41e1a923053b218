#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltasym/matrix.hpp"
#include "deltasym/multi_index.hpp"
#include "deltasym/poly.hpp"
#include "deltasym/rng.hpp"
#include "deltasym/scalar.hpp"

using namespace dsym;

static Scalar rand_scalar(Rng& rng) {
    return Scalar(Rational(rng.range(-9, 9), rng.range(1, 5)),
                  Rational(rng.range(-9, 9), rng.range(1, 5)));
}

static Poly rand_poly(Rng& rng, std::size_t dim, VarSpace space, int max_deg, int n_terms) {
    Poly p(dim, space);
    for (int t = 0; t < n_terms; ++t) {
        MultiIndex k(dim);
        int budget = max_deg;
        for (std::size_t i = 0; i < dim; ++i) {
            k[i] = static_cast<int>(rng.range(0, budget));
            budget -= k[i];
        }
        p.add_term(k, rand_scalar(rng));
    }
    return p;
}

TEST_CASE("scalar arithmetic is exact field arithmetic") {
    Scalar a(Rational(2, 3), Rational(-1, 2));
    Scalar b(Rational(-5, 7), Rational(3, 4));
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * Scalar(1) == a);
    CHECK(a + (-a) == Scalar(0));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).re == a.abs_sq());
    CHECK((a * a.conj()).im == 0);
    CHECK_THROWS_AS(a / Scalar(0), Error);
}

TEST_CASE("i_power cycles with period four") {
    CHECK(i_power(0) == Scalar(1));
    CHECK(i_power(1) == Scalar::i());
    CHECK(i_power(2) == Scalar(-1));
    CHECK(i_power(3) == -Scalar::i());
    CHECK(i_power(4) == Scalar(1));
    CHECK(i_power(-1) == -Scalar::i());
    CHECK(i_power(-2) == Scalar(-1));
}

TEST_CASE("scalar text form") {
    CHECK(to_string(Scalar(0)) == "0");
    CHECK(to_string(Scalar(3)) == "3");
    CHECK(to_string(Scalar(Rational(-3, 2))) == "-3/2");
    CHECK(to_string(Scalar::i()) == "i");
    CHECK(to_string(-Scalar::i()) == "-i");
    CHECK(to_string(Scalar(Rational(0), Rational(2, 3))) == "2/3*i");
    CHECK(to_string(Scalar(Rational(1), Rational(-1))) == "1-i");
    CHECK(to_string(Scalar(Rational(3, 2), Rational(1, 4))) == "3/2+1/4*i");
}

TEST_CASE("multi-index enumeration and combinatorics") {
    auto v = multi_indices_of_order(2, 2);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == MultiIndex{0, 2});
    CHECK(v[1] == MultiIndex{1, 1});
    CHECK(v[2] == MultiIndex{2, 0});
    CHECK(multi_indices_of_order(4, 3).size() == 20);

    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(mi_factorial(MultiIndex{2, 0, 3, 1}) == 12);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(mi_binomial(MultiIndex{3, 2}, MultiIndex{1, 1}) == 6);

    CHECK(MultiIndex{1, 2}.leq(MultiIndex{1, 3}));
    CHECK_FALSE(MultiIndex{2, 0}.leq(MultiIndex{1, 3}));
    CHECK(MultiIndex{1, 2}.plus(MultiIndex{3, 1}) == MultiIndex{4, 3});
    CHECK(MultiIndex{4, 3}.minus(MultiIndex{3, 1}) == MultiIndex{1, 2});
}

TEST_CASE("polynomial ring axioms on random elements") {
    Rng rng(2024);
    for (int rep = 0; rep < 20; ++rep) {
        Poly a = rand_poly(rng, 4, VarSpace::position, 4, 4);
        Poly b = rand_poly(rng, 4, VarSpace::position, 4, 4);
        Poly c = rand_poly(rng, 4, VarSpace::position, 4, 4);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Poly::zero(4, VarSpace::position));
    }
}

TEST_CASE("differentiation and product rule") {
    // d/dp0 of p0^2 p1 is 2 p0 p1.
    Poly p = Poly::monomial(4, VarSpace::momentum, MultiIndex{2, 1, 0, 0});
    Poly d = p.differentiate(0);
    CHECK(d == Poly::monomial(4, VarSpace::momentum, MultiIndex{1, 1, 0, 0}, Scalar(2)));
    // d^(1,1,0,0) kills all but the mixed part and picks up 2.
    CHECK(p.differentiate(MultiIndex{1, 1, 0, 0}) ==
          Poly::monomial(4, VarSpace::momentum, MultiIndex{1, 0, 0, 0}, Scalar(2)));

    Rng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        Poly a = rand_poly(rng, 4, VarSpace::momentum, 3, 3);
        Poly b = rand_poly(rng, 4, VarSpace::momentum, 3, 3);
        CHECK((a * b).differentiate(2) == a.differentiate(2) * b + a * b.differentiate(2));
    }
}

TEST_CASE("space and dimension tags are enforced") {
    Poly x = Poly::variable(4, VarSpace::position, 0);
    Poly p = Poly::variable(4, VarSpace::momentum, 0);
    CHECK_THROWS_AS(x + p, Error);
    Poly q2 = Poly::variable(2, VarSpace::momentum, 0);
    CHECK_THROWS_AS(p * q2, Error);
    CHECK(x + p.with_space(VarSpace::position) ==
          Poly::variable(4, VarSpace::position, 0) * Scalar(2));
}

TEST_CASE("substitute_linear composes like matrix product") {
    Rng rng(99);
    std::size_t d = 2;
    for (int rep = 0; rep < 8; ++rep) {
        std::vector<std::vector<Scalar>> m1(d, std::vector<Scalar>(d)), m2 = m1;
        for (auto& row : m1)
            for (auto& e : row) e = rand_scalar(rng);
        for (auto& row : m2)
            for (auto& e : row) e = rand_scalar(rng);
        Poly f = rand_poly(rng, d, VarSpace::position, 4, 3);
        // Substituting m2 then m1 equals substituting the product m2 * m1 read
        // through the variable images.
        std::vector<std::vector<Scalar>> prod(d, std::vector<Scalar>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) prod[i][j] += m2[i][k] * m1[k][j];
        CHECK(f.substitute_linear(m2).substitute_linear(m1) == f.substitute_linear(prod));
    }
}

TEST_CASE("polynomial text form") {
    Poly p(4, VarSpace::position);
    p.add_term(MultiIndex{0, 0, 0, 0}, Scalar(1));
    p.add_term(MultiIndex{2, 0, 0, 0}, Scalar(-2));
    p.add_term(MultiIndex{0, 1, 0, 1}, Scalar::i());
    CHECK(p.str() == "1 - 2*x0^2 + i*x1*x3");
    CHECK(Poly::zero(2, VarSpace::momentum).str() == "0");
    Poly q(2, VarSpace::momentum);
    q.add_term(MultiIndex{1, 0}, Scalar(Rational(1), Rational(1)));
    q.add_term(MultiIndex{0, 1}, Scalar(-1));
    CHECK(q.str() == "(1+i)*p0 - p1");
}

TEST_CASE("homogeneous parts partition a polynomial") {
    Rng rng(5);
    Poly a = rand_poly(rng, 4, VarSpace::position, 5, 8);
    Poly sum(4, VarSpace::position);
    for (int n : a.orders_present()) {
        Poly part = a.homogeneous_part(n);
        CHECK(part.is_homogeneous());
        sum += part;
    }
    CHECK(sum == a);
}

TEST_CASE("matrix rank, solve, inverse, nullspace") {
    // 2x2 invertible with complex entries.
    MatrixQ m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar::i();
    m.at(1, 0) = Scalar(0);
    m.at(1, 1) = Scalar(2);
    CHECK(m.rank() == 2);
    MatrixQ inv = m.inverse();
    MatrixQ id = m.mul(inv);
    CHECK(id.at(0, 0) == Scalar(1));
    CHECK(id.at(0, 1) == Scalar(0));
    CHECK(id.at(1, 0) == Scalar(0));
    CHECK(id.at(1, 1) == Scalar(1));

    auto x = m.solve({Scalar(1), Scalar(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[1] == Scalar(2));
    CHECK((*x)[0] == Scalar(1) - Scalar(2) * Scalar::i());

    // Inconsistent system: x + y = 1, x + y = 2.
    MatrixQ s(2, 2);
    s.at(0, 0) = s.at(0, 1) = s.at(1, 0) = s.at(1, 1) = Scalar(1);
    CHECK_FALSE(s.solve({Scalar(1), Scalar(2)}).has_value());
    CHECK(s.rank() == 1);

    auto ns = s.nullspace();
    REQUIRE(ns.size() == 1);
    // Basis vector has 1 in the free column and solves s v = 0.
    auto img = s.mul_vec(ns[0]);
    CHECK(img[0] == Scalar(0));
    CHECK(img[1] == Scalar(0));
    CHECK(ns[0][1] == Scalar(1));

    CHECK_THROWS_AS(s.inverse(), Error);
}

TEST_CASE("random matrix identities") {
    Rng rng(31337);
    for (int rep = 0; rep < 6; ++rep) {
        std::size_t n = 3;
        MatrixQ m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rand_scalar(rng);
        if (m.rank() < n) continue;
        MatrixQ inv = m.inverse();
        MatrixQ id = m.mul(inv);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(id.at(i, j) == (i == j ? Scalar(1) : Scalar(0)));
        // solve agrees with inverse on a random right-hand side.
        std::vector<Scalar> b{rand_scalar(rng), rand_scalar(rng), rand_scalar(rng)};
        auto x = m.solve(b);
        REQUIRE(x.has_value());
        auto y = inv.mul_vec(b);
        CHECK(*x == y);
    }
}
