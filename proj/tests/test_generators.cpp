#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltasym/generators.hpp"

using namespace dsym;

TEST_CASE("generator shapes") {
    // N1 = x1 d0 + x0 d1.
    DiffOp n1 = boost_generator(1, VarSpace::position);
    Poly x0 = Poly::variable(4, VarSpace::position, 0);
    Poly x1 = Poly::variable(4, VarSpace::position, 1);
    CHECK(n1.apply(x0) == x1);
    CHECK(n1.apply(x1) == x0);
    CHECK(n1.apply(Poly::variable(4, VarSpace::position, 2)).is_zero());

    // M12 = x2 d1 - x1 d2 and M21 = -M12.
    DiffOp m12 = rotation_generator(1, 2, VarSpace::position);
    CHECK(rotation_generator(2, 1, VarSpace::position) == -m12);
    CHECK(m12.apply(x1) == Poly::variable(4, VarSpace::position, 2));

    CHECK_THROWS_AS(boost_generator(0, VarSpace::position), Error);
    CHECK_THROWS_AS(rotation_generator(1, 1, VarSpace::position), Error);
    CHECK_THROWS_AS(rotation_generator(0, 2, VarSpace::position), Error);
}

TEST_CASE("boost and rotation commutators close") {
    for (VarSpace space : {VarSpace::position, VarSpace::momentum}) {
        DiffOp n1 = boost_generator(1, space);
        DiffOp n2 = boost_generator(2, space);
        DiffOp n3 = boost_generator(3, space);
        DiffOp m12 = rotation_generator(1, 2, space);
        DiffOp m13 = rotation_generator(1, 3, space);
        DiffOp m23 = rotation_generator(2, 3, space);

        CHECK(commutator(n1, n2) == -m12);
        CHECK(commutator(n1, n3) == -m13);
        CHECK(commutator(n2, n3) == -m23);
        CHECK(commutator(m12, m23) == -m13);
        CHECK(commutator(m12, m13) == m23);
    }
}

TEST_CASE("mixed commutators reproduce boosts") {
    // [N_j, M_ij] = N_i for every ordered pair of distinct spatial i, j.
    for (VarSpace space : {VarSpace::position, VarSpace::momentum}) {
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t j = 1; j <= 3; ++j) {
                if (i == j) continue;
                DiffOp nj = boost_generator(j, space);
                DiffOp mij = rotation_generator(i, j, space);
                CHECK(commutator(nj, mij) == boost_generator(i, space));
            }
    }
}

TEST_CASE("generators commute with the wave operator") {
    for (VarSpace space : {VarSpace::position, VarSpace::momentum}) {
        DiffOp box = wave_operator(space);
        for (const auto& [name, op] : all_generators(space)) {
            CAPTURE(name);
            CHECK(commutator(op, box).is_zero());
        }
    }
}

TEST_CASE("rotation casimir eigenvalues on sample polynomials") {
    DiffOp c = casimir_so3(VarSpace::momentum);
    // Degree-1 spatial monomial: l = 1, eigenvalue 2.
    Poly p1 = Poly::variable(4, VarSpace::momentum, 1);
    CHECK(c.apply(p1) == p1 * Scalar(2));
    // Harmonic degree-2: p1^2 - p2^2 has l = 2, eigenvalue 6.
    Poly h = Poly::monomial(4, VarSpace::momentum, MultiIndex{0, 2, 0, 0}) -
             Poly::monomial(4, VarSpace::momentum, MultiIndex{0, 0, 2, 0});
    CHECK(c.apply(h) == h * Scalar(6));
    // Radial polynomial |p|^2 is rotation invariant: eigenvalue 0.
    Poly r2(4, VarSpace::momentum);
    for (std::size_t i = 1; i <= 3; ++i)
        r2 += Poly::variable(4, VarSpace::momentum, i) * Poly::variable(4, VarSpace::momentum, i);
    CHECK(c.apply(r2).is_zero());
    // p0 never matters to rotations.
    CHECK(c.apply(Poly::variable(4, VarSpace::momentum, 0)).is_zero());
}

TEST_CASE("operator composition uses the product rule") {
    // (x0 d0) o (x0 d0) = x0 d0 + x0^2 d0^2.
    Poly x0 = Poly::variable(4, VarSpace::position, 0);
    MultiIndex d0{1, 0, 0, 0};
    DiffOp a = DiffOp::term(x0, d0);
    DiffOp expect = DiffOp::term(x0, d0);
    expect.add_term(MultiIndex{2, 0, 0, 0}, x0 * x0);
    CHECK(a.compose(a) == expect);

    // Application order: this after argument.
    Poly f = x0 * x0;
    CHECK(a.compose(a).apply(f) == a.apply(a.apply(f)));
}

TEST_CASE("wave operator and spatial laplacian split") {
    Poly p(4, VarSpace::position);
    p.add_term(MultiIndex{2, 0, 0, 0}, Scalar(1));
    p.add_term(MultiIndex{0, 2, 0, 0}, Scalar(1));
    // box(x0^2 + x1^2) = 2 - 2 = 0; laplacian gives 2.
    CHECK(wave_operator(VarSpace::position).apply(p).is_zero());
    CHECK(spatial_laplacian(VarSpace::position).apply(p) ==
          Poly::constant(4, VarSpace::position, Scalar(2)));
}
