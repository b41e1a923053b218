#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltasym/generators.hpp"
#include "deltasym/harmonic.hpp"
#include "deltasym/rng.hpp"

using namespace dsym;

static Poly rand_spatial(Rng& rng, int deg, int n_terms) {
    Poly p(4, VarSpace::momentum);
    for (int t = 0; t < n_terms; ++t) {
        MultiIndex k(4);
        int budget = deg;
        for (std::size_t i = 1; i <= 3; ++i) {
            k[i] = static_cast<int>(rng.range(0, budget));
            budget -= k[i];
        }
        k[1] += budget; // keep it exactly homogeneous of degree deg
        p.add_term(k, Scalar(rng.range(-9, 9)));
    }
    return p;
}

TEST_CASE("harmonic basis dimensions and harmonicity") {
    DiffOp lap = spatial_laplacian(VarSpace::momentum);
    for (int m = 0; m <= 6; ++m) {
        const auto& basis = harmonic_basis(m);
        CHECK(basis.size() == static_cast<std::size_t>(2 * m + 1));
        for (const Poly& h : basis) {
            CHECK(h.is_homogeneous());
            CHECK(h.degree() == (h.is_zero() ? -1 : m));
            CHECK(lap.apply(h).is_zero());
        }
    }
}

TEST_CASE("splitting example with a single squared variable") {
    // p1^2 = (p1^2 - |p|^2/3) + |p|^2 * 1/3.
    Poly q = Poly::monomial(4, VarSpace::momentum, MultiIndex{0, 2, 0, 0});
    auto parts = harmonic_decompose(q);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == 0);
    Poly expect0 = q - radial_power(1) * Scalar(Rational(1, 3));
    CHECK(parts[0].second == expect0);
    CHECK(parts[1].first == 1);
    CHECK(parts[1].second == Poly::constant(4, VarSpace::momentum, Scalar(Rational(1, 3))));
}

TEST_CASE("splitting reconstructs and is harmonic, on random inputs") {
    Rng rng(21);
    DiffOp lap = spatial_laplacian(VarSpace::momentum);
    for (int rep = 0; rep < 10; ++rep) {
        int m = static_cast<int>(rng.range(0, 7));
        Poly q = rand_spatial(rng, m, 4);
        Poly sum(4, VarSpace::momentum);
        for (const auto& [k, h] : harmonic_decompose(q)) {
            CHECK(lap.apply(h).is_zero());
            sum += radial_power(k) * h;
        }
        CHECK(sum == q);
    }
}

TEST_CASE("rotation projection basics") {
    // Frozen: projecting p1^2 gives |p|^2 / 3.
    Poly p1sq = Poly::monomial(4, VarSpace::momentum, MultiIndex{0, 2, 0, 0});
    CHECK(so3_project(p1sq) == radial_power(1) * Scalar(Rational(1, 3)));
    // Odd spatial degree has no invariant part.
    CHECK(so3_project(Poly::variable(4, VarSpace::momentum, 1)).is_zero());
    // p0 and |p|^2 pass through unchanged.
    Poly p0 = Poly::variable(4, VarSpace::momentum, 0);
    CHECK(so3_project(p0) == p0);
    CHECK(so3_project(p0 * radial_power(2)) == p0 * radial_power(2));
    // Projection is idempotent on a mixed degree-4 example.
    Poly p2 = Poly::variable(4, VarSpace::momentum, 2);
    Poly mixed = p0 * p0 * p1sq + p1sq * p1sq + p0 * p0 * p0 * p2;
    Poly once = so3_project(mixed);
    CHECK(so3_project(once) == once);
    // Only homogeneous input is accepted.
    CHECK_THROWS_AS(so3_project(p0 + p1sq), Error);
}

TEST_CASE("projection commutes with exact rotations") {
    Rng rng(22);
    for (int rep = 0; rep < 4; ++rep) {
        auto rot = cayley_rotation4(Rational(rng.range(-3, 3), 5), Rational(rng.range(-3, 3), 7),
                                    Rational(rng.range(-3, 3), 4));
        Poly p(4, VarSpace::momentum);
        for (int t = 0; t < 5; ++t) {
            MultiIndex k(4);
            int budget = 4;
            for (std::size_t i = 0; i < 3; ++i) {
                k[i] = static_cast<int>(rng.range(0, budget));
                budget -= k[i];
            }
            k[3] = budget; // homogeneous of degree 4
            p.add_term(k, Scalar(rng.range(-6, 6)));
        }
        // The invariant part is untouched by the rotation, and projecting the
        // rotated polynomial gives the same invariant part.
        Poly proj = so3_project(p);
        CHECK(proj.substitute_linear(rot) == proj);
        CHECK(so3_project(p.substitute_linear(rot)) == proj);
    }
}

TEST_CASE("rotations from the cayley transform are orthogonal") {
    auto rot = cayley_rotation4(Rational(1, 2), Rational(-1, 3), Rational(2, 5));
    // Columns are orthonormal: R^T R = I on the spatial block.
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) {
            Scalar dot;
            for (std::size_t k = 1; k <= 3; ++k) dot += rot[k][i] * rot[k][j];
            CHECK(dot == (i == j ? Scalar(1) : Scalar(0)));
        }
    // |p|^2 is invariant.
    CHECK(radial_power(1).substitute_linear(rot) == radial_power(1));
}

TEST_CASE("grading by the p0 power") {
    Poly p0 = Poly::variable(4, VarSpace::momentum, 0);
    Poly p1 = Poly::variable(4, VarSpace::momentum, 1);
    Poly p2 = Poly::variable(4, VarSpace::momentum, 2);

    auto g1 = grade_by_p0(p0 * p0 * p1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].first == 1);
    CHECK(g1[0].second == p1);

    auto g2 = grade_by_p0(p0 * p0 * p0);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0].first == 0);
    CHECK(g2[0].second == Poly::constant(4, VarSpace::momentum, Scalar(1)));

    auto g3 = grade_by_p0(p0 * p1 * p1 + p2 * p2 * p2);
    REQUIRE(g3.size() == 2);
    CHECK(g3[0].first == 2);
    CHECK(g3[0].second == p1 * p1);
    CHECK(g3[1].first == 3);
    CHECK(g3[1].second == p2 * p2 * p2);

    // Reassembly: p0^(n-l) * Q_l sums back to the input.
    Poly q = p0 * p0 * p1 + p1 * p2 * p2 - p0 * p0 * p0 * Scalar(Rational(2, 3));
    Poly sum(4, VarSpace::momentum);
    for (const auto& [l, part] : grade_by_p0(q)) sum += p0.pow(3 - l) * part;
    CHECK(sum == q);

    CHECK_THROWS_AS(grade_by_p0(p0 + p1 * p1), Error);
}

TEST_CASE("harmonic space dimensions") {
    CHECK(dim_harmonic(0) == 1);
    CHECK(dim_harmonic(1) == 3);
    CHECK(dim_harmonic(4) == 9);
    for (int l = 0; l <= 10; ++l) CHECK(dim_harmonic(l) == 2 * static_cast<std::size_t>(l) + 1);
}

TEST_CASE("spatial preconditions are enforced") {
    Poly with_p0 = Poly::variable(4, VarSpace::momentum, 0);
    CHECK_THROWS_AS(harmonic_decompose(with_p0), Error);
    Poly inhom = Poly::variable(4, VarSpace::momentum, 1) +
                 Poly::constant(4, VarSpace::momentum, Scalar(1));
    CHECK_THROWS_AS(harmonic_decompose(inhom), Error);
    CHECK_FALSE(is_spatial(Poly::variable(4, VarSpace::position, 1)));
    CHECK(is_spatial(radial_power(2)));
}
