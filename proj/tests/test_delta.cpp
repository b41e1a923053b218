#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltasym/delta_expansion.hpp"
#include "deltasym/generators.hpp"
#include "deltasym/rng.hpp"

using namespace dsym;

static DeltaExpansion rand_expansion(Rng& rng, int max_order, int n_terms) {
    DeltaExpansion v(4);
    for (int t = 0; t < n_terms; ++t) {
        MultiIndex k(4);
        int budget = max_order;
        for (std::size_t i = 0; i < 4; ++i) {
            k[i] = static_cast<int>(rng.range(0, budget));
            budget -= k[i];
        }
        v.add_term(k, Scalar(Rational(rng.range(-9, 9), rng.range(1, 5)),
                             Rational(rng.range(-9, 9), rng.range(1, 5))));
    }
    return v;
}

TEST_CASE("pairing against monomials is diagonal with factorials") {
    // (d^k delta, x^l) = (-1)^|k| k! when k == l, else 0.
    MultiIndex k{2, 1, 0, 0};
    DeltaExpansion v = DeltaExpansion::term(4, k);
    CHECK(v.pair(Poly::monomial(4, VarSpace::position, k)) == Scalar(-2)); // (-1)^3 * 2!
    CHECK(v.pair(Poly::monomial(4, VarSpace::position, MultiIndex{2, 0, 0, 0})) == Scalar(0));
    CHECK(v.pair(Poly::monomial(4, VarSpace::position, MultiIndex{2, 1, 1, 0})) == Scalar(0));
    CHECK(DeltaExpansion::delta().pair(Poly::constant(4, VarSpace::position, Scalar(5))) ==
          Scalar(5));
}

TEST_CASE("multiplication by coordinates lowers derivatives") {
    // x0 * d^(2,0,0,0) delta = -2 d^(1,0,0,0) delta.
    DeltaExpansion v = DeltaExpansion::term(4, MultiIndex{2, 0, 0, 0});
    Poly x0 = Poly::variable(4, VarSpace::position, 0);
    CHECK(v.mul_poly(x0) ==
          DeltaExpansion::term(4, MultiIndex{1, 0, 0, 0}, Scalar(-2)));
    // x1 kills it.
    CHECK(v.mul_poly(Poly::variable(4, VarSpace::position, 1)).is_zero());
    // x0^2 * d^(2,0,0,0) delta = 2 delta.
    CHECK(v.mul_poly(x0 * x0) == DeltaExpansion::delta() * Scalar(2));
}

TEST_CASE("multiplication is adjoint to multiplying the test function") {
    Rng rng(11);
    for (int rep = 0; rep < 12; ++rep) {
        DeltaExpansion v = rand_expansion(rng, 4, 3);
        Poly f(4, VarSpace::position), g(4, VarSpace::position);
        for (int t = 0; t < 3; ++t) {
            MultiIndex k(4);
            k[rng.range(0, 3)] = static_cast<int>(rng.range(0, 2));
            f.add_term(k, Scalar(rng.range(-4, 4)));
            MultiIndex m(4);
            m[rng.range(0, 3)] = static_cast<int>(rng.range(0, 2));
            g.add_term(m, Scalar(rng.range(-4, 4)));
        }
        CHECK(v.mul_poly(f).pair(g) == v.pair(f * g));
    }
}

TEST_CASE("derivative is adjoint to differentiating the test function") {
    Rng rng(12);
    for (int rep = 0; rep < 12; ++rep) {
        DeltaExpansion v = rand_expansion(rng, 3, 3);
        Poly f(4, VarSpace::position);
        for (int t = 0; t < 4; ++t) {
            MultiIndex k(4);
            k[rng.range(0, 3)] = static_cast<int>(rng.range(0, 3));
            f.add_term(k, Scalar(rng.range(-4, 4)));
        }
        MultiIndex a{1, 0, 1, 0};
        // (d^a v, f) = (-1)^|a| (v, d^a f).
        CHECK(v.deriv(a).pair(f) == v.pair(f.differentiate(a)));
    }
}

TEST_CASE("transform maps derivatives to monomials") {
    // fourier(d^k delta) = (-i)^|k| p^k.
    DeltaExpansion v = DeltaExpansion::term(4, MultiIndex{1, 0, 0, 0});
    CHECK(v.fourier() ==
          Poly::monomial(4, VarSpace::momentum, MultiIndex{1, 0, 0, 0}, -Scalar::i()));
    DeltaExpansion w = DeltaExpansion::term(4, MultiIndex{2, 0, 0, 0});
    CHECK(w.fourier() ==
          Poly::monomial(4, VarSpace::momentum, MultiIndex{2, 0, 0, 0}, Scalar(-1)));
    CHECK(DeltaExpansion::delta().fourier() ==
          Poly::constant(4, VarSpace::momentum, Scalar(1)));

    Rng rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        DeltaExpansion v2 = rand_expansion(rng, 5, 4);
        CHECK(DeltaExpansion::fourier_inv(v2.fourier()) == v2);
    }
}

TEST_CASE("transform of invariant powers of the wave operator") {
    // fourier(box^l delta) = (-1)^l (p^2)^l.
    for (int l = 0; l <= 3; ++l) {
        Poly expect = momentum_square().pow(l) * Scalar(l % 2 == 0 ? 1 : -1);
        CHECK(box_delta(l).fourier() == expect);
    }
    // box_delta agrees with applying the operator directly.
    DiffOp box = wave_operator(VarSpace::position);
    CHECK(DeltaExpansion::delta().apply_operator(box).apply_operator(box) == box_delta(2));
}

TEST_CASE("reflection flips odd orders") {
    DeltaExpansion v = DeltaExpansion::term(4, MultiIndex{1, 0, 0, 0}) +
                       DeltaExpansion::term(4, MultiIndex{1, 1, 0, 0}, Scalar(3));
    DeltaExpansion r = v.reflect();
    CHECK(r.coeff(MultiIndex{1, 0, 0, 0}) == Scalar(-1));
    CHECK(r.coeff(MultiIndex{1, 1, 0, 0}) == Scalar(3));
    CHECK(r.reflect() == v);

    CHECK_FALSE(v.is_even());
    CHECK_FALSE(v.is_odd());
    CHECK(DeltaExpansion::delta().is_even());
    CHECK(DeltaExpansion::term(4, MultiIndex{0, 1, 0, 0}).is_odd());
    CHECK(box_delta(3).is_even());
}

TEST_CASE("generator action intertwines with the transform") {
    // For boosts the transform picks up a sign; for rotations it does not:
    // fourier(N v) = -N fourier(v), fourier(M v) = M fourier(v).
    Rng rng(14);
    for (int rep = 0; rep < 6; ++rep) {
        DeltaExpansion v = rand_expansion(rng, 4, 4);
        for (const auto& [name, op_pos] : all_generators(VarSpace::position)) {
            DiffOp op_mom = [&] {
                for (const auto& g : all_generators(VarSpace::momentum))
                    if (g.name == name) return g.op;
                throw Error(ErrorKind::internal, "generator lookup");
            }();
            Scalar sigma = name[0] == 'N' ? Scalar(-1) : Scalar(1);
            CHECK(v.apply_operator(op_pos).fourier() == sigma * op_mom.apply(v.fourier()));
        }
    }
}

TEST_CASE("invariant functionals are killed by every generator") {
    for (int l = 0; l <= 3; ++l) {
        DeltaExpansion v = box_delta(l);
        for (const auto& [name, op] : all_generators(VarSpace::position)) {
            CAPTURE(name);
            CHECK(v.apply_operator(op).is_zero());
        }
    }
    // A non-invariant functional is not killed.
    DeltaExpansion w = DeltaExpansion::term(4, MultiIndex{1, 0, 0, 0});
    CHECK_FALSE(w.apply_operator(boost_generator(1, VarSpace::position)).is_zero());
}

TEST_CASE("delta text form") {
    DeltaExpansion v = DeltaExpansion::delta() * Scalar(2);
    v.add_term(MultiIndex{2, 0, 0, 0}, Scalar(-1));
    v.add_term(MultiIndex{0, 1, 0, 0}, Scalar(Rational(0), Rational(1, 3)));
    CHECK(v.str() == "2*d[0,0,0,0] + 1/3*i*d[0,1,0,0] - d[2,0,0,0]");
    CHECK(DeltaExpansion(4).str() == "0");
}
