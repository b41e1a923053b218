#include "deltasym/spinor.hpp"
#include "deltasym/generators.hpp"
#include "deltasym/rng.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

using namespace dsym;

namespace {

Poly xvar(int i) { return Poly::variable(4, VarSpace::position, i); }

SpinorKey key(int wb1, int wb2, int w1, int w2) {
    SpinorKey k;
    k.wbar[0] = wb1;
    k.wbar[1] = wb2;
    k.w[0] = w1;
    k.w[1] = w2;
    return k;
}

DeltaExpansion rand_expansion(Rng& rng, int terms, int max_order) {
    DeltaExpansion v(4);
    for (int t = 0; t < terms; ++t) {
        MultiIndex k(4);
        int budget = static_cast<int>(rng.range(0, max_order));
        for (std::size_t j = 0; j < 4; ++j) {
            k[j] = static_cast<int>(rng.range(0, budget));
            budget -= k[j];
        }
        v += DeltaExpansion::term(4, k,
                                  Scalar(Rational(rng.range(-5, 5)), Rational(rng.range(-5, 5))));
    }
    return v;
}

std::vector<std::vector<Scalar>> mat2(long a00n, long a00d, long a01n, long a01d, long a10n,
                                      long a10d, long a11n, long a11d) {
    return {{Scalar(Rational(a00n, a00d)), Scalar(Rational(a01n, a01d))},
            {Scalar(Rational(a10n, a10d)), Scalar(Rational(a11n, a11d))}};
}

} // namespace

TEST_CASE("covariant slot table and canonical form") {
    SpinorPoly<Poly> c0 = covariant_poly(0, VarSpace::position);
    REQUIRE(c0.terms().size() == 1);
    CHECK(*c0.coeff_ptr(SpinorKey{}) == Poly::constant(4, VarSpace::position, Scalar(1)));
    CHECK(c0.str() == "1");

    SpinorPoly<Poly> c1 = covariant_poly(1, VarSpace::position);
    REQUIRE(c1.terms().size() == 4);
    CHECK(*c1.coeff_ptr(key(1, 0, 1, 0)) == xvar(0) - xvar(3));
    CHECK(*c1.coeff_ptr(key(1, 0, 0, 1)) == xvar(2) * Scalar::i() - xvar(1));
    CHECK(*c1.coeff_ptr(key(0, 1, 1, 0)) == (xvar(2) * Scalar::i() + xvar(1)) * Scalar(-1));
    CHECK(*c1.coeff_ptr(key(0, 1, 0, 1)) == xvar(0) + xvar(3));
    CHECK(c1.str() == "(x0 + x3)*wb2*w2 + (-x1 - i*x2)*wb2*w1 + (-x1 + i*x2)*wb1*w2 + "
                      "(x0 - x3)*wb1*w1");
    CHECK(c1.bidegree() == std::pair<int, int>(1, 1));

    // (s2+1)^2 slots, bidegree (s2, s2), homogeneous degree-s2 coefficients.
    for (int s2 = 0; s2 <= 6; ++s2) {
        SpinorPoly<Poly> c = covariant_poly(s2, VarSpace::momentum);
        CHECK(c.terms().size() == static_cast<std::size_t>((s2 + 1) * (s2 + 1)));
        CHECK(c.bidegree() == std::pair<int, int>(s2, s2));
        for (const auto& [k, f] : c.terms()) {
            CHECK(f.is_homogeneous());
            CHECK(f.degree() == s2);
        }
    }
}

TEST_CASE("derivative covariant identities") {
    Report rep = check_covariant_identities();
    CHECK(rep.pass());
    REQUIRE(rep.checks().size() == 3);
    for (const Check& c : rep.checks()) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("kernel dichotomy in l and s2") {
    for (int s2 = 1; s2 <= 4; ++s2)
        for (int l = 0; l <= s2 + 1; ++l) {
            INFO("s2 = " << s2 << ", l = " << l);
            CHECK(kernel_test(s2, l) == (l <= s2 - 1));
        }
}

TEST_CASE("covariant product of a functional") {
    // Order below s2 is annihilated.
    CHECK(make_covariant(DeltaExpansion::delta(), 1).is_zero());

    // Frozen slot table for the wave power.
    SpinorPoly<DeltaExpansion> w = make_covariant(box_delta(1), 1);
    REQUIRE(w.terms().size() == 4);
    auto dterm = [](int i, const Scalar& c) {
        MultiIndex k(4);
        k[i] = 1;
        return DeltaExpansion::term(4, k, c);
    };
    CHECK(*w.coeff_ptr(key(1, 0, 1, 0)) == dterm(0, Scalar(-2)) + dterm(3, Scalar(-2)));
    CHECK(*w.coeff_ptr(key(0, 1, 0, 1)) == dterm(0, Scalar(-2)) + dterm(3, Scalar(2)));
    CHECK(*w.coeff_ptr(key(1, 0, 0, 1)) ==
          dterm(1, Scalar(-2)) + dterm(2, Scalar(0, 2)));
    CHECK(*w.coeff_ptr(key(0, 1, 1, 0)) ==
          dterm(1, Scalar(-2)) + dterm(2, Scalar(0, -2)));

    // s2 = 0 is the identity.
    DeltaExpansion v = DeltaExpansion::term(4, MultiIndex{2, 1, 0, 0}, Scalar(3));
    CHECK(*make_covariant(v, 0).coeff_ptr(SpinorKey{}) == v);
}

TEST_CASE("extraction inverts the covariant product") {
    // Frozen round trip.
    auto [v1, amb1] = extract_invariant(make_covariant(box_delta(1), 1), 1);
    CHECK(v1 == box_delta(1));
    CHECK(amb1 == std::vector<int>{0});

    // Zero data.
    auto [v0, amb0] = extract_invariant(SpinorPoly<DeltaExpansion>{}, 1);
    CHECK(v0 == DeltaExpansion(4));
    CHECK(amb0 == std::vector<int>{0});

    // s2 = 0: identity with empty ambiguity.
    DeltaExpansion plain = DeltaExpansion::term(4, MultiIndex{1, 1, 0, 0}, Scalar(5));
    auto [vp, ambp] = extract_invariant(make_covariant(plain, 0), 0);
    CHECK(vp == plain);
    CHECK(ambp.empty());

    // Wave-power combinations: everything from order 2*s2 up survives, the
    // rest is exactly the declared ambiguity.
    for (int s2 = 1; s2 <= 3; ++s2) {
        DeltaExpansion v(4), expected(4);
        for (int l = 0; l <= 4; ++l) {
            Scalar c{Rational(l + 2, 3)};
            v += box_delta(l) * c;
            if (l >= s2) expected += box_delta(l) * c;
        }
        auto [got, amb] = extract_invariant(make_covariant(v, s2), s2);
        CHECK(got == expected);
        std::vector<int> want_amb;
        for (int l = 0; l < s2; ++l) want_amb.push_back(2 * l);
        CHECK(amb == want_amb);
    }

    // Random functionals: the recovered v reproduces w exactly.
    Rng rng(47);
    for (int s2 = 1; s2 <= 3; ++s2)
        for (int rep = 0; rep < 4; ++rep) {
            DeltaExpansion v = rand_expansion(rng, 4, 6);
            SpinorPoly<DeltaExpansion> w = make_covariant(v, s2);
            auto [back, amb] = extract_invariant(w, s2);
            CHECK(make_covariant(back, s2) == w);
        }
}

TEST_CASE("extraction rejects non-covariant data") {
    // Perturb one slot of a consistent value.
    SpinorPoly<DeltaExpansion> w = make_covariant(box_delta(1), 1);
    w.add_term(key(1, 0, 1, 0), DeltaExpansion::term(4, MultiIndex{0, 1, 0, 0}, Scalar(1)));
    try {
        extract_invariant(w, 1);
        FAIL("expected an inconsistency error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::inconsistent);
        CHECK(std::string(e.what()).find("grade 1") != std::string::npos);
    }

    // Wrong bidegree.
    SpinorPoly<DeltaExpansion> bad;
    bad.add_term(key(1, 0, 0, 0), DeltaExpansion::delta());
    CHECK_THROWS_AS(extract_invariant(bad, 1), Error);
}

TEST_CASE("representation product decomposition") {
    CHECK(cg_decompose({0, 0}) == std::vector<RepLabel>{{0, 0}});
    CHECK(cg_decompose({1, 0}) == std::vector<RepLabel>{{1, 1}});
    CHECK(cg_decompose({1, 1}) == std::vector<RepLabel>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});

    for (int r2 = 0; r2 <= 5; ++r2)
        for (int s2 = 0; s2 <= 5; ++s2) {
            int diagonal = 0;
            for (const RepLabel& rep : cg_decompose({r2, s2}))
                if (rep.r2 == rep.s2) ++diagonal;
            CHECK(diagonal == std::min(r2, s2) + 1);
        }
}

TEST_CASE("reflection parity alternates") {
    CHECK(reflection_parity(0) == 1);
    CHECK(reflection_parity(1) == -1);
    CHECK(reflection_parity(2) == 1);
    CHECK(reflection_parity(3) == -1);
    CHECK(reflection_parity(4) == 1);
}

TEST_CASE("unimodular matrices map to Lorentz matrices") {
    // Identity.
    auto id = sl2_to_lorentz(mat2(1, 1, 0, 1, 0, 1, 1, 1));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(id[i][j] == (i == j ? Scalar(1) : Scalar(0)));

    // Axis-3 boost from diag(2, 1/2).
    auto boost = sl2_to_lorentz(mat2(2, 1, 0, 1, 0, 1, 1, 2));
    CHECK(boost[0][0] == Scalar(Rational(17, 8)));
    CHECK(boost[0][3] == Scalar(Rational(-15, 8)));
    CHECK(boost[3][0] == Scalar(Rational(-15, 8)));
    CHECK(boost[3][3] == Scalar(Rational(17, 8)));
    CHECK(boost[1][1] == Scalar(1));
    CHECK(boost[2][2] == Scalar(1));
    CHECK(boost[0][1] == Scalar(0));

    // Quarter-turn spinor rotation: diag(1, -1, 1, -1).
    auto rot = sl2_to_lorentz(mat2(0, 1, -1, 1, 1, 1, 0, 1));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Scalar want = (i == j) ? ((i == 1 || i == 3) ? Scalar(-1) : Scalar(1)) : Scalar(0);
            CHECK(rot[i][j] == want);
        }

    // Null boost.
    auto null_boost = sl2_to_lorentz(mat2(1, 1, 1, 1, 0, 1, 1, 1));
    std::vector<std::vector<Rational>> want = {{Rational(3, 2), Rational(-1), Rational(0), Rational(1, 2)},
                                               {Rational(-1), Rational(1), Rational(0), Rational(-1)},
                                               {Rational(0), Rational(0), Rational(1), Rational(0)},
                                               {Rational(-1, 2), Rational(1), Rational(0), Rational(1, 2)}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(null_boost[i][j] == Scalar(want[i][j]));

    CHECK_THROWS_AS(sl2_to_lorentz(mat2(2, 1, 0, 1, 0, 1, 1, 1)), Error);
}

TEST_CASE("the map to Lorentz matrices is a homomorphism") {
    Rng rng(53);
    for (int rep = 0; rep < 5; ++rep) {
        // Unit triangular factors always have determinant 1.
        Scalar b{Rational(rng.range(-4, 4), 3), Rational(rng.range(-4, 4), 2)};
        Scalar c{Rational(rng.range(-4, 4), 5), Rational(rng.range(-4, 4), 3)};
        std::vector<std::vector<Scalar>> upper = {{Scalar(1), b}, {Scalar(0), Scalar(1)}};
        std::vector<std::vector<Scalar>> lower = {{Scalar(1), Scalar(0)}, {c, Scalar(1)}};
        std::vector<std::vector<Scalar>> product = {
            {upper[0][0] * lower[0][0] + upper[0][1] * lower[1][0],
             upper[0][0] * lower[0][1] + upper[0][1] * lower[1][1]},
            {upper[1][0] * lower[0][0] + upper[1][1] * lower[1][0],
             upper[1][0] * lower[0][1] + upper[1][1] * lower[1][1]}};

        auto lu = sl2_to_lorentz(upper);
        auto ll = sl2_to_lorentz(lower);
        auto lp = sl2_to_lorentz(product);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Scalar acc;
                for (int k = 0; k < 4; ++k) acc += lu[i][k] * ll[k][j];
                CHECK(acc == lp[i][j]);
            }
    }
}

TEST_CASE("covariant transformation invariance") {
    CHECK(covariance_check(mat2(1, 1, 0, 1, 0, 1, 1, 1)).pass());
    CHECK(covariance_check(mat2(2, 1, 0, 1, 0, 1, 1, 2)).pass());
    CHECK(covariance_check(mat2(1, 1, 1, 1, 0, 1, 1, 1)).pass());

    Rng rng(59);
    for (int rep = 0; rep < 3; ++rep) {
        Scalar b{Rational(rng.range(-3, 3), 2), Rational(rng.range(-3, 3), 3)};
        Scalar c{Rational(rng.range(-3, 3), 4), Rational(rng.range(-3, 3), 5)};
        std::vector<std::vector<Scalar>> upper = {{Scalar(1), b}, {Scalar(0), Scalar(1)}};
        std::vector<std::vector<Scalar>> lower = {{Scalar(1), Scalar(0)}, {c, Scalar(1)}};
        CHECK(covariance_check(upper).pass());
        CHECK(covariance_check(lower).pass());
    }

    // The substitution helper leaves values alone under identity matrices.
    std::array<std::array<Scalar, 2>, 2> ident{
        {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}};
    SpinorPoly<Poly> c1 = covariant_poly(1, VarSpace::position);
    CHECK(substitute_spinor(c1, ident, ident) == c1);
}
