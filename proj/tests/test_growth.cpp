#include "deltasym/growth.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

using namespace dsym;

namespace {

MultiIndex mi1(int k) {
    MultiIndex m(1);
    m[0] = k;
    return m;
}

} // namespace

TEST_CASE("dual basis norms") {
    ClassParams unit{Rational(1), Rational(1), 0};
    DualNorm n0 = dual_norm(MultiIndex(4), unit);
    CHECK(n0.exact);
    CHECK(n0.value == Rational(1));

    DualNorm n1 = dual_norm(MultiIndex{2, 0, 0, 0}, unit);
    CHECK(n1.exact);
    CHECK(n1.value == Rational(1, 4));

    DualNorm n2 = dual_norm(MultiIndex{1, 1, 0, 0}, ClassParams{Rational(0), Rational(2), 0});
    CHECK(n2.exact);
    CHECK(n2.value == Rational(1, 4));

    // Half-integer exponent with even entry stays on the integer ledger.
    DualNorm n3 = dual_norm(mi1(2), ClassParams{Rational(1, 2), Rational(1), 0});
    CHECK(n3.exact);
    CHECK(n3.value == Rational(1, 2));

    // Odd entry with half-integer exponent falls back to the float.
    DualNorm n4 = dual_norm(mi1(3), ClassParams{Rational(1, 2), Rational(2), 0});
    CHECK_FALSE(n4.exact);
    CHECK(n4.approx == doctest::Approx(0.024056261216234408).epsilon(1e-14));

    CHECK_THROWS_AS(dual_norm(mi1(1), ClassParams{Rational(1), Rational(0), 0}), Error);
    CHECK_THROWS_AS(dual_norm(mi1(1), ClassParams{Rational(-1), Rational(1), 0}), Error);
}

TEST_CASE("growth sequence of finite expansions") {
    // A single term contributes to exactly one order.
    DeltaExpansion single = DeltaExpansion::term(2, MultiIndex{2, 1}, Scalar(5));
    std::vector<double> m = growth_sequence(single, Rational(0), 5);
    REQUIRE(m.size() == 5);
    CHECK(m[0] == 0.0);
    CHECK(m[1] == 0.0);
    CHECK(m[2] == doctest::Approx(1.709975946676697).epsilon(1e-14));
    CHECK(m[3] == 0.0);
    CHECK(m[4] == 0.0);

    // Unit coefficients with beta = 0 give the constant sequence 1.
    DeltaExpansion ones(1);
    for (int k = 0; k <= 5; ++k) ones += DeltaExpansion::term(1, mi1(k), Scalar(1));
    for (double v : growth_sequence(ones, Rational(0), 5))
        CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(growth_sequence(ones, Rational(0), 0), Error);
}

TEST_CASE("inverse factorial coefficients approach e from below") {
    DeltaExpansion v(1);
    for (int k = 1; k <= 40; ++k)
        v += DeltaExpansion::term(1, mi1(k), Scalar(Rational(1) / Rational(factorial(k))));
    std::vector<double> m = growth_sequence(v, Rational(1), 40);
    CHECK(m[39] == doctest::Approx(2.536698573160901).epsilon(1e-14));

    // The sequence increases toward e but the order-40 truncation still sits
    // about 6.7% short, outside a 5% band around e.
    double e = std::exp(1.0);
    for (int n = 2; n <= 40; ++n) CHECK(m[n - 1] > m[n - 2]);
    double dev = std::abs(m[39] - e) / e;
    CHECK(dev == doctest::Approx(0.06680074648517276).epsilon(1e-10));
    CHECK(dev > 0.05);
}

TEST_CASE("interpolation witness with exact exponents") {
    AcyclicityWitness w = acyclicity_params({Rational(2), Rational(3), Rational(9, 2), 7, Rational(1, 2)});
    CHECK(w.a_exact);
    CHECK(w.a_rational == Rational(2));
    CHECK(w.a == 2.0);
    CHECK(w.eps == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(w.n == 14);

    // b = b1 degenerates to the identity witness.
    w = acyclicity_params({Rational(1), Rational(2), Rational(2), 9, Rational(1, 2)});
    CHECK(w.a_exact);
    CHECK(w.a_rational == Rational(1));
    CHECK(w.eps == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w.n == 9);

    w = acyclicity_params({Rational(1), Rational(2), Rational(4), 3, Rational(1, 2)});
    CHECK(w.a_rational == Rational(2));
    CHECK(w.eps == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(w.n == 6);

    // Fractional exponent: a = 1/2, so eps is a square root and n rounds up.
    w = acyclicity_params({Rational(1), Rational(4), Rational(2), 5, Rational(1, 4)});
    CHECK(w.a_exact);
    CHECK(w.a_rational == Rational(1, 2));
    CHECK(w.eps == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w.n == 3);
}

TEST_CASE("interpolation witness with an irrational exponent") {
    AcyclicityWitness w = acyclicity_params({Rational(1), Rational(2), Rational(3), 7, Rational(1, 2)});
    CHECK_FALSE(w.a_exact);
    CHECK(w.a == doctest::Approx(1.584962500721156).epsilon(1e-14));
    CHECK(w.eps == doctest::Approx(0.3333333333333333).epsilon(1e-13));
    CHECK(w.n == 12);
}

TEST_CASE("interpolation witness rejects bad parameters") {
    CHECK_THROWS_AS(acyclicity_params({Rational(2), Rational(2), Rational(3), 1, Rational(1, 2)}),
                    Error);
    CHECK_THROWS_AS(acyclicity_params({Rational(1), Rational(2), Rational(1), 1, Rational(1, 2)}),
                    Error);
    CHECK_THROWS_AS(acyclicity_params({Rational(1), Rational(2), Rational(3), 1, Rational(1)}),
                    Error);
    CHECK_THROWS_AS(acyclicity_params({Rational(1), Rational(2), Rational(3), -1, Rational(1, 2)}),
                    Error);
}
