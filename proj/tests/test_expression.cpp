#include "deltasym/expression.hpp"
#include "deltasym/generators.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

using namespace dsym;

namespace {

Poly pvar(int i) { return Poly::variable(4, VarSpace::momentum, i); }
Poly xvar(int i) { return Poly::variable(4, VarSpace::position, i); }

} // namespace

TEST_CASE("literal atoms") {
    CHECK(parse_expression("d[0,0,0,0]") == Value{DeltaExpansion::delta(4)});
    CHECK(parse_expression("3/2") == Value{Scalar(Rational(3, 2))});
    CHECK(parse_expression("i") == Value{Scalar::i()});
    CHECK(parse_expression("p2") == Value{pvar(2)});
    CHECK(parse_expression("cov(1)") == Value{covariant_poly(1, VarSpace::position)});

    MultiIndex k(1);
    k[0] = 3;
    CHECK(parse_expression("d[3]") == Value{DeltaExpansion::term(1, k)});
}

TEST_CASE("polynomial expressions") {
    Poly want = pvar(0) * pvar(0) * pvar(1) - pvar(2) * Scalar(Rational(3, 2));
    CHECK(parse_expression("p0^2*p1 - 3/2*p2") == Value{want});

    Poly complex_line = pvar(0) * Scalar(Rational(1), Rational(1)) - pvar(1);
    CHECK(parse_expression("(1+i)*p0 - p1") == Value{complex_line});

    CHECK(parse_expression("-x0 + x1") == Value{xvar(1) - xvar(0)});
    CHECK(parse_expression("2^3") == Value{Scalar(8)});
    CHECK(parse_expression("x0^0") == Value{Scalar(1)});
}

TEST_CASE("functional expressions") {
    MultiIndex d0(4), d1(4);
    d0[0] = 1;
    d1[1] = 1;
    DeltaExpansion want =
        DeltaExpansion::term(4, d0, Scalar::i()) + DeltaExpansion::term(4, d1);
    CHECK(parse_expression("i*d[1,0,0,0] + d[0,1,0,0]") == Value{want});

    // Multiplying a coordinate into a derivative of delta integrates by parts.
    DeltaExpansion minus_delta = DeltaExpansion::delta(4) * Scalar(-1);
    CHECK(parse_expression("x0*d[1,0,0,0]") == Value{minus_delta});
    CHECK(parse_expression("5*d[0,0,0,0]") == Value{DeltaExpansion::delta(4) * Scalar(5)});

    // The covariant times a functional is the slotwise adjoint product.
    MultiIndex box(4);
    box[0] = 2;
    DeltaExpansion v = DeltaExpansion::term(4, box, Scalar(2));
    CHECK(parse_expression("cov(1)*(2*d[2,0,0,0])") == Value{make_covariant(v, 1)});
}

TEST_CASE("spinor expressions") {
    SpinorKey key;
    key.w[0] = 2;
    key.wbar[1] = 1;
    Value v = parse_expression("w1^2*wb2");
    CHECK(v == Value{SpinorPoly<Poly>::term(key, Poly::constant(4, VarSpace::position,
                                                                Scalar(1)))});

    // Momentum coefficients attach to spinor monomials through products.
    SpinorKey k1;
    k1.w[0] = 1;
    CHECK(parse_expression("p0*w1") ==
          Value{SpinorPoly<Poly>::term(k1, Poly::variable(4, VarSpace::momentum, 0))});
}

TEST_CASE("rejected combinations") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_expression(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::internal;
    };

    CHECK(kind_of("x0 + p0") == ErrorKind::parse);
    CHECK(kind_of("x0 + d[0,0,0,0]") == ErrorKind::parse);
    CHECK(kind_of("d[0,0] + x0") == ErrorKind::parse);
    CHECK(kind_of("d[0,0,0,0]*d[0,0,0,0]") == ErrorKind::parse);
    CHECK(kind_of("d[0,0,0,0]^2") == ErrorKind::parse);
    CHECK(kind_of("x0 +") == ErrorKind::parse);
    CHECK(kind_of("q3") == ErrorKind::parse);
    CHECK(kind_of("x0^(") == ErrorKind::parse);
    CHECK(kind_of("(x0") == ErrorKind::parse);
    CHECK(kind_of("") == ErrorKind::parse);
    CHECK(kind_of("x7") == ErrorKind::parse);
    CHECK(kind_of("3/0") == ErrorKind::parse);
    CHECK(kind_of("x0 x1") == ErrorKind::parse);

    CHECK_THROWS_WITH_AS(parse_expression("x0 + %"),
                         "unexpected character '%' at column 6", Error);
    CHECK_THROWS_AS(parse_poly("d[0,0,0,0]"), Error);
    CHECK_THROWS_AS(parse_delta("x0"), Error);
    CHECK_THROWS_AS(parse_spinor_delta("w1"), Error);
}

TEST_CASE("shape-enforcing wrappers") {
    CHECK(parse_poly("5", 4, VarSpace::momentum) ==
          Poly::constant(4, VarSpace::momentum, Scalar(5)));
    CHECK(parse_poly("x0^3 + x1^3", 2) ==
          Poly::variable(2, VarSpace::position, 0) * Poly::variable(2, VarSpace::position, 0) *
                  Poly::variable(2, VarSpace::position, 0) +
              Poly::variable(2, VarSpace::position, 1) *
                  Poly::variable(2, VarSpace::position, 1) *
                  Poly::variable(2, VarSpace::position, 1));
    CHECK(parse_delta("2") == DeltaExpansion::delta(4) * Scalar(2));
    CHECK(parse_spinor_delta("d[2,0,0,0]") ==
          SpinorPoly<DeltaExpansion>::scalar_term(
              DeltaExpansion::term(4, MultiIndex{2, 0, 0, 0})));
    CHECK(parse_spinor_delta("cov(1)*d[2,0,0,0]") ==
          make_covariant(DeltaExpansion::term(4, MultiIndex{2, 0, 0, 0}), 1));
}

TEST_CASE("printer output reparses") {
    // Frozen canonical forms.
    Poly mixed = Poly::constant(4, VarSpace::position, Scalar(1)) -
                 xvar(0) * xvar(0) * Scalar(2) + xvar(1) * xvar(3) * Scalar::i();
    CHECK(Value{mixed}.str() == "1 - 2*x0^2 + i*x1*x3");
    CHECK(parse_expression(Value{mixed}.str()) == Value{mixed});

    MultiIndex k0(4), k1(4), k2(4);
    k1[1] = 1;
    k2[0] = 2;
    DeltaExpansion dv = DeltaExpansion::term(4, k0, Scalar(2)) +
                        DeltaExpansion::term(4, k1, Scalar(Rational(0), Rational(1, 3))) -
                        DeltaExpansion::term(4, k2);
    CHECK(Value{dv}.str() == "2*d[0,0,0,0] + 1/3*i*d[0,1,0,0] - d[2,0,0,0]");
    CHECK(parse_expression(Value{dv}.str()) == Value{dv});

    CHECK(Value{covariant_poly(1, VarSpace::position)}.str() ==
          "(x0 + x3)*wb2*w2 + (-x1 - i*x2)*wb2*w1 + (-x1 + i*x2)*wb1*w2 + "
          "(x0 - x3)*wb1*w1");
}

TEST_CASE("a thousand random round trips") {
    Rng rng(12345);
    for (int rep = 0; rep < 1000; ++rep) {
        Value v = random_value(rng);
        std::string s = v.str();
        INFO("expression: " << s);
        Value back = parse_expression(s);
        CHECK(back == v);
        CHECK(back.str() == s);
    }
}
