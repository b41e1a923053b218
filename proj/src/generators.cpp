#include "deltasym/generators.hpp"

namespace dsym {

static DiffOp first_order(VarSpace space, std::size_t var, std::size_t deriv, const Scalar& sign) {
    MultiIndex k(4);
    k[deriv] = 1;
    return DiffOp::term(Poly::variable(4, space, var) * sign, k);
}

DiffOp boost_generator(std::size_t j, VarSpace space) {
    if (j < 1 || j > 3) throw Error(ErrorKind::domain, "boost index must be 1, 2, or 3");
    return first_order(space, j, 0, Scalar(1)) + first_order(space, 0, j, Scalar(1));
}

DiffOp rotation_generator(std::size_t i, std::size_t j, VarSpace space) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
        throw Error(ErrorKind::domain, "rotation indices must be distinct spatial indices");
    return first_order(space, j, i, Scalar(1)) + first_order(space, i, j, Scalar(-1));
}

std::vector<NamedOp> all_generators(VarSpace space) {
    std::vector<NamedOp> out;
    for (std::size_t j = 1; j <= 3; ++j)
        out.push_back({"N" + std::to_string(j), boost_generator(j, space)});
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = i + 1; j <= 3; ++j)
            out.push_back({"M" + std::to_string(i) + std::to_string(j),
                           rotation_generator(i, j, space)});
    return out;
}

DiffOp casimir_so3(VarSpace space) {
    DiffOp c(4, space);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = i + 1; j <= 3; ++j) {
            DiffOp m = rotation_generator(i, j, space);
            c -= m.compose(m);
        }
    return c;
}

static DiffOp second_derivative(VarSpace space, std::size_t i, const Scalar& sign) {
    MultiIndex k(4);
    k[i] = 2;
    return DiffOp::term(Poly::constant(4, space, sign), k);
}

DiffOp wave_operator(VarSpace space) {
    DiffOp op = second_derivative(space, 0, Scalar(1));
    for (std::size_t i = 1; i <= 3; ++i) op += second_derivative(space, i, Scalar(-1));
    return op;
}

DiffOp spatial_laplacian(VarSpace space) {
    DiffOp op = second_derivative(space, 1, Scalar(1));
    op += second_derivative(space, 2, Scalar(1));
    op += second_derivative(space, 3, Scalar(1));
    return op;
}

DeltaExpansion box_delta(int l) {
    if (l < 0) throw Error(ErrorKind::domain, "negative power of the wave operator");
    // fourier(box^l delta) = (-1)^l (p^2)^l, so build it on the transform side.
    return DeltaExpansion::fourier_inv(momentum_square().pow(l) *
                                       Scalar((l % 2 == 0) ? 1 : -1));
}

Poly momentum_square() {
    Poly p(4, VarSpace::momentum);
    MultiIndex k(4);
    k[0] = 2;
    p.add_term(k, Scalar(1));
    for (std::size_t i = 1; i <= 3; ++i) {
        MultiIndex m(4);
        m[i] = 2;
        p.add_term(m, Scalar(-1));
    }
    return p;
}

} // namespace dsym
