#include "deltasym/jet_division.hpp"

#include "deltasym/spinor.hpp"

#include <string>

namespace dsym {

namespace {

std::string term_name(const Poly& f, const MultiIndex& k) {
    return Poly::monomial(f.dim(), f.space(), k, Scalar(1)).str();
}

Scalar scalar_pow(const Scalar& c, int e) {
    Scalar r{1};
    for (int j = 0; j < e; ++j) r = r * c;
    return r;
}

Poly poly_pow(const Poly& f, int e) {
    Poly r = Poly::constant(f.dim(), f.space(), Scalar(1));
    for (int j = 0; j < e; ++j) r = r * f;
    return r;
}

} // namespace

Poly divide_by_coordinate(const Poly& f, std::size_t i) {
    if (i >= f.dim()) throw Error(ErrorKind::dimension, "coordinate index out of range");
    Poly q(f.dim(), f.space());
    for (const auto& [k, c] : f.terms()) {
        if (k[i] == 0)
            throw Error(ErrorKind::domain, "the term " + term_name(f, k) + " has no " +
                                               variable_names(f.dim(), f.space())[i] +
                                               " factor");
        MultiIndex k2 = k;
        k2[i] -= 1;
        q.set_coeff(k2, c);
    }
    return q;
}

std::vector<Poly> coordinate_power_decompose(const Poly& f, int e) {
    if (e < 1) throw Error(ErrorKind::domain, "the coordinate power must be at least 1");
    std::vector<Poly> out(f.dim(), Poly(f.dim(), f.space()));
    for (const auto& [k, c] : f.terms()) {
        std::size_t slot = f.dim();
        for (std::size_t i = 0; i < f.dim(); ++i)
            if (k[i] >= e) {
                slot = i;
                break;
            }
        if (slot == f.dim())
            throw Error(ErrorKind::domain, "no coordinate reaches power " + std::to_string(e) +
                                               " in the term " + term_name(f, k));
        MultiIndex k2 = k;
        k2[slot] -= e;
        out[slot] += Poly::monomial(f.dim(), f.space(), k2, c);
    }
    return out;
}

std::vector<Poly> lemma3_decompose(const Poly& f, int m) {
    if (m < 0) throw Error(ErrorKind::domain, "the jet order must be nonnegative");
    long bound = static_cast<long>(m) * static_cast<long>(f.dim());
    for (const auto& [k, c] : f.terms())
        if (k.order() <= bound)
            throw Error(ErrorKind::domain,
                        "the jet condition fails at the term " + term_name(f, k) +
                            ": its order " + std::to_string(k.order()) +
                            " does not exceed " + std::to_string(bound));
    return coordinate_power_decompose(f, m + 1);
}

std::map<std::pair<int, int>, Poly> sl2_matrix_split(const Poly& f, int s2) {
    if (f.dim() != 4)
        throw Error(ErrorKind::dimension, "the matrix splitting works in 4 variables");
    if (s2 < 1)
        throw Error(ErrorKind::domain, "matrix splitting needs doubled spin at least 1");

    // Each coordinate is a weighted sum of two matrix entries:
    // x0 = (u11 + u22)/2, x1 = -(u12 + u21)/2, x2 = (-i u12 + i u21)/2,
    // x3 = (-u11 + u22)/2.
    struct Route {
        int a1, b1;
        Scalar c1;
        int a2, b2;
        Scalar c2;
    };
    const Scalar half{Rational(1, 2)};
    const Scalar mhalf{Rational(-1, 2)};
    const Scalar ihalf{Rational(0), Rational(1, 2)};
    const Scalar mihalf{Rational(0), Rational(-1, 2)};
    const Route routes[4] = {{0, 0, half, 1, 1, half},
                             {0, 1, mhalf, 1, 0, mhalf},
                             {0, 1, mihalf, 1, 0, ihalf},
                             {0, 0, mhalf, 1, 1, half}};

    int e = 2 * s2;
    std::vector<Poly> pieces = coordinate_power_decompose(f, e);

    std::map<std::pair<int, int>, Poly> result;
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s) result.emplace(std::make_pair(r, s), Poly(4, f.space()));

    for (std::size_t i = 0; i < 4; ++i) {
        if (pieces[i].is_zero()) continue;
        const Route& rt = routes[i];
        Poly u1 = matrix_form_entry(rt.a1, rt.b1, f.space());
        Poly u2 = matrix_form_entry(rt.a2, rt.b2, f.space());
        // x_i^e = sum_j C(e,j) c1^j c2^(e-j) u1^j u2^(e-j); the larger of the
        // two exponents is at least s2 and fixes the bucket.
        for (int j = 0; j <= e; ++j) {
            Scalar w = Scalar(Rational(binomial(e, j))) * scalar_pow(rt.c1, j) *
                       scalar_pow(rt.c2, e - j);
            bool first = j >= s2;
            Poly residue = first ? poly_pow(u1, j - s2) * poly_pow(u2, e - j)
                                 : poly_pow(u1, j) * poly_pow(u2, s2 - j);
            auto key = first ? std::make_pair(rt.a1 + 1, rt.b1 + 1)
                             : std::make_pair(rt.a2 + 1, rt.b2 + 1);
            result[key] += pieces[i] * residue * w;
        }
    }

    Poly back(4, f.space());
    for (const auto& [key, g] : result)
        back += poly_pow(matrix_form_entry(key.first - 1, key.second - 1, f.space()), s2) * g;
    if (!(back == f))
        throw Error(ErrorKind::internal, "matrix splitting failed to reconstruct the input");
    return result;
}

} // namespace dsym
