#include "deltasym/harmonic.hpp"

#include "deltasym/matrix.hpp"

#include <map>

namespace dsym {

bool is_spatial(const Poly& p) {
    if (p.dim() != 4 || p.space() != VarSpace::momentum) return false;
    for (const auto& [k, c] : p.terms())
        if (k[0] != 0) return false;
    return true;
}

Poly radial_power(int k) {
    Poly r2(4, VarSpace::momentum);
    for (std::size_t i = 1; i <= 3; ++i) {
        MultiIndex m(4);
        m[i] = 2;
        r2.add_term(m, Scalar(1));
    }
    return r2.pow(k);
}

std::vector<std::pair<int, Poly>> grade_by_p0(const Poly& p) {
    if (p.dim() != 4 || p.space() != VarSpace::momentum)
        throw Error(ErrorKind::dimension, "p0 grading expects a momentum polynomial");
    if (!p.is_homogeneous())
        throw Error(ErrorKind::domain, "p0 grading expects a homogeneous polynomial");
    std::map<int, Poly> parts;
    for (const auto& [k, c] : p.terms()) {
        MultiIndex sp = k;
        sp[0] = 0;
        auto it = parts.find(sp.order());
        if (it == parts.end()) it = parts.emplace(sp.order(), Poly(4, VarSpace::momentum)).first;
        it->second.add_term(sp, c);
    }
    return {parts.begin(), parts.end()};
}

std::size_t dim_harmonic(int l) { return harmonic_basis(l).size(); }

// Degree-m spatial monomials as full 4-variable indices, in the lexicographic
// order of the spatial exponent triple.
static std::vector<MultiIndex> spatial_monomials(int m) {
    std::vector<MultiIndex> out;
    for (const MultiIndex& t : multi_indices_of_order(3, m)) {
        MultiIndex k(4);
        k[1] = t[0];
        k[2] = t[1];
        k[3] = t[2];
        out.push_back(k);
    }
    return out;
}

const std::vector<Poly>& harmonic_basis(int m) {
    static std::map<int, std::vector<Poly>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 0) throw Error(ErrorKind::domain, "harmonic degree must be non-negative");

    std::vector<MultiIndex> cols = spatial_monomials(m);
    std::vector<MultiIndex> rows = spatial_monomials(m - 2 >= 0 ? m - 2 : -1);
    std::map<MultiIndex, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);

    MatrixQ lap(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t i = 1; i <= 3; ++i) {
            int e = cols[c][i];
            if (e < 2) continue;
            MultiIndex r = cols[c];
            r[i] -= 2;
            lap.at(row_index.at(r), c) += Scalar(e * (e - 1));
        }
    }

    std::vector<Poly> basis;
    for (const auto& v : lap.nullspace()) {
        Poly h(4, VarSpace::momentum);
        for (std::size_t c = 0; c < cols.size(); ++c) h.add_term(cols[c], v[c]);
        basis.push_back(std::move(h));
    }
    if (basis.size() != static_cast<std::size_t>(2 * m + 1))
        throw Error(ErrorKind::internal, "harmonic space has unexpected dimension");
    return cache.emplace(m, std::move(basis)).first->second;
}

namespace {
struct SplitBlock {
    int k;
    std::size_t first_col;
    std::size_t size;
};
struct SplitSolver {
    std::map<MultiIndex, std::size_t> mono_index;
    std::vector<SplitBlock> blocks;
    MatrixQ inverse; // maps monomial coordinates to block coordinates
};
} // namespace

// The change of basis from { |p|^(2k) h : h harmonic } to monomials is square
// and invertible; its inverse is cached per degree so repeated splittings are
// a single matrix-vector product.
static const SplitSolver& split_solver(int m) {
    static std::map<int, SplitSolver> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    SplitSolver s;
    std::vector<MultiIndex> monos = spatial_monomials(m);
    for (std::size_t r = 0; r < monos.size(); ++r) s.mono_index.emplace(monos[r], r);

    std::vector<std::vector<Scalar>> columns;
    for (int k = 0; 2 * k <= m; ++k) {
        const std::vector<Poly>& hb = harmonic_basis(m - 2 * k);
        s.blocks.push_back({k, columns.size(), hb.size()});
        Poly r = radial_power(k);
        for (const Poly& h : hb) {
            Poly prod = r * h;
            std::vector<Scalar> col(monos.size());
            for (const auto& [key, c] : prod.terms()) col[s.mono_index.at(key)] = c;
            columns.push_back(std::move(col));
        }
    }
    if (columns.size() != monos.size())
        throw Error(ErrorKind::internal, "harmonic block basis has unexpected size");
    MatrixQ m2(monos.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < monos.size(); ++r) m2.at(r, c) = columns[c][r];
    s.inverse = m2.inverse();
    return cache.emplace(m, std::move(s)).first->second;
}

std::vector<std::pair<int, Poly>> harmonic_decompose(const Poly& q) {
    if (!is_spatial(q))
        throw Error(ErrorKind::domain, "harmonic splitting expects a spatial polynomial");
    if (!q.is_homogeneous())
        throw Error(ErrorKind::domain, "harmonic splitting expects a homogeneous polynomial");
    int m = q.degree();
    if (m < 0) return {};

    const SplitSolver& s = split_solver(m);
    std::vector<Scalar> rhs(s.mono_index.size());
    for (const auto& [key, c] : q.terms()) rhs[s.mono_index.at(key)] = c;
    std::vector<Scalar> sol = s.inverse.mul_vec(rhs);

    std::vector<std::pair<int, Poly>> out;
    for (const SplitBlock& b : s.blocks) {
        const std::vector<Poly>& hb = harmonic_basis(m - 2 * b.k);
        Poly h(4, VarSpace::momentum);
        for (std::size_t j = 0; j < b.size; ++j) h += hb[j] * sol[b.first_col + j];
        out.emplace_back(b.k, std::move(h));
    }
    return out;
}

Poly so3_project(const Poly& p) {
    if (p.dim() != 4 || p.space() != VarSpace::momentum)
        throw Error(ErrorKind::dimension, "rotation projection expects a momentum polynomial");
    if (!p.is_homogeneous())
        throw Error(ErrorKind::domain, "rotation projection expects a homogeneous polynomial");
    // Bucket terms by p0-power and spatial degree.
    std::map<std::pair<int, int>, Poly> buckets;
    for (const auto& [k, c] : p.terms()) {
        MultiIndex sp = k;
        sp[0] = 0;
        auto key = std::make_pair(k[0], sp.order());
        auto it = buckets.find(key);
        if (it == buckets.end())
            it = buckets.emplace(key, Poly(4, VarSpace::momentum)).first;
        it->second.add_term(sp, c);
    }
    Poly out(4, VarSpace::momentum);
    for (const auto& [key, q] : buckets) {
        auto [a, m] = key;
        if (m % 2 != 0) continue;
        // Keep the radial piece |p|^m: the k = m/2 entry pairs with the
        // constant harmonic.
        for (const auto& [k, h] : harmonic_decompose(q)) {
            if (2 * k != m) continue;
            Scalar c = h.coeff(MultiIndex(4));
            if (c.is_zero()) break;
            Poly piece = radial_power(k) * c;
            MultiIndex p0(4);
            p0[0] = a;
            out += Poly::monomial(4, VarSpace::momentum, p0) * piece;
        }
    }
    return out;
}

std::vector<std::vector<Scalar>> cayley_rotation4(const Rational& a, const Rational& b,
                                                  const Rational& c) {
    MatrixQ s(3, 3);
    s.at(0, 1) = Scalar(a);
    s.at(1, 0) = Scalar(-a);
    s.at(0, 2) = Scalar(b);
    s.at(2, 0) = Scalar(-b);
    s.at(1, 2) = Scalar(c);
    s.at(2, 1) = Scalar(-c);
    MatrixQ id = MatrixQ::identity(3);
    MatrixQ plus(3, 3), minus(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            plus.at(i, j) = id.at(i, j) + s.at(i, j);
            minus.at(i, j) = id.at(i, j) - s.at(i, j);
        }
    MatrixQ r = minus.mul(plus.inverse());
    std::vector<std::vector<Scalar>> out(4, std::vector<Scalar>(4));
    out[0][0] = Scalar(1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out[i + 1][j + 1] = r.at(i, j);
    return out;
}

} // namespace dsym
