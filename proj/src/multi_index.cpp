#include "deltasym/multi_index.hpp"

#include <algorithm>

namespace dsym {

Integer factorial(int n) {
    if (n < 0) throw Error(ErrorKind::domain, "factorial of negative integer");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer mi_factorial(const MultiIndex& k) {
    Integer r = 1;
    for (int v : k.e) r *= factorial(v);
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

Integer mi_binomial(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::dimension, "multi-index binomial dimension mismatch");
    Integer r = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) r *= binomial(a[i], b[i]);
    return r;
}

static void enumerate(std::size_t dim, int order, MultiIndex& cur, std::size_t pos,
                      std::vector<MultiIndex>& out) {
    if (pos + 1 == dim) {
        cur[pos] = order;
        out.push_back(cur);
        return;
    }
    for (int v = order; v >= 0; --v) {
        cur[pos] = v;
        enumerate(dim, order - v, cur, pos + 1, out);
    }
}

std::vector<MultiIndex> multi_indices_of_order(std::size_t dim, int order) {
    std::vector<MultiIndex> out;
    if (dim == 0 || order < 0) return out;
    MultiIndex cur(dim);
    enumerate(dim, order, cur, 0, out);
    // Recursion above emits descending-first; sort into plain lexicographic order.
    std::sort(out.begin(), out.end());
    return out;
}

std::string monomial_string(const MultiIndex& k, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < k.dim(); ++i) {
        if (k[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (k[i] > 1) out += "^" + std::to_string(k[i]);
    }
    return out;
}

} // namespace dsym
