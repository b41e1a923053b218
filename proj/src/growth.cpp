#include "deltasym/growth.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace dsym {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

Float to_float(const Rational& r) { return static_cast<Float>(r); }

Rational rational_pow(const Rational& base, int e) {
    Rational r = 1;
    for (int j = 0; j < e; ++j) r *= base;
    return r;
}

} // namespace

DualNorm dual_norm(const MultiIndex& k, const ClassParams& params) {
    if (params.b <= 0) throw Error(ErrorKind::domain, "the scale parameter must be positive");
    if (params.beta < 0)
        throw Error(ErrorKind::domain, "the growth exponent must be nonnegative");

    DualNorm out;
    out.exact = true;
    for (std::size_t j = 0; j < k.dim(); ++j) {
        Rational be = params.beta * k[j];
        if (boost::multiprecision::denominator(be) != 1) out.exact = false;
    }

    int total = k.order();
    if (out.exact) {
        Rational v = Rational(1) / rational_pow(params.b, total);
        for (std::size_t j = 0; j < k.dim(); ++j) {
            if (k[j] == 0) continue;
            Rational be = params.beta * k[j];
            long e = boost::multiprecision::numerator(be).convert_to<long>();
            Integer p = 1;
            for (long t = 0; t < e; ++t) p *= k[j];
            v /= Rational(p);
        }
        out.value = v;
        out.approx = to_float(v).convert_to<double>();
        return out;
    }

    Float logv = -Float(total) * log(to_float(params.b));
    for (std::size_t j = 0; j < k.dim(); ++j) {
        if (k[j] == 0) continue;
        logv -= to_float(params.beta) * k[j] * log(Float(k[j]));
    }
    out.approx = exp(logv).convert_to<double>();
    return out;
}

std::vector<double> growth_sequence(const DeltaExpansion& v, const Rational& beta, int n_max) {
    if (n_max < 1) throw Error(ErrorKind::domain, "the truncation order must be at least 1");
    std::vector<Rational> max_sq(static_cast<std::size_t>(n_max) + 1, Rational(0));
    for (const auto& [k, c] : v.terms()) {
        int n = k.order();
        if (n < 1 || n > n_max) continue;
        max_sq[n] = std::max(max_sq[n], c.abs_sq());
    }
    std::vector<double> m(n_max, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        if (max_sq[n] == 0) continue;
        // n^beta * sqrt(max |c|^2)^(1/n), evaluated through logarithms.
        Float val =
            exp(to_float(beta) * log(Float(n)) + log(to_float(max_sq[n])) / (2 * n));
        m[n - 1] = val.convert_to<double>();
    }
    return m;
}

AcyclicityWitness acyclicity_params(const AcyclicityParams& p) {
    if (p.b0 <= 0 || p.b1 <= p.b0 || p.b <= p.b0)
        throw Error(ErrorKind::domain, "the scales must satisfy 0 < b0 < b1 and b0 < b");
    if (p.eps1 <= 0 || p.eps1 >= 1)
        throw Error(ErrorKind::domain,
                    "the contraction factor must lie strictly between 0 and 1");
    if (p.n1 < 0) throw Error(ErrorKind::domain, "the seminorm order must be nonnegative");

    Rational r = p.b / p.b0;
    Rational r1 = p.b1 / p.b0;

    AcyclicityWitness out;
    // a = pp/q exactly when r^q = r1^pp; compare rational powers up to 64.
    std::vector<Rational> rp(65), r1p(65);
    rp[0] = r1p[0] = 1;
    for (int j = 1; j <= 64; ++j) {
        rp[j] = rp[j - 1] * r;
        r1p[j] = r1p[j - 1] * r1;
    }
    for (int q = 1; q <= 64 && !out.a_exact; ++q)
        for (int pp = 1; pp <= 64; ++pp)
            if (rp[q] == r1p[pp]) {
                out.a_exact = true;
                out.a_rational = Rational(pp, q);
                break;
            }

    Float af =
        out.a_exact ? to_float(out.a_rational) : log(to_float(r)) / log(to_float(r1));
    out.a = af.convert_to<double>();
    out.eps = exp(af * log(to_float(p.eps1))).convert_to<double>();
    if (out.a_exact) {
        Integer num = boost::multiprecision::numerator(out.a_rational) * p.n1;
        Integer den = boost::multiprecision::denominator(out.a_rational);
        out.n = ((num + den - 1) / den).convert_to<long>();
    } else {
        out.n = static_cast<long>(std::ceil(out.a * p.n1));
    }
    return out;
}

} // namespace dsym
