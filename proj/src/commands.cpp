#include "deltasym/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "deltasym/boost_solver.hpp"
#include "deltasym/expression.hpp"
#include "deltasym/generators.hpp"
#include "deltasym/growth.hpp"
#include "deltasym/harmonic.hpp"
#include "deltasym/jet_division.hpp"
#include "deltasym/spinor.hpp"
#include "deltasym/verify.hpp"

namespace dsym {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

/// Row-major matrix serialization, e.g. "[[3,2],[0,1]]".
std::string matrix_string(const MatrixQ& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) out += ",";
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ",";
            out += to_string(m.at(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

Poly poly_power(const Poly& base, int e) {
    Poly acc = Poly::constant(base.dim(), base.space(), Scalar(1));
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

VarSpace parse_space_flag(const std::string& s) {
    if (s == "p" || s == "momentum") return VarSpace::momentum;
    if (s == "x" || s == "position") return VarSpace::position;
    throw Error(ErrorKind::parse, "unknown variable space '" + s + "' (use p or x)");
}

Report cmd_solve_boost(int n, const std::string& u_text) {
    Report report("solve-boost");
    report.set_input("n", n);
    report.set_input("u", u_text);

    Poly u = parse_poly(u_text, 4, VarSpace::momentum);
    Poly w = solve_boost_equation(u, n);
    SplitReport sr = coefficient_bound_check(u, n);

    report.add_check("output", w.str(), w.str());
    report.add_check("residual is zero", "true", bool_str(sr.residual_zero));
    report.add_check("solution within 6^(n/2) of the input", "true",
                     bool_str(sr.coefficient_bound_ok));
    return report;
}

Report cmd_split(const std::string& plus_text, const std::string& minus_text) {
    Report report("split");
    report.set_input("plus", plus_text);
    report.set_input("minus", minus_text);

    DeltaExpansion v_plus = parse_delta(plus_text, 4);
    DeltaExpansion v_minus = parse_delta(minus_text, 4);
    auto [w_plus, w_minus] = invariant_completion(v_plus, v_minus);

    report.add_check("output plus", w_plus.str(), w_plus.str());
    report.add_check("output minus", w_minus.str(), w_minus.str());
    report.add_check("difference preserved", (v_plus - v_minus).str(),
                     (w_plus - w_minus).str());

    std::string invariance = "invariant";
    for (const auto& [name, op] : all_generators(VarSpace::momentum)) {
        if (!op.apply(w_plus.fourier()).is_zero()) {
            invariance = "plus output fails " + name;
            break;
        }
        if (!op.apply(w_minus.fourier()).is_zero()) {
            invariance = "minus output fails " + name;
            break;
        }
    }
    report.add_check("outputs annihilated by all six generators", "invariant", invariance);
    return report;
}

Report cmd_harmonic(const std::string& poly_text) {
    Report report("harmonic");
    report.set_input("poly", poly_text);

    Poly q = parse_poly(poly_text, 4, VarSpace::momentum);
    auto parts = harmonic_decompose(q);

    Poly sum = Poly::zero(4, VarSpace::momentum);
    for (const auto& [k, h] : parts) {
        report.add_check("component l=" + std::to_string(h.degree()), h.str(), h.str());
        sum += radial_power(k) * h;
    }
    report.add_check("reassembly", q.str(), sum.str());
    return report;
}

Report cmd_project_so3(const std::string& poly_text) {
    Report report("project-so3");
    report.set_input("poly", poly_text);

    Poly p = parse_poly(poly_text, 4, VarSpace::momentum);
    Poly r = so3_project(p);

    report.add_check("output", r.str(), r.str());
    report.add_check("projection is idempotent", r.str(), so3_project(r).str());
    return report;
}

Report cmd_matrix(int n) {
    Report report("matrix");
    report.set_input("n", n);

    MatrixQ m = boost_matrix(n);
    MatrixQ closed(m.rows(), m.cols());
    for (std::size_t k = 0; k < closed.rows(); ++k) {
        int ki = static_cast<int>(k);
        closed.at(k, k) = Scalar(Rational(n - 2 * ki));
        if (k + 1 < closed.cols()) closed.at(k, k + 1) = Scalar(Rational(2 * (ki + 1)));
    }

    report.add_check("output", matrix_string(m), matrix_string(m));
    report.add_check("tridiagonal closed form", matrix_string(closed), matrix_string(m));
    return report;
}

Report cmd_bounds(int n_max) {
    Report report("bounds");
    report.set_input("n-max", n_max);

    for (int n = 1; n <= n_max; ++n) {
        SplitReport r = inverse_bound_check(n);
        std::string computed = bool_str(r.closed_form_ok) + " " + bool_str(r.monotone_ok) +
                               " " + bool_str(r.entry_bound_ok);
        report.add_check(
            "degree " + std::to_string(n) + ": closed form, monotone growth, entry bound",
            "true true true", computed);
    }
    return report;
}

Report cmd_cokernel2d(int n_max) {
    Report report("cokernel2d");
    report.set_input("n-max", n_max);

    for (int n = 0; n <= n_max; ++n) {
        auto reps = cokernel_2d(n);
        report.add_check("degree " + std::to_string(n) + " dimension",
                         n % 2 == 0 ? "1" : "0", std::to_string(reps.size()));
        std::string joined;
        for (const auto& r : reps) {
            if (!joined.empty()) joined += "; ";
            joined += r.str();
        }
        if (!joined.empty())
            report.add_check("degree " + std::to_string(n) + " representative", joined,
                             joined);
    }
    return report;
}

Report cmd_covariant(int s2, const std::string& space_text) {
    Report report("covariant");
    report.set_input("s2", s2);
    report.set_input("space", space_text);

    SpinorPoly<Poly> c = covariant_poly(s2, parse_space_flag(space_text));
    long slots = static_cast<long>(c.terms().size());
    long expected = static_cast<long>(s2 + 1) * (s2 + 1);

    report.add_check("output", c.str(), c.str());
    report.add_check("slot count", std::to_string(expected), std::to_string(slots));
    return report;
}

Report cmd_kernel_check(int s2, int l_max) {
    Report report("kernel-check");
    report.set_input("s2", s2);
    report.set_input("l-max", l_max);

    for (int l = 0; l <= l_max; ++l) {
        bool zero = kernel_test(s2, l);
        report.add_check("l=" + std::to_string(l), l <= s2 - 1 ? "zero" : "nonzero",
                         zero ? "zero" : "nonzero");
    }
    return report;
}

Report cmd_cg(int r2, int s2) {
    Report report("cg");
    report.set_input("r2", r2);
    report.set_input("s2", s2);

    auto reps = cg_decompose(RepLabel{r2, s2});
    std::string joined;
    long diagonal = 0;
    for (const auto& rep : reps) {
        if (!joined.empty()) joined += " ";
        joined += "(" + std::to_string(rep.r2) + "," + std::to_string(rep.s2) + ")";
        if (rep.r2 == rep.s2) ++diagonal;
    }
    long lo = std::min(r2, s2);

    report.add_check("output", joined, joined);
    report.add_check("representation count", std::to_string((lo + 1) * (lo + 1)),
                     std::to_string(reps.size()));
    report.add_check("diagonal count", std::to_string(lo + 1), std::to_string(diagonal));
    return report;
}

Report cmd_extract(int s2, const std::string& w_text) {
    Report report("extract");
    report.set_input("s2", s2);
    report.set_input("w", w_text);

    SpinorPoly<DeltaExpansion> w = parse_spinor_delta(w_text);
    auto [v, ambiguity] = extract_invariant(w, s2);

    std::string orders;
    for (int l : ambiguity) {
        if (!orders.empty()) orders += ", ";
        orders += std::to_string(l);
    }
    if (orders.empty()) orders = "none";

    report.add_check("output", v.str(), v.str());
    report.add_check("ambiguity orders", orders, orders);
    report.add_check("covariant product reproduces the data", w.str(),
                     make_covariant(v, s2).str());
    return report;
}

Report cmd_lemma3(int m, const std::string& poly_text, int dim) {
    Report report("lemma3");
    report.set_input("m", m);
    report.set_input("poly", poly_text);
    report.set_input("dim", dim);

    Poly f = parse_poly(poly_text, dim, VarSpace::position);
    auto parts = lemma3_decompose(f, m);

    Poly sum = Poly::zero(f.dim(), f.space());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        report.add_check("component " + std::to_string(i), parts[i].str(), parts[i].str());
        sum += poly_power(Poly::variable(f.dim(), f.space(), i), m + 1) * parts[i];
    }
    report.add_check("reconstruction", f.str(), sum.str());
    return report;
}

Report cmd_growth(const std::string& beta_text, const std::string& coeffs_text, int n_max) {
    Report report("growth");
    report.set_input("beta", beta_text);
    report.set_input("coeffs", coeffs_text);

    Rational beta;
    try {
        beta = Rational(beta_text);
    } catch (const std::exception&) {
        throw Error(ErrorKind::parse, "invalid rational '" + beta_text + "' for --beta");
    }

    DeltaExpansion v = parse_delta(coeffs_text, 1);
    if (n_max == 0) {
        int top = 0;
        for (const auto& [k, c] : v.terms()) top = std::max(top, k.order());
        n_max = std::max(top, 1);
    }
    report.set_input("n-max", n_max);

    std::vector<double> m = growth_sequence(v, beta, n_max);
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::string s = fmt_double(m[i]);
        report.add_check("m_" + std::to_string(i + 1), s, s);
    }
    return report;
}

Report cmd_verify_all(long long seed) {
    Report report("verify-all");
    report.set_input("seed", seed);

    for (const CriterionResult& r : run_acceptance(seed)) {
        report.add_check("criterion " + std::to_string(r.index) + ": " + r.name, "pass",
                         (r.pass ? "pass — " : "fail — ") + r.detail, r.pass);
    }
    return report;
}

}  // namespace

Report run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact Lorentz-covariant calculus on polynomials and delta expansions"};
    app.name("deltasym-cli");
    app.require_subcommand(1);

    int n = 0;
    int n_max = 0;
    int s2 = 0;
    int r2 = 0;
    int l_max = 0;
    int m = 0;
    int dim = 4;
    long long seed = 12345;
    std::string u_text;
    std::string plus_text;
    std::string minus_text;
    std::string poly_text;
    std::string w_text;
    std::string beta_text;
    std::string coeffs_text;
    std::string space_text = "p";

    auto* solve = app.add_subcommand("solve-boost", "solve N_1 w = u on even polynomials");
    solve->add_option("--n", n, "homogeneity degree")->required();
    solve->add_option("--u", u_text, "right-hand side polynomial")->required();

    auto* split = app.add_subcommand(
        "split", "complete a pair of functionals to invariant ones with the same difference");
    split->add_option("--plus", plus_text, "first delta expansion")->required();
    split->add_option("--minus", minus_text, "second delta expansion")->required();

    auto* harmonic = app.add_subcommand("harmonic",
                                        "decompose a spatial polynomial into harmonics");
    harmonic->add_option("--poly", poly_text, "homogeneous spatial polynomial")->required();

    auto* project = app.add_subcommand("project-so3",
                                       "rotation-invariant part of a polynomial");
    project->add_option("--poly", poly_text, "momentum polynomial")->required();

    auto* matrix = app.add_subcommand("matrix", "boost matrix on the even/odd bases");
    matrix->add_option("--n", n, "homogeneity degree")->required();

    auto* bounds = app.add_subcommand("bounds",
                                      "inverse closed form and growth bounds per degree");
    bounds->add_option("--n-max", n_max, "largest degree to check")->required();

    auto* cokernel = app.add_subcommand("cokernel2d",
                                        "cokernel of the boost equation in two dimensions");
    cokernel->add_option("--n-max", n_max, "largest degree to check")->required();

    auto* covariant = app.add_subcommand("covariant", "canonical spin-block covariant");
    covariant->add_option("--s2", s2, "doubled spin")->required();
    covariant->add_option("--space", space_text, "variable space, p or x (default p)");

    auto* kernel = app.add_subcommand("kernel-check",
                                      "which powers of the interval the covariant derivative kills");
    kernel->add_option("--s2", s2, "doubled spin")->required();
    kernel->add_option("--l-max", l_max, "largest power to test")->required();

    auto* cg = app.add_subcommand("cg", "decompose (r,s) x (s,r) into irreducibles");
    cg->add_option("--r2", r2, "doubled first label")->required();
    cg->add_option("--s2", s2, "doubled second label")->required();

    auto* extract = app.add_subcommand("extract",
                                       "invariant functional behind a covariant one");
    extract->add_option("--s2", s2, "doubled spin")->required();
    extract->add_option("--w", w_text, "covariant spinor functional")->required();

    auto* lemma3 = app.add_subcommand("lemma3",
                                      "divide a polynomial with a vanishing jet by coordinate powers");
    lemma3->add_option("--m", m, "jet order")->required();
    lemma3->add_option("--poly", poly_text, "position polynomial")->required();
    lemma3->add_option("--dim", dim, "number of variables (default 4)");

    auto* growth = app.add_subcommand("growth",
                                      "growth diagnostic of a delta expansion's coefficients");
    growth->add_option("--beta", beta_text, "class exponent, a rational")->required();
    growth->add_option("--coeffs", coeffs_text, "delta expansion carrying the coefficients")
        ->required();
    growth->add_option("--n-max", n_max, "orders to report (default: top order present)");

    auto* verify = app.add_subcommand("verify-all", "run the full acceptance suite");
    verify->add_option("--seed", seed, "seed for the randomized criteria (default 12345)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        app.exit(e, out, err);
        std::string msg = out.str() + err.str();
        while (!msg.empty() && msg.back() == '\n') msg.pop_back();
        throw Error(ErrorKind::parse, msg.empty() ? e.what() : msg);
    }

    if (solve->parsed()) return cmd_solve_boost(n, u_text);
    if (split->parsed()) return cmd_split(plus_text, minus_text);
    if (harmonic->parsed()) return cmd_harmonic(poly_text);
    if (project->parsed()) return cmd_project_so3(poly_text);
    if (matrix->parsed()) return cmd_matrix(n);
    if (bounds->parsed()) return cmd_bounds(n_max);
    if (cokernel->parsed()) return cmd_cokernel2d(n_max);
    if (covariant->parsed()) return cmd_covariant(s2, space_text);
    if (kernel->parsed()) return cmd_kernel_check(s2, l_max);
    if (cg->parsed()) return cmd_cg(r2, s2);
    if (extract->parsed()) return cmd_extract(s2, w_text);
    if (lemma3->parsed()) return cmd_lemma3(m, poly_text, dim);
    if (growth->parsed()) return cmd_growth(beta_text, coeffs_text, n_max);
    if (verify->parsed()) return cmd_verify_all(seed);
    throw Error(ErrorKind::internal, "no subcommand dispatched");
}

}  // namespace dsym
