#!/usr/bin/env python3
"""Independent oracle for the generator algebra, delta-expansion calculus,
harmonic projection, the invariant-completion pipeline, and the 2D cokernel.

Everything is recomputed from first principles with sympy exact arithmetic:
polynomials are dicts exponent-tuple -> sympy number, differential operators
are lists of (coefficient poly, derivative tuple). No code is shared with the
C++ library; printed values are frozen into its tests.
"""

import sys, random
import sympy as sp
from itertools import product

ok = True
def check(name, cond):
    global ok
    print(("PASS " if cond else "FAIL ") + name)
    if not cond:
        ok = False

# ---------------- poly/diffop toolkit (dimension-generic) ----------------

def pclean(p):
    return {k: v for k, v in p.items() if v != 0}

def padd(a, b):
    r = dict(a)
    for k, v in b.items():
        r[k] = r.get(k, 0) + v
    return pclean(r)

def pscale(a, c):
    return pclean({k: v * c for k, v in a.items()})

def pmul(a, b):
    r = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            r[k] = r.get(k, 0) + va * vb
    return pclean(r)

def pdiff(p, alpha):
    r = dict(p)
    for i, m in enumerate(alpha):
        for _ in range(m):
            nr = {}
            for k, v in r.items():
                if k[i] > 0:
                    kk = list(k); kk[i] -= 1
                    nr[tuple(kk)] = nr.get(tuple(kk), 0) + v * k[i]
            r = nr
    return pclean(r)

def mono(d, i, e=1):
    k = [0] * d; k[i] = e
    return {tuple(k): sp.Integer(1)}

def apply_op(op, p):
    r = {}
    for coeff, alpha in op:
        r = padd(r, pmul(coeff, pdiff(p, alpha)))
    return r

def op_compose(op1, op2):
    """(c1 d^a)(c2 d^b) = c1 * sum_{g<=a} binom(a,g) (d^g c2) d^(a-g+b)."""
    out = []
    for c1, a in op1:
        for c2, b in op2:
            ranges = [range(x + 1) for x in a]
            for g in product(*ranges):
                dc2 = pdiff(c2, g)
                if not dc2:
                    continue
                bin_ = sp.Integer(1)
                for ai, gi in zip(a, g):
                    bin_ *= sp.binomial(ai, gi)
                alpha = tuple(ai - gi + bi for ai, gi, bi in zip(a, g, b))
                out.append((pscale(pmul(c1, dc2), bin_), alpha))
    return op_canon(out)

def op_canon(op):
    acc = {}
    for c, a in op:
        for k, v in c.items():
            acc[(k, a)] = acc.get((k, a), 0) + v
    acc = {k: v for k, v in acc.items() if v != 0}
    out = {}
    for (k, a), v in sorted(acc.items()):
        out.setdefault(a, {})[k] = v
    return [(p, a) for a, p in sorted(out.items())]

def op_sub(op1, op2):
    return op_canon(op1 + [(pscale(c, -1), a) for c, a in op2])

def commutator(a, b):
    return op_sub(op_compose(a, b), op_compose(b, a))

# generators in d=4 (variable 0 is time)
D = 4
def N(j):  # boost: x_j d0 + x_0 dj
    return op_canon([(mono(D, j), (1, 0, 0, 0)),
                     (mono(D, 0), tuple(1 if i == j else 0 for i in range(D)))])
def M(i, j):  # rotation: x_j di - x_i dj  (antisymmetric under i<->j)
    return op_canon([(mono(D, j), tuple(1 if t == i else 0 for t in range(D))),
                     (pscale(mono(D, i), -1), tuple(1 if t == j else 0 for t in range(D)))])

def op_eq(a, b):
    return op_sub(a, b) == []

# ---------------- commutator table ----------------
boosts = {j: N(j) for j in (1, 2, 3)}
rots = {(i, j): M(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j}

allok = True
for i, j in product((1, 2, 3), repeat=2):
    if i == j:
        continue
    # [N_j, M_ij] = N_i
    allok = allok and op_eq(commutator(boosts[j], rots[(i, j)]), boosts[i])
check("[N_j, M_ij] = N_i for all ordered pairs i != j", allok)
check("[N_1, N_2] = -M_12", op_eq(commutator(N(1), N(2)), op_canon([(pscale(c, -1), a) for c, a in M(1, 2)])))
check("[N_1, N_3] = -M_13", op_eq(commutator(N(1), N(3)), op_canon([(pscale(c, -1), a) for c, a in M(1, 3)])))
check("[N_2, N_3] = -M_23", op_eq(commutator(N(2), N(3)), op_canon([(pscale(c, -1), a) for c, a in M(2, 3)])))
check("[M_12, M_23] = -M_13", op_eq(commutator(M(1, 2), M(2, 3)), op_canon([(pscale(c, -1), a) for c, a in M(1, 3)])))
check("[M_12, M_13] = M_23", op_eq(commutator(M(1, 2), M(1, 3)), M(2, 3)))
check("[D, D] = 0", commutator(N(2), N(2)) == [])

casimir = []
for i in (1, 2, 3):
    for j in range(i + 1, 4):
        sq = op_compose(M(i, j), M(i, j))
        casimir = op_sub(casimir, sq)  # C = -sum M^2
casimir = op_canon(casimir)

lorentz_sq = {(2, 0, 0, 0): sp.Integer(1), (0, 2, 0, 0): sp.Integer(-1),
              (0, 0, 2, 0): sp.Integer(-1), (0, 0, 0, 2): sp.Integer(-1)}
check("N_j and M_ij annihilate p0^2-p1^2-p2^2-p3^2",
      all(apply_op(g, lorentz_sq) == {} for g in list(boosts.values()) + [M(1, 2), M(1, 3), M(2, 3)]))
check("casimir(p1) = 2 p1", apply_op(casimir, mono(4, 1)) == pscale(mono(4, 1), 2))
check("casimir(p1*p2) = 6 p1*p2",
      apply_op(casimir, pmul(mono(4, 1), mono(4, 2))) == pscale(pmul(mono(4, 1), mono(4, 2)), 6))

# ---------------- harmonic bases (3 spatial vars embedded as indices 1..3) ----------------

def spatial_monomials(l):
    return [(0, a, b, l - a - b) for a in range(l + 1) for b in range(l - a + 1)]

LAP3 = [(({(0, 0, 0, 0): sp.Integer(1)}), (0, 2, 0, 0)),
        (({(0, 0, 0, 0): sp.Integer(1)}), (0, 0, 2, 0)),
        (({(0, 0, 0, 0): sp.Integer(1)}), (0, 0, 0, 2))]

def harmonic_basis(l):
    mons = spatial_monomials(l)
    tgt = spatial_monomials(l - 2) if l >= 2 else []
    rows = []
    for t in tgt:
        row = []
        for m in mons:
            img = apply_op(LAP3, {m: sp.Integer(1)})
            row.append(img.get(t, 0))
        rows.append(row)
    if not rows:
        rows = [[0] * len(mons)]
    ns = sp.Matrix(rows).nullspace()
    basis = []
    for v in ns:
        basis.append(pclean({mons[i]: sp.nsimplify(v[i]) for i in range(len(mons))}))
    return basis

dims_ok = all(len(harmonic_basis(l)) == 2 * l + 1 for l in range(0, 9))
check("dim H_l = 2l+1 for l <= 8", dims_ok)

cas_ok = True
for l in range(0, 7):
    for h in harmonic_basis(l):
        if apply_op(casimir, h) != pscale(h, l * (l + 1)):
            cas_ok = False
check("casimir = l(l+1) on H_l basis, l <= 6", cas_ok)

# harmonic decomposition of p1^2 and so3 projection samples
p1sq = {(0, 2, 0, 0): sp.Integer(1)}
r2 = {(0, 2, 0, 0): sp.Integer(1), (0, 0, 2, 0): sp.Integer(1), (0, 0, 0, 2): sp.Integer(1)}
h0 = padd(p1sq, pscale(r2, sp.Rational(-1, 3)))
check("p1^2 = (p1^2 - |p|^2/3) + |p|^2 * 1/3 with harmonic first part",
      apply_op(LAP3, h0) == {} and padd(h0, pscale(r2, sp.Rational(1, 3))) == p1sq)

def grade_by_p0(p):
    out = {}
    for k, v in p.items():
        out.setdefault(k[0], {})[k] = v
    return out  # p0-exponent -> subpoly

def so3_project(p):
    """Keep only the span{p0^(n-2k)|p|^(2k)} component: per p0-grade, the
    radial part of the harmonic decomposition of the spatial factor."""
    res = {}
    for e0, part in grade_by_p0(p).items():
        spat = {(0,) + k[1:]: v for k, v in part.items()}
        l = sum(next(iter(spat))[1:]) if spat else 0
        # decompose spat = sum_k |p|^{2k} h_k by solving in the monomial basis
        if l % 2 == 1:
            rad = {}
        else:
            # radial component: solve for c with spat - c*|p|^l orthogonal...
            # do it properly: project by solving the full harmonic system
            rad = radial_part(spat, l)
        for k, v in rad.items():
            kk = (e0,) + k[1:]
            res[kk] = res.get(kk, 0) + v
    return pclean(res)

def radial_part(spat, l):
    """Return c * |p|^l where c is the coefficient of the k=l/2 (H_0) summand."""
    mons = spatial_monomials(l)
    cols = []
    meta = []
    for k in range(l // 2 + 1):
        for h in harmonic_basis(l - 2 * k):
            r2k = {(0, 0, 0, 0): sp.Integer(1)}
            for _ in range(k):
                r2k = pmul(r2k, r2)
            col = pmul(r2k, h)
            cols.append([col.get(m, 0) for m in mons])
            meta.append((k, l - 2 * k))
    A = sp.Matrix(cols).T
    b = sp.Matrix([spat.get(m, 0) for m in mons])
    sol = A.solve(b)
    out = {}
    for idx, (k, ll) in enumerate(meta):
        if ll == 0 and sol[idx] != 0:
            r2k = {(0, 0, 0, 0): sp.Integer(1)}
            for _ in range(k):
                r2k = pmul(r2k, r2)
            out = padd(out, pscale(r2k, sol[idx]))
    return out

check("so3_project(p0^2) = p0^2", so3_project({(2, 0, 0, 0): sp.Integer(1)}) == {(2, 0, 0, 0): 1})
check("so3_project(p1) = 0", so3_project(mono(4, 1)) == {})
check("so3_project(p1^2) = |p|^2/3", so3_project(p1sq) == pscale(r2, sp.Rational(1, 3)))

# rotation invariance through a rational Cayley matrix R = (I-S)(I+S)^-1
S = sp.Matrix([[0, sp.Rational(1, 2), sp.Rational(-1, 3)],
               [sp.Rational(-1, 2), 0, sp.Rational(1, 5)],
               [sp.Rational(1, 3), sp.Rational(-1, 5), 0]])
R = (sp.eye(3) - S) * (sp.eye(3) + S).inv()
check("Cayley R is orthogonal", sp.simplify(R.T * R - sp.eye(3)) == sp.zeros(3, 3))

def subst_spatial(p, R):
    """p(x) -> p(R x) on indices 1..3 (index 0 fixed)."""
    out = {}
    for k, v in p.items():
        term = {(k[0], 0, 0, 0): v}
        for i in (1, 2, 3):
            lin = {}
            for j in (1, 2, 3):
                if R[i - 1, j - 1] != 0:
                    kk = [0] * 4; kk[j] = 1
                    lin[tuple(kk)] = R[i - 1, j - 1]
            for _ in range(k[i]):
                term = pmul(term, lin)
        out = padd(out, term)
    return out

random.seed(7)
rot_ok = True
for _ in range(3):
    deg = random.choice([2, 3, 4])
    p = {}
    for _ in range(4):
        k = [0, 0, 0, 0]
        for _ in range(deg):
            k[random.randint(0, 3)] += 1
        p[tuple(k)] = sp.Integer(random.randint(-5, 5))
    p = pclean(p)
    lhs = so3_project(subst_spatial(p, R))
    rhs = so3_project(p)
    if pclean({k: sp.simplify(lhs.get(k, 0) - rhs.get(k, 0)) for k in set(lhs) | set(rhs)}):
        rot_ok = False
check("so3_project(R.P) = so3_project(P) for random P and Cayley R", rot_ok)

# ---------------- delta-expansion calculus ----------------
I = sp.I

def fourier(v):  # d^k delta -> (-i)^|k| p^k
    return pclean({k: v[k] * (-I) ** sum(k) for k in v})

def mul_x(mu_idx, v):
    """x_mu * v with x^mu d^k delta = -(k_mu) d^(k-e_mu) delta."""
    out = {}
    for k, c in v.items():
        if k[mu_idx] > 0:
            kk = list(k); kk[mu_idx] -= 1
            out[tuple(kk)] = out.get(tuple(kk), 0) - c * k[mu_idx]
    return pclean(out)

def mul_poly(p, v):
    out = {}
    for k, c in p.items():
        w = pclean({kk: c * vv for kk, vv in v.items()})
        for i in range(4):
            for _ in range(k[i]):
                w = mul_x(i, w)
        out = padd(out, w)
    return out

def dderiv(v, alpha):
    out = {}
    for k, c in v.items():
        kk = tuple(a + b for a, b in zip(k, alpha))
        out[kk] = out.get(kk, 0) + c
    return pclean(out)

def pairing(v, f):
    s = sp.Integer(0)
    for k, c in v.items():
        if k in f:
            fact = sp.Integer(1)
            for kj in k:
                fact *= sp.factorial(kj)
            s += c * f[k] * (-1) ** sum(k) * fact
    return sp.simplify(s)

# adjoint identity spot check: pair(mul_poly(P, v), f) = pair(v, P*f)
random.seed(11)
adj_ok = True
for _ in range(5):
    v = {}
    for _ in range(3):
        k = tuple(random.randint(0, 2) for _ in range(4))
        v[k] = sp.Integer(random.randint(-4, 4)) + I * random.randint(-2, 2)
    v = pclean(v)
    P = {}
    for _ in range(2):
        k = tuple(random.randint(0, 2) for _ in range(4))
        P[k] = sp.Integer(random.randint(-4, 4))
    P = pclean(P)
    for _ in range(6):
        f = {tuple(random.randint(0, 3) for _ in range(4)): sp.Integer(1)}
        if sp.simplify(pairing(mul_poly(P, v), f) - pairing(v, pmul(P, f))) != 0:
            adj_ok = False
check("adjoint identity pair(mul_poly(P,v),f) = pair(v,P f)", adj_ok)
check("mul_poly(x0, d0 delta) = -delta",
      mul_poly(mono(4, 0), {(1, 0, 0, 0): sp.Integer(1)}) == {(0, 0, 0, 0): -1})
check("fourier(d0 delta) = -i p0",
      fourier({(1, 0, 0, 0): sp.Integer(1)}) == {(1, 0, 0, 0): -I})

def func_action(op, v):
    """Adjoint action (G v, f) = -(v, G f): for G = sum c_t d^(a_t),
    G v = sum -(-1)^|a_t| deriv(mul_poly(c_t, v), a_t)."""
    out = {}
    for c, a in op:
        w = dderiv(mul_poly(c, v), a)
        out = padd(out, pscale(w, -(-1) ** sum(a)))
    return out

# intertwining: fourier(G_pos v) = sigma * G_mom(fourier v)
random.seed(13)
int_ok = True
gens = [("N1", N(1), -1), ("N2", N(2), -1), ("N3", N(3), -1),
        ("M12", M(1, 2), 1), ("M13", M(1, 3), 1), ("M23", M(2, 3), 1)]
for _ in range(6):
    v = {}
    for _ in range(4):
        k = tuple(random.randint(0, 2) for _ in range(4))
        v[k] = sp.Integer(random.randint(-4, 4)) + I * random.randint(-2, 2)
    v = pclean(v)
    for name, g, sig in gens:
        lhs = fourier(func_action(g, v))
        rhs = pscale(apply_op(g, fourier(v)), sig)
        if pclean({k: sp.simplify(lhs.get(k, 0) - rhs.get(k, 0)) for k in set(lhs) | set(rhs)}):
            int_ok = False
            print("   intertwine mismatch", name)
check("fourier intertwining sigma = -1 boosts, +1 rotations (random v)", int_ok)

# ---------------- invariant completion pipeline ----------------

def homog_slices(p):
    out = {}
    for k, v in p.items():
        out.setdefault(sum(k), {})[k] = v
    return out

def g_coords(u, n):
    """coordinates on G-basis via distinguished monomials p0^(n-2l-1) p1 p2^(2l)."""
    m = (n - 1) // 2 + 1
    return [u.get((n - 2 * l - 1, 1, 2 * l, 0), sp.Integer(0)) for l in range(m)]

def g_poly(coords, n):
    out = {}
    for l, c in enumerate(coords):
        if c == 0:
            continue
        r2l = {(0, 0, 0, 0): sp.Integer(1)}
        for _ in range(l):
            r2l = pmul(r2l, r2)
        base = pmul({(n - 2 * l - 1, 0, 0, 0): sp.Integer(1)}, pmul(r2l, mono(4, 1)))
        out = padd(out, pscale(base, c))
    return out

def f_poly(bvec, n):
    out = {}
    for k, b in enumerate(bvec):
        if b == 0:
            continue
        r2k = {(0, 0, 0, 0): sp.Integer(1)}
        for _ in range(k):
            r2k = pmul(r2k, r2)
        out = padd(out, pscale(pmul({(n - 2 * k, 0, 0, 0): sp.Integer(1)}, r2k), b))
    return out

def boost_matrix(n):
    rows = (n - 1) // 2 + 1
    cols = n // 2 + 1
    a = sp.zeros(rows, cols)
    for k in range(rows):
        a[k, k] = n - 2 * k
        if k + 1 < cols:
            a[k, k + 1] = 2 * (k + 1)
    return a

def solve_boost(u, n):
    c = sp.Matrix(g_coords(u, n))
    # verify u really lies in span G
    if pclean({k: sp.simplify(u.get(k, 0) - g_poly(list(c), n).get(k, 0))
               for k in set(u) | set(g_poly(list(c), n))}):
        raise ValueError("u not in span G")
    a = boost_matrix(n)
    m = a.rows
    ar = a[:, :m]
    b = ar.solve(c)
    bv = list(b) + ([sp.Integer(0)] if n % 2 == 0 else [])
    return f_poly(bv, n)

def completion(vp, vm):
    Pp, Pm = fourier(vp), fourier(vm)
    diff = padd(Pp, pscale(Pm, -1))
    for name, g, _s in gens:
        for n, sl in homog_slices(diff).items():
            img = apply_op(g, sl)
            img = pclean({k: sp.simplify(v) for k, v in img.items()})
            if img:
                raise ValueError(f"difference not invariant: generator {name} degree {n}")
    outs = []
    projp = {n: so3_project(sl) for n, sl in homog_slices(Pp).items()}
    projm = {n: so3_project(sl) for n, sl in homog_slices(Pm).items()}
    v0 = {}
    for n in sorted(set(projp) | set(projm)):
        pb = projp.get(n, {})
        u = apply_op(N(1), pb)
        u = pclean({k: sp.simplify(v) for k, v in u.items()})
        if n == 0 or not u:
            if u:
                raise ValueError("nonzero u at degree 0")
            continue
        # eq-22 style checks: casimir eigenvalue 2, M23 annihilates
        if pclean({k: sp.simplify(x) for k, x in
                   padd(apply_op(casimir, u), pscale(u, -2)).items()}):
            raise ValueError("casimir check failed")
        if pclean({k: sp.simplify(x) for k, x in apply_op(M(2, 3), u).items()}):
            raise ValueError("M23 check failed")
        v0 = padd(v0, solve_boost(u, n))
    wp = padd({k: v for n in projp for k, v in projp[n].items()}, pscale(v0, -1))
    wm = padd({k: v for n in projm for k, v in projm[n].items()}, pscale(v0, -1))
    wp = pclean({k: sp.simplify(v) for k, v in wp.items()})
    wm = pclean({k: sp.simplify(v) for k, v in wm.items()})
    return wp, wm  # momentum-side results (fourier of the outputs)

delta = {(0, 0, 0, 0): sp.Integer(1)}
wp, wm = completion(delta, {})
check("completion (delta, 0) -> (delta, 0)", wp == fourier(delta) and wm == {})

d0d = {(1, 0, 0, 0): sp.Integer(1)}
wp, wm = completion(d0d, d0d)
check("completion (d0 delta, d0 delta) -> (0, 0)", wp == {} and wm == {})

try:
    completion({(1, 1, 0, 0): I}, {})  # fourier_inv(p0 p1) up to constants
    check("completion rejects non-invariant difference", False)
except ValueError as e:
    check("completion rejects non-invariant difference (%s)" % e, True)

# random invariant-difference pairs: v- arbitrary, v+ = v- + sum c_l box^l delta
lorentz_sq_delta = {(2, 0, 0, 0): sp.Integer(1), (0, 2, 0, 0): sp.Integer(-1),
                    (0, 0, 2, 0): sp.Integer(-1), (0, 0, 0, 2): sp.Integer(-1)}

def box_l_delta(l):
    out = {(0, 0, 0, 0): sp.Integer(1)}
    for _ in range(l):
        out = pmul(out, lorentz_sq_delta)  # symbol arithmetic: box^l as multi-index sum
    return out

random.seed(17)
comp_ok = True
for trial in range(4):
    vm = {}
    for _ in range(4):
        k = tuple(random.randint(0, 2) for _ in range(4))
        vm[k] = sp.Integer(random.randint(-3, 3)) + I * random.randint(-2, 2)
    vm = pclean(vm)
    inv = {}
    for l in range(0, 4):
        c = sp.Integer(random.randint(-3, 3))
        if c != 0:
            inv = padd(inv, pscale(box_l_delta(l), c))
    vp = padd(vm, inv)
    wp, wm = completion(vp, vm)
    # difference preserved
    dd = padd(wp, pscale(wm, -1))
    want = padd(fourier(vp), pscale(fourier(vm), -1))
    if pclean({k: sp.simplify(dd.get(k, 0) - want.get(k, 0)) for k in set(dd) | set(want)}):
        comp_ok = False
    # outputs invariant
    for w in (wp, wm):
        for name, g, _s in gens:
            img = pclean({k: sp.simplify(v) for k, v in apply_op(g, w).items()})
            if img:
                comp_ok = False
check("completion on random invariant-difference pairs: difference preserved, outputs invariant", comp_ok)

# ---------------- 2D cokernel ----------------

def cokernel_2d(n):
    """N1 is self-adjoint under the factorial pairing <p^a, p^b> = a! delta_ab,
    so ker N1 is a complement of im N1 and its basis represents the cokernel.
    Each representative is certified to lie outside the image by exact rank."""
    mons = [(n - j, j) for j in range(n + 1)]
    Mx = sp.zeros(len(mons), len(mons))
    for cidx, (a, b) in enumerate(mons):
        # N1 p0^a p1^b = a p0^(a-1) p1^(b+1) + b p0^(a+1) p1^(b-1)
        if a > 0:
            Mx[mons.index((a - 1, b + 1)), cidx] += a
        if b > 0:
            Mx[mons.index((a + 1, b - 1)), cidx] += b
    assert len(mons) - Mx.rank() == len(Mx.nullspace())
    reps = []
    for v in Mx.nullspace():
        # certify the representative is outside the image
        aug = Mx.row_join(v)
        assert aug.rank() == Mx.rank() + 1
        reps.append({mons[i]: sp.nsimplify(v[i]) for i in range(len(mons)) if v[i] != 0})
    return reps

cok_ok = True
for n in range(0, 13):
    reps = cokernel_2d(n)
    if n % 2 == 1 and reps != []:
        cok_ok = False
    if n % 2 == 0:
        if len(reps) != 1:
            cok_ok = False
        else:
            # compare with (p0^2-p1^2)^(n/2) up to scale
            tgt = {(0, 0): sp.Integer(1)}
            for _ in range(n // 2):
                tgt = pmul(tgt, {(2, 0): sp.Integer(1), (0, 2): sp.Integer(-1)})
            rep = reps[0]
            keys = set(tgt) | set(rep)
            scale = None
            match = True
            for k in keys:
                a, b = rep.get(k, 0), tgt.get(k, 0)
                if (a == 0) != (b == 0):
                    match = False; break
                if a != 0:
                    r = sp.simplify(a / b)
                    if scale is None:
                        scale = r
                    elif sp.simplify(r - scale) != 0:
                        match = False; break
            if not match:
                cok_ok = False
                print("   cokernel rep mismatch at n=", n, reps)
check("cokernel_2d: dim 1 even/0 odd for n <= 12; rep = (p0^2-p1^2)^(n/2) up to scale", cok_ok)
print("cokernel rep n=2 (frozen):", cokernel_2d(2))
print("cokernel rep n=4 (frozen):", cokernel_2d(4))

print("\nOVERALL " + ("PASS" if ok else "FAIL"))
sys.exit(0 if ok else 1)
