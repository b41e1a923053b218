#!/usr/bin/env python3
"""Independent oracle for the covariant representation map and its inverse,
and for the coordinate-power / matrix-entry division algorithms.

make_covariant multiplies each slot of the expanded covariant against a
delta expansion; extract solves the resulting sparse linear system grade
by grade in matrix-entry coordinates, zeroing free variables, then
canonicalizes the even-order ambiguity components. The division section
traces the jet-decomposition recursion and the entry-power rewrite.
All with sympy exact numbers; values printed here are frozen into tests.
"""

import sys, random
from math import factorial
import sympy as sp
from itertools import product

ok = True
def check(name, cond):
    global ok
    print(("PASS " if cond else "FAIL ") + name)
    if not cond:
        ok = False

I = sp.I

# ---------- tiny poly/delta dict toolkit (4 variables) ----------
def pclean(p): return {k: v for k, v in p.items() if v != 0}
def padd(a, b):
    r = dict(a)
    for k, v in b.items(): r[k] = r.get(k, 0) + v
    return pclean(r)
def pscale(a, c): return pclean({k: sp.expand(v * c) for k, v in a.items()})
def pmul(a, b):
    r = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            r[k] = r.get(k, 0) + va * vb
    return pclean(r)
def psimp(a): return pclean({k: sp.simplify(v) for k, v in a.items()})

def mul_x(i, v):
    out = {}
    for k, c in v.items():
        if k[i] > 0:
            kk = list(k); kk[i] -= 1
            out[tuple(kk)] = out.get(tuple(kk), 0) - c * k[i]
    return pclean(out)

def mul_poly(p, v):
    out = {}
    for k, c in p.items():
        w = pclean({kk: c * vv for kk, vv in v.items()})
        for i in range(4):
            for _ in range(k[i]): w = mul_x(i, w)
        out = padd(out, w)
    return out

def fourier(v): return pclean({k: v[k] * (-I) ** sum(k) for k in v})
def fourier_inv(P): return pclean({k: P[k] / ((-I) ** sum(k)) for k in P})

# Hermitian entry pattern in position variables (index order x0,x1,x2,x3)
ENT = {(1, 1): {(1, 0, 0, 0): sp.Integer(1), (0, 0, 0, 1): sp.Integer(-1)},
       (1, 2): {(0, 1, 0, 0): sp.Integer(-1), (0, 0, 1, 0): I},
       (2, 1): {(0, 1, 0, 0): sp.Integer(-1), (0, 0, 1, 0): -I},
       (2, 2): {(1, 0, 0, 0): sp.Integer(1), (0, 0, 0, 1): sp.Integer(1)}}

def tables(s2, a, b):
    """4-entry contingency tables j=(j11,j12,j21,j22), row sums a=(a1,a2)
    (omega-bar margins), column sums b=(b1,b2) (omega margins)."""
    out = []
    for j11 in range(min(a[0], b[0]) + 1):
        j12 = a[0] - j11
        j21 = b[0] - j11
        j22 = a[1] - j21
        if j12 < 0 or j21 < 0 or j22 < 0 or j12 + j22 != b[1]:
            continue
        out.append((j11, j12, j21, j22))
    return out

def multinom(s2, j):
    return factorial(s2) // (factorial(j[0]) * factorial(j[1]) * factorial(j[2]) * factorial(j[3]))

def slot_poly(s2, a, b):
    out = {}
    for j in tables(s2, a, b):
        term = {(0, 0, 0, 0): sp.Integer(multinom(s2, j))}
        for idx, (r, c) in enumerate([(1, 1), (1, 2), (2, 1), (2, 2)]):
            for _ in range(j[idx]):
                term = pmul(term, ENT[(r, c)])
        out = padd(out, term)
    return out

def all_slots(s2):
    return [((a1, s2 - a1), (b1, s2 - b1)) for a1 in range(s2 + 1) for b1 in range(s2 + 1)]

def make_covariant(v, s2):
    return {ab: psimp(mul_poly(slot_poly(s2, *ab), v)) for ab in all_slots(s2)}

# q-coordinates: q11 = p0-p3, q12 = -p1+i p2, q21 = -p1-i p2, q22 = p0+p3
# p0 = (q11+q22)/2, p1 = -(q12+q21)/2, p2 = -i(q12-q21)/2, p3 = (q22-q11)/2
P_IN_Q = [ {(1,0,0,0): sp.Rational(1,2), (0,0,0,1): sp.Rational(1,2)},
           {(0,1,0,0): sp.Rational(-1,2), (0,0,1,0): sp.Rational(-1,2)},
           {(0,1,0,0): -I/2, (0,0,1,0): I/2},
           {(1,0,0,0): sp.Rational(-1,2), (0,0,0,1): sp.Rational(1,2)} ]
Q_IN_P = [ {(1,0,0,0): sp.Integer(1), (0,0,0,1): sp.Integer(-1)},
           {(0,1,0,0): sp.Integer(-1), (0,0,1,0): I},
           {(0,1,0,0): sp.Integer(-1), (0,0,1,0): -I},
           {(1,0,0,0): sp.Integer(1), (0,0,0,1): sp.Integer(1)} ]

def subst(P, basis):
    out = {}
    for k, c in P.items():
        term = {(0, 0, 0, 0): c}
        for i in range(4):
            for _ in range(k[i]): term = pmul(term, basis[i])
        out = padd(out, term)
    return psimp(out)

def extract_invariant(w, s2, verbose=False):
    """Solve make_covariant(v, s2) = w. Returns (v, ambiguity orders)."""
    if s2 == 0:
        return dict(w[((0, 0), (0, 0))]), []
    # fourier each slot, convert to q-monomials
    what = {ab: subst(fourier(w[ab]), P_IN_Q) for ab in w}
    # grades t present
    grades = sorted({sum(k) for sl in what.values() for k in sl})
    coeff = {}   # q-multi-index -> value of v-hat coefficient
    scale = (-2 * I) ** s2
    for t in grades:
        n = t + s2
        # equations: list of (dict unknown-> coeff, rhs)
        eqs = []
        for ab in all_slots(s2):
            sl = what.get(ab, {})
            for lam in [k for k in monomials4(t)]:
                terms = {}
                for j in tables(s2, *ab):
                    jt = (j[0], j[2], j[1], j[3])  # off-diagonal transpose
                    mu = tuple(l + d for l, d in zip(lam, jt))
                    fac = sp.Integer(multinom(s2, j))
                    for li, di in zip(lam, jt):
                        num = 1
                        for z in range(li + 1, li + di + 1): num *= z
                        fac *= num
                    terms[mu] = terms.get(mu, 0) + fac
                rhs = sp.simplify(sl.get(lam, 0) / scale)
                eqs.append((terms, rhs))
        # unit propagation then zero the rest
        solved = {}
        changed = True
        while changed:
            changed = False
            for terms, rhs in eqs:
                unk = [m for m in terms if m not in solved]
                if len(unk) == 1:
                    m = unk[0]
                    val = sp.simplify((rhs - sum(terms[x] * solved[x] for x in terms if x != m)) / terms[m])
                    solved[m] = val
                    changed = True
        for terms, rhs in eqs:
            for m in terms:
                if m not in solved:
                    solved[m] = sp.Integer(0)
        # consistency
        for terms, rhs in eqs:
            if sp.simplify(sum(terms[m] * solved[m] for m in terms) - rhs) != 0:
                raise ValueError(f"inconsistent system at grade {t}")
        for m, val in solved.items():
            if val != 0:
                coeff[m] = coeff.get(m, 0) + val
    vhat_q = pclean(coeff)
    vhat_p = subst(vhat_q, Q_IN_P)
    v = psimp(fourier_inv(vhat_p))
    # canonicalize ambiguity components
    amb = [2 * l for l in range(s2)]
    for l in range(s2 - 1, -1, -1):
        key = (2 * l, 0, 0, 0)
        g = v.get(key, 0)
        if g != 0:
            v = psimp(padd(v, pscale(box_l(l), -g)))
    # postcondition
    back = make_covariant(v, s2)
    for ab in all_slots(s2):
        d = padd(back.get(ab, {}), pscale(w.get(ab, {}), -1))
        if psimp(d):
            raise ValueError(f"postcondition failed at slot {ab}")
    return v, amb

def monomials4(t):
    for a in range(t + 1):
        for b in range(t - a + 1):
            for c in range(t - a - b + 1):
                yield (a, b, c, t - a - b - c)

LSQ = {(2, 0, 0, 0): sp.Integer(1), (0, 2, 0, 0): sp.Integer(-1),
       (0, 0, 2, 0): sp.Integer(-1), (0, 0, 0, 2): sp.Integer(-1)}
def box_l(l):
    out = {(0, 0, 0, 0): sp.Integer(1)}
    for _ in range(l): out = pmul(out, LSQ)
    return out

# ---------- round-trip checks ----------
DELTA = {(0, 0, 0, 0): sp.Integer(1)}
check("make_covariant(delta, 1) = 0", all(not s for s in make_covariant(DELTA, 1).values()))
mc_box = make_covariant(box_l(1), 1)
check("make_covariant(box delta, 1) nonzero", any(s for s in mc_box.values()))
print("frozen make_covariant(box delta, 1) slots:")
for ab in sorted(mc_box):
    print("  ", ab, "->", mc_box[ab])

v, amb = extract_invariant(mc_box, 1)
check("extract(make(box delta), 1) = box delta, ambiguity [0]",
      psimp(padd(v, pscale(box_l(1), -1))) == {} and amb == [0])

d0d = {(1, 0, 0, 0): sp.Integer(1)}
v, amb = extract_invariant(make_covariant(d0d, 1), 1)
check("extract(make(d0 delta), 1) = d0 delta exactly (s2=1 kernel is only delta)",
      psimp(padd(v, pscale(d0d, -1))) == {})

zero_w = {ab: {} for ab in all_slots(1)}
v, amb = extract_invariant(zero_w, 1)
check("extract(0, 1) = 0 with ambiguity [0]", v == {} and amb == [0])

# inconsistency detection: perturb one slot of a valid w
bad = {ab: dict(sl) for ab, sl in mc_box.items()}
bad[((1, 0), (0, 1))] = padd(bad[((1, 0), (0, 1))], {(1, 0, 0, 0): sp.Integer(1)})
try:
    extract_invariant(bad, 1)
    check("perturbed slot detected as inconsistent", False)
except ValueError as e:
    check("perturbed slot detected as inconsistent (%s)" % e, True)

random.seed(31)
rt_ok = True
for s2 in (1, 2, 3):
    for trial in range(2):
        v = {}
        for l in range(0, 6):
            c = sp.Integer(random.randint(-4, 4))
            if c:
                v = padd(v, pscale(box_l(l), c))
        w = make_covariant(v, s2)
        got, amb = extract_invariant(w, s2)
        # expected: orders >= s2 part of v survives; lower orders canonicalized away
        want = {}
        for l in range(0, 6):
            pass
        # reconstruct expected by zeroing box^l components l < s2... instead just
        # verify: make_covariant(got) == w (postcondition, already enforced) and
        # got - v lies in span(box^l delta, l < s2)
        dd = psimp(padd(got, pscale(v, -1)))
        # subtract multiples of box^l delta, l < s2, using d0^(2l) coefficient
        for l in range(s2 - 1, -1, -1):
            g = dd.get((2 * l, 0, 0, 0), 0)
            if g != 0:
                dd = psimp(padd(dd, pscale(box_l(l), -g)))
        if dd != {}:
            rt_ok = False
            print("   residual outside declared ambiguity:", s2, dd)
check("round trip recovers invariant v up to declared ambiguity (s2 <= 3, order <= 10)", rt_ok)

# ---------- coordinate-power decomposition (jet recursion) ----------
def divide_power(f, i, e):
    """f = x_i^e * g expected; returns g or None."""
    g = {}
    for k, c in f.items():
        if k[i] < e:
            return None
        kk = list(k); kk[i] -= e
        g[tuple(kk)] = c
    return g

def coord_power_decompose(f, e, nvars, offset=0):
    """f in variables offset..offset+nvars-1 (4-tuples), every monomial with
    some exponent >= e in that range -> [f_offset..], sum x_i^e f_i = f.
    Returns None when division is impossible (reports via exception upstream)."""
    if not f:
        return [{} for _ in range(nvars)]
    if nvars == 1:
        g = divide_power(f, offset, e)
        if g is None:
            return None
        return [g]
    i = offset
    # split f = sum_{j<e} x_i^j g_j(rest) + x_i^e * f_i
    gs = {}
    fi = {}
    for k, c in f.items():
        if k[i] >= e:
            kk = list(k); kk[i] -= e
            fi[tuple(kk)] = c
        else:
            gs.setdefault(k[i], {})[tuple(0 if t == i else x for t, x in enumerate(k))] = c
    out = [fi] + [{} for _ in range(nvars - 1)]
    for j, gj in gs.items():
        sub = coord_power_decompose(gj, e, nvars - 1, offset + 1)
        if sub is None:
            return None
        xij = {tuple(j if t == i else 0 for t in range(4)): sp.Integer(1)}
        for t, h in enumerate(sub):
            out[1 + t] = padd(out[1 + t], pmul(xij, h))
    return out

# lemma-3 style traces (0-based translation of classic examples)
f = {(3, 0, 0, 0): sp.Integer(1), (0, 3, 0, 0): sp.Integer(1)}
dec = coord_power_decompose(f, 2, 2)
check("decompose x0^3+x1^3, m=1, d=2 -> [x0, x1]",
      dec == [{(1, 0, 0, 0): 1}, {(0, 1, 0, 0): 1}])
f = {(1, 3, 0, 0): sp.Integer(1)}
dec = coord_power_decompose(f, 2, 2)
check("decompose x0*x1^3, m=1, d=2 -> [0, x0*x1]",
      dec == [{}, {(1, 1, 0, 0): 1}])

random.seed(41)
rec_ok = True
for _ in range(30):
    m = random.randint(1, 2)
    d = random.randint(2, 4)
    f = {}
    for _ in range(5):
        base = [0, 0, 0, 0]
        for _ in range(m * d + 1):
            base[random.randint(0, d - 1)] += 1
        extra = [0, 0, 0, 0]
        for _ in range(random.randint(0, 3)):
            extra[random.randint(0, d - 1)] += 1
        k = tuple(b + e for b, e in zip(base, extra))
        f[k] = sp.Integer(random.randint(-5, 5))
    f = pclean(f)
    dec = coord_power_decompose(f, m + 1, d)
    if dec is None:
        rec_ok = False; continue
    recon = {}
    for i, fi in enumerate(dec):
        xie = {tuple(m + 1 if t == i else 0 for t in range(4)): sp.Integer(1)}
        recon = padd(recon, pmul(xie, fi))
    if psimp(padd(recon, pscale(f, -1))) != {}:
        rec_ok = False
check("random jet decompositions reconstruct exactly (deg >= m*d+1 monomials)", rec_ok)

# ---------- matrix-entry split ----------
# x_i written through two entries: x0=(u11+u22)/2, x3=(u22-u11)/2,
# x1=-(u12+u21)/2, x2=-i(u12-u21)/2 ; bucket by the larger power.
X_VIA = [((1, 1), sp.Rational(1, 2), (2, 2), sp.Rational(1, 2)),
         ((1, 2), sp.Rational(-1, 2), (2, 1), sp.Rational(-1, 2)),
         ((1, 2), -I / 2, (2, 1), I / 2),
         ((2, 2), sp.Rational(1, 2), (1, 1), sp.Rational(-1, 2))]

def entry_split(f, s2):
    """f with every monomial having some exponent >= 2*s2 ->
    dict (rho,sigma) -> f_rs with sum entry^(s2... doubled) ... here e = 2*s2 in
    doubled bookkeeping: exponent threshold 4s = 2*s2."""
    e = 2 * s2
    dec = coord_power_decompose(f, e, 4)
    if dec is None:
        return None
    out = {(r, c): {} for r in (1, 2) for c in (1, 2)}
    for i, fi in enumerate(dec):
        if not fi:
            continue
        (A, ca, B, cb) = X_VIA[i]
        # x_i^e = sum_j binom(e,j) (ca uA)^j (cb uB)^(e-j); the entry power
        # threshold is s2 (= 2s); terms with j >= s2 carry uA^s2 out front and
        # go to slot A (ties j = s2 included), the rest carry uB^s2 to slot B.
        for j in range(e + 1):
            cfac = sp.binomial(e, j) * ca ** j * cb ** (e - j)
            uA = ENT[A]; uB = ENT[B]
            rem = {(0, 0, 0, 0): cfac}
            if j >= s2:
                for _ in range(j - s2):
                    rem = pmul(rem, uA)
                for _ in range(e - j):
                    rem = pmul(rem, uB)
                out[A] = padd(out[A], pmul(rem, fi))
            else:
                for _ in range(j):
                    rem = pmul(rem, uA)
                for _ in range(e - j - s2):
                    rem = pmul(rem, uB)
                out[B] = padd(out[B], pmul(rem, fi))
    return {k: psimp(v) for k, v in out.items()}

def entry_power(rc, e):
    out = {(0, 0, 0, 0): sp.Integer(1)}
    for _ in range(e): out = pmul(out, ENT[rc])
    return out

def split_recon(f, s2, sl):
    recon = {}
    for rc, frs in sl.items():
        recon = padd(recon, pmul(entry_power(rc, s2), frs))
    return psimp(padd(recon, pscale(f, -1))) == {}

# NOTE on doubled bookkeeping: s2 is the doubled spin, the entry power is
# 2s = s2, and the coordinate threshold is 4s = 2*s2 = e above.
f1 = {(2, 0, 0, 0): sp.Integer(1), (0, 0, 0, 2): sp.Integer(-1)}  # x0^2 - x3^2
sl = entry_split(f1, 1)
check("split x0^2-x3^2 (s2=1) reconstructs", split_recon(f1, 1, sl))
print("frozen split of x0^2-x3^2:", {k: v for k, v in sl.items() if v})

f2 = {(0, 2, 0, 0): sp.Integer(1), (0, 0, 2, 0): sp.Integer(1)}  # x1^2 + x2^2
sl = entry_split(f2, 1)
check("split x1^2+x2^2 (s2=1) reconstructs", split_recon(f2, 1, sl))
print("frozen split of x1^2+x2^2:", {k: v for k, v in sl.items() if v})
check("split x1^2+x2^2 slot (1,2) = u21 = -x1-i*x2, others 0",
      psimp(padd(sl[(1, 2)], pscale(ENT[(2, 1)], -1))) == {}
      and not sl[(1, 1)] and not sl[(2, 1)] and not sl[(2, 2)])

random.seed(43)
sp_ok = True
for s2 in (1, 2):
    for _ in range(5):
        f = {}
        for _ in range(4):
            k = [0, 0, 0, 0]
            k[random.randint(0, 3)] += 2 * s2  # ideal membership by construction
            for _ in range(random.randint(0, 2)):
                k[random.randint(0, 3)] += 1
            f[tuple(k)] = sp.Integer(random.randint(-4, 4))
        f = pclean(f)
        sl = entry_split(f, s2)
        if sl is None or not split_recon(f, s2, sl):
            sp_ok = False
check("entry split reconstructs on random ideal members (s2 <= 2)", sp_ok)

obstruction = {(1, 1, 1, 0): sp.Integer(1)}  # x0*x1*x2: no exponent >= 2
check("obstruction detected: x0*x1*x2 not splittable at s2=1",
      entry_split(obstruction, 1) is None)

print("\nOVERALL " + ("PASS" if ok else "FAIL"))
sys.exit(0 if ok else 1)
