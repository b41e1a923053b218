#!/usr/bin/env python3
"""Independent oracle for the growth-sequence diagnostic, dual norms, and
the acyclicity-parameter arithmetic.

The headline number: for coefficients c_n = 1/n! in one variable with
beta = 1, the sequence m_n = n * |c_n|^(1/n) tends to e from below like
e * (2 pi n)^(-1/(2n)); its value at n = 40 is computed here to high
precision and frozen, together with its exact relative deviation from e.
"""

import sys
from fractions import Fraction
from math import factorial
import mpmath as mp

mp.mp.dps = 50
ok = True
def check(name, cond):
    global ok
    print(("PASS " if cond else "FAIL ") + name)
    if not cond:
        ok = False

# m_n = n^beta * |c_kappa|^(1/n) with beta = 1, c = 1/n!
m40 = mp.mpf(40) * mp.power(mp.mpf(1) / mp.factorial(40), mp.mpf(1) / 40)
e = mp.e
dev = abs(m40 - e) / e
print(f"m_40 = {mp.nstr(m40, 20)}")
print(f"e    = {mp.nstr(e, 20)}")
print(f"relative deviation = {mp.nstr(dev * 100, 10)} %")
check("m_40 = 2.536698573160901 (frozen)",
      abs(m40 - mp.mpf("2.536698573160901")) < mp.mpf("1e-14"))
check("deviation from e is 6.6800746...% (> 5%: the 5% criterion cannot hold)",
      abs(dev - mp.mpf("0.066800746")) < mp.mpf("1e-8") and dev > mp.mpf("0.05"))
# refined Stirling cross-check: m_n = e * (2 pi n)^(-1/(2n)) * (1+O(1/n))
approx = e * mp.power(2 * mp.pi * 40, -mp.mpf(1) / 80)
check("refined Stirling e*(2 pi n)^(-1/2n) matches m_40 to 4 digits",
      abs(approx - m40) < mp.mpf("2e-4"))
# double-check with raw float arithmetic, independent path
import math
lf = math.lgamma(41.0)  # ln(40!)
m40f = 40.0 * math.exp(-lf / 40.0)
check("float cross-check m_40 agrees to 1e-12", abs(m40f - float(m40)) < 1e-12)

check("m_n for constant coefficients, beta=0, equals 1",
      all(abs(float(mp.power(1, mp.mpf(1) / n)) - 1.0) < 1e-15 for n in (1, 5, 40)))

# dual norm B^(-|k|) prod k_j^(-beta k_j)
def dual_norm_exact(kappa, B, beta):
    # rational exactly when beta * k_j is an integer for every k_j > 0
    r = Fraction(1, 1) / (Fraction(B) ** sum(kappa))
    for kj in kappa:
        if kj > 0:
            ex = beta * kj
            assert ex == int(ex)
            r *= Fraction(1, kj ** int(ex))
    return r

check("dual_norm((2,0,0,0), B=1, beta=1) = 1/4",
      dual_norm_exact((2, 0, 0, 0), 1, 1) == Fraction(1, 4))
check("dual_norm((1,1,0,0), B=2, beta=0) = 1/4",
      dual_norm_exact((1, 1, 0, 0), 2, 0) == Fraction(1, 4))
check("dual_norm(0, any) = 1", dual_norm_exact((0, 0, 0, 0), 7, 3) == Fraction(1))
# non-integral beta path: float value frozen for one case
val = float(mp.power(2, -3) * mp.power(3, -mp.mpf("0.5") * 3))
print(f"dual_norm((3,), B=2, beta=1/2) float = {val!r}")
check("dual_norm((3,), B=2, beta=1/2) ~ 0.0240562612...",
      abs(val - 0.024056261216234408) < 1e-15)

# acyclicity: A = log(B/B0)/log(B1/B0); eps = eps1^A; N = ceil(A*N1)
def detect_rational_exponent(b, b0, b1, maxq=64):
    """Find A = p/q with (B/B0)^q == (B1/B0)^p exactly, if one exists."""
    x = Fraction(b) / Fraction(b0)
    y = Fraction(b1) / Fraction(b0)
    for q in range(1, maxq + 1):
        for p in range(1, maxq + 1):
            if x ** q == y ** p:
                return Fraction(p, q)
    return None

check("exponent detect: B0=1,B1=2,B=4 -> A = 2", detect_rational_exponent(4, 1, 2) == 2)
check("exponent detect: B0=1,B1=4,B=2 -> A = 1/2", detect_rational_exponent(2, 1, 4) == Fraction(1, 2))
check("exponent detect: B=B1 -> A = 1", detect_rational_exponent(3, 1, 3) == 1)
check("exponent detect: B0=2,B1=3,B=9/2 -> A = 2 ((3/2)^2 = 9/4)",
      detect_rational_exponent(Fraction(9, 2), 2, 3) == 2)
check("exponent detect: B0=1,B1=2,B=3 is irrational -> None",
      detect_rational_exponent(3, 1, 2) is None)
A_float = float(mp.log(mp.mpf(3)) / mp.log(mp.mpf(2)))
print(f"acyclicity float A for (B0,B1,B)=(1,2,3): {A_float!r}")
import math as _m
check("ceil arithmetic: A=1/2, N1=7 -> N = 4", -(-1 * 7 // 2) == 4)

print("\nOVERALL " + ("PASS" if ok else "FAIL"))
sys.exit(0 if ok else 1)
