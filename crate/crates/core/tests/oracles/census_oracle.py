#!/usr/bin/env python3
"""Independent brute-force census oracle.

For t = n/m (|n|, m <= bound, gcd = 1) computes d = squarefree part of h_A(t)
with sympy.factorint, keeps the smallest-height t per d (ties broken by
(m, n)), and builds the two twisted points by explicit elliptic-curve
arithmetic over Q(sqrt d):

    P_i = f_i(t, s*sqrt d) - f_i(t, -s*sqrt d)   on E_d

where f_1, f_2 are the degree-3 maps H -> D -> E. The single pole t = -1 is
evaluated through a sympy-cancelled closed form. Points are reported on the
integral model y^2 = x^3 - A d^2 x + A d^3. The independence screen searches
n P_i = O (n <= 12) and a P_1 = b P_2 (|a|, |b| <= 12) exhaustively in exact
rationals.

Usage: python3 census_oracle.py [A] [bound]
"""
import sys
from fractions import Fraction as Fr
from math import gcd

import sympy as sp

A = Fr(int(sys.argv[1])) if len(sys.argv) > 1 else Fr(-27)
BOUND = int(sys.argv[2]) if len(sys.argv) > 2 else 25


def h_val(t):
    return A * (t + 1) ** 4 * (t * t + 1) ** 4 - 64 * t ** 3 * (t * t + t + 1) ** 3


def squarefree_part(v):
    sign = -1 if v < 0 else 1
    num, den = abs(v.numerator), v.denominator
    d = sign
    for pr, e in sp.factorint(num * den).items():
        if e % 2:
            d *= pr
    s2 = v / d
    s = Fr(sp.integer_nthroot(s2.numerator, 2)[0], sp.integer_nthroot(s2.denominator, 2)[0])
    assert s * s == s2
    return d, s


class Q2:
    """a + b*sqrt(d)"""

    def __init__(self, a, b=Fr(0)):
        self.a, self.b = Fr(a), Fr(b)

    def __add__(s, o):
        o = lift(o)
        return Q2(s.a + o.a, s.b + o.b)

    __radd__ = __add__

    def __sub__(s, o):
        o = lift(o)
        return Q2(s.a - o.a, s.b - o.b)

    def __rsub__(s, o):
        return lift(o) - s

    def __neg__(s):
        return Q2(-s.a, -s.b)

    def __mul__(s, o):
        o = lift(o)
        return Q2(s.a * o.a + D * s.b * o.b, s.a * o.b + s.b * o.a)

    __rmul__ = __mul__

    def inv(s):
        n = s.a * s.a - D * s.b * s.b
        return Q2(s.a / n, -s.b / n)

    def __truediv__(s, o):
        return s * lift(o).inv()

    def iszero(s):
        return s.a == 0 and s.b == 0

    def __eq__(s, o):
        o = lift(o)
        return s.a == o.a and s.b == o.b


def lift(x):
    return x if isinstance(x, Q2) else Q2(x)


D = 1
INF = None


def add(P, Q, a2, a4):
    if P is INF:
        return Q
    if Q is INF:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2).iszero():
            return INF
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - a2 - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def neg(P):
    return INF if P is INF else (P[0], -P[1])


def f_image(t, w, which):
    m = (t + 1) * (t * t + 1)
    x = -(t * t + t + 1) / m
    if which == 2:
        x = t * x
    y = w / (8 * m * m)
    ex = 8 * y + 8 * x * x + 4 * x
    ey = 4 * x - ex * (4 * x + 1)
    return (ex, ey)


def pole_closed_form():
    tt, ww = sp.symbols("t w")
    hA = sp.Rational(A.numerator, A.denominator)
    h = hA * (tt + 1) ** 4 * (tt**2 + 1) ** 4 - 64 * tt**3 * (tt**2 + tt + 1) ** 3
    out = []
    for which in (1, 2):
        m = (tt + 1) * (tt**2 + 1)
        x = -(tt**2 + tt + 1) / m
        if which == 2:
            x = tt * x
        ex_a = 8 * x * x + 4 * x
        ex_b = 1 / (m * m)
        ey_a = 4 * x - ex_a * (4 * x + 1)
        ey_b = -ex_b * (4 * x + 1)
        gx = sp.cancel(ey_a**2 / (ex_b**2 * h) - 2 * ex_a)
        gy = sp.cancel(ey_a * (ex_a - gx) / (ex_b * h) - ey_b)
        out.append((gx, gy, tt))
    return out


POLE = None


def twisted_point(t, s, d, which):
    """P = f(t, s sqrt d) - f(t, -s sqrt d) as a literal point on d y^2 = x^3 - A x + A."""
    global D, POLE
    if t == -1:
        if POLE is None:
            POLE = pole_closed_form()
        gx, gy, tt = POLE[which - 1]
        num, den = sp.fraction(gx)
        if den.subs(tt, -1) == 0:
            return INF
        X = Fr(str(gx.subs(tt, -1)))
        Y = Fr(str(gy.subs(tt, -1))) * s
        return (X, Y)
    D = d
    if d == 1:
        P = f_image(Q2(t), Q2(s), which)
        Pbar = f_image(Q2(t), Q2(-s), which)
    else:
        P = f_image(Q2(t), Q2(0, s), which)
        Pbar = f_image(Q2(t), Q2(0, -s), which)
    R = add(P, neg(Pbar), Q2(0), Q2(-A))
    if R is INF:
        return INF
    x, y = R
    if d == 1:
        return (x.a + x.b, y.a + y.b)
    assert x.b == 0 and y.a == 0
    return (x.a, y.b)


def normalized(P, d):
    if P is INF:
        return INF
    return (d * P[0], d * d * P[1])


def radd(P, Q, a4):
    global D
    D = 1
    if P is INF:
        return Q
    if Q is INF:
        return P
    R = add((Q2(P[0]), Q2(P[1])), (Q2(Q[0]), Q2(Q[1])), Q2(0), Q2(a4))
    return INF if R is INF else (R[0].a, R[1].a)


def screen(P1, P2, d):
    a4 = -A * d * d
    m1, m2 = [INF], [INF]
    for _ in range(12):
        m1.append(radd(m1[-1], P1, a4))
        m2.append(radd(m2[-1], P2, a4))
    for n in range(1, 13):
        if m1[n] is INF or m2[n] is INF:
            return "dependent-or-torsion"
    for a in range(0, 13):
        for b in range(-12, 13):
            if a == 0 and b <= 0:
                continue
            lhs = m1[a]
            rhs = m2[abs(b)] if b <= 0 else neg(m2[b])
            # a P1 + b P2 = O  <=>  a P1 = -b P2
            if lhs == rhs or (lhs is not INF and rhs is not INF and lhs[0] == rhs[0] and lhs[1] == rhs[1]):
                return "dependent-or-torsion"
    return "independent-candidate"


def main():
    best = {}
    for m in range(1, BOUND + 1):
        for n in range(-BOUND, BOUND + 1):
            if gcd(abs(n), m) != 1:
                continue
            t = Fr(n, m)
            v = h_val(t)
            if v == 0:
                continue
            d, s = squarefree_part(v)
            key = (max(abs(n), m), m, n)
            if d not in best or key < best[d][0]:
                best[d] = (key, t, s)
    rows = []
    for d in sorted(best, key=lambda x: (abs(x), x)):
        _, t, s = best[d]
        P1 = normalized(twisted_point(t, s, d, 1), d)
        P2 = normalized(twisted_point(t, s, d, 2), d)
        for P in (P1, P2):
            if P is not INF:
                x, y = P
                assert y * y == x**3 - A * d * d * x + A * d**3
        if P1 is INF or P2 is INF:
            status = "degenerate"
        else:
            status = screen(P1, P2, d)
        rows.append((d, t, P1, P2, status))
    print("distinct_d", len(rows))
    for d, t, P1, P2, status in rows[:12]:
        print(d, t, P1, P2, status)
    from collections import Counter

    print("status counts", Counter(r[4] for r in rows))
    for X in (10, 100, 1000, 10**4, 10**5, 10**6):
        print("N", X, sum(1 for r in rows if abs(r[0]) <= X and r[4] == "independent-candidate"))
    print("d<=1000 list", [(r[0], str(r[1]), r[4]) for r in rows if abs(r[0]) <= 1000])


if __name__ == "__main__":
    main()
