"""Exact univariate polynomials over Q, plus polynomials in u over Q[t].

QPoly is a dense immutable coefficient tuple (ascending powers) of
Fractions.  The bivariate layer needed for spectral covers is kept as
plain lists of QPoly coefficients (ascending powers of u) manipulated by
the u_* functions; covers are monic in u so nothing fancier is needed.

Two independent resultant routes are provided on purpose:

* ``u_resultant_sylvester`` -- determinant of the Sylvester matrix over
  Q[t], computed fraction-free (Bareiss, exact divisions only);
* ``u_resultant_prs`` -- the subresultant pseudo-remainder sequence.

They are cross-checked against each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd


def _trim(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    k = len(coeffs)
    while k > 0 and coeffs[k - 1] == 0:
        k -= 1
    return coeffs[:k]


@dataclass(frozen=True)
class QPoly:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(tuple(Fraction(c) for c in self.coeffs)))

    # -- constructors ------------------------------------------------------
    @staticmethod
    def const(c) -> "QPoly":
        return QPoly((Fraction(c),))

    @staticmethod
    def zero() -> "QPoly":
        return QPoly(())

    @staticmethod
    def one() -> "QPoly":
        return QPoly((Fraction(1),))

    @staticmethod
    def x() -> "QPoly":
        return QPoly((Fraction(0), Fraction(1)))

    # -- basic structure ----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial gets -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if self.is_zero():
            raise ZeroDivisionError("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations -----------------------------------------------------
    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(tuple(out))

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly(tuple(Fraction(other) * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return QPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power")
        out = QPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return QPoly((Fraction(0),) * k + self.coeffs)

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return QPoly(()), self
        quo = [Fraction(0)] * (dq + 1)
        olc = other.lc()
        for k in range(dq, -1, -1):
            if len(rem) < len(other.coeffs) + k:
                continue
            c = rem[len(other.coeffs) + k - 1] / olc
            if c == 0:
                continue
            quo[k] = c
            for j, oc in enumerate(other.coeffs):
                rem[j + k] -= c * oc
        return QPoly(tuple(quo)), QPoly(tuple(rem))

    def exact_div(self, other: "QPoly") -> "QPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def derivative(self) -> "QPoly":
        return QPoly(tuple(Fraction(i) * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        lc = self.lc()
        return QPoly(tuple(c / lc for c in self.coeffs))

    # -- number-theoretic helpers -------------------------------------------
    def primitive_int(self) -> tuple[int, ...]:
        """Integer-primitive version with positive leading coefficient."""
        if self.is_zero():
            return ()
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts)


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over Q."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def squarefree_decomposition(p: QPoly) -> list[tuple[QPoly, int]]:
    """Yun's algorithm: p = c * prod g_i^i with the g_i squarefree, coprime.

    Returns the nontrivial (g_i monic, i) pairs in increasing multiplicity.
    """
    if p.is_zero() or p.degree == 0:
        return []
    p = p.monic()
    d = p.derivative()
    g0 = qpoly_gcd(p, d)
    w = p.exact_div(g0)
    y = d.exact_div(g0)
    out: list[tuple[QPoly, int]] = []
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        g = qpoly_gcd(w, z)  # monic; equals 1 when nothing has multiplicity i
        if g.degree > 0:
            out.append((g, i))
        w = w.exact_div(g)
        y = z.exact_div(g)
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _squarefree_rational_roots(g: QPoly) -> list[Fraction]:
    """Rational roots of a squarefree polynomial."""
    roots = []
    if g.degree < 1:
        return roots
    if g(0) == 0:
        roots.append(Fraction(0))
        g = g.exact_div(QPoly.x())
    if g.degree >= 1:
        ints = g.primitive_int()
        a0, al = ints[0], ints[-1]
        if a0 != 0:
            for p in _divisors(a0):
                for q in _divisors(al):
                    for cand in (Fraction(p, q), Fraction(-p, q)):
                        if g(cand) == 0 and cand not in roots:
                            roots.append(cand)
    return sorted(roots)


def rational_roots(p: QPoly) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicities, ascending by root."""
    out: list[tuple[Fraction, int]] = []
    for g, mult in squarefree_decomposition(p):
        for r in _squarefree_rational_roots(g):
            out.append((r, mult))
    return sorted(out)


# ---------------------------------------------------------------------------
# polynomials in u with QPoly coefficients (ascending powers of u)

UPoly = list  # list[QPoly]


def u_trim(f: UPoly) -> UPoly:
    k = len(f)
    while k > 0 and f[k - 1].is_zero():
        k -= 1
    return f[:k]


def u_degree(f: UPoly) -> int:
    f = u_trim(f)
    return len(f) - 1


def u_lc(f: UPoly) -> QPoly:
    f = u_trim(f)
    if not f:
        raise ZeroDivisionError("leading coefficient of zero")
    return f[-1]


def u_scale(f: UPoly, c: QPoly) -> UPoly:
    return u_trim([c * a for a in f])


def u_sub(f: UPoly, g: UPoly) -> UPoly:
    out = [QPoly.zero()] * max(len(f), len(g))
    for i, a in enumerate(f):
        out[i] = out[i] + a
    for i, b in enumerate(g):
        out[i] = out[i] - b
    return u_trim(out)


def u_shift(f: UPoly, k: int) -> UPoly:
    return u_trim([QPoly.zero()] * k + list(f))


def u_derivative(f: UPoly) -> UPoly:
    return u_trim([QPoly.const(i) * c for i, c in enumerate(f)][1:])


def u_exact_div_scalar(f: UPoly, c: QPoly) -> UPoly:
    return u_trim([a.exact_div(c) for a in f])


def u_prem(a: UPoly, b: UPoly) -> UPoly:
    """Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b) over Q[t]."""
    da, db = u_degree(a), u_degree(b)
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if da < db:
        return u_trim(list(a))
    lb = u_lc(b)
    r = list(a)
    e = da - db + 1
    while True:
        dr = u_degree(r)
        if dr < db or dr < 0:
            break
        lr = u_lc(r)
        r = u_sub(u_scale(r, lb), u_scale(u_shift(b, dr - db), lr))
        e -= 1
    return u_trim(u_scale(r, lb ** e))


def u_resultant_sylvester(f: UPoly, g: UPoly) -> QPoly:
    """Resultant with respect to u via the Sylvester determinant (Bareiss)."""
    f, g = u_trim(list(f)), u_trim(list(g))
    n, m = u_degree(f), u_degree(g)
    if n < 0 or m < 0:
        return QPoly.zero()
    if n == 0 and m == 0:
        return QPoly.one()
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    fd = [f[n - i] if 0 <= n - i < len(f) else QPoly.zero() for i in range(n + 1)]
    gd = [g[m - i] if 0 <= m - i < len(g) else QPoly.zero() for i in range(m + 1)]
    mat = []
    for r in range(m):
        row = [QPoly.zero()] * size
        for i, c in enumerate(fd):
            row[r + i] = c
        mat.append(row)
    for r in range(n):
        row = [QPoly.zero()] * size
        for i, c in enumerate(gd):
            row[r + i] = c
        mat.append(row)
    # fraction-free Bareiss elimination
    sign = 1
    prev = QPoly.one()
    for k in range(size - 1):
        if mat[k][k].is_zero():
            swap = None
            for i in range(k + 1, size):
                if not mat[i][k].is_zero():
                    swap = i
                    break
            if swap is None:
                return QPoly.zero()
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                mat[i][j] = num.exact_div(prev)
            mat[i][k] = QPoly.zero()
        prev = mat[k][k]
    det = mat[size - 1][size - 1]
    return det if sign == 1 else -det


def u_resultant_prs(f: UPoly, g: UPoly) -> QPoly:
    """Resultant via the subresultant pseudo-remainder sequence."""
    a, b = u_trim(list(f)), u_trim(list(g))
    da, db = u_degree(a), u_degree(b)
    if da < 0 or db < 0:
        return QPoly.zero()
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da % 2) == 1 and (db % 2) == 1:
            s = -s
    if db == 0:
        return (b[0] ** da) * (1 if s == 1 else -1)
    gg = QPoly.one()
    hh = QPoly.one()
    while True:
        da, db = u_degree(a), u_degree(b)
        delta = da - db
        if (da % 2) == 1 and (db % 2) == 1:
            s = -s
        r = u_prem(a, b)
        a = b
        b = u_exact_div_scalar(r, gg * hh ** delta) if r else []
        gg = u_lc(a)
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            hh = gg
        else:
            hh = (gg ** delta).exact_div(hh ** (delta - 1))
        if not b:
            return QPoly.zero()
        if u_degree(b) == 0:
            dA = u_degree(a)
            num = b[0] ** dA
            if dA <= 1:
                res = num * (hh ** (1 - dA))
            else:
                res = num.exact_div(hh ** (dA - 1))
            return res if s == 1 else -res


def irreducible_factors(p: QPoly) -> list[QPoly]:
    """Irreducible factors over Q (via sympy), integer-primitive, sorted.

    Multiplicities are dropped; callers wanting them should combine with
    squarefree_decomposition.
    """
    if p.degree < 1:
        return []
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(sympy.Poly(expr, t))
    out = []
    for fac, _mult in factors:
        poly = sympy.Poly(fac, t)
        coeffs = list(reversed(poly.all_coeffs()))
        q = QPoly(tuple(Fraction(str(c)) for c in coeffs))
        out.append(QPoly(tuple(Fraction(v) for v in q.primitive_int())))
    return sorted(out, key=lambda q: (q.degree, q.coeffs))
