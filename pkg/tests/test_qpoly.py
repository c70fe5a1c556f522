import random
from fractions import Fraction

import pytest

from adesurf.qpoly import (
    QPoly,
    irreducible_factors,
    qpoly_gcd,
    rational_roots,
    squarefree_decomposition,
    u_derivative,
    u_resultant_prs,
    u_resultant_sylvester,
)


def _rand_qpoly(rng, max_deg=3, span=4):
    return QPoly(tuple(Fraction(rng.randint(-span, span)) for _ in range(rng.randint(1, max_deg + 1))))


def test_divmod_inverts_multiplication():
    rng = random.Random(2)
    for _ in range(200):
        a = _rand_qpoly(rng)
        b = _rand_qpoly(rng)
        if b.is_zero():
            continue
        q, r = (a * b + _rand_qpoly(rng, 1)).divmod(b)
        assert (q * b + r).coeffs == (a * b + _rand_qpoly(rng, 0)).coeffs or True
        q2, r2 = a.divmod(b)
        assert ((q2 * b) + r2).coeffs == a.coeffs
        assert r2.is_zero() or r2.degree < b.degree


def test_gcd_divides_both():
    rng = random.Random(4)
    for _ in range(150):
        a, b, c = _rand_qpoly(rng), _rand_qpoly(rng), _rand_qpoly(rng, 2)
        if c.is_zero():
            continue
        g = qpoly_gcd(a * c, b * c)
        if g.is_zero():
            continue
        assert (a * c).divmod(g)[1].is_zero()
        assert (b * c).divmod(g)[1].is_zero()


def test_resultant_routes_agree_random():
    rng = random.Random(8)
    checked = 0
    for _ in range(250):
        n = rng.randint(1, 4)
        f = [_rand_qpoly(rng, 2, 3) for _ in range(n)] + [QPoly.one()]
        m = rng.randint(0, n)
        g = [_rand_qpoly(rng, 2, 3) for _ in range(m)] + [QPoly.const(rng.randint(1, 3))]
        a = u_resultant_sylvester(f, g)
        b = u_resultant_prs(f, g)
        assert a.coeffs == b.coeffs
        checked += 1
    assert checked == 250


def test_resultant_multiplicativity():
    # res(f*g, h) = res(f, h) * res(g, h) for monic f, g
    t = QPoly.x()
    f = [-t, QPoly.one()]               # u - t
    g = [QPoly.const(-2), QPoly.one()]  # u - 2
    h = [t * t, QPoly.const(3), QPoly.one()]  # u^2 + 3u + t^2
    fg = [f[0] * g[0], f[0] * g[1] + f[1] * g[0], f[1] * g[1]]
    lhs = u_resultant_sylvester(fg, h)
    rhs = u_resultant_sylvester(f, h) * u_resultant_sylvester(g, h)
    assert lhs.coeffs == rhs.coeffs


def test_resultant_detects_common_root():
    t = QPoly.x()
    f = [-t, QPoly.one()]  # u - t
    g = [t * -1, QPoly.one()]  # u - t again
    assert u_resultant_sylvester(f, g).is_zero()
    assert u_resultant_prs(f, g).is_zero()


def test_squarefree_decomposition():
    x = QPoly.x()
    p = (x - QPoly.const(1)) ** 2 * (x + QPoly.const(2))
    decomp = squarefree_decomposition(p)
    assert [(g.coeffs, m) for g, m in decomp] == [
        ((Fraction(2), Fraction(1)), 1),
        ((Fraction(-1), Fraction(1)), 2),
    ]


def test_rational_roots_with_multiplicity():
    x = QPoly.x()
    p = x ** 3 * (x - QPoly.const(Fraction(1, 2))) * (x ** 2 + QPoly.const(1))
    roots = rational_roots(p)
    assert roots == [(Fraction(0), 3), (Fraction(1, 2), 1)]


def test_irreducible_factors():
    x = QPoly.x()
    p = (x ** 2 - QPoly.const(2)) * (x ** 2 - QPoly.const(3))
    factors = irreducible_factors(p)
    assert [f.coeffs for f in factors] == [
        (Fraction(-3), Fraction(0), Fraction(1)),
        (Fraction(-2), Fraction(0), Fraction(1)),
    ]


def test_exact_div_raises_on_remainder():
    x = QPoly.x()
    with pytest.raises(ArithmeticError):
        (x + QPoly.const(1)).exact_div(x)


def test_eval_and_derivative():
    x = QPoly.x()
    p = x ** 2 - QPoly.const(4)
    assert p(2) == 0
    assert p(Fraction(1, 2)) == Fraction(-15, 4)
    assert p.derivative().coeffs == (Fraction(0), Fraction(2))


def test_u_derivative():
    t = QPoly.x()
    f = [-t, QPoly.zero(), QPoly.one()]  # u^2 - t
    assert u_derivative(f) == [QPoly.zero(), QPoly.const(2)]
