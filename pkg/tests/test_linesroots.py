import pytest

from adesurf.errors import AdesurfError, OrbitCapExceededError
from adesurf.lattice import hirzebruch_blowup, p2_blowup
from adesurf.linesroots import (
    coefficient_bounds,
    enumerate_classes,
    enumerate_lines,
    enumerate_roots,
    reflect,
    weight_of,
    weyl_orbit,
)

from .oracles import brute_force_diag, diag_rows_for_class, literal_box_scan

LINE_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


def test_twenty_seven_lines():
    assert len(enumerate_lines(p2_blowup(6))) == 27


def test_no_lines_on_plane():
    assert enumerate_lines(p2_blowup(0)) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_line_counts_match_closed_form(n):
    assert len(enumerate_lines(p2_blowup(n))) == LINE_COUNTS[n]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lines_against_literal_box_oracle(n):
    m = p2_blowup(n)
    rows = [diag_rows_for_class(m, m.K)]
    bounds = coefficient_bounds(m, -1, [(m.K, -1)])
    wide = [b + 2 for b in bounds]
    expected = literal_box_scan(-1, wide, rows, [-1])
    got = [c.coeffs for c in enumerate_lines(m)]
    assert got == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_lines_against_pruned_oracle_wider_bounds(n):
    m = p2_blowup(n)
    rows = [diag_rows_for_class(m, m.K)]
    bounds = coefficient_bounds(m, -1, [(m.K, -1)])
    wide = [2 * b + 1 for b in bounds]
    expected = brute_force_diag(-1, wide, rows, [-1])
    got = [c.coeffs for c in enumerate_lines(m)]
    assert got == expected


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_dn_line_configuration(n):
    m = hirzebruch_blowup(n)
    lines = enumerate_lines(m, fiber_value=0)
    want = sorted(
        [m.exceptional(i).coeffs for i in range(1, n + 1)]
        + [(m.fiber_class - m.exceptional(i)).coeffs for i in range(1, n + 1)]
    )
    assert [c.coeffs for c in lines] == want
    assert len(lines) == 2 * n


def test_backends_agree():
    m = p2_blowup(7)
    a = enumerate_lines(m, backend="numba")
    b = enumerate_lines(m, backend="numpy")
    assert a == b


@pytest.mark.parametrize("n", range(2, 11))
def test_a_type_roots(n):
    m = hirzebruch_blowup(n)
    datum = enumerate_roots(m, ("K", "f", "b"))
    assert len(datum.roots) == n * (n - 1)
    assert datum.type_label == f"A{n - 1}"
    want = [(m.exceptional(i) - m.exceptional(i + 1)).coeffs for i in range(1, n)]
    assert [a.coeffs for a in datum.simple_roots] == want


def test_e6_roots():
    datum = enumerate_roots(p2_blowup(6), ("K",))
    assert len(datum.roots) == 72
    assert datum.type_label == "E6"
    assert len(datum.simple_roots) == 6


def test_e_series_counts():
    assert len(enumerate_roots(p2_blowup(7), ("K",)).roots) == 126
    assert len(enumerate_roots(p2_blowup(8), ("K",)).roots) == 240
    assert enumerate_roots(p2_blowup(7), ("K",)).type_label == "E7"
    assert enumerate_roots(p2_blowup(8), ("K",)).type_label == "E8"


@pytest.mark.parametrize("n", range(2, 9))
def test_d_type_roots(n):
    datum = enumerate_roots(hirzebruch_blowup(n), ("K", "f"))
    assert len(datum.roots) == 2 * n * (n - 1)
    expected = {2: "A1xA1", 3: "A3"}.get(n, f"D{n}")
    assert datum.type_label == expected


def test_orthogonality_accepts_classes():
    m = hirzebruch_blowup(3)
    by_name = enumerate_roots(m, ("K", "f", "b"))
    by_class = enumerate_roots(m, (m.K, m.fiber_class, m.base_class))
    assert [r.coeffs for r in by_class.roots] == [r.coeffs for r in by_name.roots]
    with pytest.raises(AdesurfError):
        enumerate_roots(m, ("K", "E"))
    with pytest.raises(AdesurfError):
        enumerate_roots(p2_blowup(3), ("K", "f"))


def test_no_roots_small():
    datum = enumerate_roots(hirzebruch_blowup(1), ("K", "f", "b"))
    assert datum.roots == ()
    assert datum.type_label == "A0"


def test_coefficient_bounds_refuse_nondiagonal_gram():
    m = hirzebruch_blowup(2)
    with pytest.raises(AdesurfError):
        coefficient_bounds(m, -1, [(m.K, -1)])


def test_d_roots_against_oracle():
    from adesurf.lattice import change_basis, p2_presentation

    m = hirzebruch_blowup(5)
    comp = p2_presentation(m)
    k = change_basis(m, comp, m.K)
    f = change_basis(m, comp, m.fiber_class)
    rows = [diag_rows_for_class(comp, k), diag_rows_for_class(comp, f)]
    bounds = coefficient_bounds(comp, -2, [(k, 0), (f, 0)])
    wide = [2 * b + 1 for b in bounds]
    oracle = brute_force_diag(-2, wide, rows, [0, 0])
    datum = enumerate_roots(m, ("K", "f"))
    assert len(datum.roots) == len(oracle) == 2 * 5 * 4


def test_roots_against_oracle_e6():
    m = p2_blowup(6)
    rows = [diag_rows_for_class(m, m.K)]
    bounds = coefficient_bounds(m, -2, [(m.K, 0)])
    wide = [2 * b + 1 for b in bounds]
    expected = brute_force_diag(-2, wide, rows, [0])
    got = [c.coeffs for c in enumerate_roots(m, ("K",)).roots]
    assert got == expected


def test_root_sets_closed_under_negation_and_reflection():
    for args in ((hirzebruch_blowup(4), ("K", "f", "b")), (p2_blowup(6), ("K",))):
        model, orth = args
        datum = enumerate_roots(model, orth)
        coeffs = {r.coeffs for r in datum.roots}
        for r in datum.roots:
            assert (-r).coeffs in coeffs
            for alpha in datum.simple_roots:
                assert reflect(alpha, r).coeffs in coeffs


def test_cartan_matrix_a3():
    datum = enumerate_roots(hirzebruch_blowup(4), ("K", "f", "b"))
    assert datum.cartan == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


def test_reflection_examples():
    m = hirzebruch_blowup(3)
    l1, l2 = m.exceptional(1), m.exceptional(2)
    alpha = l1 - l2
    assert reflect(alpha, l1).coeffs == l2.coeffs
    assert reflect(alpha, alpha).coeffs == (-alpha).coeffs
    f = m.fiber_class
    assert reflect(alpha, f).coeffs == f.coeffs  # orthogonal class is fixed
    with pytest.raises(AdesurfError):
        reflect(l1, l2)  # l1 is not a root


def test_reflection_preserves_pairing_on_basis():
    m = p2_blowup(6)
    datum = enumerate_roots(m, ("K",))
    basis = [m.cls([int(i == j) for j in range(m.rank)]) for i in range(m.rank)]
    for alpha in datum.simple_roots:
        for x in basis:
            for y in basis:
                assert m.pair(reflect(alpha, x), reflect(alpha, y)) == m.pair(x, y)


@pytest.mark.parametrize("n", range(1, 9))
def test_orbit_of_l1_minus_l0(n):
    m = hirzebruch_blowup(n)
    datum = enumerate_roots(m, ("K", "f", "b"))
    orbit = weyl_orbit(datum, m.exceptional(1) - m.base_class)
    assert len(orbit) == n
    want = sorted((m.exceptional(i) - m.base_class).coeffs for i in range(1, n + 1))
    assert [c.coeffs for c in orbit] == want


def test_orbit_of_root_is_full_root_set():
    m = hirzebruch_blowup(4)
    datum = enumerate_roots(m, ("K", "f", "b"))
    orbit = weyl_orbit(datum, datum.simple_roots[0])
    assert [c.coeffs for c in orbit] == [r.coeffs for r in datum.roots]


def test_orbit_of_zero():
    m = hirzebruch_blowup(3)
    datum = enumerate_roots(m, ("K", "f", "b"))
    orbit = weyl_orbit(datum, m.zero())
    assert len(orbit) == 1


def test_orbit_cap():
    m = p2_blowup(6)
    datum = enumerate_roots(m, ("K",))
    with pytest.raises(OrbitCapExceededError):
        weyl_orbit(datum, m.exceptional(1), cap=3)


def test_weights_a_type():
    n = 4
    m = hirzebruch_blowup(n)
    datum = enumerate_roots(m, ("K", "f", "b"))
    for i in range(1, n + 1):
        w = weight_of(datum, m.exceptional(i)).entries
        expected = tuple(
            -1 if j == i else (1 if j == i - 1 else 0) for j in range(1, n)
        )
        assert w == expected
    assert weight_of(datum, m.K).entries == (0,) * (n - 1)


def test_e6_line_weights_single_orbit():
    m = p2_blowup(6)
    datum = enumerate_roots(m, ("K",))
    lines = enumerate_lines(m)
    orbit = weyl_orbit(datum, lines[0], cap=100)
    assert sorted(c.coeffs for c in orbit) == [c.coeffs for c in lines]


def test_dn_weights_negate():
    n = 4
    m = hirzebruch_blowup(n)
    datum = enumerate_roots(m, ("K", "f"))
    for i in range(1, n + 1):
        w_plus = weight_of(datum, m.exceptional(i)).entries
        w_minus = weight_of(datum, m.fiber_class - m.exceptional(i)).entries
        assert tuple(-x for x in w_plus) == w_minus


def test_unbounded_enumeration_refused():
    # constraining only against f leaves an indefinite residual lattice
    m = hirzebruch_blowup(3)
    with pytest.raises(AdesurfError):
        enumerate_classes(m, -2, [(m.fiber_class, 0)])


def test_backend_env_selection(monkeypatch):
    from adesurf import _enumkernel as ek
    from adesurf.errors import EnumerationBoundError

    monkeypatch.setenv(ek.ENV_BACKEND, "numpy")
    assert ek.backend_from_env() == "numpy"
    monkeypatch.setenv(ek.ENV_BACKEND, "")
    assert ek.backend_from_env() in ("numba", "numpy")
    monkeypatch.setenv(ek.ENV_BACKEND, "numpyy")
    with pytest.raises(EnumerationBoundError):
        ek.backend_from_env()


def test_kernel_refuses_oversized_boxes():
    from adesurf._enumkernel import check_int64_safety
    from adesurf.errors import EnumerationBoundError

    with pytest.raises(EnumerationBoundError):
        check_int64_safety(-1, [1 << 21], [], [])
    with pytest.raises(EnumerationBoundError):
        check_int64_safety(-1, [3] * 70, [], [])
    with pytest.raises(EnumerationBoundError):
        check_int64_safety(1 << 55, [3], [], [])
    check_int64_safety(-1, [7, 3, 3], [[1, 1, 1]], [0])  # sane input passes


def test_inconsistent_constraints_yield_empty():
    m = hirzebruch_blowup(0)
    # K = -2b - 3f makes x*K determined by x*b, x*f; demand the impossible
    got = enumerate_classes(
        m, -1, [(m.K, 5), (m.base_class, 0), (m.fiber_class, 0)]
    )
    assert got == []
