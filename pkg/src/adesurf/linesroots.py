"""Lines and roots on a surface model, with Weyl reflections and orbits.

Enumeration strategy.  Solutions of x*x = s with prescribed pairings
against a constraint set U live on a sphere inside an affine translate of
the orthogonal complement of U.  When that complement is negative
definite the sphere is finite, and Cauchy-Schwarz applied to the dual
basis vectors gives an explicit per-coordinate bound (computed exactly
over Fraction, never guessed).  The box is then swept by the kernels in
``_enumkernel``; a wider-margin sweep is what the test oracles use.

Orthogonality sets: the A-type root system of a Hirzebruch model lives
orthogonal to {K, f, b}.  For the D-type configuration the defining
constraint set is inferred to be {K, f} (dropping b doubles the root
count to 2n(n-1) and yields the D_n diagram for n >= 4); callers choose
the set explicitly, so the inference is visible at every call site.

Positivity of roots is decided by a fixed generic functional: basis
coordinate j gets weight M^(rank-1-j), with M the smallest integer >= 2
leaving no root orthogonal to the functional.  Earlier exceptional
classes therefore count as "larger", which makes l_i - l_{i+1} the
simple roots in type A.  Simple roots are the positive roots that do not
split as a sum of two positive roots, ordered by descending functional
value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import _enumkernel
from ._linalg import frac_matrix, is_negative_definite, nullspace, rank, rref, solve
from .errors import AdesurfError, EnumerationBoundError, OrbitCapExceededError
from .lattice import (
    KIND_HIRZEBRUCH,
    LatticeClass,
    SurfaceModel,
    change_basis,
    p2_presentation,
)


# ---------------------------------------------------------------------------
# diagonal presentation and coefficient bounds


def _diag_setup(model: SurfaceModel):
    """Return (enumeration model, to_diag, from_diag) for a surface model.

    P^2 models already carry a diagonal Gram matrix.  Hirzebruch models are
    enumerated in their companion plane presentation and mapped back.
    """
    if model.kind == KIND_HIRZEBRUCH:
        companion = p2_presentation(model)

        def fwd(c: LatticeClass) -> LatticeClass:
            return change_basis(model, companion, c)

        def back(c: LatticeClass) -> LatticeClass:
            return change_basis(companion, model, c)

        return companion, fwd, back
    return model, (lambda c: c), (lambda c: c)


def _sqrt_upper(x: Fraction) -> Fraction:
    """An exact rational upper bound for sqrt(x), x >= 0."""
    if x <= 0:
        return Fraction(0)
    p, q = x.numerator, x.denominator
    return Fraction(isqrt(p * q) + 1, q)


def coefficient_bounds(
    model: SurfaceModel,
    self_intersection: int,
    constraints: list[tuple[LatticeClass, int]],
) -> list[int] | None:
    """Per-coordinate box |x_i| <= B_i containing every solution.

    Works in the model's own (diagonal) coordinates; returns None when the
    linear constraints are provably unsatisfiable over Q.  Raises
    EnumerationBoundError when the residual lattice is not negative
    definite, in which case no finite box exists.
    """
    r = model.rank
    if any(model.gram[i][j] for i in range(r) for j in range(r) if i != j):
        raise AdesurfError(
            "coefficient bounds need a diagonal Gram matrix; "
            "enumerate Hirzebruch models through their plane presentation"
        )
    gram = frac_matrix(model.gram)
    u_vecs = [[Fraction(c) for c in u.coeffs] for u, _ in constraints]
    targets = [Fraction(t) for _, t in constraints]

    # drop linearly dependent constraints, checking target consistency
    if u_vecs:
        aug = [u_vecs[j] + [targets[j]] for j in range(len(u_vecs))]
        red, pivots = rref(aug)
        if r in pivots:
            return None  # inconsistent targets: no solutions at all
        keep_rows: list[int] = []
        seen = 0
        for j in range(len(u_vecs)):
            if rank([u_vecs[i] for i in keep_rows + [j]]) > seen:
                keep_rows.append(j)
                seen += 1
        u_vecs = [u_vecs[j] for j in keep_rows]
        targets = [targets[j] for j in keep_rows]

    k = len(u_vecs)

    def g_apply(vec):
        return [sum(gram[i][j] * vec[j] for j in range(r)) for i in range(r)]

    def pair_q(a, b):
        return sum(a[i] * bi for i, bi in enumerate(g_apply(b)))

    gram_u = [[pair_q(u_vecs[i], u_vecs[j]) for j in range(k)] for i in range(k)]

    # residual lattice: kernel of the constraint forms, must be negative definite
    forms = [g_apply(u) for u in u_vecs]
    kernel = nullspace(forms) if forms else nullspace([])
    if kernel:
        restricted = [[pair_q(a, b) for b in kernel] for a in kernel]
        if not is_negative_definite(restricted):
            raise EnumerationBoundError(
                "enumeration bound exceeded: residual lattice is not negative definite"
            )

    if k:
        coeffs = solve(gram_u, targets)
        if coeffs is None:
            raise EnumerationBoundError(
                "enumeration bound exceeded: constraint span is degenerate for the pairing"
            )
        x_u = [sum(coeffs[j] * u_vecs[j][i] for j in range(k)) for i in range(r)]
    else:
        x_u = [Fraction(0)] * r

    q_y = pair_q(x_u, x_u) - self_intersection
    if q_y < 0:
        return None  # sphere radius would be imaginary: empty

    bounds: list[int] = []
    for i in range(r):
        w = [Fraction(0)] * r
        # dual vector of coordinate i for a diagonal +/-1 Gram matrix
        w[i] = Fraction(1) / gram[i][i]
        pu = [pair_q(u_vecs[j], w) for j in range(k)]
        if k:
            b = solve(gram_u, pu)
            if b is None:
                raise EnumerationBoundError("enumeration bound exceeded: degenerate projection")
            z_sq = pair_q(w, w) - sum(b[j] * pu[j] for j in range(k))
        else:
            z_sq = pair_q(w, w)
        q_z = -z_sq
        if q_z < 0:
            raise EnumerationBoundError("enumeration bound exceeded: projection not definite")
        radius = _sqrt_upper(q_z * q_y)
        hi = abs(x_u[i]) + radius
        bounds.append(int(hi))  # int() truncates toward zero == floor for hi >= 0
    return bounds


def enumerate_classes(
    model: SurfaceModel,
    self_intersection: int,
    constraints: list[tuple[LatticeClass, int]],
    *,
    bound_margin: int = 0,
    backend: str | None = None,
) -> list[LatticeClass]:
    """Complete list of classes with x*x = self_intersection and fixed pairings."""
    diag_model, fwd, back = _diag_setup(model)
    diag_constraints = [(fwd(u), t) for u, t in constraints]
    bounds = coefficient_bounds(diag_model, self_intersection, diag_constraints)
    if bounds is None:
        return []
    if bound_margin:
        bounds = [b + bound_margin for b in bounds]
    gram = diag_model.gram
    rows = []
    tgts = []
    for u, t in diag_constraints:
        rows.append([gram[i][i] * u.coeffs[i] for i in range(diag_model.rank)])
        tgts.append(t)
    sols = _enumkernel.enumerate_diag(self_intersection, bounds, rows, tgts, backend=backend)
    found = [back(diag_model.cls(v)) for v in sols]
    return sorted(found, key=lambda c: c.coeffs)


def enumerate_lines(
    model: SurfaceModel,
    fiber_value: int | None = None,
    *,
    bound_margin: int = 0,
    backend: str | None = None,
) -> list[LatticeClass]:
    """All classes with x*x = x*K = -1, optionally with x*f prescribed."""
    constraints = [(model.K, -1)]
    if fiber_value is not None:
        if model.fiber_class is None:
            raise AdesurfError("fiber constraint requested on a model without a fiber class")
        constraints.append((model.fiber_class, fiber_value))
    return enumerate_classes(
        model, -1, constraints, bound_margin=bound_margin, backend=backend
    )


# ---------------------------------------------------------------------------
# root data


@dataclass(frozen=True)
class RootDatum:
    model: SurfaceModel
    roots: tuple[LatticeClass, ...]
    simple_roots: tuple[LatticeClass, ...]
    cartan: tuple[tuple[int, ...], ...]
    type_label: str

    @property
    def rank(self) -> int:
        return len(self.simple_roots)


@dataclass(frozen=True)
class WeightVector:
    entries: tuple[int, ...]


def _positivity_functional(model: SurfaceModel, roots: list[LatticeClass]) -> list[int]:
    r = model.rank
    m = 2
    while True:
        phi = [m ** (r - 1 - j) for j in range(r)]
        if all(sum(p * c for p, c in zip(phi, rt.coeffs)) != 0 for rt in roots):
            return phi
        m += 1


def _simple_roots(model: SurfaceModel, roots: list[LatticeClass]) -> list[LatticeClass]:
    if not roots:
        return []
    phi = _positivity_functional(model, roots)

    def height(c: LatticeClass) -> int:
        return sum(p * v for p, v in zip(phi, c.coeffs))

    positive = [rt for rt in roots if height(rt) > 0]
    pos_set = {rt.coeffs for rt in positive}
    simple = []
    for rt in positive:
        decomposable = any(
            (rt - other).coeffs in pos_set for other in positive if other.coeffs != rt.coeffs
        )
        if not decomposable:
            simple.append(rt)
    simple.sort(key=height, reverse=True)
    return simple


def _component_label(nodes: list[int], adj: dict[int, set[int]]) -> str:
    k = len(nodes)
    degs = {v: len(adj[v] & set(nodes)) for v in nodes}
    if any(d > 3 for d in degs.values()):
        return f"U{k}"
    branch = [v for v in nodes if degs[v] == 3]
    if not branch:
        return f"A{k}"  # path (or single node)
    if len(branch) > 1:
        return f"U{k}"
    b = branch[0]
    arms = []
    for start in adj[b] & set(nodes):
        length = 1
        prev, cur = b, start
        while True:
            nxt = [w for w in adj[cur] & set(nodes) if w != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return f"U{k}"
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{arms[2] + 3}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{arms[2] + 4}"
    return f"U{k}"


def _dynkin_label(model: SurfaceModel, simple: list[LatticeClass]) -> str:
    if not simple:
        return "A0"
    n = len(simple)
    adj = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if model.pair(simple[i], simple[j]) != 0:
                adj[i].add(j)
                adj[j].add(i)
    seen: set[int] = set()
    labels = []
    for start in range(n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        labels.append(_component_label(sorted(comp), adj))
    labels.sort()
    return "x".join(labels)


_ORTHOGONALITY_NAMES = ("K", "f", "b")


def enumerate_roots(
    model: SurfaceModel,
    orthogonality_set=("K", "f", "b"),
    *,
    bound_margin: int = 0,
    backend: str | None = None,
) -> RootDatum:
    """All x with x*x = -2 orthogonal to the named classes, as a root datum."""
    constraints: list[tuple[LatticeClass, int]] = []
    for name in orthogonality_set:
        if isinstance(name, LatticeClass):
            constraints.append((name, 0))
            continue
        if name not in _ORTHOGONALITY_NAMES:
            raise AdesurfError(f"orthogonality set may only contain K, f, b; got {name!r}")
        if name == "K":
            constraints.append((model.K, 0))
        elif name == "f":
            if model.fiber_class is None:
                raise AdesurfError("model has no fiber class f")
            constraints.append((model.fiber_class, 0))
        else:
            if model.base_class is None:
                raise AdesurfError("model has no base class b")
            constraints.append((model.base_class, 0))
    roots = enumerate_classes(model, -2, constraints, bound_margin=bound_margin, backend=backend)
    simple = _simple_roots(model, roots)
    cartan = tuple(
        tuple(-model.pair(a, b) for b in simple) for a in simple
    )
    label = _dynkin_label(model, simple)
    return RootDatum(
        model=model,
        roots=tuple(roots),
        simple_roots=tuple(simple),
        cartan=cartan,
        type_label=label,
    )


# ---------------------------------------------------------------------------
# reflections, orbits, weights


def reflect(root: LatticeClass, cls: LatticeClass) -> LatticeClass:
    """Reflection of cls in a (-2)-class: cls + (cls*root) root."""
    from .lattice import pair as _pair

    if _pair(root, root) != -2:
        raise AdesurfError("reflection requires a root with self-intersection -2")
    return cls + _pair(cls, root) * root


def weyl_orbit(datum: RootDatum, cls: LatticeClass, cap: int = 100_000) -> list[LatticeClass]:
    """Closure of {cls} under the simple reflections of the datum."""
    if cap < 1:
        raise AdesurfError("orbit cap must be at least 1")
    model = datum.model
    seen = {cls.coeffs}
    frontier = [cls]
    while frontier:
        nxt = []
        for x in frontier:
            for alpha in datum.simple_roots:
                y = x + model.pair(x, alpha) * alpha
                if y.coeffs not in seen:
                    seen.add(y.coeffs)
                    if len(seen) > cap:
                        raise OrbitCapExceededError(f"orbit exceeded cap {cap}")
                    nxt.append(y)
        frontier = nxt
    return sorted((LatticeClass(c, model.basis_id) for c in seen), key=lambda c: c.coeffs)


def weight_of(datum: RootDatum, cls: LatticeClass) -> WeightVector:
    """Pairings of cls against the simple roots, in datum order."""
    return WeightVector(tuple(datum.model.pair(cls, a) for a in datum.simple_roots))
