"""Euler characteristics, effectivity certificates, and ext profiles.

The Euler characteristic on a rational surface is
chi(O(D)) = 1 + (D*D - D*K)/2; the parity of D*D - D*K is asserted, since
an odd value can only come from a corrupted Gram matrix.

Effectivity here means: D is a non-negative integer combination of the
model's configured effective generators plus any -2 curves induced by
collided blowup points.  The search is a bounded backtracking over
generator multiplicities.  Termination comes from pairing against a fixed
class A with A*g >= 1 for every generator g: each unit of multiplicity
consumes at least one unit of the budget A*D.  Running out of the node
budget yields an explicitly indeterminate result, never a silent False.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AdesurfError, IndeterminateEffectivityError, ParityViolationError
from .lattice import KIND_HIRZEBRUCH, LatticeClass, SurfaceModel

EFFECTIVE = "effective"
NOT_EFFECTIVE = "not_effective"
INDETERMINATE = "indeterminate"

DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class CollisionConfig:
    """Pairs (i, j) of collided blowup points; each induces the -2 curve l_j - l_i."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", tuple((int(i), int(j)) for i, j in self.pairs)
        )
        for i, j in self.pairs:
            if i == j:
                raise AdesurfError(f"collision pair ({i}, {j}) must involve two distinct points")

    def induced_curves(self, model: SurfaceModel) -> tuple[LatticeClass, ...]:
        curves = []
        for i, j in self.pairs:
            c = model.exceptional(j) - model.exceptional(i)
            if model.pair(c, c) != -2 or model.pair(c, model.K) != 0:
                raise AdesurfError(f"induced class for pair ({i}, {j}) is not a -2 curve")
            curves.append(c)
        return tuple(curves)


@dataclass(frozen=True)
class EffectivityResult:
    status: str
    certificate: tuple[tuple[LatticeClass, int], ...] | None = None
    nodes_used: int = 0

    def __bool__(self) -> bool:
        if self.status == INDETERMINATE:
            raise IndeterminateEffectivityError(
                "effectivity search exceeded its node budget; result is indeterminate"
            )
        return self.status == EFFECTIVE


def euler_char(model: SurfaceModel, d: LatticeClass) -> int:
    """chi(O(D)) = 1 + (D*D - D*K)/2 on a rational surface."""
    dd = model.pair(d, d)
    dk = model.pair(d, model.K)
    if (dd - dk) % 2 != 0:
        raise ParityViolationError(
            f"D*D - D*K = {dd - dk} is odd for D = {d.coeffs}; Gram matrix is corrupt"
        )
    return 1 + (dd - dk) // 2


def _budget_class(model: SurfaceModel) -> LatticeClass:
    """A fixed class pairing >= 1 with every admissible generator.

    Exceptional classes get strictly increasing weights so that induced
    curves l_j - l_i (i < j) also pair positively.
    """
    idx = model.exceptional_indices()
    coeffs = [0] * model.rank
    if model.kind == KIND_HIRZEBRUCH:
        coeffs[0] = 1  # b: pairs 1 with f
        for pos, i in enumerate(idx):
            coeffs[2 + pos] = -(i + 1)
    else:
        coeffs[0] = 2 * model.n + 3  # h-weight dominates any line class h - l_i - l_j
        for pos, i in enumerate(idx):
            coeffs[1 + pos] = -(i + 1)
    return model.cls(coeffs)


def is_effective(
    model: SurfaceModel,
    collisions: CollisionConfig | None,
    d: LatticeClass,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> EffectivityResult:
    """Decide membership in the cone spanned by the configured generators."""
    collisions = collisions or CollisionConfig()
    gens = list(model.effective_generators) + list(collisions.induced_curves(model))
    ample = _budget_class(model)
    weights = [model.pair(ample, g) for g in gens]
    if any(w < 1 for w in weights):
        raise AdesurfError("internal: budget class does not dominate a generator")

    budget = model.pair(ample, d)
    if d.is_zero():
        return EffectivityResult(EFFECTIVE, certificate=(), nodes_used=1)
    if budget < 0:
        return EffectivityResult(NOT_EFFECTIVE, nodes_used=1)

    nodes = 0
    memo: dict[tuple[int, tuple[int, ...]], bool] = {}
    choice: dict[tuple[int, tuple[int, ...]], int] = {}

    def search(k: int, remaining: LatticeClass, budget_left: int) -> bool:
        nonlocal nodes
        if remaining.is_zero():
            return True
        if k == len(gens) or budget_left <= 0:
            return False
        key = (k, remaining.coeffs)
        if key in memo:
            return memo[key]
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExhausted
        w = weights[k]
        found = False
        for mult in range(budget_left // w, -1, -1):
            if search(k + 1, remaining - mult * gens[k], budget_left - mult * w):
                choice[key] = mult
                found = True
                break
        memo[key] = found
        return found

    try:
        ok = search(0, d, budget)
    except _BudgetExhausted:
        return EffectivityResult(INDETERMINATE, nodes_used=nodes)
    if not ok:
        return EffectivityResult(NOT_EFFECTIVE, nodes_used=nodes)
    cert = []
    remaining = d
    for k, g in enumerate(gens):
        if remaining.is_zero():
            break
        mult = choice[(k, remaining.coeffs)]
        if mult:
            cert.append((g, mult))
            remaining = remaining - mult * g
    if not remaining.is_zero():
        raise AdesurfError("internal: certificate reconstruction failed")
    return EffectivityResult(EFFECTIVE, certificate=tuple(cert), nodes_used=nodes)


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class ExtProfile:
    ext0: int
    ext1: int
    ext2: int
    index: int
    certificate: tuple[tuple[LatticeClass, int], ...] | None = None

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.ext0, self.ext1, self.ext2, self.index)


def ext_profile(
    model: SurfaceModel,
    collisions: CollisionConfig | None,
    l1: LatticeClass,
    l2: LatticeClass,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ExtProfile:
    """Ext groups between O(l1) and O(l2) in the degeneration regime.

    Ext^2 vanishes on a rational surface; the index is deformation
    invariant and equals chi(O(l2 - l1)); h^0 of the difference is 0 or 1
    and is decided by the effectivity certificate.  Raises
    IndeterminateEffectivityError when the search gave up.
    """
    diff = l2 - l1
    index = euler_char(model, diff)
    eff = is_effective(model, collisions, diff, node_budget=node_budget)
    if eff.status == INDETERMINATE:
        raise IndeterminateEffectivityError(
            "ext profile indeterminate: effectivity search exceeded its budget"
        )
    ext0 = 1 if eff.status == EFFECTIVE else 0
    ext2 = 0
    ext1 = ext0 + ext2 - index
    if ext1 < 0:
        raise AdesurfError(
            f"negative Ext^1 = {ext1}: classes ({l1.coeffs}, {l2.coeffs}) "
            "are outside the supported degeneration regime"
        )
    return ExtProfile(ext0, ext1, ext2, index, certificate=eff.certificate)
