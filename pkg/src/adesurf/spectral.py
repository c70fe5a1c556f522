"""Spectral covers of a one-parameter base: branch loci and family bookkeeping.

A cover is a monic polynomial F(t, u) = u^n + c_{n-1}(t) u^{n-1} + ... +
c_0(t) with exact rational coefficient polynomials.  Its discriminant is
the resultant of F and dF/du with respect to u, computed exactly; a zero
discriminant means the cover is globally non-reduced and is rejected.
Branch points are reported as exact rational roots, with the nonrational
part of the discriminant listed as irreducible factors rather than as
floating approximations.

The conic-bundle family of the D-type construction is tracked through
sen_delta: a quadric y^2 = b2 u^2 + 2 b4 uv + b6 v^2 degenerates over
Delta = b2*b6 - b4^2, and with the standard fiber-degree data (the
anticanonical degree 2 of a P^1 fiber and degree k for the twisting
bundle) the induced cover has degree 4k + 8 over the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import frac_matrix, rank
from .errors import AdesurfError, DegreeDataError, NonReducedCoverError
from .lattice import KIND_HIRZEBRUCH, LatticeClass, SurfaceModel
from .qpoly import (
    QPoly,
    irreducible_factors,
    rational_roots,
    squarefree_decomposition,
    u_degree,
    u_derivative,
    u_resultant_prs,
    u_resultant_sylvester,
)


@dataclass(frozen=True)
class CoverPoly:
    """Monic degree-n cover of the base: u^n + sum_k coeffs[k](t) u^k."""

    n: int
    coeffs: tuple[QPoly, ...]

    def __post_init__(self):
        if self.n < 1:
            raise AdesurfError("cover degree must be at least 1")
        if len(self.coeffs) != self.n:
            raise AdesurfError(
                f"need {self.n} coefficient polynomials below the monic leading term, "
                f"got {len(self.coeffs)}"
            )

    def as_upoly(self) -> list[QPoly]:
        return list(self.coeffs) + [QPoly.one()]

    def specialize(self, t0) -> QPoly:
        """F(t0, u) as a monic polynomial in u over Q."""
        vals = [c(t0) for c in self.coeffs] + [Fraction(1)]
        return QPoly(tuple(vals))


def discriminant(cover: CoverPoly, method: str = "sylvester") -> QPoly:
    """Resultant of (F, dF/du) with respect to u; zero is a non-reduced cover."""
    f = cover.as_upoly()
    df = u_derivative(f)
    if u_degree(df) < 0:
        raise NonReducedCoverError("cover has constant fiber polynomial")
    if method == "sylvester":
        res = u_resultant_sylvester(f, df)
    elif method == "prs":
        res = u_resultant_prs(f, df)
    else:
        raise AdesurfError(f"unknown resultant method {method!r}")
    if res.is_zero():
        raise NonReducedCoverError("discriminant vanishes identically: non-reduced cover")
    return res


def fiber_profile(cover: CoverPoly, t0) -> tuple[int, ...]:
    """Root-multiplicity partition of F(t0, u), descending.

    Multiplicity structure over the complex numbers is read off from the
    squarefree decomposition over Q: a squarefree factor of degree d at
    multiplicity m contributes d parts equal to m.
    """
    p = cover.specialize(t0)
    parts: list[int] = []
    for g, mult in squarefree_decomposition(p):
        parts.extend([mult] * g.degree)
    if sum(parts) != p.degree:
        raise AdesurfError("squarefree decomposition lost degree; arithmetic bug")
    return tuple(sorted(parts, reverse=True))


@dataclass(frozen=True)
class BranchReport:
    discriminant: QPoly
    branch_points: tuple[Fraction, ...]
    branch_multiplicities: tuple[int, ...]
    ramification_profile: tuple[tuple[Fraction, tuple[int, ...]], ...]
    nonrational_factors: tuple[QPoly, ...]


def branch_report(cover: CoverPoly) -> BranchReport:
    """Discriminant, exact rational branch points, and ramification profiles."""
    disc = discriminant(cover)
    roots = rational_roots(disc)
    points = tuple(r for r, _ in roots)
    mults = tuple(m for _, m in roots)
    profile = tuple((r, fiber_profile(cover, r)) for r, _ in roots)
    # strip rational linear factors, factor what is left
    residual = disc
    for r, m in roots:
        lin = QPoly((-r, Fraction(1)))
        for _ in range(m):
            residual = residual.exact_div(lin)
    nonrational = tuple(f for f in irreducible_factors(residual) if f.degree >= 1)
    return BranchReport(
        discriminant=disc,
        branch_points=points,
        branch_multiplicities=mults,
        ramification_profile=profile,
        nonrational_factors=nonrational,
    )


@dataclass(frozen=True)
class SenFamily:
    b2: QPoly
    b4: QPoly
    b6: QPoly
    delta: QPoly
    fiber_degree_delta: int
    cover_degree: int
    degenerate: bool


def sen_delta(b2: QPoly, b4: QPoly, b6: QPoly, degree_data) -> SenFamily:
    """Delta = b2*b6 - b4^2 for the conic family, with degree bookkeeping.

    `degree_data` maps the names "d_K" and "d_L" to the fiber degrees of
    the inverse canonical bundle of the P^1-fibration (2 for an honest
    P^1 fiber) and of the inverse twisting bundle.  The b coefficients
    then have fiber degrees (2 d_K, d_K + d_L, 2 d_L); explicit per-
    coefficient degrees may be supplied instead and are checked against
    that pattern.
    """
    if "d_K" in degree_data or "d_L" in degree_data:
        d_k = int(degree_data.get("d_K", 2))
        d_l = int(degree_data["d_L"])
    else:
        try:
            deg2, deg4, deg6 = (int(degree_data[k]) for k in ("b2", "b4", "b6"))
        except KeyError as exc:
            raise DegreeDataError(f"degree data missing field {exc}") from None
        if deg2 % 2 or deg6 % 2 or 2 * deg4 != deg2 + deg6:
            raise DegreeDataError(
                f"fiber degrees ({deg2}, {deg4}, {deg6}) do not fit the pattern "
                "(2 d_K, d_K + d_L, 2 d_L)"
            )
        d_k, d_l = deg2 // 2, deg6 // 2
    if d_k < 0 or d_l < 0:
        raise DegreeDataError("fiber degrees must be non-negative")
    delta = b2 * b6 - b4 * b4
    fiber_degree = 2 * d_k + 2 * d_l
    # the double cover doubles the fiber degree of Delta
    cover_degree = 2 * fiber_degree
    return SenFamily(
        b2=b2,
        b4=b4,
        b6=b6,
        delta=delta,
        fiber_degree_delta=fiber_degree,
        cover_degree=cover_degree,
        degenerate=delta.is_zero(),
    )


@dataclass(frozen=True)
class FiberPicardDecomposition:
    """Root block plus the boundary/section/fiber block of a surface fiber."""

    root_block: tuple[LatticeClass, ...]
    boundary: LatticeClass
    section: LatticeClass
    fiber: LatticeClass

    @property
    def root_rank(self) -> int:
        return len(self.root_block)


def fiber_picard(model: SurfaceModel, n: int | None = None) -> FiberPicardDecomposition:
    """The non-mixing decomposition of a Hirzebruch fiber's lattice.

    Verifies against the Gram matrix that the root block is orthogonal to
    the boundary, section and fiber classes, and that all blocks together
    span the lattice over Q.
    """
    if model.kind != KIND_HIRZEBRUCH:
        raise AdesurfError("fiber decomposition is defined for Hirzebruch models")
    if n is not None and n != model.n:
        raise AdesurfError(f"model has n = {model.n}, caller claimed {n}")
    n = model.n
    simple = tuple(
        model.exceptional(i) - model.exceptional(i + 1) for i in range(1, n)
    )
    e, b, f = model.E, model.base_class, model.fiber_class
    for alpha in simple:
        for other in (e, b, f):
            if model.pair(alpha, other) != 0:
                raise AdesurfError("root block fails orthogonality: Gram matrix corrupt")
    span = [list(map(Fraction, c.coeffs)) for c in simple + (e, b, f)]
    if rank(frac_matrix(span)) != model.rank:
        raise AdesurfError("decomposition does not span the lattice")
    return FiberPicardDecomposition(root_block=simple, boundary=e, section=b, fiber=f)
