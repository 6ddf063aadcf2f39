"""Gale transforms and (almost-)neighborliness, decided on both sides.

Primal predicates work with supporting hyperplanes of the points, dual ones
with halfspaces of the Gale vectors.  They must always agree, which makes
each side an oracle for the other.

Neighborliness here allows any face, the whole hull included; almost
neighborliness asks for a *proper* face, i.e. a supporting hyperplane that
leaves at least one point strictly on its negative side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any

from .configuration import PointConfiguration
from .exactlp import (
    LinearSystem,
    Separation,
    Vector,
    dot,
    kernel_basis,
    proper_supporting_functional,
    rank,
    solve_feasibility,
    supporting_functional,
)

__all__ = [
    "GaleTransform",
    "NeighborlinessCertificate",
    "Violation",
    "ExhaustivePass",
    "NotSpanning",
    "transform",
    "is_j_neighborly_primal",
    "is_j_neighborly_dual",
    "is_j_almost_neighborly_primal",
    "is_j_almost_neighborly_dual",
    "validate_dual_witness",
]


class NotSpanning(ValueError):
    def __init__(self, dim: int, found: int):
        self.dim = dim
        self.found = found
        super().__init__(f"points span an affine {found}-space, not the ambient {dim}-space")


@dataclass(frozen=True)
class GaleTransform:
    source: PointConfiguration
    vectors: tuple[Vector, ...]
    dim: int

    @property
    def isomorphism(self) -> bool:
        """n = d + 1: every Gale vector lives in 0-space."""
        return self.dim == 0

    def __len__(self):
        return len(self.vectors)


@dataclass(frozen=True)
class Violation:
    """A subset breaking the property.

    Primal witnesses carry the LP alternative (a ``Combination``).  Dual
    witnesses carry a Gale-space functional ``u``: for neighborliness it is
    nonzero with at most ``level`` strictly positive values on ``M``; for
    almost neighborliness it is at most ``-1`` on every vector outside the
    subset.
    """

    subset: tuple[int, ...]
    evidence: Any


@dataclass(frozen=True)
class ExhaustivePass:
    checked: int
    functionals: tuple[tuple[tuple[int, ...], Separation], ...] = ()


@dataclass(frozen=True)
class NeighborlinessCertificate:
    kind: str  # "neighborly" or "almost"
    level: int
    verdict: bool
    witness: Violation | ExhaustivePass
    method: str

    def __bool__(self):
        return self.verdict


def transform(s: PointConfiguration) -> GaleTransform:
    """Canonical Gale transform: rows of the RREF kernel basis of ``[points; 1]``."""
    found = s.affine_dim()
    if found != s.dim:
        raise NotSpanning(s.dim, found)
    n, d = s.n, s.dim
    lifted = [[p[t] for p in s.points] for t in range(d)]
    lifted.append([Fraction(1)] * n)
    basis = kernel_basis(lifted, n)
    vectors = tuple(tuple(b[i] for b in basis) for i in range(n))
    return GaleTransform(s, vectors, n - d - 1)


def _check_level(j: int):
    if j < 0:
        raise ValueError(f"level must be nonnegative, got {j}")


def _primal(s: PointConfiguration, j: int, kind: str) -> NeighborlinessCertificate:
    _check_level(j)
    n = s.n
    pts = s.points
    found = []
    checked = 0
    for size in range(1, min(j, n) + 1):
        for A in combinations(range(n), size):
            on = [pts[a] for a in A]
            rest = [pts[r] for r in range(n) if r not in A]
            if kind == "neighborly":
                res = supporting_functional(on, rest)
            else:
                res = proper_supporting_functional(on, rest)
            checked += 1
            if not isinstance(res, Separation):
                return NeighborlinessCertificate(kind, j, False, Violation(A, res), "primal")
            found.append((A, res))
    return NeighborlinessCertificate(kind, j, True, ExhaustivePass(checked, tuple(found)), "primal")


def is_j_neighborly_primal(s: PointConfiguration, j: int) -> NeighborlinessCertificate:
    """Is every subset of at most ``j`` points the vertex set of a face?"""
    return _primal(s, j, "neighborly")


def is_j_almost_neighborly_primal(s: PointConfiguration, j: int) -> NeighborlinessCertificate:
    """Does every subset of at most ``j`` points lie in a common proper face?

    One LP per subset: ``f = c`` on the subset, ``f <= c`` elsewhere, and the
    total slack outside fixed to 1, which forces some point strictly below.
    """
    return _primal(s, j, "almost")


def _halfspace_system(m: int, strict: list[Vector], weak: list[Vector]) -> LinearSystem:
    # u with <-v, u> >= 1 on strict and <-v, u> >= 0 on weak
    ineqs = [(tuple(-x for x in v), Fraction(1)) for v in strict]
    ineqs += [(tuple(-x for x in v), Fraction(0)) for v in weak]
    return LinearSystem(m, (), tuple(ineqs))


def _as_gale(g) -> GaleTransform:
    return g if isinstance(g, GaleTransform) else transform(g)


def is_j_neighborly_dual(g: GaleTransform, j: int) -> NeighborlinessCertificate:
    """Does every open linear halfspace contain at least ``j + 1`` Gale vectors?"""
    _check_level(j)
    g = _as_gale(g)
    M, m, n = g.vectors, g.dim, len(g.vectors)
    checked = 0
    for C in combinations(range(n), min(j, n)):
        rest = [M[t] for t in range(n) if t not in C]
        checked += 1
        if m > 0 and (not rest or rank(rest) < m):
            u = kernel_basis(rest, m)[0] if rest else tuple(Fraction(int(t == 0)) for t in range(m))
            return NeighborlinessCertificate("neighborly", j, False, Violation(C, u), "dual")
        for idx, m0 in enumerate(rest):
            others = rest[:idx] + rest[idx + 1 :]
            res = solve_feasibility(_halfspace_system(m, [m0], others))
            if res.feasible:
                return NeighborlinessCertificate("neighborly", j, False, Violation(C, res.witness), "dual")
    return NeighborlinessCertificate("neighborly", j, True, ExhaustivePass(checked), "dual")


def is_j_almost_neighborly_dual(g: GaleTransform, j: int) -> NeighborlinessCertificate:
    """Does every closed linear halfspace contain at least ``j + 1`` Gale vectors?"""
    _check_level(j)
    g = _as_gale(g)
    M, m, n = g.vectors, g.dim, len(g.vectors)
    checked = 0
    for C in combinations(range(n), min(j, n)):
        rest = [M[t] for t in range(n) if t not in C]
        checked += 1
        res = solve_feasibility(_halfspace_system(m, rest, []))
        if res.feasible:
            return NeighborlinessCertificate("almost", j, False, Violation(C, res.witness), "dual")
    return NeighborlinessCertificate("almost", j, True, ExhaustivePass(checked), "dual")


def validate_dual_witness(g: GaleTransform, cert: NeighborlinessCertificate) -> bool:
    """Re-check a dual violation by substitution alone."""
    if cert.verdict or cert.method != "dual":
        raise ValueError("only dual violations carry a Gale functional")
    C = set(cert.witness.subset)
    u = cert.witness.evidence
    values = [dot(u, v) for v in g.vectors]
    if cert.kind == "neighborly":
        if not any(u):
            return False
        return sum(1 for x in values if x > 0) <= cert.level and all(
            x <= 0 for t, x in enumerate(values) if t not in C
        )
    return all(x <= -1 for t, x in enumerate(values) if t not in C)
