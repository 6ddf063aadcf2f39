"""Closed-form dimensions and the characterization of i-preserving projections.

``d_skeleton(n, k, i)`` is the least dimension onto which the (n, k)
hypersimplex projects with its i-skeleton strictly preserved.  In
``d_strong`` the vertex images must also be in convex position.
``cd_complete`` is the convex dimension of the complete k-uniform
hypergraph.  ``characterize`` decides, for a concrete point
configuration, whether its projection is i-preserving by inspecting the
(almost) neighborliness of the configuration instead of the faces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .configuration import PointConfiguration
from .gale import (
    NeighborlinessCertificate,
    is_j_almost_neighborly_dual,
    is_j_almost_neighborly_primal,
    is_j_neighborly_dual,
    is_j_neighborly_primal,
    transform,
)

__all__ = [
    "ClosedFormInputs",
    "Clause",
    "CharacterizationVerdict",
    "exceptional_set_A",
    "exceptional_set_C",
    "d_skeleton",
    "d_strong",
    "cd_complete",
    "characterize",
]


@dataclass(frozen=True)
class ClosedFormInputs:
    n: int
    k: int
    i: int = 0

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"need 1 <= k <= n-1, got n={self.n}, k={self.k}")
        if not 0 <= self.i <= self.n - 1:
            raise ValueError(f"need 0 <= i <= n-1, got n={self.n}, i={self.i}")


def _clip(n: int, values) -> frozenset[int]:
    return frozenset(v for v in values if 1 <= v <= n - 1)


def exceptional_set_A(n: int, i: int) -> frozenset[int]:
    if n < 2:
        raise ValueError("need n >= 2")
    return _clip(n, list(range(1, i + 2)) + list(range(n - i - 1, n)))


def exceptional_set_C(n: int, i: int) -> frozenset[int]:
    if n < 2:
        raise ValueError("need n >= 2")
    return _clip(n, list(range(1, i + 3)) + list(range(n - i - 2, n)))


def _four_cases(n: int, k: int, i: int, exceptional: frozenset[int]) -> int:
    ClosedFormInputs(n, k, i)
    if n >= 2 * k + 2 * i + 2:
        return 2 * k + 2 * i
    if n <= 2 * k - 2 * i - 2:
        return 2 * n - 2 * k + 2 * i
    # middle band 2k-2i-1 <= n <= 2k+2i+1
    return n - 1 if k in exceptional else n - 2


def d_skeleton(n: int, k: int, i: int) -> int:
    return _four_cases(n, k, i, exceptional_set_A(n, i))


def d_strong(n: int, k: int, i: int) -> int:
    """Like :func:`d_skeleton`, with the vertex images also in convex position."""
    return _four_cases(n, k, i, exceptional_set_C(n, i))


def cd_complete(n: int, k: int) -> int:
    """Convex dimension of the complete k-uniform hypergraph on n vertices."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    if k == 1 or k == n - 1:
        return 1 if n == 2 else 2
    if n >= 2 * k + 2:
        return 2 * k
    if n <= 2 * k - 2:
        return 2 * n - 2 * k
    return n - 2


class Clause(enum.Enum):
    NEIGHBORLY = "Neighborly"
    NOT_ALMOST_NEIGHBORLY = "NotAlmostNeighborly"
    ISOMORPHISM = "Isomorphism"
    NOT_PRESERVING = "NotPreserving"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CharacterizationVerdict:
    """``clause`` is the reported clause; ``holding`` lists every clause that
    applies (empty exactly when the projection is not i-preserving)."""

    clause: Clause
    k: int
    i: int
    certificate: Any
    holding: tuple[Clause, ...] = field(default=())
    checks: tuple[NeighborlinessCertificate, ...] = field(default=(), repr=False)

    @property
    def preserving(self) -> bool:
        return self.clause is not Clause.NOT_PRESERVING

    def __bool__(self):
        return self.preserving


def characterize(s: PointConfiguration, k: int, i: int, method: str = "dual") -> CharacterizationVerdict:
    """Decide i-preservation of the (n, k) hypersimplex projection given by ``s``.

    The projection is i-preserving iff the configuration is an affine
    isomorphism (n = d + 1), or is (k+i)-neighborly, or has n = d + 2 points
    and is not (k-i-1)-almost neighborly.  ``k`` is replaced by ``n - k``
    when it exceeds n/2, which changes neither side.  The isomorphism clause
    is reported first when several hold, then neighborliness.

    ``method`` picks the neighborliness tests: "dual" (Gale vectors) or
    "primal" (supporting hyperplanes).
    """
    n = s.n
    ClosedFormInputs(n, k, i)
    if method not in ("dual", "primal"):
        raise ValueError(f"unknown method {method!r}")
    if 2 * k > n:
        k = n - k
    g = transform(s)
    d = s.dim
    holding = []
    checks = []
    if g.isomorphism:
        holding.append(Clause.ISOMORPHISM)

    if method == "dual":
        neigh = is_j_neighborly_dual(g, k + i)
    else:
        neigh = is_j_neighborly_primal(s, k + i)
    checks.append(neigh)
    if neigh.verdict:
        holding.append(Clause.NEIGHBORLY)

    almost = None
    level = k - i - 1
    # every configuration is 0-almost neighborly, so the clause needs level >= 1
    if d == n - 2 and level >= 1:
        if method == "dual":
            almost = is_j_almost_neighborly_dual(g, level)
        else:
            almost = is_j_almost_neighborly_primal(s, level)
        checks.append(almost)
        if not almost.verdict:
            holding.append(Clause.NOT_ALMOST_NEIGHBORLY)

    if Clause.ISOMORPHISM in holding:
        return CharacterizationVerdict(Clause.ISOMORPHISM, k, i, g, tuple(holding), tuple(checks))
    if Clause.NEIGHBORLY in holding:
        return CharacterizationVerdict(Clause.NEIGHBORLY, k, i, neigh, tuple(holding), tuple(checks))
    if Clause.NOT_ALMOST_NEIGHBORLY in holding:
        return CharacterizationVerdict(Clause.NOT_ALMOST_NEIGHBORLY, k, i, almost, tuple(holding), tuple(checks))
    # no clause: the failed neighborliness check (and the almost check, if run) explain why
    return CharacterizationVerdict(Clause.NOT_PRESERVING, k, i, neigh, (), tuple(checks))
