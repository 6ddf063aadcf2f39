"""Combinatorics of the hypersimplex.

Indices are 0-based throughout: the ground set is ``range(n)``.  A face is
named by the pair ``(I, J)`` of coordinates pinned to 1 and to 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .exactlp import Vector


@dataclass(frozen=True)
class Hypersimplex:
    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"need 1 <= k <= n-1, got n={self.n}, k={self.k}")

    @property
    def degenerate(self) -> bool:
        """k in {1, n-1}: the polytope is an (n-1)-simplex."""
        return self.k == 1 or self.k == self.n - 1

    @property
    def dim(self) -> int:
        return self.n - 1


@dataclass(frozen=True, order=True)
class HypersimplexFace:
    """The face where coordinates in ``I`` equal 1 and those in ``J`` equal 0.

    Vertex faces use the full-support convention ``|I| = k``, ``|J| = n - k``
    and carry ``vertex=True``; all other faces satisfy ``|I| <= k-1`` and
    ``|J| <= n-k-1``.
    """

    n: int
    k: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    vertex: bool = field(default=False, compare=False)

    def __post_init__(self):
        I, J = tuple(sorted(self.I)), tuple(sorted(self.J))
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "vertex", len(I) == self.k and len(J) == self.n - self.k)
        sI, sJ = set(I), set(J)
        if len(sI) != len(I) or len(sJ) != len(J):
            raise ValueError("repeated index in face")
        if sI & sJ:
            raise ValueError(f"I and J intersect: {sorted(sI & sJ)}")
        if any(not 0 <= j < self.n for j in I + J):
            raise ValueError("face index out of range")
        if not self.vertex and (len(I) > self.k - 1 or len(J) > self.n - self.k - 1):
            raise ValueError(
                f"(I, J) = ({I}, {J}) is not a face of Delta({self.n},{self.k}): "
                f"need |I| <= {self.k - 1} and |J| <= {self.n - self.k - 1}"
            )

    @property
    def dim(self) -> int:
        if self.vertex:
            return 0
        return self.n - 1 - len(self.I) - len(self.J)

    @property
    def free(self) -> tuple[int, ...]:
        pinned = set(self.I) | set(self.J)
        return tuple(j for j in range(self.n) if j not in pinned)

    def subsets(self) -> list[tuple[int, ...]]:
        """The k-subsets whose indicator vectors are the vertices of the face."""
        need = self.k - len(self.I)
        out = []
        for extra in combinations(self.free, need):
            out.append(tuple(sorted(self.I + extra)))
        out.sort()
        return out

    def complement(self) -> "HypersimplexFace":
        """The matching face of the hypersimplex at level n - k."""
        return HypersimplexFace(self.n, self.n - self.k, self.J, self.I)


@dataclass(frozen=True)
class FacetNormalPair:
    index: int
    m: Vector  # outer normal of x_j >= 0
    n: Vector  # outer normal of x_j <= 1


@dataclass(frozen=True)
class FacetNormals:
    """Facet normals in the hyperplane orthogonal to the all-ones vector.

    For ``2 <= k <= n-2`` there are ``2n`` facets, paired in ``pairs``.  For
    ``k in {1, n-1}`` only one inequality per coordinate is facet-defining and
    the ``n`` normals are in ``simplex_normals``.
    """

    pairs: tuple[FacetNormalPair, ...]
    simplex_normals: tuple[Vector, ...] = ()

    @property
    def degenerate(self) -> bool:
        return bool(self.simplex_normals)


def _indicator(n: int, subset) -> tuple[int, ...]:
    s = set(subset)
    return tuple(1 if j in s else 0 for j in range(n))


def vertices(h: Hypersimplex) -> list[tuple[int, ...]]:
    """All 0/1 vectors with coordinate sum k, in lexicographic subset order."""
    return [_indicator(h.n, c) for c in combinations(range(h.n), h.k)]


def _upper_normal(n: int, j: int) -> Vector:
    # orthogonal projection of e_j onto the complement of the all-ones line
    return tuple(Fraction(n - 1, n) if t == j else Fraction(-1, n) for t in range(n))


def facet_normals(h: Hypersimplex) -> FacetNormals:
    n = h.n
    pairs = []
    for j in range(n):
        nj = _upper_normal(n, j)
        pairs.append(FacetNormalPair(j, tuple(-x for x in nj), nj))
    if h.k == 1:
        return FacetNormals(tuple(pairs), tuple(p.m for p in pairs))
    if h.k == n - 1:
        return FacetNormals(tuple(pairs), tuple(p.n for p in pairs))
    return FacetNormals(tuple(pairs))


def vertex_faces(h: Hypersimplex) -> list[HypersimplexFace]:
    out = []
    for I in combinations(range(h.n), h.k):
        J = tuple(j for j in range(h.n) if j not in I)
        out.append(HypersimplexFace(h.n, h.k, I, J))
    return out


def i_faces(h: Hypersimplex, i: int) -> list[HypersimplexFace]:
    """All i-dimensional faces, ordered by (|I|, I, J)."""
    n, k = h.n, h.k
    if not 0 <= i <= n - 1:
        raise ValueError(f"face dimension must lie in [0, {n - 1}], got {i}")
    if i == 0:
        return vertex_faces(h)
    pinned = n - i - 1
    out = []
    for a in range(0, min(k - 1, pinned) + 1):
        b = pinned - a
        if b > n - k - 1:
            continue
        for I in combinations(range(n), a):
            rest = [j for j in range(n) if j not in I]
            for J in combinations(rest, b):
                out.append(HypersimplexFace(n, k, I, J))
    return out


def count_i_faces(n: int, k: int, i: int) -> int:
    """Closed-form count matching :func:`i_faces`."""
    if i == 0:
        return comb(n, k)
    pinned = n - i - 1
    total = 0
    for a in range(0, min(k - 1, pinned) + 1):
        b = pinned - a
        if b <= n - k - 1:
            total += comb(n, a) * comb(n - a, b)
    return total


def face_vertices(h: Hypersimplex, f: HypersimplexFace) -> list[tuple[int, ...]]:
    if (f.n, f.k) != (h.n, h.k):
        raise ValueError(f"face belongs to Delta({f.n},{f.k}), not Delta({h.n},{h.k})")
    return [_indicator(h.n, s) for s in f.subsets()]
