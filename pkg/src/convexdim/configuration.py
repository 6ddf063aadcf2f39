"""Point configurations and uniform hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exactlp import Vector, affine_rank, to_fraction


class DuplicatePoints(ValueError):
    """Two labels were mapped to the same point; embeddings must be injective."""

    def __init__(self, i: int, j: int, point):
        self.pair = (i, j)
        self.point = point
        super().__init__(f"points {i} and {j} coincide at {_fmt(point)}")


def _fmt(p) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


@dataclass(frozen=True)
class PointConfiguration:
    """An ordered list of distinct labelled points in affine ``dim``-space."""

    dim: int
    points: tuple[Vector, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not self.points:
            raise ValueError("a configuration needs at least one point")
        pts = tuple(tuple(to_fraction(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for idx, p in enumerate(pts):
            if len(p) != self.dim:
                raise ValueError(f"point {idx} has {len(p)} coordinates, expected {self.dim}")
        seen: dict[Vector, int] = {}
        for idx, p in enumerate(pts):
            if p in seen:
                raise DuplicatePoints(seen[p], idx, p)
            seen[p] = idx
        if self.labels is not None:
            if len(self.labels) != len(pts):
                raise ValueError("one label per point required")
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], dim: int | None = None, labels=None):
        rows = [tuple(to_fraction(x) for x in r) for r in rows]
        if dim is None:
            if not rows:
                raise ValueError("a configuration needs at least one point")
            dim = len(rows[0])
        return cls(dim, tuple(rows), labels)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i) -> Vector:
        return self.points[i]

    def affine_dim(self) -> int:
        return affine_rank(self.points)

    def is_spanning(self) -> bool:
        return self.affine_dim() == self.dim

    def barycenter(self) -> Vector:
        n = self.n
        return tuple(sum((p[t] for p in self.points), Fraction(0)) / n for t in range(self.dim))

    def map(self, f) -> "PointConfiguration":
        rows = [tuple(f(p)) for p in self.points]
        dim = len(rows[0])
        return PointConfiguration(dim, tuple(rows), self.labels)

    def is_general_position(self) -> bool:
        """No d+1 of the points lie on a common hyperplane (for n >= d+1)."""
        d = self.dim
        size = min(d + 1, self.n)
        return all(
            affine_rank([self.points[i] for i in c]) == size - 1
            for c in combinations(range(self.n), size)
        )


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = []
        for e in self.edges:
            e = tuple(sorted(e))
            if len(e) != self.k or len(set(e)) != self.k:
                raise ValueError(f"edge {e} does not have {self.k} distinct vertices")
            if any(not 0 <= v < self.n for v in e):
                raise ValueError(f"edge {e} leaves the vertex range [0, {self.n})")
            norm.append(e)
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate edge")
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def complete(cls, n: int, k: int) -> "Hypergraph":
        return cls(n, k, tuple(combinations(range(n), k)))

    def __len__(self):
        return len(self.edges)
