"""Projections of the hypersimplex given by point configurations.

A configuration ``s`` of ``n`` points defines the linear map sending ``e_j``
to ``s_j / k``; it carries the vertex of the hypersimplex indexed by a
k-subset to the k-barycenter of that subset.  Face preservation is decided
two ways: directly, by a supporting-hyperplane LP on the barycenters, and
through the Gale transform of ``s`` (the projection-lemma criterion on the
images of the facet normals).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Sequence

from .configuration import DuplicatePoints, Hypergraph, PointConfiguration
from .exactlp import (
    Combination,
    Separation,
    Vector,
    affine_rank,
    kernel_basis,
    positive_dependence,
    rank,
    supporting_functional,
)
from .hypersimplex import Hypersimplex, HypersimplexFace, i_faces

__all__ = [
    "Certified",
    "PreservationReport",
    "DimensionDrop",
    "PositiveSpan",
    "Halfspace",
    "Coincidence",
    "OutsideCombination",
    "HypersimplexProjection",
    "k_barycenters",
    "is_vertex",
    "is_convex_embedding",
    "kset_polytope_vertices",
    "strictly_preserved_direct",
    "strictly_preserved_gale",
    "is_i_preserving",
    "complement_homothety",
    "convex_position",
]


@dataclass(frozen=True)
class Certified:
    """A boolean answer together with the evidence for it."""

    value: bool
    certificate: Any = None

    def __bool__(self):
        return self.value


@dataclass(frozen=True)
class DimensionDrop:
    face_dim: int
    image_dim: int


@dataclass(frozen=True)
class Coincidence:
    """Two k-subsets with the same barycenter."""

    first: tuple[int, ...]
    second: tuple[int, ...]
    point: Vector


@dataclass(frozen=True)
class OutsideCombination:
    """Witness that a face is not preserved.

    ``outside`` holds convex weights on k-subsets outside the face and
    ``face`` affine coefficients (summing to 1) on subsets of the face; the
    two weighted sums of barycenters are the same point.
    """

    face: tuple[tuple[tuple[int, ...], Fraction], ...]
    outside: tuple[tuple[tuple[int, ...], Fraction], ...]


@dataclass(frozen=True)
class PositiveSpan:
    """``sum coefficients_j * vectors_j = 0`` with all coefficients >= 1."""

    vectors: tuple[Vector, ...]
    coefficients: tuple[Fraction, ...]


@dataclass(frozen=True)
class Halfspace:
    """Nonzero ``u`` with ``<u, v> >= 0`` for every listed vector."""

    vectors: tuple[Vector, ...]
    u: Vector


@dataclass(frozen=True)
class PreservationReport:
    face: HypersimplexFace
    preserved: bool | None
    strictly_preserved: bool
    certificate: Any
    method: str
    image_dim: int | None = None

    def __bool__(self):
        return self.strictly_preserved


def k_barycenters(s: PointConfiguration, k: int) -> list[tuple[tuple[int, ...], Vector]]:
    if not 1 <= k <= s.n:
        raise ValueError(f"need 1 <= k <= {s.n}, got {k}")
    out = []
    for c in combinations(range(s.n), k):
        pt = tuple(sum((s.points[j][t] for j in c), Fraction(0)) / k for t in range(s.dim))
        out.append((c, pt))
    return out


def is_vertex(points: Sequence[Vector], p: int) -> Certified:
    """Is ``points[p]`` a vertex of the convex hull of ``points``?

    True comes with a functional ``f`` and offset ``c = f(points[p])`` such
    that ``f(q) <= c - 1`` for every other point; false with convex weights on
    the other points reproducing ``points[p]``.
    """
    if not 0 <= p < len(points):
        raise IndexError(p)
    others = [q for j, q in enumerate(points) if j != p]
    idx = [j for j in range(len(points)) if j != p]
    res = supporting_functional([points[p]], others)
    if isinstance(res, Separation):
        return Certified(True, res)
    return Certified(False, {j: w for j, w in zip(idx, res.off) if w})


def convex_position(points: Sequence[Vector]) -> bool:
    if len(set(points)) != len(points):
        return False
    return all(is_vertex(points, p) for p in range(len(points)))


def is_convex_embedding(s: PointConfiguration, h: Hypergraph) -> Certified:
    """Are the barycenters of the edges of ``h`` distinct and in convex position?

    On success the certificate maps each edge to its supporting functional.
    """
    if s.n != h.n:
        raise ValueError(f"hypergraph has {h.n} vertices, configuration has {s.n} points")
    k = h.k
    bary = {}
    for e in h.edges:
        bary[e] = tuple(sum((s.points[j][t] for j in e), Fraction(0)) / k for t in range(s.dim))
    seen: dict[Vector, tuple[int, ...]] = {}
    for e, p in bary.items():
        if p in seen:
            return Certified(False, Coincidence(seen[p], e, p))
        seen[p] = e
    edges = list(h.edges)
    pts = [bary[e] for e in edges]
    certs = {}
    for idx, e in enumerate(edges):
        r = is_vertex(pts, idx)
        if not r:
            combo = {edges[j]: w for j, w in r.certificate.items()}
            return Certified(False, (e, combo))
        certs[e] = r.certificate
    return Certified(True, certs)


def kset_polytope_vertices(s: PointConfiguration, k: int) -> list[tuple[tuple[int, ...], Vector]]:
    """Vertices of the convex hull of all k-barycenters, with their k-subsets.

    A barycenter shared by two k-subsets is never a vertex.
    """
    bary = k_barycenters(s, k)
    groups: dict[Vector, list[tuple[int, ...]]] = {}
    for c, p in bary:
        groups.setdefault(p, []).append(c)
    distinct = list(groups)
    out = []
    for idx, p in enumerate(distinct):
        if len(groups[p]) > 1:
            continue
        if is_vertex(distinct, idx):
            out.append((groups[p][0], p))
    out.sort()
    return out


def complement_homothety(s: PointConfiguration, k: int):
    """Center and ratio of the homothety taking k-barycenters to the
    barycenters of the complementary (n-k)-subsets.

    The center is the barycenter ``b`` of all points and the ratio is
    ``-k/(n-k)``; the identity ``c = b + ratio (a - b)`` is verified exactly for
    every k-subset before returning.
    """
    n = s.n
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    b = s.barycenter()
    ratio = Fraction(-k, n - k)
    low = dict(k_barycenters(s, k))
    high = dict(k_barycenters(s, n - k))
    for c, a in low.items():
        comp = tuple(j for j in range(n) if j not in c)
        image = tuple(bt + ratio * (at - bt) for at, bt in zip(a, b))
        if image != high[comp]:
            raise AssertionError(f"homothety fails on {c}")
    return b, ratio


class HypersimplexProjection:
    """The projection of the (n, k)-hypersimplex defined by ``s``.

    Barycenters and the Gale transform are computed once and shared by all
    face checks.
    """

    def __init__(self, s: PointConfiguration, k: int):
        if not 1 <= k <= s.n - 1:
            raise ValueError(f"need 1 <= k <= n-1 = {s.n - 1}, got {k}")
        self.s = s
        self.k = k
        self.n = s.n
        self.hypersimplex = Hypersimplex(s.n, k)
        self._bary = dict(k_barycenters(s, k))
        self._gale = None

    def barycenter(self, subset) -> Vector:
        return self._bary[tuple(subset)]

    @property
    def gale(self):
        if self._gale is None:
            from .gale import transform

            self._gale = transform(self.s)
        return self._gale

    def _check_face(self, f: HypersimplexFace):
        if (f.n, f.k) != (self.n, self.k):
            raise ValueError(f"face of Delta({f.n},{f.k}) given for Delta({self.n},{self.k})")

    def direct(self, f: HypersimplexFace) -> PreservationReport:
        self._check_face(f)
        inside = f.subsets()
        inset = set(inside)
        on = [self._bary[c] for c in inside]
        off_keys = [c for c in self._bary if c not in inset]
        off = [self._bary[c] for c in off_keys]
        res = supporting_functional(on, off)
        image_dim = affine_rank(on)
        if isinstance(res, Combination):
            cert = OutsideCombination(
                tuple((c, -w) for c, w in zip(inside, res.on) if w),
                tuple((c, w) for c, w in zip(off_keys, res.off) if w),
            )
            return PreservationReport(f, False, False, cert, "direct", image_dim)
        strict = image_dim == f.dim
        cert = res if strict else (res, DimensionDrop(f.dim, image_dim))
        return PreservationReport(f, True, strict, cert, "direct", image_dim)

    def gale_vectors(self, f: HypersimplexFace) -> list[Vector]:
        """Images of the normals of the facets containing ``f``.

        ``tau(m_j)`` is the j-th Gale vector and ``tau(n_j) = -tau(m_j)``;
        facets ``x_j = 1`` (j in I) contribute ``tau(n_j)`` and facets
        ``x_j = 0`` (j in J) contribute ``tau(m_j)``.
        """
        M = self.gale.vectors
        return [tuple(-x for x in M[j]) for j in f.I] + [M[j] for j in f.J]

    def by_gale(self, f: HypersimplexFace) -> PreservationReport:
        self._check_face(f)
        if self.hypersimplex.degenerate:
            return self.direct(f)
        g = self.gale
        vs = self.gale_vectors(f)
        m = g.dim
        if not vs:
            # the whole polytope survives only when the map is an isomorphism
            if m == 0:
                return PreservationReport(f, True, True, PositiveSpan((), ()), "gale")
            u = tuple(Fraction(int(t == 0)) for t in range(m))
            return PreservationReport(f, None, False, Halfspace((), u), "gale")
        if rank(vs) < m:
            u = kernel_basis(vs, m)[0]
            return PreservationReport(f, None, False, Halfspace(tuple(vs), u), "gale")
        res = positive_dependence(vs, m)
        if res.feasible:
            return PreservationReport(f, True, True, PositiveSpan(tuple(vs), res.witness), "gale")
        u = tuple(-x for x in res.certificate[:m])
        return PreservationReport(f, None, False, Halfspace(tuple(vs), u), "gale")

    def report(self, f: HypersimplexFace, method: str = "direct") -> PreservationReport:
        if method == "direct":
            return self.direct(f)
        if method == "gale":
            return self.by_gale(f)
        raise ValueError(f"unknown method {method!r}")

    def faces_up_to(self, i: int):
        for dim in range(0, i + 1):
            yield from i_faces(self.hypersimplex, dim)

    def is_i_preserving(self, i: int, method: str = "direct") -> Certified:
        """Strict preservation of every face of dimension at most ``i``.

        Stops at the first failing face, in canonical face order.
        """
        if not 0 <= i <= self.n - 1:
            raise ValueError(f"need 0 <= i <= {self.n - 1}")
        checked = 0
        for f in self.faces_up_to(i):
            r = self.report(f, method)
            checked += 1
            if not r.strictly_preserved:
                return Certified(False, r)
        return Certified(True, checked)


def strictly_preserved_direct(s: PointConfiguration, k: int, f: HypersimplexFace) -> PreservationReport:
    """Conditions (i) and (ii) by one LP, condition (iii) by a rank check.

    The face is preserved iff some affine functional is constant ``c`` on the
    barycenters of its vertices and at most ``c - 1`` on every other
    k-barycenter; checking (ii) on vertices suffices because the preimage of
    a face of the image is itself a face of the hypersimplex.  Since every
    face is again a hypersimplex, the image is combinatorially isomorphic to
    the face exactly when the map is injective on its affine span, i.e. when
    the dimensions agree.
    """
    return HypersimplexProjection(s, k).direct(f)


def strictly_preserved_gale(s: PointConfiguration, k: int, f: HypersimplexFace) -> PreservationReport:
    """Positive spanning test on the Gale vectors of the facets through ``f``.

    Needs ``s`` to affinely span its space; for ``k in {1, n-1}`` the
    hypersimplex is a simplex and the direct check is used instead.
    """
    return HypersimplexProjection(s, k).by_gale(f)


def is_i_preserving(s: PointConfiguration, k: int, i: int, method: str = "direct") -> Certified:
    return HypersimplexProjection(s, k).is_i_preserving(i, method)


def count_barycenters(n: int, k: int) -> int:
    return comb(n, k)


__all__ += ["DuplicatePoints", "count_barycenters"]
