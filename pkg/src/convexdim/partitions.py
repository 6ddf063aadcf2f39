"""Partitions of point sets by oriented hyperplanes, and k-set polytopes.

An (i,j)-partition of ``s`` is a pair (A, B) cut out by an oriented affine
hyperplane: A the points on it, B those strictly on its positive side.  The
sign vectors of such hyperplanes are the covectors of the lifted vector
configuration ``(p, 1)``.  Every covector is a composition of cocircuits,
so enumeration closes the cocircuits under composition and then certifies
each candidate with an exact LP witness.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import lcm

from .configuration import PointConfiguration
from .embedding import HypersimplexProjection, kset_polytope_vertices
from .exactlp import (
    LinearSystem,
    Vector,
    affine_rank,
    dot,
    kernel_basis,
    rank,
    solve_feasibility,
)
from .hypersimplex import HypersimplexFace, i_faces

__all__ = [
    "GuardExceeded",
    "IJPartition",
    "PartitionTable",
    "enumerate_partitions",
    "brute_force_partitions",
    "partition_table",
    "k_sets",
    "verify_vertex_bijection",
    "verify_face_correspondence",
    "verify_euler_relation",
    "euler_prediction",
    "hull_face_counts",
    "halfspace_subsets",
    "check_partition",
]

MAX_POINTS = 12


class GuardExceeded(ValueError):
    pass


@dataclass(frozen=True, order=True)
class IJPartition:
    """``A`` and ``B`` are index tuples; ``normal . x = offset`` is the hyperplane."""

    sort_key: tuple = None
    A: tuple[int, ...] = ()
    B: tuple[int, ...] = ()
    normal: Vector = ()
    offset: Fraction = Fraction(0)
    dimension: int = -1

    @property
    def i(self) -> int:
        return len(self.A)

    @property
    def j(self) -> int:
        return len(self.B)


def _make(A, B, normal, offset, dim) -> IJPartition:
    A, B = tuple(sorted(A)), tuple(sorted(B))
    return IJPartition((len(A), len(B), A, B), A, B, tuple(normal), offset, dim)


def check_partition(s: PointConfiguration, p: IJPartition) -> bool:
    """Validate the witness hyperplane of ``p`` by substitution."""
    if not any(p.normal):
        return False
    A, B = set(p.A), set(p.B)
    for t, q in enumerate(s.points):
        v = dot(p.normal, q) - p.offset
        if t in A:
            if v != 0:
                return False
        elif t in B:
            if v <= 0:
                return False
        elif v >= 0:
            return False
    return True


def _guard(s: PointConfiguration, limit: int):
    if s.n > limit:
        raise GuardExceeded(f"{s.n} points exceed the exhaustive limit of {limit}")


def _witness(s: PointConfiguration, signs) -> tuple[Vector, Fraction] | None:
    """Hyperplane realizing a sign vector (+1, 0, -1 per point), or None."""
    d = s.dim
    pts = s.points
    zero = [t for t, x in enumerate(signs) if x == 0]
    pos = [t for t, x in enumerate(signs) if x > 0]
    neg = [t for t, x in enumerate(signs) if x < 0]
    if d == 0:
        return None
    if not zero and (not pos or not neg):
        # every point on one side: a far-away hyperplane with normal e_1
        normal = tuple(Fraction(int(t == 0)) for t in range(d))
        first = [q[0] for q in pts]
        offset = min(first) - 1 if pos else max(first) + 1
        return normal, offset
    if not pos and not neg:
        # all points on a hyperplane: any normal orthogonal to their span
        diffs = [[x - y for x, y in zip(q, pts[0])] for q in pts[1:]]
        if diffs and rank(diffs) == d:
            return None
        normal = kernel_basis(diffs, d)[0] if diffs else tuple(Fraction(int(t == 0)) for t in range(d))
        return normal, dot(normal, pts[0])
    # (w, c) with w.p - c = 0 on zero, >= 1 on pos, <= -1 on neg; w != 0 is forced
    eqs = tuple((pts[t] + (Fraction(-1),), Fraction(0)) for t in zero)
    ineqs = tuple((pts[t] + (Fraction(-1),), Fraction(1)) for t in pos)
    ineqs += tuple((tuple(-x for x in pts[t]) + (Fraction(1),), Fraction(1)) for t in neg)
    res = solve_feasibility(LinearSystem(d + 1, eqs, ineqs))
    if not res.feasible:
        return None
    x = res.witness
    return tuple(x[:d]), x[d]


def _cocircuits(s: PointConfiguration) -> set[tuple[int, ...]]:
    lifted = [q + (Fraction(1),) for q in s.points]
    r = rank(lifted)
    out = set()
    if r <= 1:
        return out
    seen_kernels = set()
    for T in combinations(range(s.n), r - 1):
        rows = [lifted[t] for t in T]
        if rank(rows) != r - 1:
            continue
        for y in kernel_basis(rows, s.dim + 1):
            signs = tuple((dot(y, v) > 0) - (dot(y, v) < 0) for v in lifted)
            if any(signs):
                zero = frozenset(t for t, x in enumerate(signs) if x == 0)
                if zero in seen_kernels:
                    break
                seen_kernels.add(zero)
                out.add(signs)
                out.add(tuple(-x for x in signs))
                break
    return out


def _compose(x, y):
    return tuple(a if a else b for a, b in zip(x, y))


def _covectors(s: PointConfiguration) -> set[tuple[int, ...]]:
    cocirc = _cocircuits(s)
    zero = (0,) * s.n
    found = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for c in cocirc:
                z = _compose(x, c)
                if z not in found:
                    found.add(z)
                    nxt.append(z)
        frontier = nxt
    if not cocirc:
        # rank <= 1 (a single point): only the two constant sign vectors
        found |= {(1,) * s.n, (-1,) * s.n}
    return found


def _to_partition(s, signs) -> IJPartition | None:
    w = _witness(s, signs)
    if w is None:
        return None
    A = [t for t, x in enumerate(signs) if x == 0]
    B = [t for t, x in enumerate(signs) if x > 0]
    return _make(A, B, w[0], w[1], affine_rank([s.points[t] for t in A]))


def enumerate_partitions(s: PointConfiguration, limit: int = MAX_POINTS) -> list[IJPartition]:
    """All (A, B) pairs cut out by oriented hyperplanes, each with a witness.

    Sorted by (|A|, |B|, A, B).  Every witness is re-validated by
    substitution before it is returned.
    """
    _guard(s, limit)
    out = []
    for signs in _covectors(s):
        p = _to_partition(s, signs)
        if p is None:
            if any(signs):
                raise AssertionError(f"covector {signs} has no realizing hyperplane")
            continue
        if not check_partition(s, p):
            raise AssertionError(f"invalid witness for {p}")
        out.append(p)
    out.sort()
    return out


def brute_force_partitions(s: PointConfiguration, limit: int = 7) -> list[IJPartition]:
    """Independent oracle: one LP per sign vector in {+,0,-}^n."""
    _guard(s, limit)
    out = []
    for signs in product((1, 0, -1), repeat=s.n):
        p = _to_partition(s, signs)
        if p is not None:
            out.append(p)
    out.sort()
    return out


@dataclass(frozen=True)
class PartitionTable:
    n: int
    D: dict

    def __getitem__(self, ij) -> int:
        return self.D.get(ij, 0)

    def rows(self):
        return sorted(self.D.items())

    def to_csv(self) -> str:
        """Counts with rows ``i`` and columns ``j``; cells with i+j > n are blank."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i\\j"] + list(range(self.n + 1)))
        for i in range(self.n + 1):
            w.writerow([i] + [self[(i, j)] if i + j <= self.n else "" for j in range(self.n + 1)])
        return buf.getvalue()


def partition_table(s: PointConfiguration, parts: list[IJPartition] | None = None) -> PartitionTable:
    if parts is None:
        parts = enumerate_partitions(s)
    return PartitionTable(s.n, dict(Counter((p.i, p.j) for p in parts)))


def k_sets(s: PointConfiguration, k: int, parts: list[IJPartition] | None = None) -> list[tuple[int, ...]]:
    if parts is None:
        parts = enumerate_partitions(s)
    return sorted(p.B for p in parts if p.i == 0 and p.j == k)


def verify_vertex_bijection(s: PointConfiguration, k: int, parts=None) -> bool:
    """k-sets and vertices of the k-set polytope give the same subset family."""
    verts = [c for c, _ in kset_polytope_vertices(s, k)]
    return sorted(verts) == k_sets(s, k, parts)


def _all_faces(n: int, k: int):
    from .hypersimplex import Hypersimplex

    h = Hypersimplex(n, k)
    for dim in range(1, n):
        yield from i_faces(h, dim)


def verify_face_correspondence(s: PointConfiguration, k: int, e: int, parts=None) -> bool:
    """e-faces of the k-set polytope versus e-dimensional partitions.

    For ``e >= 1``: (A, B) with ``|B|+1 <= k <= |A|+|B|-1`` and affine
    dimension e gives the face with ``I = B`` and ``J`` the indices outside
    A and B; that face must be preserved with an e-dimensional image, and
    every non-vertex face preserved with an e-dimensional image must arise so.
    ``e = 0`` reduces to the vertex bijection.
    """
    if e == 0:
        return verify_vertex_bijection(s, k, parts)
    if parts is None:
        parts = enumerate_partitions(s)
    n = s.n
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    proj = HypersimplexProjection(s, k)
    from_parts = set()
    for p in parts:
        if p.dimension == e and p.j + 1 <= k <= p.i + p.j - 1:
            J = tuple(t for t in range(n) if t not in p.A and t not in p.B)
            f = HypersimplexFace(n, k, p.B, J)
            r = proj.direct(f)
            if not r.preserved or r.image_dim != e:
                return False
            from_parts.add((f.I, f.J))
    from_faces = set()
    for f in _all_faces(n, k):
        if f.vertex:
            continue
        r = proj.direct(f)
        if r.preserved and r.image_dim == e:
            from_faces.add((f.I, f.J))
    return from_parts == from_faces


def hull_face_counts(points) -> dict[int, int]:
    """Face numbers of the convex hull of full-dimensional ``points``.

    Independent of the LP code: facets are found by brute force over
    affinely independent d-subsets, lower faces as intersections of facets.
    Keys run from -1 (the empty face) to d-1.
    """
    pts = sorted(set(tuple(p) for p in points))
    d = len(pts[0])
    if affine_rank(pts) != d:
        raise ValueError("points must span their space")
    # integer coordinates keep the brute force cheap; scaling preserves faces
    scale = lcm(*(x.denominator for q in pts for x in q))
    pts = [tuple(int(x * scale) for x in q) for q in pts]
    facets = set()
    if d == 1:
        facets = {frozenset([pts[0]]), frozenset([pts[-1]])}
    else:
        for T in combinations(range(len(pts)), d):
            base = [pts[t] for t in T]
            if affine_rank(base) != d - 1:
                continue
            diffs = [[x - y for x, y in zip(q, base[0])] for q in base[1:]]
            normal = kernel_basis(diffs, d)[0]
            den = lcm(*(x.denominator for x in normal))
            normal = [int(x * den) for x in normal]
            c = sum(a * b for a, b in zip(normal, base[0]))
            vals = [sum(a * b for a, b in zip(normal, q)) - c for q in pts]
            if all(v <= 0 for v in vals) or all(v >= 0 for v in vals):
                facets.add(frozenset(q for q, v in zip(pts, vals) if v == 0))
    faces = set(facets)
    frontier = list(facets)
    while frontier:
        nxt = []
        for f in frontier:
            for g in facets:
                h = f & g
                if h and h not in faces:
                    faces.add(h)
                    nxt.append(h)
        frontier = nxt
    counts = Counter(affine_rank(sorted(f)) for f in faces)
    out = {-1: 1}
    for dim in range(0, d):
        out[dim] = counts.get(dim, 0)
    return out


def euler_prediction(table: PartitionTable, k: int, d: int) -> dict[int, int]:
    """Face numbers of the k-set polytope predicted from the partition counts,
    keyed by face dimension ``i - 1`` for ``i = 0..d``."""
    out = {}
    for i in range(0, d + 1):
        if i == 0:
            out[-1] = 1
        elif i == 1:
            out[0] = table[(0, k)]
        else:
            out[i - 1] = sum(table[(i, j)] for j in range(k - (i - 1), k))
    return out


def verify_euler_relation(s: PointConfiguration, k: int, parts=None, limit: int = 10) -> bool:
    """Check the face numbers of the k-set polytope against partition counts.

    Proper faces only (dimensions -1 .. d-1).  Needs general position,
    which is checked rather than assumed.
    """
    _guard(s, limit)
    if not s.is_general_position():
        raise ValueError("configuration is not in general position")
    if not s.is_spanning():
        raise ValueError("configuration must span its space")
    if parts is None:
        parts = enumerate_partitions(s)
    from .embedding import k_barycenters

    actual = hull_face_counts([p for _, p in k_barycenters(s, k)])
    return actual == euler_prediction(partition_table(s, parts), k, s.dim)


def halfspace_subsets(s: PointConfiguration, limit: int = 10) -> list[tuple[int, ...]]:
    """Every subset equal to ``s`` intersected with an open halfspace, by brute force.

    Includes the empty set and the whole set.
    """
    _guard(s, limit)
    out = []
    for mask in range(1 << s.n):
        signs = tuple(1 if mask >> t & 1 else -1 for t in range(s.n))
        if _witness(s, signs) is not None:
            out.append(tuple(t for t in range(s.n) if mask >> t & 1))
    return sorted(out, key=lambda b: (len(b), b))
