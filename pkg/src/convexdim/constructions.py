"""Explicit configurations and the extremal bound calculators.

All generators produce exact integer or rational coordinates and are
deterministic: moment-curve parameters are ``1..n`` and the multipartite
lift uses ``A = {1..n}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial

from .configuration import Hypergraph, PointConfiguration
from .theorems import cd_complete

__all__ = [
    "INF",
    "cyclic_config",
    "simplex",
    "simplex_with_barycenter",
    "direct_sum",
    "pyramid",
    "multipartite_lift",
    "optimal_configuration",
    "de_caen_bound",
    "n_kd",
    "gamma_bounds",
    "halfspace_upper_bound",
    "BoundReport",
    "bound_report",
]

INF = math.inf


def cyclic_config(n: int, d: int) -> PointConfiguration:
    """``n`` points ``(t, t^2, ..., t^d)`` on the moment curve, ``t = 1..n``."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return PointConfiguration(d, tuple(tuple(Fraction(t**e) for e in range(1, d + 1)) for t in range(1, n + 1)))


def simplex(m: int) -> PointConfiguration:
    """The m+1 vertices ``0, e_1, ..., e_m`` of a standard m-simplex."""
    if m < 0:
        raise ValueError("need m >= 0")
    if m == 0:
        return PointConfiguration(0, ((),))
    rows = [tuple(Fraction(0) for _ in range(m))]
    rows += [tuple(Fraction(int(t == j)) for t in range(m)) for j in range(m)]
    return PointConfiguration(m, tuple(rows))


def simplex_with_barycenter(n: int) -> PointConfiguration:
    """An (n-2)-simplex together with its barycenter, n points in R^{n-2}.

    Vertices are scaled by n-1 so the barycenter ``(1, ..., 1)`` is integral.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    m = n - 2
    rows = [tuple(Fraction(0) for _ in range(m))]
    rows += [tuple(Fraction(n - 1 if t == j else 0) for t in range(m)) for j in range(m)]
    rows.append(tuple(Fraction(1) for _ in range(m)))
    return PointConfiguration(m, tuple(rows))


def _centered(p: PointConfiguration):
    b = p.barycenter()
    return [tuple(x - y for x, y in zip(q, b)) for q in p.points]


def direct_sum(p: PointConfiguration, q: PointConfiguration) -> PointConfiguration:
    """``p`` in the first coordinates and ``q`` in the last, barycenters at 0."""
    for c in (p, q):
        if not c.is_spanning():
            raise ValueError("direct sum summands must span their spaces")
    zp = (Fraction(0),) * p.dim
    zq = (Fraction(0),) * q.dim
    rows = [x + zq for x in _centered(p)] + [zp + y for y in _centered(q)]
    return PointConfiguration(p.dim + q.dim, tuple(rows))


def pyramid(p: PointConfiguration, r: int) -> PointConfiguration:
    """Add ``r`` apexes ``e_{d+1}, ..., e_{d+r}`` on fresh axes."""
    if r < 0:
        raise ValueError("need r >= 0")
    d = p.dim
    rows = [x + (Fraction(0),) * r for x in p.points]
    for a in range(r):
        rows.append((Fraction(0),) * d + tuple(Fraction(int(t == a)) for t in range(r)))
    return PointConfiguration(d + r, tuple(rows))


def multipartite_lift(d: int, k: int, n: int) -> tuple[PointConfiguration, Hypergraph]:
    """Convex embedding of the complete d-partite k-uniform hypergraph in R^d.

    Part ``t`` (``t = 0..d-1``) is ``{a e_t + a^2 e_d : a = 1..n}`` with
    ``e_0 = -(e_1 + ... + e_{d-1})``; vertex ``t*n + a - 1`` is the point
    with parameter ``a`` in part ``t``.  Edges pick one vertex from each part
    of a k-subset of parts, giving ``C(d, k) n^k`` of them.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    if d <= k:
        raise ValueError(f"need d >= k+1, got d={d}, k={k}")

    def axis(t):
        if t == 0:
            return tuple(Fraction(-1 if 0 <= c < d - 1 else 0) for c in range(d))
        return tuple(Fraction(int(c == t - 1)) for c in range(d))

    rows = []
    for t in range(d):
        e = axis(t)
        for a in range(1, n + 1):
            pt = [a * x for x in e]
            pt[d - 1] += a * a
            rows.append(tuple(Fraction(x) for x in pt))
    edges = []
    for parts in combinations(range(d), k):
        for choice in product(range(n), repeat=k):
            edges.append(tuple(t * n + c for t, c in zip(parts, choice)))
    return PointConfiguration(d, tuple(rows)), Hypergraph(d * n, k, tuple(edges))


def optimal_configuration(n: int, k: int) -> tuple[str, PointConfiguration]:
    """A configuration in dimension ``cd_complete(n, k)`` whose k-barycenters
    are all vertices, for ``2 <= k <= n-2``.

    With ``k' = min(k, n-k)``: a cyclic configuration in R^{2k'} when
    n >= 2k'+2 (it is k'-neighborly), and otherwise an (n-2)-simplex with its
    barycenter (n points in R^{n-2}, not 1-almost neighborly).
    """
    if not 2 <= k <= n - 2:
        raise ValueError("need 2 <= k <= n-2")
    kk = min(k, n - k)
    d = cd_complete(n, k)
    if n >= 2 * kk + 2:
        s = cyclic_config(n, 2 * kk)
        kind = "cyclic"
    else:
        s = simplex_with_barycenter(n)
        kind = "simplex-barycenter"
    assert s.dim == d, (n, k, s.dim, d)
    return kind, s


def de_caen_bound(n: int, k: int, l: int) -> Fraction:
    if not 1 <= k <= l <= n:
        raise ValueError(f"need 1 <= k <= l <= n, got n={n}, k={k}, l={l}")
    return (1 - Fraction(n - l + 1, n - k + 1) * Fraction(1, comb(l - 1, k - 1))) * comb(n, k)


def n_kd(k: int, d: int):
    """Largest n with a convex embedding of the complete k-uniform hypergraph
    on n vertices into R^d; ``INF`` when every n admits one."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    if d == 1:
        return 2 if k == 1 else k
    if d >= 2 * k:
        return INF
    if d >= 2 * k - 3:
        return d + 2
    return d // 2 + k


def gamma_bounds(k: int, d: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on the leading coefficient of the extremal
    function, for ``k+1 <= d <= 2k-1``.

    The upper bound evaluates ``(1/k!) (1 - 1/C(n_kd, k-1))``.  For k=2,
    d=3 this gives 2/5; the value 3/8 quoted in the literature for that case
    does not follow from the formula and is not used here.
    """
    if not k + 1 <= d <= 2 * k - 1:
        raise ValueError(f"need k+1 <= d <= 2k-1, got k={k}, d={d}")
    lower = Fraction(comb(d, k), d**k)
    upper = Fraction(1, factorial(k)) * (1 - Fraction(1, comb(n_kd(k, d), k - 1)))
    return lower, upper


def halfspace_upper_bound(n: int, d: int) -> int:
    """Maximum number of subsets of n points in R^d cut out by halfspaces."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return 2 * sum(comb(n - 1, i) for i in range(d + 1))


@dataclass(frozen=True)
class BoundReport:
    """Edge-count bounds for a convex embedding of a k-uniform hypergraph on
    n vertices in R^d (``upper``/``lower``) and the asymptotic coefficient
    bounds when ``k+1 <= d <= 2k-1``."""

    n: int
    k: int
    d: int
    upper: Fraction
    lower: Fraction | None
    n_kd: float | int
    gamma_lower: Fraction | None = None
    gamma_upper: Fraction | None = None


def bound_report(n: int, k: int, d: int) -> BoundReport:
    """Collect every applicable bound.

    The upper bound is the smallest of C(n, k), the Turán-type bound of ``de_caen_bound`` with
    ``l = n_kd + 1`` (when that is at most n) and the halfspace bound.  The
    lower bound is the edge count of the multipartite lift with ``d`` parts of
    ``n // d`` vertices, available for ``d >= k+1``.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    nk = n_kd(k, d)
    upper = Fraction(comb(n, k))
    if nk != INF and nk + 1 <= n:
        upper = min(upper, de_caen_bound(n, k, nk + 1))
    upper = min(upper, Fraction(halfspace_upper_bound(n, d)))
    lower = None
    if d >= k + 1:
        lower = Fraction(comb(d, k) * (n // d) ** k)
    gl = gu = None
    if k + 1 <= d <= 2 * k - 1:
        gl, gu = gamma_bounds(k, d)
    return BoundReport(n, k, d, upper, lower, nk, gl, gu)
