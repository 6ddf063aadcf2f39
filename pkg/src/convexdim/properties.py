"""Random configurations and the cross-module property suites.

Each randomized suite draws its own generator from ``(seed, suite name)``,
so suites are reproducible individually and can run in any order or in
parallel.  A suite returns the number of trials run and a list of
counterexamples (empty when it passes).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import constructions as con
from .certificates import config_to_json
from .configuration import Hypergraph, PointConfiguration
from .embedding import (
    HypersimplexProjection,
    complement_homothety,
    is_convex_embedding,
    is_i_preserving,
)
from .exactlp import affine_rank, rank
from .gale import (
    is_j_almost_neighborly_dual,
    is_j_almost_neighborly_primal,
    is_j_neighborly_dual,
    is_j_neighborly_primal,
    transform,
)
from .partitions import (
    brute_force_partitions,
    enumerate_partitions,
    verify_euler_relation,
    verify_vertex_bijection,
)
from .reference_tables import cd_table, d2_table, nkd_table
from .theorems import Clause, cd_complete, characterize, d_skeleton, d_strong

__all__ = [
    "random_rational",
    "random_configuration",
    "random_generic_planar",
    "random_affine_image",
    "SuiteResult",
    "SUITES",
    "DETERMINISTIC_SUITES",
    "run_suite",
    "suite_rng",
]


def random_rational(rng: random.Random, num: int = 10, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_configuration(rng: random.Random, n: int, d: int, moment: float = 0.35) -> PointConfiguration:
    """n distinct points spanning R^d with small rational coordinates.

    With probability ``moment`` the points are taken on the moment curve at
    distinct integer parameters, which makes neighborly (hence preserving)
    configurations common enough to exercise both outcomes.
    """
    if n < d + 1:
        raise ValueError("need n >= d+1 to span")
    while True:
        if rng.random() < moment:
            ts = rng.sample(range(-6, 7), n)
            pts = [tuple(Fraction(t) ** e for e in range(1, d + 1)) for t in ts]
        else:
            pts = [tuple(random_rational(rng) for _ in range(d)) for _ in range(n)]
        if len(set(pts)) == n and affine_rank(pts) == d:
            return PointConfiguration(d, tuple(pts))


def random_generic_planar(rng: random.Random, n: int) -> PointConfiguration:
    while True:
        pts = [(Fraction(rng.randint(-30, 30), rng.randint(1, 3)), Fraction(rng.randint(-30, 30), rng.randint(1, 3)))
               for _ in range(n)]
        if len(set(pts)) < n:
            continue
        s = PointConfiguration(2, tuple(pts))
        if s.is_general_position():
            return s


def random_affine_image(rng: random.Random, s: PointConfiguration) -> PointConfiguration:
    d = s.dim
    while True:
        A = [[Fraction(rng.randint(-3, 3)) for _ in range(d)] for _ in range(d)]
        if rank(A) == d:
            break
    b = [random_rational(rng) for _ in range(d)]
    return s.map(lambda p: tuple(sum(A[r][c] * p[c] for c in range(d)) + b[r] for r in range(d)))


def _dims(rng: random.Random, n: int) -> int:
    # favour small codimension, where the interesting clauses live
    return rng.choice([n - 1, n - 2, n - 2, n - 3, n - 3] if n >= 5 else [n - 1, n - 2, n - 2])


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def suite_rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _fail(res: SuiteResult, s: PointConfiguration | None, **info):
    entry = dict(info)
    if s is not None:
        entry["config"] = config_to_json(s)
    res.failures.append(entry)


# -- randomized suites --------------------------------------------------------


def characterization(rng, trials, fault=False) -> SuiteResult:
    res = SuiteResult("characterization")
    for _ in range(trials):
        n = rng.randint(4, 7)
        d = max(2, _dims(rng, n))
        s = random_configuration(rng, n, d)
        k = rng.randint(1, n - 1)
        i = rng.randint(0, 1)
        v = characterize(s, k, i).preserving
        if fault:
            v = not v
        p = bool(is_i_preserving(s, k, i))
        res.trials += 1
        if v != p:
            _fail(res, s, k=k, i=i, characterize=v, faces=p)
    return res


def projection_lemma(rng, trials, fault=False) -> SuiteResult:
    res = SuiteResult("projection-lemma")
    for _ in range(trials):
        n = rng.randint(4, 7)
        d = max(2, _dims(rng, n))
        s = random_configuration(rng, n, d)
        k = rng.randint(2, n - 2)
        proj = HypersimplexProjection(s, k)
        res.trials += 1
        for f in proj.faces_up_to(n - 2):
            a = proj.direct(f).strictly_preserved
            b = proj.by_gale(f).strictly_preserved
            if a != b:
                _fail(res, s, k=k, face=[list(f.I), list(f.J)], direct=a, gale=b)
                break
    return res


def gale_duality(rng, trials, fault=False) -> SuiteResult:
    res = SuiteResult("gale-duality")
    for _ in range(trials):
        n = rng.randint(4, 7)
        d = max(1, _dims(rng, n))
        s = random_configuration(rng, n, d)
        g = transform(s)
        res.trials += 1
        for j in range(0, 4):
            a = is_j_neighborly_primal(s, j).verdict, is_j_almost_neighborly_primal(s, j).verdict
            b = is_j_neighborly_dual(g, j).verdict, is_j_almost_neighborly_dual(g, j).verdict
            if a != b:
                _fail(res, s, j=j, primal=list(a), dual=list(b))
                break
    return res


def complement_symmetry(rng, trials, fault=False) -> SuiteResult:
    res = SuiteResult("complement-symmetry")
    for _ in range(trials):
        n = rng.randint(3, 7)
        d = rng.randint(1, min(3, n - 1))
        s = random_configuration(rng, n, d)
        k = rng.randint(1, n - 1)
        res.trials += 1
        complement_homothety(s, k)  # raises if the exact identity fails
        a = bool(is_convex_embedding(s, Hypergraph.complete(n, k)))
        b = bool(is_convex_embedding(s, Hypergraph.complete(n, n - k)))
        if a != b:
            _fail(res, s, k=k, low=a, high=b)
    return res


def neighborliness_monotone(rng, trials, fault=False) -> SuiteResult:
    res = SuiteResult("neighborliness-monotone")
    for _ in range(trials):
        n = rng.randint(4, 7)
        d = max(1, _dims(rng, n))
        s = random_configuration(rng, n, d)
        g = transform(s)
        res.trials += 1
        nb = [is_j_neighborly_dual(g, j).verdict for j in range(0, 5)]
        al = [is_j_almost_neighborly_dual(g, j).verdict for j in range(0, 5)]
        for j in range(1, 5):
            if (nb[j] and not nb[j - 1]) or (al[j] and not al[j - 1]) or (nb[j] and not al[j] and j < n):
                _fail(res, s, j=j, neighborly=nb, almost=al)
                break
        # radon: more than d+1 points are never (floor(d/2)+1)-neighborly
        if n >= d + 2 and is_j_neighborly_dual(g, d // 2 + 1).verdict:
            _fail(res, s, radon=True)
    return res


def affine_invariance(rng, trials, fault=False) -> SuiteResult:
    res = SuiteResult("affine-invariance")
    for _ in range(trials):
        n = rng.randint(4, 7)
        d = max(1, _dims(rng, n))
        s = random_configuration(rng, n, d)
        t = random_affine_image(rng, s)
        res.trials += 1
        for j in range(1, 4):
            a = is_j_neighborly_dual(s, j).verdict, is_j_almost_neighborly_dual(s, j).verdict
            b = is_j_neighborly_dual(t, j).verdict, is_j_almost_neighborly_dual(t, j).verdict
            if a != b:
                _fail(res, s, j=j, image=config_to_json(t))
                break
        # the Gale vectors of both span the same row space of the kernel
        ga, gb = transform(s).vectors, transform(t).vectors
        if ga != gb:
            _fail(res, s, gale="kernel changed under an affine map", image=config_to_json(t))
    return res


def partition_identities(rng, trials, fault=False) -> SuiteResult:
    res = SuiteResult("partitions")
    for _ in range(trials):
        n = rng.randint(4, 6)
        s = random_generic_planar(rng, n)
        parts = enumerate_partitions(s)
        res.trials += 1
        pairs = {(p.A, p.B) for p in parts}
        oracle = {(p.A, p.B) for p in brute_force_partitions(s)}
        if pairs != oracle:
            _fail(res, s, missing=sorted(oracle - pairs), extra=sorted(pairs - oracle))
            continue
        flipped = {(A, tuple(t for t in range(n) if t not in A and t not in B)) for A, B in pairs}
        if flipped != pairs:
            _fail(res, s, reversal=False)
        if any(p.dimension != p.i - 1 for p in parts if p.i <= s.dim):
            _fail(res, s, general_position_dimension=False)
        for k in range(1, n):
            if not verify_vertex_bijection(s, k, parts) or not verify_euler_relation(s, k, parts):
                _fail(res, s, k=k)
                break
    return res


# -- deterministic suites -----------------------------------------------------


def tables(rng=None, trials=0, fault=False) -> SuiteResult:
    res = SuiteResult("tables")
    from .constructions import n_kd

    for (k, n), v in cd_table().items():
        res.trials += 1
        if cd_complete(n, k) != v:
            _fail(res, None, table="cd", k=k, n=n, expected=v)
    for (k, n), v in d2_table().items():
        res.trials += 1
        if d_skeleton(n, k, 2) != v:
            _fail(res, None, table="d", k=k, n=n, expected=v)
    for (k, d), v in nkd_table().items():
        res.trials += 1
        if n_kd(k, d) != v:
            _fail(res, None, table="nkd", k=k, d=d, expected=str(v))
    return res


def _largest_complete(k: int, d: int, horizon: int = 60):
    # cd of a single edge (n = k) is taken as 1 here so that d = 1 is covered
    best = None
    for n in range(k, horizon):
        cd = 1 if n == k else cd_complete(n, k)
        if cd <= d:
            best = n
    return con.INF if best == horizon - 1 else best


def closed_forms(rng=None, trials=0, fault=False) -> SuiteResult:
    res = SuiteResult("closed-forms")
    for n in range(2, 25):
        for k in range(1, n):
            for i in range(0, n):
                res.trials += 1
                a = d_skeleton(n, k, i)
                if a != d_skeleton(n, n - k, i):
                    _fail(res, None, n=n, k=k, i=i, symmetry=False)
                b = d_strong(n, k, i)
                band = 2 * k - 2 * i - 1 <= n <= 2 * k + 2 * i + 1
                plus = band and k in (i + 2, n - i - 2) and k not in range(1, i + 2) and k not in range(n - i - 1, n)
                if b != a + (1 if plus else 0):
                    _fail(res, None, n=n, k=k, i=i, strong=b, skeleton=a)
            if 2 <= k <= n - 2 and cd_complete(n, k) != d_skeleton(n, k, 0):
                _fail(res, None, n=n, k=k, cd=cd_complete(n, k))
        for i in range(0, n):
            expected = 2 * i + 2 if n >= 2 * i + 4 else n - 1
            if d_skeleton(n, 1, i) != expected:
                _fail(res, None, n=n, i=i, k1=d_skeleton(n, 1, i))
    for k in range(1, 8):
        for d in range(1, 15):
            res.trials += 1
            if con.n_kd(k, d) != _largest_complete(k, d):
                _fail(res, None, k=k, d=d, n_kd=str(con.n_kd(k, d)))
    for n in range(3, 12):
        for k in range(1, 4):
            for l in range(k, n):
                if con.de_caen_bound(n, k, l) > con.de_caen_bound(n, k, l + 1):
                    _fail(res, None, n=n, k=k, l=l, de_caen_monotone=False)
    return res


def construction_clauses(rng=None, trials=0, fault=False) -> SuiteResult:
    res = SuiteResult("constructions")
    for n in range(4, 8):
        for k in range(2, n - 1):
            kind, s = con.optimal_configuration(n, k)
            res.trials += 1
            expected = Clause.NEIGHBORLY if kind == "cyclic" else Clause.NOT_ALMOST_NEIGHBORLY
            v = characterize(s, k, 0)
            if v.clause is not expected or not is_convex_embedding(s, Hypergraph.complete(n, k)):
                _fail(res, s, n=n, k=k, clause=str(v.clause))
    for m in range(1, 5):
        res.trials += 1
        if characterize(con.simplex(m), 1, 0).clause is not Clause.ISOMORPHISM:
            _fail(res, con.simplex(m), expected="Isomorphism")
    s, h = con.multipartite_lift(3, 2, 2)
    res.trials += 1
    if not is_convex_embedding(s, h) or len(h) != 12:
        _fail(res, s, multipartite=(3, 2, 2))
    return res


SUITES: dict[str, Callable] = {
    "characterization": characterization,
    "projection-lemma": projection_lemma,
    "gale-duality": gale_duality,
    "complement-symmetry": complement_symmetry,
    "neighborliness-monotone": neighborliness_monotone,
    "affine-invariance": affine_invariance,
    "partitions": partition_identities,
}

DETERMINISTIC_SUITES: dict[str, Callable] = {
    "tables": tables,
    "closed-forms": closed_forms,
    "constructions": construction_clauses,
}


def run_suite(name: str, seed: int, trials: int, fault: bool = False) -> SuiteResult:
    if name in DETERMINISTIC_SUITES:
        return DETERMINISTIC_SUITES[name](None, 0, fault)
    return SUITES[name](suite_rng(seed, name), trials, fault)
