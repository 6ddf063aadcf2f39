from fractions import Fraction as F
from math import comb

import pytest

from convexdim.configuration import Hypergraph
from convexdim.constructions import (
    INF,
    bound_report,
    cyclic_config,
    de_caen_bound,
    direct_sum,
    gamma_bounds,
    halfspace_upper_bound,
    multipartite_lift,
    n_kd,
    optimal_configuration,
    pyramid,
    simplex,
    simplex_with_barycenter,
)
from convexdim.embedding import is_convex_embedding, is_i_preserving
from convexdim.exactlp import affine_rank
from convexdim.gale import (
    is_j_almost_neighborly_dual,
    is_j_neighborly_dual,
    is_j_neighborly_primal,
    transform,
)
from convexdim.theorems import Clause, cd_complete, characterize


def test_cyclic():
    assert is_j_neighborly_primal(cyclic_config(6, 4), 2).verdict
    for i in range(0, 3):
        s = cyclic_config(2 * i + 4, 2 * i + 2)
        assert is_i_preserving(s, 1, i)
    s = cyclic_config(5, 4)
    assert affine_rank(s.points) == 4


def test_simplex_with_barycenter_shape():
    s = simplex_with_barycenter(5)
    assert s.dim == 3 and s.n == 5
    assert s.points[-1] == s.barycenter()
    with pytest.raises(ValueError):
        simplex_with_barycenter(2)


def test_direct_sum_of_segments_is_a_cross():
    s = direct_sum(simplex(1), simplex(1))
    assert s.dim == 2 and s.n == 4
    assert s.points == ((F(-1, 2), 0), (F(1, 2), 0), (0, F(-1, 2)), (0, F(1, 2)))


def test_direct_sum_with_point_is_simplex_with_barycenter():
    a = transform(direct_sum(simplex(3), simplex(0)))
    b = transform(simplex_with_barycenter(5))
    ratios = {x[0] / y[0] for x, y in zip(a.vectors, b.vectors)}
    assert len(ratios) == 1 and 0 not in ratios


def test_pyramid_shapes():
    base = direct_sum(simplex(1), simplex(1))
    assert pyramid(base, 0) == base
    p = pyramid(base, 1)
    assert p.dim == 3 and p.n == 5 and p.is_spanning()


@pytest.mark.parametrize("a, b, r", [(1, 1, 0), (1, 2, 1), (2, 2, 0), (2, 3, 1), (1, 3, 2)])
def test_pyramid_over_sum_neighborliness(a, b, r):
    s = pyramid(direct_sum(simplex(a), simplex(b)), r)
    g = transform(s)
    m = min(a, b)
    assert is_j_neighborly_dual(g, m).verdict and not is_j_neighborly_dual(g, m + 1).verdict
    assert is_j_almost_neighborly_dual(g, m + r).verdict
    assert not is_j_almost_neighborly_dual(g, m + r + 1).verdict


def test_balanced_sum_threshold():
    # the two halves of n points give an i-preserving projection once k+i+1 <= n//2
    n = 8
    s = direct_sum(simplex(n // 2 - 1), simplex(n - n // 2 - 1))
    for k in range(1, 4):
        for i in range(0, 3):
            if k + i + 1 <= n // 2:
                assert characterize(s, k, i).preserving


def test_multipartite_small():
    s, h = multipartite_lift(3, 2, 2)
    assert s.points[:2] == ((-1, -1, 1), (-2, -2, 4))
    assert s.points[2:4] == ((1, 0, 1), (2, 0, 4))
    assert s.points[4:] == ((0, 1, 1), (0, 2, 4))
    assert len(h) == 12 and is_convex_embedding(s, h)
    for n in (1, 2, 4):
        assert len(multipartite_lift(3, 2, n)[1]) == 3 * n * n
    for k in (1, 2, 3):
        s, h = multipartite_lift(k + 1, k, 1)
        assert len(h) == k + 1 and is_convex_embedding(s, h)
    with pytest.raises(ValueError):
        multipartite_lift(2, 2, 3)


@pytest.mark.parametrize("n", range(4, 8))
def test_optimal_configuration_lands_in_expected_clause(n):
    for k in range(2, n - 1):
        kind, s = optimal_configuration(n, k)
        assert s.dim == cd_complete(n, k)
        clause = characterize(s, k, 0).clause
        assert clause is (Clause.NEIGHBORLY if kind == "cyclic" else Clause.NOT_ALMOST_NEIGHBORLY)
        assert is_convex_embedding(s, Hypergraph.complete(n, k))


def test_simplices_are_isomorphisms():
    for m in range(1, 5):
        assert characterize(simplex(m), 1, 0).clause is Clause.ISOMORPHISM


def test_de_caen():
    assert de_caen_bound(10, 3, 5) == 105
    for n in range(3, 9):
        for k in range(1, n + 1):
            assert de_caen_bound(n, k, k) == 0
    # graphs with l = 6: coefficient of n^2 tends to (1 - 1/5)/2
    n = 10**6
    assert abs(de_caen_bound(n, 2, 6) / n**2 - F(2, 5)) < F(1, 10**5)


def test_n_kd_values():
    assert n_kd(5, 7) == 9
    assert n_kd(2, 3) == 5
    assert n_kd(7, 14) == INF
    assert n_kd(1, 1) == 2 and n_kd(4, 1) == 4


def test_gamma_bounds():
    assert gamma_bounds(2, 3) == (F(1, 3), F(2, 5))
    lo, _ = gamma_bounds(3, 4)
    assert lo == F(4, 64) and lo >= F(1, 27)
    for k in range(2, 7):
        assert gamma_bounds(k, k + 1)[0] == F(1, (k + 1) ** (k - 1))
    with pytest.raises(ValueError):
        gamma_bounds(2, 4)


def test_halfspace_bound():
    assert halfspace_upper_bound(5, 0) == 2
    assert halfspace_upper_bound(5, 2) == 22


def test_bound_report():
    r = bound_report(10, 3, 5)
    assert r.n_kd == 7
    assert r.upper <= de_caen_bound(10, 3, 8) and r.upper <= comb(10, 3)
    assert r.lower == comb(5, 3) * 2**3
    assert r.gamma_lower == gamma_bounds(3, 5)[0]
