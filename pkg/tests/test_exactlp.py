from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexdim.exactlp import (
    Combination,
    LinearSystem,
    Separation,
    affine_rank,
    check_certificate,
    check_witness,
    dot,
    kernel_basis,
    positive_dependence,
    proper_supporting_functional,
    rank,
    rref,
    solve_feasibility,
    supporting_functional,
    supporting_functional_general,
    vec,
    zero_in_interior,
    zero_in_relative_interior,
)

small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def test_contradictory_bounds_certificate():
    sys = LinearSystem.build(1, [], [((1,), 1), ((-1,), 0)])
    r = solve_feasibility(sys)
    assert not r.feasible
    assert r.certificate == (1, 1)
    assert check_certificate(sys, r.certificate)


def test_simplex_equation_feasible():
    sys = LinearSystem.build(2, [((1, 1), 1)], [((1, 0), 0), ((0, 1), 0)])
    r = solve_feasibility(sys)
    assert r.feasible and check_witness(sys, r.witness)


def test_empty_system_with_impossible_constant():
    sys = LinearSystem.build(0, [], [((), 1)])
    r = solve_feasibility(sys)
    assert not r.feasible and check_certificate(sys, r.certificate)


def test_row_length_checked():
    with pytest.raises(ValueError):
        LinearSystem.build(2, [((1,), 0)])


def test_square_midpoint_cannot_be_separated():
    # the six midpoints of the unit square; the centre is the 3rd one
    mids = [vec(p) for p in [(F(1, 2), 0), (0, F(1, 2)), (F(1, 2), F(1, 2)), (1, F(1, 2)), (F(1, 2), 1)]]
    r = supporting_functional([mids[2]], [m for t, m in enumerate(mids) if t != 2])
    assert isinstance(r, Combination)
    assert sum(r.off) == 1 and all(w >= 0 for w in r.off)


def test_corner_is_separated():
    pts = [vec(p) for p in [(0, 0), (1, 0), (0, 1), (1, 1)]]
    r = supporting_functional([pts[0]], pts[1:])
    assert isinstance(r, Separation)
    assert dot(r.normal, pts[0]) == r.offset
    assert all(dot(r.normal, q) <= r.offset - 1 for q in pts[1:])


@pytest.mark.parametrize(
    "m, expected",
    [
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
        ([[1 if t in c else 0 for t in range(4)] for c in combinations(range(4), 2)], 4),
        ([[0, 0, 0]], 0),
    ],
)
def test_rank_examples(m, expected):
    assert rank(m) == expected


def test_kernel_examples():
    assert kernel_basis([[1, 1]]) == [(-1, 1)]
    (v,) = kernel_basis([[0, 1, 0, 1], [0, 0, 1, 1], [1, 1, 1, 1]])
    assert v == (1, -1, -1, 1)
    assert kernel_basis([[2, 1], [1, 1]]) == []


def test_zero_in_interior_examples():
    assert zero_in_interior([(1, 0), (-1, 0), (0, 1), (0, -1)])
    assert not zero_in_interior([(1, 0), (0, 1)])
    assert zero_in_interior([(1,), (1,), (-1,), (-1,)])


def test_zero_in_relative_interior_examples():
    assert zero_in_relative_interior([(1, 2), (-1, -2)])
    assert not zero_in_relative_interior([(1, 2)])
    assert not zero_in_relative_interior([(1, 0), (-1, 0), (0, 1)])


def test_affine_rank():
    assert affine_rank([vec((0, 0)), vec((1, 1)), vec((2, 2))]) == 1
    assert affine_rank([vec((0, 0))]) == 0
    assert affine_rank([]) == -1


# -- properties -----------------------------------------------------------------


@st.composite
def systems(draw):
    nv = draw(st.integers(1, 3))
    row = st.lists(small, min_size=nv, max_size=nv)
    eqs = draw(st.lists(st.tuples(row, small), max_size=2))
    ineqs = draw(st.lists(st.tuples(row, small), max_size=4))
    return LinearSystem.build(nv, eqs, ineqs)


@settings(max_examples=200, deadline=None)
@given(systems())
def test_every_answer_carries_a_valid_certificate(sys):
    r = solve_feasibility(sys)
    if r.feasible:
        assert check_witness(sys, r.witness)
    else:
        assert check_certificate(sys, r.certificate)


@st.composite
def matrices(draw):
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 5))
    return [draw(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols)) for _ in range(rows)]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    ncols = len(m[0])
    basis = kernel_basis(m)
    assert len(basis) == ncols - rank(m)
    for v in basis:
        assert all(dot(vec(r), v) == 0 for r in m)
    # rref is idempotent
    red, piv = rref(m)
    assert rref(red)[1] == piv


@st.composite
def point_sets(draw):
    dim = draw(st.integers(1, 3))
    n = draw(st.integers(2, 6))
    pts = draw(st.lists(st.tuples(*[small] * dim), min_size=n, max_size=n, unique=True))
    on = draw(st.integers(1, min(3, n - 1)))
    return [vec(p) for p in pts], on


@settings(max_examples=200, deadline=None)
@given(point_sets())
def test_fast_supporting_functional_matches_general(data):
    pts, k = data
    on, off = pts[:k], pts[k:]
    a = supporting_functional(on, off)
    b = supporting_functional_general(on, off)
    assert type(a) is type(b)
    if isinstance(a, Separation):
        assert all(dot(a.normal, p) == a.offset for p in on)
        assert all(dot(a.normal, p) <= a.offset - 1 for p in off)
    else:
        assert sum(a.off) == 1 and all(w >= 0 for w in a.off)
        assert sum(a.on) == -1
        for t in range(len(pts[0])):
            assert sum(c * p[t] for c, p in zip(a.on + a.off, on + off)) == 0


@settings(max_examples=120, deadline=None)
@given(point_sets())
def test_proper_supporting_functional_alternative(data):
    pts, k = data
    on, rest = pts[:k], pts[k:]
    r = proper_supporting_functional(on, rest)
    if isinstance(r, Separation):
        vals = [dot(r.normal, p) - r.offset for p in rest]
        assert all(dot(r.normal, p) == r.offset for p in on)
        assert all(v <= 0 for v in vals) and sum(vals) == -1
    else:
        assert all(c >= 1 for c in r.off)
        assert sum(r.on) + sum(r.off) == 0


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=1, max_size=5))
def test_positive_dependence_witness(vs):
    r = positive_dependence(vs, 2)
    if r.feasible:
        lam = r.witness
        assert all(x >= 1 for x in lam)
        assert all(sum(l * v[t] for l, v in zip(lam, vs)) == 0 for t in range(2))
