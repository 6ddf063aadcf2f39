import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from convexdim.configuration import PointConfiguration
from convexdim.constructions import cyclic_config, simplex
from convexdim.exactlp import Combination, dot, rank, vec
from convexdim.gale import (
    ExhaustivePass,
    NotSpanning,
    is_j_almost_neighborly_dual,
    is_j_almost_neighborly_primal,
    is_j_neighborly_dual,
    is_j_neighborly_primal,
    transform,
    validate_dual_witness,
)


def _proportional(a, b):
    # a = c b for some nonzero c
    a, b = [x[0] for x in a], [x[0] for x in b]
    c = next(x / y for x, y in zip(a, b) if y)
    return c != 0 and all(x == c * y for x, y in zip(a, b))


def test_square_transform(square):
    g = transform(square)
    assert g.dim == 1
    assert _proportional(g.vectors, [(1,), (-1,), (-1,), (1,)])


def test_triangle_transform(tri_bary):
    g = transform(tri_bary)
    assert _proportional(g.vectors, [(1,), (1,), (1,), (-3,)])


def test_simplex_transform_is_empty():
    g = transform(simplex(4))
    assert g.dim == 0 and g.isomorphism and all(v == () for v in g.vectors)


def test_gale_vectors_are_a_dependence_basis(moment6):
    g = transform(moment6)
    assert g.dim == 6 - 4 - 1
    # columns of the Gale matrix are affine dependences of the points
    for t in range(g.dim):
        coeffs = [v[t] for v in g.vectors]
        assert sum(coeffs) == 0
        for c in range(4):
            assert sum(x * p[c] for x, p in zip(coeffs, moment6.points)) == 0
    assert rank(g.vectors) == g.dim


def test_non_spanning_rejected():
    flat = PointConfiguration(3, tuple(vec(p) for p in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)]))
    with pytest.raises(NotSpanning):
        transform(flat)


def test_neighborly_primal_examples(square, moment6):
    assert is_j_neighborly_primal(square, 1).verdict
    c = is_j_neighborly_primal(square, 2)
    assert not c.verdict and c.witness.subset == (0, 3)
    assert isinstance(c.witness.evidence, Combination)
    assert is_j_neighborly_primal(moment6, 2).verdict


def test_neighborly_dual_examples(square, tri_bary):
    g, h = transform(square), transform(tri_bary)
    assert is_j_neighborly_dual(g, 1).verdict
    c = is_j_neighborly_dual(g, 2)
    assert not c.verdict and validate_dual_witness(g, c)
    assert is_j_neighborly_dual(h, 0).verdict
    c = is_j_neighborly_dual(h, 1)
    assert not c.verdict and c.witness.subset == (3,) and validate_dual_witness(h, c)


def test_almost_neighborly_examples(square, tri_bary):
    assert is_j_almost_neighborly_primal(tri_bary, 0).verdict
    c = is_j_almost_neighborly_primal(tri_bary, 1)
    assert not c.verdict and c.witness.subset == (3,)
    c = is_j_almost_neighborly_primal(square, 2)
    assert not c.verdict and c.witness.subset == (0, 3)
    h = transform(tri_bary)
    c = is_j_almost_neighborly_dual(h, 1)
    assert not c.verdict and validate_dual_witness(h, c)
    assert is_j_almost_neighborly_dual(transform(square), 1).verdict


def test_dual_accepts_configuration(square):
    assert is_j_neighborly_dual(square, 1).verdict == is_j_neighborly_dual(transform(square), 1).verdict


def test_segment_pair():
    seg = PointConfiguration.from_rows([(0,), (1,), (2,)])
    g = transform(seg)
    assert g.dim == 1
    assert is_j_almost_neighborly_dual(g, 0).verdict


def test_cyclic_neighborliness():
    s = cyclic_config(6, 4)
    g = transform(s)
    assert is_j_neighborly_dual(g, 2).verdict
    assert not is_j_neighborly_dual(g, 3).verdict


def test_pass_certificates_list_supporting_hyperplanes(square):
    c = is_j_neighborly_primal(square, 1)
    assert isinstance(c.witness, ExhaustivePass)
    for A, sep in c.witness.functionals:
        vals = [dot(sep.normal, p) - sep.offset for p in square.points]
        assert all(vals[a] == 0 for a in A)
        assert all(v <= -1 for t, v in enumerate(vals) if t not in A)


coord = st.integers(-5, 5)


@st.composite
def spanning_configs(draw):
    d = draw(st.integers(1, 3))
    n = draw(st.integers(d + 1, 6))
    pts = draw(st.lists(st.tuples(*[coord] * d), min_size=n, max_size=n, unique=True))
    s = PointConfiguration.from_rows(pts)
    assume(s.is_spanning())
    return s


@settings(max_examples=60, deadline=None)
@given(spanning_configs(), st.integers(0, 3))
def test_primal_dual_agree(s, j):
    g = transform(s)
    a = is_j_neighborly_primal(s, j)
    b = is_j_neighborly_dual(g, j)
    assert a.verdict == b.verdict
    if not b.verdict:
        assert validate_dual_witness(g, b)
    a = is_j_almost_neighborly_primal(s, j)
    b = is_j_almost_neighborly_dual(g, j)
    assert a.verdict == b.verdict
    if not b.verdict:
        assert validate_dual_witness(g, b)


@settings(max_examples=40, deadline=None)
@given(spanning_configs())
def test_neighborly_implies_almost(s):
    for j in range(0, 3):
        if is_j_neighborly_primal(s, j).verdict and j < s.n:
            assert is_j_almost_neighborly_primal(s, j).verdict
