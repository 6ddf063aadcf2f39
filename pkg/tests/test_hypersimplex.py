from fractions import Fraction as F
from itertools import combinations

import pytest

from convexdim.exactlp import Separation, affine_rank, supporting_functional, vec
from convexdim.hypersimplex import (
    Hypersimplex,
    HypersimplexFace,
    count_i_faces,
    face_vertices,
    facet_normals,
    i_faces,
    vertices,
)


def test_vertices_of_octahedron():
    got = {"".join(map(str, v)) for v in vertices(Hypersimplex(4, 2))}
    assert got == {"1100", "1010", "1001", "0110", "0101", "0011"}


def test_vertices_of_simplex_and_count():
    assert vertices(Hypersimplex(5, 1)) == [tuple(int(t == j) for t in range(5)) for j in range(5)]
    assert len(vertices(Hypersimplex(5, 2))) == 10


def test_facet_normals():
    fn = facet_normals(Hypersimplex(4, 2))
    assert fn.pairs[0].n == (F(3, 4), F(-1, 4), F(-1, 4), F(-1, 4))
    assert not fn.degenerate
    for p in fn.pairs:
        assert p.m == tuple(-x for x in p.n)
    for t in range(4):
        assert sum(p.n[t] for p in fn.pairs) == 0
    deg = facet_normals(Hypersimplex(5, 1))
    assert deg.degenerate and len(deg.simplex_normals) == 5


@pytest.mark.parametrize("n, k, i, count", [(4, 2, 1, 12), (5, 2, 1, 30), (6, 3, 5, 1), (4, 2, 2, 8)])
def test_face_counts(n, k, i, count):
    h = Hypersimplex(n, k)
    assert len(i_faces(h, i)) == count == count_i_faces(n, k, i)


def test_top_face_is_whole_polytope():
    (f,) = i_faces(Hypersimplex(6, 2), 5)
    assert f.I == () and f.J == ()
    assert len(face_vertices(Hypersimplex(6, 2), f)) == 15


def test_face_vertices_examples():
    h = Hypersimplex(4, 2)
    # 0-based: I={0}, J={2}
    got = {"".join(map(str, v)) for v in face_vertices(h, HypersimplexFace(4, 2, (0,), (2,)))}
    assert got == {"1100", "1001"}
    v = HypersimplexFace(4, 2, (1, 3), (0, 2))
    assert v.vertex and face_vertices(h, v) == [(0, 1, 0, 1)]


def test_invalid_faces_rejected():
    with pytest.raises(ValueError, match="not a face"):
        HypersimplexFace(5, 2, (0, 1), ())
    with pytest.raises(ValueError, match="intersect"):
        HypersimplexFace(5, 2, (0,), (0,))
    with pytest.raises(ValueError):
        Hypersimplex(3, 3)


@pytest.mark.parametrize("n, k", [(4, 2), (5, 2), (5, 3), (6, 3)])
def test_face_enumeration_against_lp(n, k):
    # every (I, J) face found combinatorially is exposed by a hyperplane on the
    # 0/1 vertices and has the advertised dimension; distinct faces have
    # distinct vertex sets
    h = Hypersimplex(n, k)
    verts = [vec(v) for v in vertices(h)]
    supports = set()
    for i in range(0, n):
        faces = i_faces(h, i)
        for f in faces:
            on = [vec(v) for v in face_vertices(h, f)]
            off = [v for v in verts if v not in on]
            if off:
                assert isinstance(supporting_functional(on, off), Separation)
            assert affine_rank(on) == i
            supports.add(frozenset(map(tuple, on)))
    assert len(supports) == sum(count_i_faces(n, k, i) for i in range(n))
    # and no other vertex subset of small size is a face
    for c in combinations(range(len(verts)), 2):
        on = [verts[t] for t in c]
        off = [v for t, v in enumerate(verts) if t not in c]
        is_face = isinstance(supporting_functional(on, off), Separation)
        assert is_face == (frozenset(map(tuple, on)) in supports)
