import copy
import random
from fractions import Fraction as F

from hypothesis import given
from hypothesis import strategies as st

from convexdim.certificates import (
    config_from_json,
    config_to_json,
    encode_convex_embedding,
    encode_face_report,
    encode_neighborliness,
    parse_frac,
    validate,
    validate_all,
)
from convexdim.configuration import Hypergraph, PointConfiguration
from convexdim.constructions import multipartite_lift
from convexdim.embedding import HypersimplexProjection, is_convex_embedding
from convexdim.gale import (
    is_j_almost_neighborly_dual,
    is_j_almost_neighborly_primal,
    is_j_neighborly_dual,
    is_j_neighborly_primal,
    transform,
)
from convexdim.properties import random_configuration

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@given(st.lists(st.tuples(fracs, fracs), min_size=1, max_size=6, unique=True))
def test_config_round_trip(pts):
    s = PointConfiguration.from_rows(pts)
    assert config_from_json(config_to_json(s)) == s


def test_parse_frac_accepts_integers_and_strings():
    assert parse_frac("3/4") == F(3, 4)
    assert parse_frac(5) == 5
    assert parse_frac(" -2 ") == -2


def _all_certificates(s):
    out = []
    for k in range(1, s.n):
        proj = HypersimplexProjection(s, k)
        for f in proj.faces_up_to(s.n - 1):
            for method in ("direct", "gale"):
                out.append(encode_face_report(proj.report(f, method)))
    g = transform(s)
    for j in range(0, 4):
        out += encode_neighborliness(is_j_neighborly_primal(s, j))
        out += encode_neighborliness(is_j_almost_neighborly_primal(s, j))
        out += encode_neighborliness(is_j_neighborly_dual(g, j))
        out += encode_neighborliness(is_j_almost_neighborly_dual(g, j))
    return out


def test_emitted_certificates_validate(square, tri_bary):
    rng = random.Random(8)
    configs = [square, tri_bary] + [random_configuration(rng, 5, rng.randint(2, 4)) for _ in range(4)]
    kinds = set()
    for s in configs:
        certs = _all_certificates(s)
        kinds |= {c["type"] for c in certs}
        assert validate_all(s, certs) == []
    assert {"face-hyperplane", "face-outside-combination", "gale-positive-span", "gale-halfspace"} <= kinds
    assert {"affine-dependence", "gale-functional", "subset-hyperplane"} <= kinds


def test_embedding_certificates():
    s, h = multipartite_lift(3, 2, 2)
    certs = encode_convex_embedding(h, is_convex_embedding(s, h))
    assert len(certs) == 12 and validate_all(s, certs, h.edges) == []


def test_failing_embedding_certificates(square):
    h = Hypergraph.complete(4, 2)
    (c,) = encode_convex_embedding(h, is_convex_embedding(square, h))
    assert c["type"] == "edge-coincidence" and validate(square, c, h.edges)
    pent = PointConfiguration.from_rows([(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])
    h1 = Hypergraph.complete(5, 1)
    (c,) = encode_convex_embedding(h1, is_convex_embedding(pent, h1))
    assert c["type"] == "edge-combination" and validate(pent, c, h1.edges)


def test_tampered_certificates_rejected(tri_bary, square):
    proj = HypersimplexProjection(tri_bary, 2)
    good = [encode_face_report(proj.direct(f)) for f in proj.faces_up_to(1)]
    good += encode_neighborliness(is_j_almost_neighborly_primal(tri_bary, 1))
    good += encode_neighborliness(is_j_neighborly_dual(transform(square), 2))
    for c in good:
        assert validate(tri_bary if "u" not in c else square, c)
    hyper = next(c for c in good if c["type"] == "face-hyperplane")
    bad = copy.deepcopy(hyper)
    bad["offset"] = str(parse_frac(bad["offset"]) + 1)
    assert not validate(tri_bary, bad)
    bad = copy.deepcopy(hyper)
    bad["strict"] = not bad["strict"]
    assert not validate(tri_bary, bad)
    dep = next(c for c in good if c["type"] == "affine-dependence")
    bad = copy.deepcopy(dep)
    bad["off"] = ["0"] * len(bad["off"])
    assert not validate(tri_bary, bad)
    assert not validate(tri_bary, {"type": "no-such-record"})
    assert not validate(tri_bary, {"type": "face-hyperplane"})
