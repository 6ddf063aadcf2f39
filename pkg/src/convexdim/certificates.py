"""JSON encoding of configurations and certificates, and their re-validation.

Validation never calls the LP solver: every certificate is checked by
substituting the recorded numbers, plus exact rank computations and the
deterministic Gale transform where the certificate lives in Gale space.
Rationals are written as strings such as ``"3/4"``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .configuration import Hypergraph, PointConfiguration
from .embedding import (
    Coincidence,
    DimensionDrop,
    Halfspace,
    OutsideCombination,
    PositiveSpan,
    PreservationReport,
    k_barycenters,
)
from .exactlp import Combination, Separation, affine_rank, dot, rank, to_fraction
from .gale import ExhaustivePass, NeighborlinessCertificate, Violation, transform
from .hypersimplex import HypersimplexFace

__all__ = [
    "frac",
    "parse_frac",
    "config_to_json",
    "config_from_json",
    "encode_face_report",
    "encode_neighborliness",
    "encode_convex_embedding",
    "validate",
    "validate_all",
]


def frac(x: Fraction) -> str:
    return str(Fraction(x))


def parse_frac(x) -> Fraction:
    if isinstance(x, bool):
        raise ValueError("booleans are not coordinates")
    if isinstance(x, str):
        return Fraction(x.strip())
    return to_fraction(x)


def _vec(v) -> list[str]:
    return [frac(x) for x in v]


def _unvec(v) -> tuple[Fraction, ...]:
    return tuple(parse_frac(x) for x in v)


def config_to_json(s: PointConfiguration) -> dict:
    out: dict[str, Any] = {"dim": s.dim, "points": [_vec(p) for p in s.points]}
    if s.labels is not None:
        out["labels"] = list(s.labels)
    return out


def config_from_json(obj) -> PointConfiguration:
    if not isinstance(obj, dict) or "dim" not in obj or "points" not in obj:
        raise ValueError("configuration needs 'dim' and 'points'")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ValueError("'dim' must be a nonnegative integer")
    rows = [_unvec(p) for p in obj["points"]]
    return PointConfiguration(dim, tuple(rows), obj.get("labels"))


def _face(f: HypersimplexFace) -> dict:
    return {"I": list(f.I), "J": list(f.J)}


def _weights(pairs) -> list:
    return [[list(c), frac(w)] for c, w in pairs]


def encode_face_report(r: PreservationReport) -> dict:
    f = r.face
    base = {"face": _face(f), "k": f.k, "method": r.method}
    c = r.certificate
    if isinstance(c, OutsideCombination):
        return {"type": "face-outside-combination", **base,
                "face_weights": _weights(c.face), "outside_weights": _weights(c.outside)}
    if isinstance(c, Separation):
        return {"type": "face-hyperplane", **base, "normal": _vec(c.normal), "offset": frac(c.offset),
                "strict": True}
    if isinstance(c, tuple) and len(c) == 2 and isinstance(c[1], DimensionDrop):
        sep = c[0]
        return {"type": "face-hyperplane", **base, "normal": _vec(sep.normal), "offset": frac(sep.offset),
                "strict": False, "image_dim": c[1].image_dim}
    if isinstance(c, PositiveSpan):
        return {"type": "gale-positive-span", **base, "coefficients": _vec(c.coefficients)}
    if isinstance(c, Halfspace):
        return {"type": "gale-halfspace", **base, "u": _vec(c.u)}
    raise TypeError(f"cannot encode certificate {type(c).__name__}")


def encode_neighborliness(c: NeighborlinessCertificate) -> list[dict]:
    """One record per checked subset for primal passes, one for violations."""
    base = {"kind": c.kind, "level": c.level}
    w = c.witness
    if isinstance(w, Violation):
        ev = w.evidence
        if isinstance(ev, Combination):
            return [{"type": "affine-dependence", **base, "subset": list(w.subset),
                     "on": _vec(ev.on), "off": _vec(ev.off)}]
        return [{"type": "gale-functional", **base, "subset": list(w.subset), "u": _vec(ev)}]
    if isinstance(w, ExhaustivePass) and w.functionals:
        return [{"type": "subset-hyperplane", **base, "subset": list(A), "normal": _vec(sep.normal),
                 "offset": frac(sep.offset)} for A, sep in w.functionals]
    return [{"type": "exhaustive-pass", **base, "checked": w.checked}]


def encode_convex_embedding(h: Hypergraph, result) -> list[dict]:
    c = result.certificate
    if result.value:
        return [{"type": "edge-vertex", "edge": list(e), "normal": _vec(sep.normal), "offset": frac(sep.offset)}
                for e, sep in c.items()]
    if isinstance(c, Coincidence):
        return [{"type": "edge-coincidence", "first": list(c.first), "second": list(c.second)}]
    edge, combo = c
    return [{"type": "edge-combination", "edge": list(edge),
             "weights": [[list(e), frac(w)] for e, w in sorted(combo.items())]}]


# ---------------------------------------------------------------------------
# validation by substitution


def _bary(s: PointConfiguration, subset) -> tuple[Fraction, ...]:
    k = len(subset)
    return tuple(sum((s.points[j][t] for j in subset), Fraction(0)) / k for t in range(s.dim))


def _face_obj(s: PointConfiguration, cert: dict) -> HypersimplexFace:
    return HypersimplexFace(s.n, cert["k"], tuple(cert["face"]["I"]), tuple(cert["face"]["J"]))


def _face_hyperplane(s, cert) -> bool:
    f = _face_obj(s, cert)
    normal, offset = _unvec(cert["normal"]), parse_frac(cert["offset"])
    inside = set(f.subsets())
    on = []
    for c, p in k_barycenters(s, f.k):
        v = dot(normal, p)
        if c in inside:
            if v != offset:
                return False
            on.append(p)
        elif v > offset - 1:
            return False
    strict = affine_rank(on) == f.dim
    return strict == cert["strict"]


def _face_outside(s, cert) -> bool:
    f = _face_obj(s, cert)
    inside = set(f.subsets())
    fw = [(tuple(c), parse_frac(w)) for c, w in cert["face_weights"]]
    ow = [(tuple(c), parse_frac(w)) for c, w in cert["outside_weights"]]
    if any(c not in inside for c, _ in fw) or any(c in inside or len(c) != f.k for c, _ in ow):
        return False
    if sum(w for _, w in fw) != 1 or sum(w for _, w in ow) != 1 or any(w < 0 for _, w in ow):
        return False
    lhs = [sum(w * _bary(s, c)[t] for c, w in fw) for t in range(s.dim)]
    rhs = [sum(w * _bary(s, c)[t] for c, w in ow) for t in range(s.dim)]
    return lhs == rhs


def _gale_face_vectors(s, cert):
    f = _face_obj(s, cert)
    g = transform(s)
    M = g.vectors
    return g.dim, [tuple(-x for x in M[j]) for j in f.I] + [M[j] for j in f.J]


def _gale_span(s, cert) -> bool:
    m, vs = _gale_face_vectors(s, cert)
    coeffs = _unvec(cert["coefficients"])
    if len(coeffs) != len(vs) or any(c < 1 for c in coeffs):
        return False
    if vs and rank(vs) != m:
        return False
    if not vs:
        return m == 0
    return all(sum(c * v[t] for c, v in zip(coeffs, vs)) == 0 for t in range(m))


def _gale_halfspace(s, cert) -> bool:
    m, vs = _gale_face_vectors(s, cert)
    u = _unvec(cert["u"])
    return len(u) == m and any(u) and all(dot(u, v) >= 0 for v in vs)


def _subset_hyperplane(s, cert) -> bool:
    A = set(cert["subset"])
    normal, offset = _unvec(cert["normal"]), parse_frac(cert["offset"])
    vals = [dot(normal, p) - offset for p in s.points]
    if any(vals[a] != 0 for a in A):
        return False
    rest = [v for t, v in enumerate(vals) if t not in A]
    if cert["kind"] == "neighborly":
        return all(v <= -1 for v in rest)
    return all(v <= 0 for v in rest) and any(v < 0 for v in rest)


def _affine_dependence(s, cert) -> bool:
    A = list(cert["subset"])
    rest = [t for t in range(s.n) if t not in A]
    on, off = _unvec(cert["on"]), _unvec(cert["off"])
    if len(on) != len(A) or len(off) != len(rest):
        return False
    if sum(on) + sum(off) != 0:
        return False
    for t in range(s.dim):
        if sum(c * s.points[a][t] for c, a in zip(on, A)) + sum(c * s.points[r][t] for c, r in zip(off, rest)) != 0:
            return False
    if cert["kind"] == "neighborly":
        # a convex combination of the rest equals an affine combination of A
        return sum(off) == 1 and all(c >= 0 for c in off)
    return all(c >= 1 for c in off)


def _gale_functional(s, cert) -> bool:
    g = transform(s)
    C = set(cert["subset"])
    u = _unvec(cert["u"])
    if len(u) != g.dim or len(C) != min(cert["level"], s.n):
        return False
    vals = [dot(u, v) for v in g.vectors]
    if cert["kind"] == "neighborly":
        return any(u) and all(x <= 0 for t, x in enumerate(vals) if t not in C)
    return all(x <= -1 for t, x in enumerate(vals) if t not in C)


def _isomorphism(s, cert) -> bool:
    return s.n == s.dim + 1 and affine_rank(s.points) == s.dim


def _edge_vertex(s, cert, edges) -> bool:
    e = tuple(cert["edge"])
    normal, offset = _unvec(cert["normal"]), parse_frac(cert["offset"])
    if dot(normal, _bary(s, e)) != offset:
        return False
    return all(dot(normal, _bary(s, o)) <= offset - 1 for o in edges if o != e)


def _edge_combination(s, cert, edges) -> bool:
    e = tuple(cert["edge"])
    w = [(tuple(c), parse_frac(x)) for c, x in cert["weights"]]
    if any(c == e or c not in edges for c, _ in w) or any(x < 0 for _, x in w) or sum(x for _, x in w) != 1:
        return False
    target = _bary(s, e)
    return all(sum(x * _bary(s, c)[t] for c, x in w) == target[t] for t in range(s.dim))


def _edge_coincidence(s, cert, edges) -> bool:
    a, b = tuple(cert["first"]), tuple(cert["second"])
    return a != b and a in edges and b in edges and _bary(s, a) == _bary(s, b)


_SIMPLE = {
    "face-hyperplane": _face_hyperplane,
    "face-outside-combination": _face_outside,
    "gale-positive-span": _gale_span,
    "gale-halfspace": _gale_halfspace,
    "subset-hyperplane": _subset_hyperplane,
    "affine-dependence": _affine_dependence,
    "gale-functional": _gale_functional,
    "isomorphism": _isomorphism,
}
_EDGE = {
    "edge-vertex": _edge_vertex,
    "edge-combination": _edge_combination,
    "edge-coincidence": _edge_coincidence,
}


def validate(s: PointConfiguration, cert: dict, edges=None) -> bool:
    """True iff ``cert`` holds for ``s``; unknown or malformed records are false."""
    kind = cert.get("type")
    try:
        if kind in _SIMPLE:
            return bool(_SIMPLE[kind](s, cert))
        if kind in _EDGE:
            return bool(_EDGE[kind](s, cert, set(edges or ())))
    except (KeyError, TypeError, ValueError, IndexError, ZeroDivisionError):
        return False
    return False


def validate_all(s: PointConfiguration, certs, edges=None) -> list[int]:
    """Indices of the certificates that fail; records of type
    ``exhaustive-pass`` carry no evidence and are skipped."""
    edges = {tuple(e) for e in edges} if edges is not None else None
    return [idx for idx, c in enumerate(certs) if c.get("type") != "exhaustive-pass" and not validate(s, c, edges)]
