"""Command-line interface.

Every subcommand prints either a CSV table or a JSON report.  Reports use
``"p/q"`` for rationals and sort their keys, so identical inputs give
byte-identical output.
Exit codes: 0 pass, 1 property violation, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb

from . import constructions as con
from .certificates import (
    config_from_json,
    config_to_json,
    encode_convex_embedding,
    encode_face_report,
    encode_neighborliness,
    validate_all,
)
from .configuration import DuplicatePoints, PointConfiguration
from .embedding import HypersimplexProjection, is_convex_embedding
from .gale import NotSpanning, is_j_almost_neighborly_primal, is_j_neighborly_primal
from .hypersimplex import Hypersimplex, HypersimplexFace, i_faces
from .partitions import partition_table
from .properties import DETERMINISTIC_SUITES, SUITES, run_suite
from .reference_tables import cd_table, d2_table, nkd_table
from .theorems import Clause, cd_complete, characterize, d_skeleton

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# -- helpers -------------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """``"2..18"``, ``"5"`` or ``"2,4,7"`` (pieces may be combined)."""
    out: list[int] = []
    try:
        for piece in text.split(","):
            piece = piece.strip()
            if ".." in piece:
                lo, hi = piece.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            elif piece:
                out.append(int(piece))
    except ValueError:
        raise InputError(f"bad range {text!r}") from None
    if not out:
        raise InputError(f"empty range {text!r}")
    return out


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def load_config(path: str) -> PointConfiguration:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None
    try:
        return config_from_json(obj)
    except (ValueError, TypeError) as e:
        raise InputError(f"{path}: {e}") from None


def pmap(func, items, jobs: int):
    """Ordered map; results are merged in input order for any job count."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * jobs))))


# -- tables --------------------------------------------------------------------


def _cell(v) -> str:
    if v is None:
        return ""
    return "inf" if v == math.inf else str(v)


def _grid(rows, cols, value, corner: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([corner] + cols)
    for r in rows:
        w.writerow([r] + [_cell(value(r, c)) for c in cols])
    return buf.getvalue()


def cmd_tables(args) -> int:
    which = args.which
    if which == "cd":
        ks = parse_range(args.k or "1..9")
        ns = parse_range(args.n or "2..18")
        compute = lambda k, n: cd_complete(n, k) if 1 <= k <= n - 1 else None  # noqa: E731
        reference, corner = cd_table(), "k\\n"
    elif which == "d":
        ks = parse_range(args.k or "1..9")
        ns = parse_range(args.n or "3..18")
        i = args.i
        compute = lambda k, n: d_skeleton(n, k, i) if 1 <= k <= n - 1 and 0 <= i <= n - 1 else None  # noqa: E731
        reference, corner = (d2_table() if i == 2 else {}), "k\\n"
    else:
        ks = parse_range(args.k or "1..7")
        ns = parse_range(args.d or "1..14")
        compute = lambda k, d: con.n_kd(k, d) if k >= 1 and d >= 1 else None  # noqa: E731
        reference, corner = nkd_table(), "k\\d"
    if len(ks) * len(ns) > args.max_cells:
        raise InputError(f"{len(ks) * len(ns)} cells exceed --max-cells {args.max_cells}")
    if not args.diff:
        emit(_grid(ks, ns, compute, corner), args.output)
        return EXIT_OK
    if not reference:
        raise InputError("--diff has reference values for the d table only at --i 2")
    compared, lines = 0, []
    for k in ks:
        for c in ns:
            if (k, c) not in reference:
                continue
            compared += 1
            got, want = compute(k, c), reference[(k, c)]
            if got != want:
                lines.append(f"mismatch k={k} col={c} expected={_cell(want)} computed={_cell(got)}")
    lines.append(f"{which}: {compared} cells compared, {len(lines)} mismatches")
    emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if len(lines) == 1 else EXIT_VIOLATION


# -- check ---------------------------------------------------------------------

_WORKER_PROJ: dict = {}


def _face_job(task):
    # top-level so it pickles; the projection is rebuilt once per worker
    cfg, k, I, J, method = task
    key = (json.dumps(cfg, sort_keys=True), k)
    proj = _WORKER_PROJ.get(key)
    if proj is None:
        _WORKER_PROJ.clear()
        proj = _WORKER_PROJ[key] = HypersimplexProjection(config_from_json(cfg), k)
    f = HypersimplexFace(proj.n, k, I, J)
    r = proj.report(f, method)
    return r.strictly_preserved, encode_face_report(r)


def _faces(n, k, i):
    h = Hypersimplex(n, k)
    for dim in range(0, i + 1):
        yield from i_faces(h, dim)


def cmd_check(args) -> int:
    s = load_config(args.config)
    n, k, i = s.n, args.k, args.i
    if n > args.max_n:
        raise InputError(f"{n} points exceed --max-n {args.max_n}")
    if not 1 <= k <= n - 1 or not 0 <= i <= n - 1:
        raise InputError(f"need 1 <= k <= {n - 1} and 0 <= i <= {n - 1}")
    if comb(n, k) > args.max_subsets:
        raise InputError(f"C({n},{k}) = {comb(n, k)} exceeds --max-subsets {args.max_subsets}")
    spanning = s.is_spanning()
    methods = ["direct", "gale"] if args.method == "both" else [args.method]
    if "gale" in methods and not spanning:
        raise InputError(f"the Gale method needs spanning points; they span dimension {s.affine_dim()}")

    t0 = time.perf_counter()
    cfg = config_to_json(s)
    faces = list(_faces(n, k, i))
    results = {}
    for m in methods:
        results[m] = pmap(_face_job, [(cfg, k, f.I, f.J, m) for f in faces], args.jobs)

    verdicts: dict = {"faces_checked": len(faces)}
    certificates = []
    per_method = {}
    for m in methods:
        flags = [ok for ok, _ in results[m]]
        per_method[m] = all(flags)
        failing = next((idx for idx, ok in enumerate(flags) if not ok), None)
        if failing is None:
            certificates.extend(c for _, c in results[m])
        else:
            certificates.append(results[m][failing][1])
            verdicts.setdefault("failing_face", {})[m] = {"I": list(faces[failing].I), "J": list(faces[failing].J)}
    preserving = per_method[methods[0]]
    verdicts["methods"] = per_method
    verdicts["preserving"] = preserving
    mismatch = len(set(per_method.values())) > 1

    if spanning:
        v = characterize(s, k, i, method="primal")
        verdicts["clause"] = str(v.clause)
        verdicts["holding"] = [str(c) for c in v.holding]
        verdicts["normalized_k"] = v.k
        for chk in v.checks:
            certificates.extend(encode_neighborliness(chk))
        if Clause.ISOMORPHISM in v.holding:
            certificates.append({"type": "isomorphism"})
        if v.preserving != preserving:
            mismatch = True
    else:
        verdicts["clause"] = None
    if mismatch:
        verdicts["error"] = "methods disagree"

    report = {
        "command": "check",
        "inputs": {"config": cfg, "k": k, "i": i, "method": args.method},
        "verdicts": verdicts,
        "certificates": certificates,
    }
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6), "jobs": args.jobs}
    emit(dump(report), args.output)
    if mismatch:
        sys.stderr.write("error: verdicts disagree between methods\n")
        return EXIT_VIOLATION
    return EXIT_OK if preserving else EXIT_VIOLATION


# -- partitions ----------------------------------------------------------------


def cmd_partitions(args) -> int:
    s = load_config(args.config)
    if s.n > args.max_n:
        raise InputError(f"{s.n} points exceed --max-n {args.max_n}")
    emit(partition_table(s).to_csv(), args.output)
    return EXIT_OK


# -- construct -----------------------------------------------------------------


def _need(args, *names):
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise InputError(f"{args.kind} needs {' '.join(missing)}")


def cmd_construct(args) -> int:
    kind = args.kind
    edges = None
    try:
        if kind == "cyclic":
            _need(args, "n", "d")
            s = con.cyclic_config(args.n, args.d)
        elif kind == "simplex-barycenter":
            _need(args, "n")
            s = con.simplex_with_barycenter(args.n)
        elif kind == "simplex":
            _need(args, "d")
            s = con.simplex(args.d)
        elif kind == "multipartite":
            _need(args, "d", "k", "n")
            s, h = con.multipartite_lift(args.d, args.k, args.n)
            edges = h
        elif kind == "direct-sum":
            _need(args, "a", "b")
            s = con.direct_sum(con.simplex(args.a), con.simplex(args.b))
        else:  # pyramid
            _need(args, "a", "b", "r")
            s = con.pyramid(con.direct_sum(con.simplex(args.a), con.simplex(args.b)), args.r)
    except ValueError as e:
        raise InputError(str(e)) from None
    if s.n > args.max_points:
        raise InputError(f"{s.n} points exceed --max-points {args.max_points}")
    cfg = config_to_json(s)
    if edges is not None:
        cfg["edges"] = [list(e) for e in edges.edges]
        cfg["k"] = edges.k
    if not args.verify:
        emit(dump(cfg), args.output)
        return EXIT_OK
    if args.output:
        emit(dump(cfg), args.output)

    certificates: list = []
    verdicts: dict = {}
    if kind == "multipartite":
        r = is_convex_embedding(s, edges)
        certificates = encode_convex_embedding(edges, r)
        verdicts = {"property": "all edge barycenters are vertices", "barycenters": len(edges), "holds": r.value}
        ok = r.value
    elif kind == "cyclic":
        j = args.d // 2
        c = is_j_neighborly_primal(s, j)
        certificates = encode_neighborliness(c)
        verdicts = {"property": f"{j}-neighborly", "holds": c.verdict}
        ok = c.verdict
    elif kind == "simplex-barycenter":
        c = is_j_almost_neighborly_primal(s, 1)
        certificates = encode_neighborliness(c)
        verdicts = {"property": "not 1-almost neighborly", "holds": not c.verdict}
        ok = not c.verdict
    elif kind == "simplex":
        ok = s.is_spanning() and s.n == s.dim + 1
        certificates = [{"type": "isomorphism"}]
        verdicts = {"property": "affinely independent", "holds": ok}
    else:
        m = min(args.a, args.b)
        r = args.r if kind == "pyramid" else 0
        checks = [
            (is_j_neighborly_primal(s, m), True),
            (is_j_neighborly_primal(s, m + 1), False),
            (is_j_almost_neighborly_primal(s, m + r), True),
            (is_j_almost_neighborly_primal(s, m + r + 1), False),
        ]
        ok = all(c.verdict == want for c, want in checks)
        for c, _ in checks:
            certificates.extend(encode_neighborliness(c))
        verdicts = {
            "property": f"{m}-neighborly, not {m + 1}-neighborly, {m + r}-almost, not {m + r + 1}-almost",
            "holds": ok,
        }
    report = {
        "command": "construct",
        "inputs": {"kind": kind, "config": cfg},
        "verdicts": verdicts,
        "certificates": certificates,
    }
    sys.stdout.write(dump(report))
    return EXIT_OK if ok else EXIT_VIOLATION


# -- selftest ------------------------------------------------------------------


def _suite_job(task):
    name, seed, trials, fault = task
    r = run_suite(name, seed, trials, fault)
    return {"name": r.name, "trials": r.trials, "failures": r.failures}


def cmd_selftest(args) -> int:
    if not -(2**63) <= args.seed < 2**64:
        raise InputError("seed must be a 64-bit integer")
    if args.trials < 0:
        raise InputError("trials must be nonnegative")
    names = list(DETERMINISTIC_SUITES)
    if args.trials > 0:
        names += list(SUITES)
    if args.suite:
        unknown = [x for x in args.suite if x not in names]
        if unknown:
            raise InputError(f"unknown or inactive suite(s): {', '.join(unknown)}")
        names = [x for x in names if x in args.suite]
    t0 = time.perf_counter()
    tasks = [(name, args.seed, args.trials, args.inject_fault) for name in names]
    suites = pmap(_suite_job, tasks, args.jobs)
    passed = all(not s["failures"] for s in suites)
    report = {
        "command": "selftest",
        "inputs": {"seed": args.seed, "trials": args.trials},
        "suites": suites,
        "passed": passed,
    }
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6), "jobs": args.jobs}
    emit(dump(report), args.output)
    for s in suites:
        if s["failures"]:
            sys.stderr.write(f"FAIL {s['name']}: {len(s['failures'])} counterexample(s); first: "
                             f"{json.dumps(s['failures'][0], sort_keys=True)}\n")
    return EXIT_OK if passed else EXIT_VIOLATION


# -- verify-certificate ----------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        with open(args.report) as fh:
            report = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {args.report}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{args.report} is not valid JSON: {e}") from None
    try:
        cfg = report["inputs"]["config"]
        s = config_from_json(cfg)
        certs = report["certificates"]
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"not a report with an embedded configuration: {e}") from None
    edges = cfg.get("edges")
    bad = validate_all(s, certs, edges)
    checked = sum(1 for c in certs if c.get("type") != "exhaustive-pass")
    out = {"checked": checked, "invalid": bad, "valid": not bad}
    sys.stdout.write(dump(out))
    return EXIT_OK if not bad else EXIT_VIOLATION


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexdim", description="Convex embeddings of hypergraphs and hypersimplex projections.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", help="print dimension tables as CSV")
    t.add_argument("which", choices=["cd", "d", "nkd"])
    t.add_argument("--n", help="n range, e.g. 2..18")
    t.add_argument("--k", help="k range")
    t.add_argument("--d", help="d range (nkd table)")
    t.add_argument("--i", type=int, default=2, help="skeleton dimension for the d table")
    t.add_argument("--diff", action="store_true", help="compare with the published values")
    t.add_argument("--max-cells", type=int, default=10000)
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_tables)

    c = sub.add_parser("check", help="check i-preservation for a configuration file")
    c.add_argument("config")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--i", type=int, default=0)
    c.add_argument("--method", choices=["direct", "gale", "both"], default="direct")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--max-n", type=int, default=12)
    c.add_argument("--max-subsets", type=int, default=5000)
    c.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte reproducibility)")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_check)

    pt = sub.add_parser("partitions", help="count (i, j)-partitions of a configuration as CSV")
    pt.add_argument("config")
    pt.add_argument("--max-n", type=int, default=12)
    pt.add_argument("-o", "--output")
    pt.set_defaults(func=cmd_partitions)

    k = sub.add_parser("construct", help="emit an explicit configuration")
    k.add_argument("kind", choices=["cyclic", "simplex-barycenter", "simplex", "multipartite", "direct-sum", "pyramid"])
    k.add_argument("--n", type=int)
    k.add_argument("--d", type=int)
    k.add_argument("--k", type=int)
    k.add_argument("--a", type=int, help="first simplex dimension (direct-sum, pyramid)")
    k.add_argument("--b", type=int, help="second simplex dimension (direct-sum, pyramid)")
    k.add_argument("--r", type=int, help="number of apexes (pyramid)")
    k.add_argument("--verify", action="store_true")
    k.add_argument("--max-points", type=int, default=500)
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_construct)

    st = sub.add_parser("selftest", help="run the property suites")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--trials", type=int, default=20)
    st.add_argument("--suite", action="append", help="restrict to a suite (repeatable)")
    st.add_argument("--jobs", type=int, default=1)
    st.add_argument("--timing", action="store_true")
    st.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    st.add_argument("-o", "--output")
    st.set_defaults(func=cmd_selftest)

    v = sub.add_parser("verify-certificate", help="re-validate a report's certificates by substitution")
    v.add_argument("report")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write("error: --jobs must be at least 1\n")
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, DuplicatePoints, NotSpanning) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
