"""Exact rational linear algebra and linear feasibility.

Everything here works over :class:`fractions.Fraction`; nothing is ever
rounded.  Feasibility is decided by a two-phase-free (phase I only) simplex
method with Bland's rule, run on an integer tableau with fraction-free
(Edmonds/Bareiss) pivoting.  Infeasible systems come with a Farkas
certificate and feasible ones with a witness; either is checked by
substitution alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]
Matrix = list[list[Fraction]]

__all__ = [
    "Rational",
    "Vector",
    "Matrix",
    "LinearSystem",
    "Feasible",
    "Infeasible",
    "solve_feasibility",
    "check_witness",
    "check_certificate",
    "rref",
    "rank",
    "kernel_basis",
    "affine_rank",
    "zero_in_interior",
    "zero_in_relative_interior",
    "positive_dependence",
    "Separation",
    "Combination",
    "supporting_functional",
    "supporting_functional_general",
    "proper_supporting_functional",
    "to_fraction",
    "dot",
    "vec",
]


def to_fraction(x) -> Fraction:
    """Parse ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {x!r} exactly; pass int, Fraction or 'p/q'")


def vec(xs: Iterable) -> Vector:
    return tuple(to_fraction(x) for x in xs)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


# ---------------------------------------------------------------------------
# Linear systems and the simplex kernel
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearSystem:
    """Equalities ``a.x = b`` and weak inequalities ``a.x >= b`` over free x."""

    nvars: int
    equalities: tuple[tuple[Vector, Fraction], ...] = ()
    inequalities: tuple[tuple[Vector, Fraction], ...] = ()

    def __post_init__(self):
        for row, _ in self.equalities + self.inequalities:
            if len(row) != self.nvars:
                raise ValueError(
                    f"row has {len(row)} coefficients, system has {self.nvars} variables"
                )

    @classmethod
    def build(cls, nvars: int, equalities=(), inequalities=()) -> "LinearSystem":
        eqs = tuple((vec(a), to_fraction(b)) for a, b in equalities)
        ineqs = tuple((vec(a), to_fraction(b)) for a, b in inequalities)
        return cls(nvars, eqs, ineqs)

    @property
    def nrows(self) -> int:
        return len(self.equalities) + len(self.inequalities)


@dataclass(frozen=True)
class Feasible:
    witness: Vector

    feasible = True

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Infeasible:
    """Multipliers, equalities first then inequalities, in input order.

    Inequality multipliers are nonnegative, the combined left-hand side is the
    zero vector and the combined right-hand side is exactly 1, so the
    combination reads ``0 >= 1``.
    """

    certificate: Vector

    feasible = False

    def __bool__(self):
        return False


def check_witness(sys: LinearSystem, x: Sequence[Fraction]) -> bool:
    if len(x) != sys.nvars:
        return False
    return all(dot(a, x) == b for a, b in sys.equalities) and all(
        dot(a, x) >= b for a, b in sys.inequalities
    )


def check_certificate(sys: LinearSystem, y: Sequence[Fraction]) -> bool:
    rows = sys.equalities + sys.inequalities
    if len(y) != len(rows):
        return False
    neq = len(sys.equalities)
    if any(m < 0 for m in y[neq:]):
        return False
    lhs = [Fraction(0)] * sys.nvars
    rhs = Fraction(0)
    for m, (a, b) in zip(y, rows):
        if m:
            for j, c in enumerate(a):
                if c:
                    lhs[j] += m * c
            rhs += m * b
    return all(c == 0 for c in lhs) and rhs > 0


def _phase_one(A: list[list[int]], b: list[int]):
    """Minimise the sum of artificials for ``A z = b, z >= 0`` with ``b >= 0``.

    A and b are integers.  The tableau is kept fraction-free: the true entries
    are ``T / D`` with ``D`` the current pivot denominator, and every update is
    an exact integer division.  Returns ``(z, None)`` when feasible or
    ``(None, y)`` with ``A^T y <= 0`` and ``b.y > 0`` when not.
    """
    m = len(A)
    ncols = len(A[0]) if m else 0
    width = ncols + m + 1  # columns | artificials | rhs
    T = []
    for i in range(m):
        row = list(A[i]) + [0] * m + [b[i]]
        row[ncols + i] = 1
        T.append(row)
    obj = [0] * width
    for i in range(m):
        Ti = T[i]
        for j in range(ncols):
            if Ti[j]:
                obj[j] -= Ti[j]
        obj[-1] -= b[i]
    basis = [ncols + i for i in range(m)]
    D = 1

    while True:
        col = next((j for j in range(ncols + m) if obj[j] < 0), -1)
        if col < 0:
            break
        row = -1
        for i in range(m):
            a = T[i][col]
            if a > 0:
                if row < 0:
                    row = i
                    continue
                # compare T[i][-1]/a against T[row][-1]/T[row][col]
                lhs = T[i][-1] * T[row][col]
                rhs = T[row][-1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[row]):
                    row = i
        if row < 0:  # cannot happen in phase I: the objective is bounded below
            raise RuntimeError("unbounded phase-one problem")
        prow = T[row]
        p = prow[col]
        # every update below is an exact division by the previous pivot D
        for i in range(m):
            if i == row:
                continue
            Ti = T[i]
            f = Ti[col]
            if f:
                T[i] = [(a * p - f * b) // D for a, b in zip(Ti, prow)]
            elif p != D:
                T[i] = [a * p // D for a in Ti]
        f = obj[col]
        obj = [(a * p - f * b) // D for a, b in zip(obj, prow)]
        basis[row] = col
        D = p

    if obj[-1] < 0:
        # y_i = 1 - reduced cost of artificial i
        y = [1 - Fraction(obj[ncols + i], D) for i in range(m)]
        return None, y
    z = [Fraction(0)] * ncols
    for i in range(m):
        if basis[i] < ncols:
            z[basis[i]] = Fraction(T[i][-1], D)
    return z, None


def _integer_row(coeffs: Sequence[Fraction], rhs: Fraction):
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = lcm(den, c.denominator)
    if rhs.denominator != 1:
        den = lcm(den, rhs.denominator)
    return [int(c * den) for c in coeffs], int(rhs * den), den


def solve_feasibility(sys: LinearSystem) -> Feasible | Infeasible:
    """Decide ``{a.x = b} & {a.x >= b}`` exactly.

    Rows of the form ``a x_i >= b`` with ``a > 0`` are absorbed as lower
    bounds (variable shifts) rather than tableau rows, so systems whose
    inequalities are mostly sign constraints stay small.
    """
    n = sys.nvars
    neq = len(sys.equalities)

    lower: dict[int, tuple[Fraction, int]] = {}
    general: list[int] = []
    for r, (a, b) in enumerate(sys.inequalities):
        support = [j for j in range(n) if a[j]]
        if len(support) == 1 and a[support[0]] > 0:
            j = support[0]
            bound = b / a[j]
            if j not in lower or bound > lower[j][0]:
                lower[j] = (bound, r)
        else:
            general.append(r)

    # column layout: one column per bounded var, two per free var, then slacks
    colmap: list[tuple[int, int]] = []  # (var, sign)
    first_col = {}
    for j in range(n):
        first_col[j] = len(colmap)
        colmap.append((j, 1))
        if j not in lower:
            colmap.append((j, -1))
    nstruct = len(colmap)
    ncols = nstruct + len(general)

    shift = [lower[j][0] if j in lower else Fraction(0) for j in range(n)]
    rows: list[tuple[Vector, Fraction, int | None]] = []  # (coeffs, rhs, slack col)
    for a, b in sys.equalities:
        rows.append((a, b - dot(a, shift), None))
    for s, r in enumerate(general):
        a, b = sys.inequalities[r]
        rows.append((a, b - dot(a, shift), nstruct + s))

    A_int, b_int, scale, sign = [], [], [], []
    for a, b, slack in rows:
        full = [Fraction(0)] * ncols
        for j in range(n):
            if a[j]:
                c = first_col[j]
                full[c] = a[j]
                if j not in lower:
                    full[c + 1] = -a[j]
        if slack is not None:
            full[slack] = Fraction(-1)
        sg = -1 if b < 0 else 1
        if sg < 0:
            full = [-c for c in full]
            b = -b
        ri, bi, den = _integer_row(full, b)
        A_int.append(ri)
        b_int.append(bi)
        scale.append(den)
        sign.append(sg)

    if not A_int:
        return Feasible(tuple(shift))

    z, y_std = _phase_one(A_int, b_int)
    if z is not None:
        x = list(shift)
        for c, (j, sg) in enumerate(colmap):
            if z[c]:
                x[j] += sg * z[c]
        return Feasible(tuple(x))

    # map phase-one duals back onto the original rows
    y_rows = [y_std[i] * sign[i] * scale[i] for i in range(len(rows))]
    eq_mult = y_rows[:neq]
    ineq_mult = [Fraction(0)] * len(sys.inequalities)
    for s, r in enumerate(general):
        ineq_mult[r] = y_rows[neq + s]
    for j, (bound, r) in lower.items():
        rho = Fraction(0)
        for i, (a, _, _) in enumerate(rows):
            if a[j] and y_rows[i]:
                rho += y_rows[i] * a[j]
        ineq_mult[r] = -rho / sys.inequalities[r][0][j]
    cert = eq_mult + ineq_mult
    total = sum(
        (m * b for m, (_, b) in zip(cert, sys.equalities + sys.inequalities)),
        Fraction(0),
    )
    return Infeasible(tuple(m / total for m in cert))


# ---------------------------------------------------------------------------
# Dense linear algebra
# ---------------------------------------------------------------------------


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns."""
    R = [[to_fraction(x) for x in row] for row in m]
    if not R:
        return R, []
    nrows, ncols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        piv = R[r][c]
        if piv != 1:
            R[r] = [x / piv for x in R[r]]
        prow = R[r]
        for i in range(nrows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], prow)]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Canonical basis of ``{x : m x = 0}``.

    One vector per free column of the reduced row-echelon form of ``m``, with a
    1 in that column and 0 in the other free columns.  The RREF is unique, so
    the basis depends only on the row space of ``m``.
    """
    if ncols is None:
        if not m:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(m[0])
    R, pivots = rref(m) if m else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull; -1 for no points."""
    if not points:
        return -1
    base = points[0]
    diffs = [[x - y for x, y in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


# ---------------------------------------------------------------------------
# Positive spanning
# ---------------------------------------------------------------------------


def _dependence_system(vectors: Sequence[Sequence[Fraction]], m: int) -> LinearSystem:
    n = len(vectors)
    eqs = [(tuple(vectors[j][t] for j in range(n)), Fraction(0)) for t in range(m)]
    ineqs = []
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        ineqs.append((tuple(e), Fraction(1)))
    return LinearSystem(n, tuple(eqs), tuple(ineqs))


def _dim_of(vectors, m):
    if m is None:
        if not vectors:
            raise ValueError("dimension required for an empty vector list")
        m = len(vectors[0])
    if any(len(v) != m for v in vectors):
        raise ValueError("vectors must share one dimension")
    return m


def positive_dependence(vectors: Sequence[Sequence[Fraction]], m: int | None = None):
    """Solve ``sum l_j v_j = 0`` with every ``l_j >= 1``."""
    m = _dim_of(vectors, m)
    vectors = [vec(v) for v in vectors]
    return solve_feasibility(_dependence_system(vectors, m))


def zero_in_relative_interior(vectors, m: int | None = None) -> bool:
    return positive_dependence(vectors, m).feasible


def zero_in_interior(vectors, m: int | None = None) -> bool:
    """True iff the vectors positively span their m-dimensional space."""
    m = _dim_of(vectors, m)
    if vectors and rank(vectors) != m:
        return False
    if not vectors and m != 0:
        return False
    return positive_dependence(vectors, m).feasible


# ---------------------------------------------------------------------------
# Supporting hyperplanes of point sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Separation:
    """Affine functional ``x -> normal.x`` with value ``offset`` on the face."""

    normal: Vector
    offset: Fraction


@dataclass(frozen=True)
class Combination:
    """Coefficients ``on`` and ``off`` with ``sum on_a a + sum off_b b = 0`` and
    ``sum on + sum off = 0``; the meaning of the normalisation of ``off`` is
    documented on the function that produced it."""

    on: Vector
    off: Vector


def _multiplier_system(on, off, dim, *, sum_one: bool):
    # columns: one free multiplier per `on` point, one bounded per `off` point
    non, noff = len(on), len(off)
    nv = non + noff
    eqs = []
    for t in range(dim):
        eqs.append((tuple(p[t] for p in on) + tuple(p[t] for p in off), Fraction(0)))
    eqs.append(((Fraction(1),) * nv, Fraction(0)))
    ineqs = []
    if sum_one:
        eqs.append(((Fraction(0),) * non + (Fraction(1),) * noff, Fraction(1)))
        low = Fraction(0)
    else:
        low = Fraction(1)
    for j in range(noff):
        e = [Fraction(0)] * nv
        e[non + j] = Fraction(1)
        ineqs.append((tuple(e), low))
    return LinearSystem(nv, tuple(eqs), tuple(ineqs))


def _dimension(on, off):
    for p in list(on) + list(off):
        return len(p)
    return 0


def supporting_functional(on, off) -> Separation | Combination:
    """Find ``f`` with ``f = c`` on ``on`` and ``f <= c - 1`` on ``off``.

    Solved through the theorem of alternatives, which keeps the tableau at
    ``dim + 2`` rows: either some convex combination of ``off`` is an affine
    combination of ``on`` (returned as a :class:`Combination`, ``off``
    coefficients summing to 1), or the Farkas certificate of that system is
    the functional itself.
    """
    if not off:
        return Separation(tuple(Fraction(0) for _ in range(_dimension(on, off))), Fraction(0))
    return _supporting_integer(on, off, _dimension(on, off))


def supporting_functional_general(on, off) -> Separation | Combination:
    """Same contract as :func:`supporting_functional`, routed through
    :func:`solve_feasibility`; kept as a cross-check of the fast path."""
    if not off:
        return Separation(tuple(Fraction(0) for _ in range(_dimension(on, off))), Fraction(0))
    dim = _dimension(on, off)
    sys = _multiplier_system(on, off, dim, sum_one=True)
    res = solve_feasibility(sys)
    if res.feasible:
        w = res.witness
        return Combination(w[: len(on)], w[len(on) :])
    y = res.certificate
    return Separation(tuple(y[:dim]), -y[dim])


def _supporting_integer(on, off, dim) -> Separation | Combination:
    # Phase I directly on integers: columns mu+ | mu- | lambda, rows are the
    # scaled coordinates, the sum row and sum(lambda) = 1.
    den = 1
    for p in list(on) + list(off):
        for x in p:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
    ion = [[x.numerator * (den // x.denominator) for x in p] for p in on]
    ioff = [[x.numerator * (den // x.denominator) for x in p] for p in off]
    p, q = len(on), len(off)
    A = []
    for t in range(dim):
        col_on = [a[t] for a in ion]
        A.append(col_on + [-c for c in col_on] + [b[t] for b in ioff])
    A.append([1] * p + [-1] * p + [1] * q)
    A.append([0] * (2 * p) + [1] * q)
    z, y = _phase_one(A, [0] * (dim + 1) + [1])
    if z is not None:
        mu = tuple(z[a] - z[p + a] for a in range(p))
        return Combination(mu, tuple(z[2 * p :]))
    last = y[-1]
    normal = tuple(y[t] * den / last for t in range(dim))
    return Separation(normal, -y[dim] / last)


def proper_supporting_functional(on, rest) -> Separation | Combination:
    """Find ``f`` with ``f = c`` on ``on``, ``f <= c`` on ``rest``, not constant.

    The returned separation satisfies ``sum_{r in rest} (f(r) - c) = -1``.  The
    alternative is an affine dependence with every ``rest`` coefficient >= 1.
    """
    if not rest:
        return Combination(tuple(Fraction(0) for _ in on), ())
    dim = _dimension(on, rest)
    sys = _multiplier_system(on, rest, dim, sum_one=False)
    res = solve_feasibility(sys)
    if res.feasible:
        w = res.witness
        return Combination(w[: len(on)], w[len(on) :])
    y = res.certificate
    return Separation(tuple(y[:dim]), -y[dim])
