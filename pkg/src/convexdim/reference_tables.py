"""Published values of the three dimension tables, transcribed cell by cell.

Each row is a whitespace-separated string; ``.`` marks an empty cell and
``inf`` an unbounded value.  These are data, not computed: the ``tables
--diff`` command and the tests compare the formulas against them.
"""

from __future__ import annotations

import math

# cd of the complete k-uniform hypergraph; rows k = 1..9, columns n = 2..18
CD_COLUMNS = range(2, 19)
CD_ROWS = {
    1: "1 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2",
    2: ". 2 2 3 4 4 4 4 4 4 4 4 4 4 4 4 4",
    3: ". . 2 3 4 5 6 6 6 6 6 6 6 6 6 6 6",
    4: ". . . 2 4 5 6 7 8 8 8 8 8 8 8 8 8",
    5: ". . . . 2 4 6 7 8 9 10 10 10 10 10 10 10",
    6: ". . . . . 2 4 6 8 9 10 11 12 12 12 12 12",
    7: ". . . . . . 2 4 6 8 10 11 12 13 14 14 14",
    8: ". . . . . . . 2 4 6 8 10 12 13 14 15 16",
    9: ". . . . . . . . 2 4 6 8 10 12 14 15 16",
}

# d(n, k, 2); rows k = 1..9, columns n = 3..18
D2_COLUMNS = range(3, 19)
D2_ROWS = {
    1: "2 3 4 5 6 6 6 6 6 6 6 6 6 6 6 6",
    2: "2 3 4 5 6 7 8 8 8 8 8 8 8 8 8 8",
    3: ". 3 4 5 6 7 8 9 10 10 10 10 10 10 10 10",
    4: ". . 4 5 6 6 7 8 9 10 11 12 12 12 12 12",
    5: ". . . 5 6 7 7 8 9 10 11 12 13 14 14 14",
    6: ". . . . 6 7 8 8 9 10 11 12 13 14 15 16",
    7: ". . . . . 6 8 9 9 10 11 12 13 14 15 16",
    8: ". . . . . . 6 8 10 10 11 12 13 14 15 16",
    9: ". . . . . . . 6 8 10 11 12 13 14 15 16",
}

# n_kd; rows k = 1..7, columns d = 1..14
NKD_COLUMNS = range(1, 15)
NKD_ROWS = {
    1: "2 inf inf inf inf inf inf inf inf inf inf inf inf inf",
    2: "2 4 5 inf inf inf inf inf inf inf inf inf inf inf",
    3: "3 4 5 6 7 inf inf inf inf inf inf inf inf inf",
    4: "4 5 5 6 7 8 9 inf inf inf inf inf inf inf",
    5: "5 6 6 7 7 8 9 10 11 inf inf inf inf inf",
    6: "6 7 7 8 8 9 9 10 11 12 13 inf inf inf",
    7: "7 8 8 9 9 10 10 11 11 12 13 14 15 inf",
}


def _cell(token: str):
    if token == ".":
        return None
    if token == "inf":
        return math.inf
    return int(token)


def _expand(rows, columns) -> dict[tuple[int, int], int | float]:
    out = {}
    for k, text in rows.items():
        tokens = text.split()
        if len(tokens) != len(columns):
            raise ValueError(f"row {k} has {len(tokens)} cells, expected {len(columns)}")
        for col, tok in zip(columns, tokens):
            v = _cell(tok)
            if v is not None:
                out[(k, col)] = v
    return out


def cd_table() -> dict[tuple[int, int], int]:
    """``(k, n) -> cd`` for every filled cell."""
    return _expand(CD_ROWS, CD_COLUMNS)


def d2_table() -> dict[tuple[int, int], int]:
    """``(k, n) -> d(n, k, 2)`` for every filled cell."""
    return _expand(D2_ROWS, D2_COLUMNS)


def nkd_table() -> dict[tuple[int, int], int | float]:
    """``(k, d) -> n_kd`` for every cell; unbounded cells are ``math.inf``."""
    return _expand(NKD_ROWS, NKD_COLUMNS)
