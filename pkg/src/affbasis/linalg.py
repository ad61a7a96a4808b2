"""Exact sparse linear algebra over the rationals.

Two tools: an incremental span reducer with a totally ordered column set
(used to echelonize relation spaces and orbit spans, where pivots must be
taken at the minimal column in the monomial order), and a fraction-free
integer rank for the large graded elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class SpanReducer:
    """Maintains a reduced basis of sparse Fraction vectors.  `column_key`
    maps a column identifier to a sortable key; pivots sit at the minimal
    column of each vector."""

    def __init__(self, column_key):
        self.column_key = column_key
        self.rows: dict = {}  # pivot column -> {column: Fraction}, pivot coeff 1
        self.order: list = []  # pivots in insertion order

    def _pivot(self, vec: dict):
        return min(vec, key=self.column_key)

    def reduce(self, vec: dict) -> dict:
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        while vec:
            p = self._pivot(vec)
            row = self.rows.get(p)
            if row is None:
                return vec
            c = vec[p]
            for k, v in row.items():
                nv = vec.get(k, Fraction(0)) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec

    def insert(self, vec: dict) -> bool:
        red = self.reduce(vec)
        if not red:
            return False
        p = self._pivot(red)
        c = red[p]
        self.rows[p] = {k: v / c for k, v in red.items()}
        self.order.append(p)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return list(self.rows.keys())

    def back_eliminate(self) -> None:
        """Fully reduce: clear every pivot column from the other rows."""
        for p in list(self.rows):
            row = self.rows[p]
            for q, other in self.rows.items():
                if q == p or p not in other:
                    continue
                c = other[p]
                for k, v in row.items():
                    nv = other.get(k, Fraction(0)) - c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)

    def row_for(self, pivot) -> dict:
        return self.rows[pivot]


def _strip_gcd(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def integer_rows(rows) -> list[dict]:
    """Scale Fraction-valued sparse rows to coprime integer rows."""
    out = []
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        if not row:
            continue
        lcm = 1
        for v in row.values():
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
        out.append(_strip_gcd({k: int(v * lcm) for k, v in row.items()}))
    return out


def sparse_triplets(rows, column_order=None) -> str:
    """Serialize sparse rows as audit-friendly triplet text: a header line
    `rows cols entries`, then one `row col value` line per entry (0-based,
    values exact decimal strings), ordered by row then column."""
    rows = [dict(r) for r in rows]
    if column_order is None:
        seen = set()
        for r in rows:
            seen.update(r)
        column_order = sorted(seen, key=str)
    index = {c: k for k, c in enumerate(column_order)}
    entries = []
    for i, r in enumerate(rows):
        for c, v in r.items():
            entries.append((i, index[c], v))
    entries.sort(key=lambda e: (e[0], e[1]))
    lines = [f"{len(rows)} {len(column_order)} {len(entries)}"]
    lines.extend(f"{i} {j} {v}" for i, j, v in entries)
    return "\n".join(lines)


def sparse_rank(rows) -> int:
    """Exact rank of a list of sparse rows (Fraction or int values), by
    fraction-free elimination with a sparsity-guided pivot choice."""
    work = integer_rows(rows)
    rank = 0
    while work:
        # shortest row first keeps fill-in down
        idx = min(range(len(work)), key=lambda i: len(work[i]))
        pivot_row = work.pop(idx)
        if not pivot_row:
            continue
        col_use: dict = {}
        for r in work:
            for k in r:
                col_use[k] = col_use.get(k, 0) + 1
        pivot_col = min(
            pivot_row, key=lambda k: (col_use.get(k, 0), abs(pivot_row[k]))
        )
        a = pivot_row[pivot_col]
        rank += 1
        next_work = []
        for r in work:
            b = r.get(pivot_col)
            if b is None:
                next_work.append(r)
                continue
            new = {}
            for k, v in r.items():
                nv = a * v - b * pivot_row.get(k, 0)
                if nv:
                    new[k] = nv
            for k, v in pivot_row.items():
                if k not in r:
                    nv = -b * v
                    if nv:
                        new[k] = nv
            new.pop(pivot_col, None)
            if new:
                next_work.append(_strip_gcd(new))
        work = next_work
    return rank
