"""Exact sparse linear algebra over Q and GF(2).

Only what homology needs: sparse matrices, rank, products and a dense
row reduction used to cross-check the sparse eliminator.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

__all__ = ["QQ", "GF2", "Field", "get_field", "SparseMatrix", "rank", "compose_check", "row_reduce", "inverse"]


class Field:
    """A coefficient field; ``QQ`` and ``GF2`` are the two instances."""

    def __init__(self, name: str, characteristic: int):
        self.name = name
        self.characteristic = characteristic

    def __call__(self, value):
        if self.characteristic == 2:
            if isinstance(value, Fraction):
                if value.denominator % 2 == 0:
                    raise ZeroDivisionError(f"{value} has no image in GF(2)")
                value = value.numerator
            return int(value) & 1
        if isinstance(value, int):
            return value  # exact already; Fraction only when needed
        v = Fraction(value)
        return v.numerator if v.denominator == 1 else v

    def __repr__(self) -> str:
        return self.name

    def __reduce__(self):
        return (get_field, (self.name,))


QQ = Field("Q", 0)
GF2 = Field("GF2", 2)


def get_field(name) -> Field:
    if isinstance(name, Field):
        return name
    key = str(name).upper().replace("(", "").replace(")", "")
    if key in ("Q", "QQ"):
        return QQ
    if key in ("GF2", "F2", "Z2"):
        return GF2
    raise ValueError(f"unknown field {name!r}; use Q or GF2")


class SparseMatrix:
    """``rows x cols`` matrix stored as ``{(row, col): nonzero value}``."""

    __slots__ = ("rows", "cols", "field", "entries")

    def __init__(self, rows: int, cols: int, entries=None, field: Field = QQ):
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries: dict[tuple[int, int], object] = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (r, c), v in items:
                if not (0 <= r < rows and 0 <= c < cols):
                    raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
                v = field(v)
                acc = self.entries.get((r, c), field(0)) + v
                if field is GF2:
                    acc &= 1
                if acc:
                    self.entries[(r, c)] = acc
                else:
                    self.entries.pop((r, c), None)

    @classmethod
    def from_dense(cls, rows, field: Field = QQ) -> "SparseMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        return cls(n, m, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}, field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)}, field)

    def to_dense(self) -> list[list]:
        out = [[self.field(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()}, self.field)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        by_row: dict[int, list[tuple[int, object]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], object] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return SparseMatrix(self.rows, other.cols, {k: v for k, v in acc.items() if v}, self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def rank(self) -> int:
        return rank(self)

    def triplets(self) -> list[tuple[int, int, object]]:
        return [(r, c, v) for (r, c), v in sorted(self.entries.items())]

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz}, field={self.field!r})"


def _integer_rows(m: SparseMatrix) -> dict[int, dict[int, int]]:
    """Rows of a rational matrix scaled to primitive integer vectors."""
    rows: dict[int, dict[int, object]] = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
    out = {}
    for r, row in rows.items():
        if all(isinstance(v, int) for v in row.values()):
            out[r] = _primitive(row)
            continue
        den = 1
        for v in row.values():
            d = Fraction(v).denominator
            den = den * d // gcd(den, d)
        out[r] = _primitive({c: int(Fraction(v) * den) for c, v in row.items()})
    return out


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()} if g > 1 else row


class _Eliminator:
    """Shared bookkeeping for sparse elimination: row lengths in a lazy heap
    and the set of live rows touching each column."""

    def __init__(self, rows):
        self.rows = rows
        self.col_rows: dict[int, set[int]] = {}
        for r, row in rows.items():
            for c in row:
                self.col_rows.setdefault(c, set()).add(r)
        self.heap = [(len(row), r) for r, row in rows.items()]
        heapq.heapify(self.heap)

    def pop_pivot(self):
        """Markowitz-style choice: shortest row, then its sparsest column."""
        while True:
            n, r = heapq.heappop(self.heap)
            row = self.rows.get(r)
            if row is not None and len(row) == n:
                break
        del self.rows[r]
        for c in row:
            self.col_rows[c].discard(r)
        pc = min(row, key=lambda c: (len(self.col_rows[c]), c))
        return row, pc

    def replace(self, r, old, new):
        for c in old:
            if c not in new:
                self.col_rows[c].discard(r)
        for c in new:
            if c not in old:
                self.col_rows.setdefault(c, set()).add(r)
        if new:
            self.rows[r] = new
            heapq.heappush(self.heap, (len(new), r))
        else:
            del self.rows[r]


def _rank_q(m: SparseMatrix) -> int:
    el = _Eliminator(_integer_rows(m))
    rank = 0
    while el.rows:
        prow, pc = el.pop_pivot()
        a = prow[pc]
        for r in list(el.col_rows[pc]):
            row = el.rows[r]
            b = row[pc]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new: dict[int, int] = {c: v * fa for c, v in row.items()} if fa != 1 else dict(row)
            for c, v in prow.items():
                nv = new.get(c, 0) - fb * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            el.replace(r, row, _primitive(new) if new else new)
        rank += 1
    return rank


def _rank_gf2(m: SparseMatrix) -> int:
    rows: dict[int, set[int]] = {}
    for (r, c), v in m.entries.items():
        if v & 1:
            rows.setdefault(r, set()).add(c)
    el = _Eliminator(rows)
    rank = 0
    while el.rows:
        prow, pc = el.pop_pivot()
        for r in list(el.col_rows[pc]):
            row = el.rows[r]
            el.replace(r, row, row ^ prow)
        rank += 1
    return rank


def rank(m: SparseMatrix) -> int:
    """Exact rank over the matrix's field."""
    if not m.entries:
        return 0
    if m.field is GF2:
        return _rank_gf2(m)
    return _rank_q(m)


def compose_check(a: SparseMatrix, b: SparseMatrix) -> bool:
    """True iff ``a @ b`` (apply ``b`` first, then ``a``) is the zero matrix."""
    if a.cols != b.rows:
        raise ValueError(f"cannot compose {a.shape} after {b.shape}")
    return (a @ b).is_zero()


def row_reduce(m: SparseMatrix):
    """Dense Gauss-Jordan reduction; returns ``(T, R, pivots)`` with ``T @ m == R``.

    ``T`` is invertible and ``R`` is in reduced row echelon form.  Meant for
    small matrices and cross-checks, not for production ranks.
    """
    f = m.field
    n, k = m.rows, m.cols
    R = m.to_dense()
    T = [[f(1) if i == j else f(0) for j in range(n)] for i in range(n)]
    pivots: list[int] = []
    r = 0

    def norm(v):
        return v & 1 if f is GF2 else v

    for c in range(k):
        p = next((i for i in range(r, n) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        T[r], T[p] = T[p], T[r]
        inv = 1 if f is GF2 else Fraction(1, 1) / R[r][c]
        R[r] = [norm(v * inv) for v in R[r]]
        T[r] = [norm(v * inv) for v in T[r]]
        for i in range(n):
            if i != r and R[i][c]:
                fac = R[i][c]
                R[i] = [norm(a - fac * b) for a, b in zip(R[i], R[r])]
                T[i] = [norm(a - fac * b) for a, b in zip(T[i], T[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return SparseMatrix.from_dense(T, f) if n else SparseMatrix(0, 0, field=f), \
        SparseMatrix.from_dense(R, f) if n else SparseMatrix(0, k, field=f), pivots


def inverse(m: SparseMatrix) -> SparseMatrix:
    """Inverse of a square invertible matrix (dense, small sizes)."""
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    T, R, piv = row_reduce(m)
    if len(piv) != m.rows:
        raise ZeroDivisionError("matrix is singular")
    return T

