"""Exact linear algebra over the rationals.

Matrices are lists of rows of Fractions.  Rank uses fraction-free (Bareiss)
elimination on integer-scaled rows; solving and null spaces use plain
Fraction row reduction, which is exact and fast enough at these sizes.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def transpose(M: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def matvec(M: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> List[Fraction]:
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in M]


def _integer_rows(M: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    out = []
    for row in M:
        d = 1
        for v in row:
            d = lcm(d, Fraction(v).denominator)
        out.append([int(Fraction(v) * d) for v in row])
    return out


def rank(M: Sequence[Sequence[Fraction]]) -> int:
    """Rank by fraction-free Bareiss elimination."""
    A = _integer_rows(M)
    if not A or not A[0]:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, rows):
            f = A[i][c]
            Ai, Ar = A[i], A[r]
            for k in range(c, cols):
                Ai[k] = (p * Ai[k] - f * Ar[k]) // prev
        prev = p
        r += 1
        if r == rows:
            break
    return r


def rref(M: Sequence[Sequence[Fraction]], col_order: Sequence[int] | None = None) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form, visiting columns in ``col_order``."""
    A = [[Fraction(v) for v in row] for row in M]
    if not A:
        return A, []
    cols = len(A[0])
    order = list(range(cols)) if col_order is None else list(col_order)
    pivots: List[int] = []
    r = 0
    for c in order:
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def nullspace(M: Sequence[Sequence[Fraction]], ncols: int | None = None, col_order: Sequence[int] | None = None) -> Matrix:
    """Basis of {x : M x = 0}; one vector per free column (free entry 1)."""
    if not M:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    cols = len(M[0])
    R_, piv = rref(M, col_order)
    free = [c for c in (col_order or range(cols)) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for row, p in zip(R_, piv):
            x[p] = -row[f]
        basis.append(x)
    return basis


def solve_right_to_left(M: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> List[Fraction]:
    """A solution of M x = b choosing pivots from the last column backwards.

    Free unknowns (the leftmost dependent columns) are set to zero.
    Raises ValueError when the system is inconsistent.
    """
    if not M:
        return []
    cols = len(M[0])
    aug = [list(row) + [Fraction(v)] for row, v in zip(M, b)]
    R_, piv = rref(aug, list(range(cols - 1, -1, -1)) + [cols])
    if cols in piv:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * cols
    for row, p in zip(R_, piv):
        x[p] = row[cols]
    return x


class RowSpaceBuilder:
    """Incrementally test whether a new row is independent of accepted rows."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: List[Tuple[int, List[Fraction]]] = []  # (pivot col, normalized row)

    def reduce(self, v: Sequence[Fraction]) -> List[Fraction]:
        v = [Fraction(x) for x in v]
        for p, row in self.rows:
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence[Fraction]) -> bool:
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = 1 / w[p]
        self.rows.append((p, [x * inv for x in w]))
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def greedy_rows(M: Sequence[Sequence[Fraction]], order: Sequence[int]) -> List[int]:
    """Indices of rows chosen greedily in ``order`` that keep independence."""
    if not M:
        return []
    rb = RowSpaceBuilder(len(M[0]))
    return [i for i in order if rb.add(M[i])]


def column_space_contains(M: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    if not M or not M[0]:
        return not any(v)
    return rank(M) == rank([list(r) + [x] for r, x in zip(M, v)])
