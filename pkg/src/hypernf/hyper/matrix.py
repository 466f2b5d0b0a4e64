"""Block lower-bidiagonal homological matrices for the second level."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .. import linalg
from ..errors import GradeTooSmall
from ..liealg import GElement, SystemPR, basis, bracket_pr

Block = List[List[Fraction]]
Quad = Tuple[Fraction, Fraction, Fraction, Fraction]


def _q(x) -> Quad:
    return tuple(Fraction(v) for v in x)  # type: ignore[return-value]


def build_block(n: int, j: int, kind: int, cubic: Sequence, rot: Sequence) -> Block:
    """The 4x4 block A^{j,kind} of the grade-n matrix.

    ``cubic`` = (a1_01, a2_01, a1_10, a2_10), ``rot`` = (b1_01, b2_01, b1_10, b2_10).
    Row order (P1, P2, R1, R2) of the target, column order
    (alpha1, alpha2, beta1, beta2) of the generator.
    """
    if not 0 <= j <= n - 1:
        raise ValueError(f"block index j={j} outside 0..{n - 1}")
    a101, a201, a110, a210 = _q(cubic)
    b101, b201, b110, b210 = _q(rot)
    z = Fraction(0)
    if kind == 0:
        d = j * a101 + (n - j - 1) * a201
        e = j * a101 + (n - j - 2) * a201
        M = [
            [d, -a101, z, z],
            [z, e, z, z],
            [z, -b101, d, z],
            [z, -b201, z, d],
        ]
    elif kind == 1:
        f = (j - 1) * a110 + (n - j - 1) * a210
        e = j * a110 + (n - j - 1) * a210
        M = [
            [f, z, z, z],
            [-a210, e, z, z],
            [-b110, z, e, z],
            [-b210, z, z, e],
        ]
    else:
        raise ValueError("kind must be 0 or 1")
    return [[2 * v for v in row] for row in M]


@dataclass(frozen=True)
class HomMatrix:
    """A_{n,1}: diagonal blocks A^{j,0} and subdiagonal blocks A^{j,1}."""

    n: int
    diag: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]
    sub: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return (4 * (self.n + 1), 4 * self.n)

    def block(self, j: int, kind: int) -> Block:
        src = self.diag if kind == 0 else self.sub
        return [list(r) for r in src[j]]

    def dense(self) -> List[List[Fraction]]:
        rows, cols = self.shape
        M = linalg.zeros(rows, cols)
        for c in range(self.n):
            for kind, r in ((0, c), (1, c + 1)):
                B = self.diag[c] if kind == 0 else self.sub[c]
                for a in range(4):
                    for b in range(4):
                        M[4 * r + a][4 * c + b] = B[a][b]
        return M

    def apply(self, x: Sequence[Fraction]) -> List[Fraction]:
        return linalg.matvec(self.dense(), x)


def _freeze(B: Block):
    return tuple(tuple(r) for r in B)


def assemble_A(n: int, system: SystemPR) -> HomMatrix:
    """Second-level matrix at grade n.

    With X = sum of columns * x, the grade-n effect of X on the system is
    [X, v_1] = -A x, so the residual target - A x vanishes on solved rows.
    """
    if n < 2:
        raise GradeTooSmall(f"grade {n} < 2")
    cubic, rot = system.cubic(), system.rot()
    diag = tuple(_freeze(build_block(n, j, 0, cubic, rot)) for j in range(n))
    sub = tuple(_freeze(build_block(n, j, 1, cubic, rot)) for j in range(n))
    return HomMatrix(n, diag, sub)


def bracket_matrix(n: int, v1: GElement) -> List[List[Fraction]]:
    """Columns = coefficients of [v1, e] for grade-(n-1) basis e (oracle path)."""
    cols = [bracket_pr(v1, GElement.term(e)).vector(n) for e in basis(n - 1)]
    return linalg.transpose(cols) if cols else [[] for _ in basis(n)]


def rank_exact(M) -> int:
    dense = M.dense() if isinstance(M, HomMatrix) else M
    return linalg.rank(dense)
