"""Block recursions for the second-level system A x = a.

Group i of the target rows sees only x_i (through A^{i,0}) and x_{i-1}
(through A^{i-1,1}).  Ascending sweeps solve x_i from group i, descending
sweeps solve x_{i-1} from group i, and whatever lies between the two sweeps
is a small dense system.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set

from .. import linalg
from ..errors import NonUniqueSolve, SingularBlock
from ..liealg import PRTerm, basis
from .cases import CaseTag, partition_classify
from .matrix import HomMatrix

Vec = List[Fraction]


def _sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return [a - b for a, b in zip(u, v)]


def _invertible(B) -> bool:
    return linalg.rank(B) == 4


def _block_solve(B, rhs: Sequence[Fraction], index: int, kind: int) -> Vec:
    if not _invertible(B):
        raise SingularBlock(index, kind)
    return linalg.solve_right_to_left(B, rhs)


def _target_groups(a: Sequence[Fraction], n: int) -> List[Vec]:
    return [list(a[4 * j: 4 * j + 4]) for j in range(n + 1)]


def asc_solve(M: HomMatrix, a: Sequence[Fraction], upto: int, x: Optional[List[Vec]] = None) -> List[Vec]:
    """Solve x_0..x_{upto-1} from groups 0..upto-1 (x_{-1} = 0)."""
    n = M.n
    t = _target_groups(a, n)
    x = x if x is not None else [[Fraction(0)] * 4 for _ in range(n)]
    for i in range(upto):
        rhs = t[i]
        if i > 0:
            rhs = _sub(rhs, linalg.matvec(M.sub[i - 1], x[i - 1]))
        x[i] = _block_solve(M.diag[i], rhs, i, 0)
    return x


def dec_solve(M: HomMatrix, a: Sequence[Fraction], downto: int, x: Optional[List[Vec]] = None) -> List[Vec]:
    """Solve x_{n-1}..x_{downto} from groups n..downto+1 (x_n = 0)."""
    n = M.n
    t = _target_groups(a, n)
    x = x if x is not None else [[Fraction(0)] * 4 for _ in range(n)]
    for i in range(n, downto, -1):
        rhs = t[i]
        if i < n:
            rhs = _sub(rhs, linalg.matvec(M.diag[i], x[i]))
        x[i - 1] = _block_solve(M.sub[i - 1], rhs, i - 1, 1)
    return x


def _middle_solve(
    M: HomMatrix,
    a: Sequence[Fraction],
    x: List[Vec],
    lo: int,
    hi: int,
    removed: Set[int],
    free: Iterable[int] = (),
) -> None:
    """Dense solve for x_lo..x_{hi-1} on the removed rows of groups lo..hi."""
    dense = M.dense()
    cols = list(range(4 * lo, 4 * hi))
    free = set(free)
    active = [c for c in cols if c not in free]
    rows = [r for r in range(4 * lo, 4 * hi + 4) if r in removed]
    known = [c for c in range(4 * M.n) if c not in cols]
    flat = [v for xi in x for v in xi]
    rhs = []
    for r in rows:
        rhs.append(a[r] - sum((dense[r][c] * flat[c] for c in known), Fraction(0)))
    sub = [[dense[r][c] for c in active] for r in rows]
    if free and sub and linalg.rank(sub) < len(active):
        raise NonUniqueSolve(f"middle system for groups {lo}..{hi} has a kernel after fixing {sorted(free)}")
    try:
        sol = linalg.solve_right_to_left(sub, rhs) if sub else [Fraction(0)] * len(active)
    except ValueError as exc:
        raise NonUniqueSolve(f"middle system for groups {lo}..{hi} is inconsistent") from exc
    for c in cols:
        x[c // 4][c % 4] = Fraction(0)
    for c, v in zip(active, sol):
        x[c // 4][c % 4] = v


def structured_solve(
    M: HomMatrix,
    a: Sequence[Fraction],
    survivors: Iterable[PRTerm],
    free: Iterable[int] = (),
) -> Vec:
    """Block-recursive solution leaving ``survivors`` untouched.

    ``free`` lists flat column indices pinned to zero inside the middle
    region (the seeds a closed-form derivation chooses).
    """
    n = M.n
    B = basis(n)
    surv = set(survivors)
    removed = {i for i, t in enumerate(B) if t not in surv}

    def clean(j: int) -> bool:
        return all(4 * j + k in removed for k in range(4))

    k = 0
    while k < n and clean(k) and _invertible(M.diag[k]):
        k += 1
    lo = n
    while lo > 0 and clean(lo) and _invertible(M.sub[lo - 1]):
        lo -= 1
    x = [[Fraction(0)] * 4 for _ in range(n)]
    if k >= lo:
        asc_solve(M, a, lo, x)
        dec_solve(M, a, lo, x)
    else:
        asc_solve(M, a, k, x)
        dec_solve(M, a, lo, x)
        _middle_solve(M, a, x, k, lo, removed, free)
    flat = [v for xi in x for v in xi]
    res = _sub(a, M.apply(flat))
    bad = [B[i].name() for i in sorted(removed) if res[i] != 0]
    if bad:
        raise NonUniqueSolve("block recursion leaves removed rows nonzero: " + ", ".join(bad))
    return flat


def seed_columns(tag: CaseTag, n: int) -> List[int]:
    """Columns a closed-form derivation pins to zero (Case I singular grades)."""
    if tag.variant != "I" or n < 3:
        return []
    p, q, r, s = tag.params
    pc = partition_classify(n, p, q, r, s)
    if pc.cls == 1:
        j0 = (n - 1) * p // (p + q)
        j1 = (n - 1) * r // (r + s) + 1
        if j0 < j1:
            mr = j1 - 1
            return [4 * mr + 2, 4 * mr + 3]  # beta1, beta2 at mr
    if pc.cls in (2, 4):
        j0 = (n - 2) * p // (p + q)
        return [4 * j0 + 1]                 # alpha2 at mp
    return []


def special_solve_caseI(M: HomMatrix, a: Sequence[Fraction], tag: CaseTag, survivors) -> Vec:
    """Singular-grade Case I solve with the closed-form seeds pinned to zero.

    Raises NonUniqueSolve when pinning the seeds does not determine the
    remaining unknowns (the non-vanishing guard of the derivation).
    """
    return structured_solve(M, a, survivors, seed_columns(tag, M.n))


def lemma_solve(M: HomMatrix, a: Sequence[Fraction], tag: CaseTag, survivors) -> Dict[str, object]:
    """Dispatch to the block recursions; reports which sweeps were used."""
    seeds = seed_columns(tag, M.n)
    x = structured_solve(M, a, survivors, seeds)
    return {"x": x, "seeds": seeds}
