"""Closed-form survivor sets of the second-level normal form, per case branch."""

from __future__ import annotations

from typing import FrozenSet, Iterable, Optional

from ..errors import UncoveredCase
from ..liealg import P, PRTerm, R
from . import cases as C


def group(n: int, j: int, which: str = "PPRR") -> FrozenSet[PRTerm]:
    """Terms of grade n with |z1| power j.  ``which`` picks from P1 P2 R1 R2."""
    out = []
    ctor = (P, P, R, R)
    for idx, k in enumerate((1, 2, 1, 2)):
        if which[idx] != ".":
            out.append(ctor[idx](k, j, n - j))
    return frozenset(out)


ALL = "PPRR"
NO_P1 = ".PRR"
NO_P2 = "P.RR"
ONLY_P1 = "P..."
ONLY_P2 = ".P.."


def _union(*parts: Iterable[PRTerm]) -> FrozenSet[PRTerm]:
    out = set()
    for p in parts:
        out |= set(p)
    return frozenset(out)


def _grade2_default() -> FrozenSet[PRTerm]:
    return _union({P(2, 0, 2)}, group(2, 2))


def _case_one(n: int, tag: C.CaseTag, literal: bool) -> FrozenSet[PRTerm]:
    p, q, r, s = tag.params
    if n == 2:
        return _grade2_default()
    pc = C.partition_classify(n, p, q, r, s)
    if tag.branch == C.CASE_I_EQUAL_RATIOS and pc.cls == 2:
        # equal ratios: the lone P2 term at j = mp, the full group two steps up
        j0 = (n - 2) * p // (p + q)
        return _union(group(n, j0, ONLY_P2), group(n, j0 + 2))
    if pc.cls == 1:
        j0 = (n - 1) * p // (p + q)
        j1 = (n - 1) * r // (r + s) + 1
        if j0 < j1:
            return _union(group(n, j0, NO_P1), group(n, j1, NO_P1))
        return group(n, j0)
    if pc.cls == 2:
        j0 = (n - 2) * p // (p + q)
        j1 = (n - 2) * r // (r + s) + 1
        if j0 < j1 or (literal and j0 == j1):
            return _union(group(n, j0, ONLY_P2), group(n, n))
        if j0 == j1:
            # both partial singularities land in one group: no rank drop
            return _union(group(n, j0, ONLY_P2), group(n, n, NO_P1))
        return group(n, j0)
    if pc.cls == 3:
        mp, mr = pc.m * p, pc.m_prime * r
        if mp <= mr + 1:
            return _union(group(n, 0, ALL if literal else NO_P1), group(n, mr + 2, ONLY_P1))
        return group(n, mp)
    if pc.cls == 4:
        mp, mr = pc.m * p, pc.m_prime * r
        if mp <= mr:
            return _union(group(n, mp, ONLY_P2), group(n, n, ALL if literal else NO_P1))
        return group(n, mp)
    if pc.cls == 5:
        return group(n, (n - 1) * p // (p + q))
    if pc.cls == 6:
        return group(n, (n - 2) * p // (p + q))
    return group(n, n)


def _ratio_one(n: int, tag: C.CaseTag) -> FrozenSet[PRTerm]:
    if n >= 3:
        return group(n, n)
    base = {P(2, 0, 2), P(2, 1, 1)}
    d = tag.detail
    if d == "a1_10!=a2_10":
        return _union(base, group(2, 2, "P.RR"))
    if d.startswith("a1_10=a2_10,b1_10"):
        return _union(base, group(2, 2, "PP.R"))
    if d.startswith("a1_10=a2_10=b1_10=0"):
        return _union(base, group(2, 2, "PPR."))
    raise UncoveredCase(f"no closed-form complement for branch {tag.branch} ({d})")


def predicted_complement(tag: C.CaseTag, n: int, system=None, literal: bool = False) -> FrozenSet[PRTerm]:
    """Survivor terms at grade n >= 2 that the case analysis says cannot be removed.

    ``system`` is only needed for branches whose pattern depends on rotation
    coefficients or on a10.  ``literal=True`` returns the sets exactly as the
    closed-form statements give them; the default applies the corrections
    found by exact rank computation (a few sub-cases claim a rank drop that
    does not happen, or miss one surviving term).
    """
    if n < 2:
        raise ValueError("grade must be at least 2")
    if not tag.covered:
        raise UncoveredCase(f"no closed-form complement for {tag.variant}/{tag.detail or tag.branch}")
    b = tag.branch
    if tag.variant == "I":
        return _case_one(n, tag, literal)
    if b in (C.A01_SAME_SIGN, C.A01_IRRATIONAL):
        return _grade2_default() if n == 2 else group(n, n)
    if b == C.A01_RATIO_INTEGER:
        k = tag.params[0]
        if n == 2:
            return _grade2_default()
        if n != k + 1:
            return group(n, n)
        if system is None:
            raise ValueError("system required for this branch")
        if not literal or system.cubic()[2] != 0:
            return _union({P(2, n - 1, 1)}, group(n, n, NO_P2))
        return _union({P(2, n - 1, 1)}, group(n, n))
    if b == C.A01_RATIO_ONE:
        return _ratio_one(n, tag)
    if b in (C.A10_SAME_SIGN, C.A10_IRRATIONAL):
        if n == 2:
            return _union({P(1, 2, 0)}, group(2, 0))
        return group(n, 0)
    if b == C.A01_OPPOSITE_A210_ZERO:
        p, q = tag.params[:2]
        if n == 2:
            return _grade2_default()
        if not literal and p == 1 and n in (p + q + 1, p + q + 2):
            # the sub-block at index 1 is singular here as well
            extra = {P(2, n, 0)}
            return _union(group(n, 1, ALL if n == p + q + 1 else NO_P1), extra)
        if (n - 1) % (p + q) == 0:
            return group(n, (n - 1) * p // (p + q))
        if (n - 2) % (p + q) == 0:
            return group(n, (n - 2) * p // (p + q))
        return group(n, n)
    if b == C.A01_OPPOSITE_A110_ZERO:
        p, q = tag.params[:2]
        if n == 2:
            return _grade2_default()
        if (n - 1) % (p + q) == 0:
            j0 = (n - 1) * p // (p + q)
            return _union(group(n, j0, NO_P1), group(n, n, NO_P2))
        if (n - 2) % (p + q) == 0:
            j0 = (n - 2) * p // (p + q)
            return _union(group(n, j0, ONLY_P2), group(n, n))
        return group(n, n)
    if b == C.A101_ZERO_A110_ZERO:
        return _union(group(n, n - 2, ONLY_P2), group(n, n - 1, NO_P2), group(n, n, NO_P2))
    if b == C.A101_ZERO_A210_ZERO:
        if n == 2:
            return _union({P(2, 0, 2), P(1, 2, 0)}, group(2, 1))
        if n == 3:
            return _union({P(1, 2, 1)}, group(3, 1, NO_P1))
        return group(n, n - 2)
    if b == C.A201_ZERO_A110_ZERO:
        return _union(group(n, 0, ".PRR"), group(n, n, NO_P2 if literal else ALL))
    if b == C.A201_ZERO_A210_ZERO:
        return _union(group(n, 0, ".PRR"), group(n, 2))
    if b == C.A01_ZERO_A110_ZERO:
        return _union(group(n, 0), group(n, n, NO_P2))
    if b == C.A01_ZERO_A210_ZERO:
        if system is None:
            raise ValueError("system required for this branch")
        b1_01, b2_01 = system.rot()[:2]
        at0 = ALL
        if b1_01 != 0:
            at0 = "PP.R"
        elif b2_01 != 0:
            at0 = "PPR."
        return _union(group(n, 0, at0), group(n, 1, NO_P1), group(n, 2, ONLY_P1))
    raise UncoveredCase(f"no closed-form complement for branch {b}")


def predicted_complement_or_none(tag: C.CaseTag, n: int, system=None, literal: bool = False) -> Optional[FrozenSet[PRTerm]]:
    try:
        return predicted_complement(tag, n, system, literal)
    except UncoveredCase:
        return None


def predicted_rank(tag: C.CaseTag, n: int, system=None, literal: bool = False) -> int:
    """Rank of the grade-n second-level matrix implied by the survivor count."""
    return 4 * (n + 1) - len(predicted_complement(tag, n, system, literal))
