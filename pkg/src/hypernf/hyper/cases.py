"""Case tags from the cubic radial coefficients, and the partition of grades."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence, Tuple

from ..errors import DegenerateCubic

# Branch identifiers.  ``covered`` branches have a closed-form survivor set.
CASE_I_EQUAL_RATIOS = "I:equal-ratios"        # (p, q) == (r, s)
CASE_I_EQUAL_SUMS = "I:equal-sums"            # p + q == r + s
CASE_I_COPRIME_SUMS = "I:coprime-sums"        # gcd(p + q, r + s) == 1
CASE_I_SHARED_FACTOR = "I:shared-factor"      # gcd(p + q, r + s) > 1

A01_SAME_SIGN = "a01-same-sign"               # a1_01 a2_01 > 0, a2/a1 not in N
A01_RATIO_INTEGER = "a01-ratio-integer"       # a2/a1 in N, a2 != a1
A01_RATIO_ONE = "a01-ratio-one"               # a2 == a1 (sub-branches by a10, b10)
A10_SAME_SIGN = "a10-same-sign"               # a1_10 a2_10 > 0, a1/a2 not in N
A01_IRRATIONAL = "a01-irrational"             # override only
A10_IRRATIONAL = "a10-irrational"             # override only

A01_OPPOSITE_A210_ZERO = "a01-opposite,a2_10=0"
A01_OPPOSITE_A110_ZERO = "a01-opposite,a1_10=0"
A101_ZERO_A110_ZERO = "a1_01=0,a1_10=0"
A101_ZERO_A210_ZERO = "a1_01=0,a2_10=0"
A201_ZERO_A110_ZERO = "a2_01=0,a1_10=0"
A201_ZERO_A210_ZERO = "a2_01=0,a2_10=0"
A01_ZERO_A110_ZERO = "a01=0,a1_10=0"
A01_ZERO_A210_ZERO = "a01=0,a2_10=0"

UNCOVERED = "uncovered"

OVERRIDES = (A01_IRRATIONAL, A10_IRRATIONAL)


@dataclass(frozen=True)
class CaseTag:
    variant: str                      # "I", "II" or "III"
    branch: str
    params: Optional[Tuple[int, int, int, int]] = None  # (p, q, r, s) when meaningful
    detail: str = ""                  # human-readable refinement (e.g. ratio-one sub-item)
    override: Optional[str] = None

    @property
    def covered(self) -> bool:
        return self.branch != UNCOVERED and not self.detail.startswith("uncovered")

    def to_json(self) -> dict:
        out = {"variant": self.variant, "branch": self.branch}
        if self.params is not None:
            out["params"] = list(self.params)
        if self.detail:
            out["detail"] = self.detail
        if self.override:
            out["override"] = self.override
        return out


def _is_natural(q: Fraction) -> bool:
    return q.denominator == 1 and q.numerator >= 1


def _ratio_pair(x: Fraction, y: Fraction) -> Tuple[int, int]:
    """For x/y = -a/b < 0 return coprime positive (b, a) i.e. (p, q) with x/y = -q/p."""
    r = -x / y
    return r.denominator, r.numerator


def classify_case(
    a1_01,
    a2_01,
    a1_10,
    a2_10,
    force: bool = False,
    override: Optional[str] = None,
    rot: Sequence = (0, 0, 0, 0),
) -> CaseTag:
    """Classify the cubic radial coefficients (and, for ratio-one, the rotation ones)."""
    a1_01, a2_01, a1_10, a2_10 = (Fraction(x) for x in (a1_01, a2_01, a1_10, a2_10))
    b1_01, b2_01, b1_10, b2_10 = (Fraction(x) for x in rot)
    if not any((a1_01, a2_01, a1_10, a2_10)) and not force:
        raise DegenerateCubic("all cubic radial coefficients vanish")
    if override is not None:
        if override not in OVERRIDES:
            raise ValueError(f"unknown override {override!r}")
        return CaseTag("II", override, override=override)

    p01 = a1_01 * a2_01
    p10 = a1_10 * a2_10
    variant = "III" if p01 * p10 == 0 else ("I" if p01 < 0 and p10 < 0 else "II")

    if variant == "I":
        p, q = _ratio_pair(a1_01, a2_01)
        r, s = _ratio_pair(a1_10, a2_10)
        params = (p, q, r, s)
        if (p, q) == (r, s):
            branch = CASE_I_EQUAL_RATIOS
        elif p + q == r + s:
            branch = CASE_I_EQUAL_SUMS
        elif gcd(p + q, r + s) == 1:
            branch = CASE_I_COPRIME_SUMS
        else:
            branch = CASE_I_SHARED_FACTOR
        return CaseTag("I", branch, params)

    # Positive a01 product governs first (also inside the zero-product case).
    if p01 > 0:
        ratio = a2_01 / a1_01
        if ratio == 1:
            if a1_10 != a2_10:
                detail = "a1_10!=a2_10"
            elif b1_10 != 0 or a1_10 != 0:
                detail = "a1_10=a2_10,b1_10 or a1_10 nonzero"
            elif b2_10 != 0:
                detail = "a1_10=a2_10=b1_10=0,b2_10!=0"
            else:
                detail = "uncovered: a10=b1_10=b2_10=0"
            return CaseTag(variant, A01_RATIO_ONE, detail=detail)
        if _is_natural(ratio):
            return CaseTag(variant, A01_RATIO_INTEGER, params=(int(ratio), 0, 0, 0))
        return CaseTag(variant, A01_SAME_SIGN)
    if p10 > 0:
        ratio = a1_10 / a2_10
        if not _is_natural(ratio):
            return CaseTag(variant, A10_SAME_SIGN)
        return CaseTag(variant, UNCOVERED, detail="a10 same sign with integer ratio a1_10/a2_10")

    if variant == "II":
        return CaseTag("II", UNCOVERED, detail="mixed signs")

    # Case III with p01 <= 0 and p10 <= 0.
    if p01 < 0:
        p, q = _ratio_pair(a1_01, a2_01)
        if a2_10 == 0 and a1_10 != 0:
            return CaseTag("III", A01_OPPOSITE_A210_ZERO, (p, q, 0, 0))
        if a1_10 == 0 and a2_10 != 0:
            return CaseTag("III", A01_OPPOSITE_A110_ZERO, (p, q, 0, 0))
        return CaseTag("III", UNCOVERED, (p, q, 0, 0), detail="a01 opposite signs, a10 both zero")
    one_zero_10 = (a1_10 == 0) != (a2_10 == 0)
    if a1_01 == 0 and a2_01 != 0 and one_zero_10:
        return CaseTag("III", A101_ZERO_A110_ZERO if a1_10 == 0 else A101_ZERO_A210_ZERO)
    if a2_01 == 0 and a1_01 != 0 and one_zero_10:
        return CaseTag("III", A201_ZERO_A110_ZERO if a1_10 == 0 else A201_ZERO_A210_ZERO)
    if a1_01 == 0 and a2_01 == 0:
        if one_zero_10:
            return CaseTag("III", A01_ZERO_A110_ZERO if a1_10 == 0 else A01_ZERO_A210_ZERO)
        return CaseTag("III", UNCOVERED, detail="a01=0 with a10 product nonzero or a10=0")
    return CaseTag("III", UNCOVERED, detail="remaining zero-product pattern")


def classify_system(system, force: bool = False, override: Optional[str] = None) -> CaseTag:
    return classify_case(*system.cubic(), force=force, override=override, rot=system.rot())


# ---------------------------------------------------------------- partition


@dataclass(frozen=True)
class PartitionClass:
    cls: int                                # 1..7
    m: Optional[int] = None
    m_prime: Optional[int] = None

    @property
    def name(self) -> str:
        return f"P{self.cls}"

    def to_json(self) -> dict:
        out: dict = {"class": self.name}
        if self.m is not None:
            out["m"] = self.m
        if self.m_prime is not None:
            out["m_prime"] = self.m_prime
        return out


def partition_classify(n: int, p: int, q: int, r: int, s: int) -> PartitionClass:
    """Locate n in the seven-class partition of the positive integers."""
    if n < 1:
        raise ValueError("n must be positive")
    if min(p, q, r, s) < 1 or gcd(p, q) != 1 or gcd(r, s) != 1:
        raise ValueError("invalid Case-I parameters")
    d1, d2 = p + q, r + s
    L = lcm(d1, d2)
    if n > 1 and (n - 1) % L == 0:
        return PartitionClass(1, (n - 1) // L)
    if n > 2 and (n - 2) % L == 0:
        return PartitionClass(2, (n - 2) // L)
    # P3: n = m d1 + 1 = m' d2 + 2 with m, m' >= 1
    if n > 1 and (n - 1) % d1 == 0 and n > 2 and (n - 2) % d2 == 0:
        return PartitionClass(3, (n - 1) // d1, (n - 2) // d2)
    # P4: n = m' d2 + 1 = m d1 + 2
    if n > 1 and (n - 1) % d2 == 0 and n > 2 and (n - 2) % d1 == 0:
        return PartitionClass(4, (n - 2) // d1, (n - 1) // d2)
    if n > 1 and (n - 1) % d1 == 0:
        return PartitionClass(5, (n - 1) // d1)
    if n > 2 and (n - 2) % d1 == 0:
        return PartitionClass(6, (n - 2) // d1)
    return PartitionClass(7)

