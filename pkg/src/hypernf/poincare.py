"""First-level (Poincare) normalization of complex polynomial vector fields.

The linear part must be A = diag(i w1, -i w1, i w2, -i w2).  Every monomial
field z^e d/dx_j is an eigenvector of ad_A, so the homological equation is
solved coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import BadLinearPart, NotInSpan, PostRationalityCheck
from .liealg import ComplexVF, SystemPR, check_reality, complex_to_pr, linear_part_A
from .scalars import I as SI
from .scalars import FreqScalar
from .verify import exp_ad

Monomial = Tuple[Tuple[int, int, int, int], int]

# (plane-1, plane-2) eigenvalue weights of the coordinate directions
_SIGMA = {1: (1, 0), 2: (-1, 0), 3: (0, 1), 4: (0, -1)}


def _weights(mono: Monomial) -> Tuple[int, int]:
    (m1, m2, n1, n2), j = mono
    s1, s2 = _SIGMA[j]
    return m1 - m2 - s1, n1 - n2 - s2


def eigenvalue(mono: Monomial) -> FreqScalar:
    """ad_A eigenvalue of the monomial field: i[(m1-m2-s1) w1 + (n1-n2-s2) w2]."""
    c1, c2 = _weights(mono)
    return SI * (FreqScalar.w1() * c1 + FreqScalar.w2() * c2)


def is_resonant(mono: Monomial) -> bool:
    # w1, w2 are independent symbols, so the eigenvalue vanishes iff both weights do
    return _weights(mono) == (0, 0)


@dataclass
class FirstLevelResult:
    generators: List[Tuple[int, ComplexVF]] = field(default_factory=list)
    complex_form: ComplexVF = field(default_factory=ComplexVF)
    normal_form: Optional[SystemPR] = None
    residual_degree: int = 0
    issues: List[str] = field(default_factory=list)

    @property
    def chain(self) -> List[ComplexVF]:
        return [g for _, g in self.generators]

    def to_json(self) -> dict:
        from .hyper.report import complex_json as vf
        from .hyper.report import system_json

        return {
            "generators": [{"degree": d, "field": vf(g)} for d, g in self.generators],
            "complex_form": vf(self.complex_form),
            "normal_form": system_json(self.normal_form) if self.normal_form is not None else None,
            "residual_degree": self.residual_degree,
            "issues": list(self.issues),
        }


def _check_linear(v: ComplexVF) -> None:
    lin = v.degree_part(1)
    if lin != linear_part_A():
        raise BadLinearPart(f"linear part is {lin}, expected {linear_part_A()}")
    if v.degree_part(0):
        raise BadLinearPart("constant terms are not allowed at an equilibrium")


def first_level_normalize(v: ComplexVF, N: int, strict: bool = True) -> FirstLevelResult:
    """Remove all non-resonant monomials of degree 2..2N+1.

    With ``strict`` a resonant coefficient that still depends on the
    frequencies raises PostRationalityCheck; otherwise ``normal_form`` is
    left as None and the reason is kept in ``issues``.
    """
    if N < 0:
        raise ValueError("grade cap must be non-negative")
    _check_linear(v)
    check_reality(v)
    D = 2 * N + 1
    cur = v.truncate(D)
    gens: List[Tuple[int, ComplexVF]] = []
    for d in range(2, D + 1):
        part = cur.degree_part(d)
        X = {}
        for key, c in part.items():
            if not is_resonant(key):
                # [X, A] = -eig X at degree d
                X[key] = c / eigenvalue(key)
        if X:
            g = ComplexVF(X)
            gens.append((d, g))
            cur = exp_ad(g, cur, N)
    res = FirstLevelResult(gens, cur, None, D)
    try:
        res.normal_form = complex_to_pr(cur)
    except NotInSpan as exc:
        if strict:
            raise PostRationalityCheck(str(exc)) from exc
        res.issues.append(str(exc))
    return res


def resonant_part(v: ComplexVF) -> ComplexVF:
    return ComplexVF({k: c for k, c in v.items() if is_resonant(k)})


__all__ = [
    "eigenvalue",
    "is_resonant",
    "first_level_normalize",
    "FirstLevelResult",
    "resonant_part",
    "Monomial",
]
