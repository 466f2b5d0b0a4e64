"""Second-level solve at one grade: pick a complement, then the generator."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .. import linalg
from ..errors import HyperNFError
from ..liealg import GElement, PRTerm, SystemPR, basis
from .cases import CaseTag, classify_system
from .complement import predicted_complement_or_none
from .matrix import assemble_A
from .recursions import lemma_solve

STYLES = ("paper", "lex")


def priority_order(n: int, style: str, keep_last: Optional[FrozenSet[PRTerm]] = None) -> List[int]:
    """Row indices in the order they should be removed.

    ``paper``: rows outside ``keep_last`` in ascending block order, then the
    rows of ``keep_last``; with no prediction the plain block order is used,
    which leaves the highest |z1| power groups standing.
    ``lex``: the term ordering of the algebra module.
    """
    B = basis(n)
    idx = list(range(len(B)))
    if style == "lex":
        return sorted(idx, key=lambda i: B[i].sort_key())
    if style != "paper":
        raise ValueError(f"unknown style {style!r}")
    if not keep_last:
        return idx
    return [i for i in idx if B[i] not in keep_last] + [i for i in idx if B[i] in keep_last]


@dataclass
class GeneratorRecord:
    level: int
    grade: int
    element: Tuple[GElement, ...]
    rank: int
    removed: List[PRTerm]
    surviving: List[PRTerm]
    residual: GElement
    path: str = "generic"
    notes: List[str] = field(default_factory=list)

    @property
    def combined(self) -> GElement:
        out = GElement()
        for g in self.element:
            out = out + g
        return out

    def to_json(self) -> dict:
        from .report import gelement_json

        return {
            "level": self.level,
            "grade": self.grade,
            "rank": self.rank,
            "removed": [t.name() for t in self.removed],
            "surviving": [t.name() for t in self.surviving],
            "generator": [gelement_json(g) for g in self.element],
            "residual": gelement_json(self.residual),
            "path": self.path,
            "notes": list(self.notes),
        }


def _generic(M, a, order):
    rows = linalg.greedy_rows(M, order)
    sub = [M[i] for i in rows]
    rhs = [a[i] for i in rows]
    x = linalg.solve_right_to_left(sub, rhs) if sub else [Fraction(0)] * (len(M[0]) if M else 0)
    return rows, x


def solve_grade(
    system: SystemPR,
    n: int,
    style: str = "paper",
    tag: Optional[CaseTag] = None,
    path: str = "generic",
    compare_lemma: bool = True,
) -> Tuple[GeneratorRecord, GElement]:
    """Normalize grade n at level 2.

    The generic path always succeeds.  With ``path="lemma"`` the generator
    comes from the block recursions (errors propagate).  When
    ``compare_lemma`` is set and the branch is covered, the lemma path is
    also run and any residual disagreement is noted on the record.
    """
    if tag is None:
        try:
            tag = classify_system(system)
        except HyperNFError:
            tag = None
    H = assemble_A(n, system)
    M = H.dense()
    B = basis(n)
    a = system.grade_part(n).vector(n)
    pred = predicted_complement_or_none(tag, n, system) if tag is not None else None
    order = priority_order(n, style, pred if style == "paper" else None)
    rows, x = _generic(M, a, order)
    notes: List[str] = []

    lemma_x = None
    if pred is not None and (path == "lemma" or compare_lemma):
        try:
            lemma_x = lemma_solve(H, a, tag, pred)["x"]
        except HyperNFError as exc:
            if path == "lemma":
                raise
            notes.append(f"lemma path unavailable: {exc}")
    if path == "lemma":
        if pred is None:
            raise ValueError("lemma path needs a covered case branch")
        x = lemma_x
        removed_set = {B[i] for i in rows}
        if {t for t in B if t not in pred} != removed_set:
            notes.append("lemma survivors differ from the generic complement")
        rows = [i for i, t in enumerate(B) if t not in pred]

    res_vec = [ai - bi for ai, bi in zip(a, linalg.matvec(M, x))]
    if lemma_x is not None and path != "lemma":
        lres = [ai - bi for ai, bi in zip(a, linalg.matvec(M, lemma_x))]
        if lres != res_vec:
            diff = [B[i].name() for i in range(len(B)) if lres[i] != res_vec[i]]
            notes.append("lemma and generic residuals differ at " + ", ".join(diff))
        elif lemma_x != x:
            notes.append("lemma generator differs from generic by a kernel element")

    removed = sorted((B[i] for i in rows), key=PRTerm.sort_key)
    surviving = sorted((t for t in B if t not in set(removed)), key=PRTerm.sort_key)
    residual = GElement.from_vector(n, res_vec)
    X = GElement.from_vector(n - 1, x)
    rec = GeneratorRecord(2, n, (X,), len(rows), removed, surviving, residual, path, notes)
    return rec, residual


__all__ = ["solve_grade", "priority_order", "GeneratorRecord", "STYLES"]
