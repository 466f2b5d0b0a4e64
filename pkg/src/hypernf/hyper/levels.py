"""Higher-level maps d^{n,s}, their kernels, and the level-by-level driver.

A level-s generator at grade n is a tuple (X_{n-s+1}, ..., X_{n-1}); the
top component X_n is always free because Theta is central, so it is
omitted.  The leading part (X_{n-s+1}, ..., X_{n-2}) must lie in the kernel
of the level-(s-1) map at grade n-1, which makes the effect of the combined
generator on grades below n vanish and its effect on grade n linear.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .. import linalg
from ..errors import HyperNFError, KernelViolation
from ..liealg import GElement, PRTerm, SystemPR, basis, bracket_pr
from ..verify import exp_ad
from .cases import CaseTag, classify_system
from .complement import predicted_complement_or_none
from .report import NormalFormReport
from .solve import GeneratorRecord, priority_order, solve_grade

Tuple_ = Tuple[GElement, ...]


def _apply_map(gens: Sequence[GElement], system: SystemPR, n: int, s: int) -> GElement:
    """sum_{i=1}^{s-1} [X_{n-i}, v_i] for gens = (X_{n-s+1}, ..., X_{n-1})."""
    out = GElement()
    for idx, X in enumerate(gens):
        g = n - s + 1 + idx
        if X:
            out = out + bracket_pr(X, system.grade_part(n - g))
    return out.grade_part(n)


def d_ns(generators: Sequence[GElement], system: SystemPR, n: int, s: int, check: bool = True) -> GElement:
    """Level-s homological map at grade n.

    ``generators`` is (X_{n-s+1}, ..., X_{n-1}) or the same with X_n
    appended; X_n contributes nothing.  With ``check`` the kernel
    certificate of the leading part is re-evaluated.
    """
    gens = list(generators)
    if s < 1:
        raise ValueError("level must be at least 1")
    if len(gens) == s:
        gens = gens[:-1]
    if len(gens) != s - 1:
        raise ValueError(f"expected {s - 1} or {s} components, got {len(generators)}")
    for idx, X in enumerate(gens):
        g = n - s + 1 + idx
        if X and (X.min_grade() != g or X.max_grade() != g):
            raise ValueError(f"component {idx} must be grade-{g} homogeneous")
    if check:
        for k in range(n - s + 2, n):
            # grade-k effect of the components of grade < k
            lead = gens[: k - (n - s + 1)]
            eff = _apply_map(lead, system, k, len(lead) + 1)
            if eff:
                raise KernelViolation(f"leading components fail the kernel condition at grade {k}")
    return _apply_map(gens, system, n, s)


def _coords(t: Tuple_, n: int, s: int) -> List[Fraction]:
    out: List[Fraction] = []
    for idx, X in enumerate(t):
        out += X.vector(n - s + 1 + idx)
    return out


def _from_coords(c: Sequence[Fraction], n: int, s: int) -> Tuple_:
    out = []
    pos = 0
    for idx in range(s - 1):
        g = n - s + 1 + idx
        k = len(basis(g))
        out.append(GElement.from_vector(g, c[pos: pos + k]))
        pos += k
    return tuple(out)


class KernelTracker:
    """Kernel and domain bases for a fixed snapshot of the low grades."""

    def __init__(self, system: SystemPR):
        self.system = system
        self._lead: Dict[Tuple[int, int], List[Tuple_]] = {}

    def domain(self, n: int, s: int) -> List[Tuple_]:
        """Basis of admissible (X_{n-s+1}, ..., X_{n-1}) at level s, grade n."""
        if s < 2:
            return []
        zero = GElement()
        lead = self.lead(n - 1, s - 1) if s > 2 else []
        dom = [t + (zero,) for t in lead]
        for e in basis(n - 1):
            dom.append((zero,) * (s - 2) + (GElement.term(e),))
        return dom

    def images(self, n: int, s: int) -> List[List[Fraction]]:
        return [_apply_map(t, self.system, n, s).vector(n) for t in self.domain(n, s)]

    def lead(self, n: int, s: int) -> List[Tuple_]:
        """Canonical basis of the leading components of ker d^{n,s} (s >= 2)."""
        key = (n, s)
        if key in self._lead:
            return self._lead[key]
        if n - s + 1 < 1:
            self._lead[key] = []
            return []
        dom = self.domain(n, s)
        cols = self.images(n, s)
        M = linalg.transpose(cols) if cols else []
        null = linalg.nullspace(M, len(dom)) if dom else []
        vecs = []
        for c in null:
            t = tuple(
                sum((X.scale(ci) for X, ci in zip((d[idx] for d in dom), c) if ci), GElement())
                for idx in range(s - 1)
            )
            vecs.append(_coords(t, n, s))
        if vecs:
            R_, piv = linalg.rref(vecs)
            vecs = [row for row in R_[: len(piv)]]
        out = [_from_coords(v, n, s) for v in vecs]
        self._lead[key] = out
        return out


def kernel_basis(system: SystemPR, n: int, s: int) -> List[Tuple_]:
    """Basis of ker d^{n,s}.

    For s = 1 this is a basis of the whole grade-n space (1-tuples).  For
    s >= 2 the tuples are the constrained components (X_{n-s+1}, ...,
    X_{n-1}); the free top component X_n is left out.  Each basis tuple has
    leading coefficient 1 in term order.
    """
    if s == 1:
        return [(GElement.term(e),) for e in basis(n)]
    return KernelTracker(system).lead(n, s)


def image_vectors(system: SystemPR, n: int, s: int) -> List[List[Fraction]]:
    """Coefficient vectors of d^{n,s} over a basis of its admissible domain."""
    if s <= 1:
        return []
    return KernelTracker(system).images(n, s)


def level_solve(
    system: SystemPR,
    n: int,
    s: int,
    style: str = "paper",
    tag: Optional[CaseTag] = None,
    tracker: Optional[KernelTracker] = None,
) -> GeneratorRecord:
    """Remove as much of grade n as the level-s image allows."""
    if s == 2:
        return solve_grade(system, n, style, tag, compare_lemma=False)[0]
    tr = tracker or KernelTracker(system)
    dom = tr.domain(n, s)
    cols = tr.images(n, s)
    B = basis(n)
    M = linalg.transpose(cols)
    a = system.grade_part(n).vector(n)
    pred = predicted_complement_or_none(tag, n, system) if tag is not None else None
    order = priority_order(n, style, pred if style == "paper" else None)
    rows = linalg.greedy_rows(M, order)
    sub = [M[i] for i in rows]
    # applying the generator adds M x to grade n
    x = linalg.solve_right_to_left(sub, [-a[i] for i in rows]) if sub else [Fraction(0)] * len(dom)
    gens = tuple(
        sum((d[idx].scale(xi) for d, xi in zip(dom, x) if xi), GElement()) for idx in range(s - 1)
    )
    res = [ai + bi for ai, bi in zip(a, linalg.matvec(M, x))] if M else list(a)
    removed = sorted((B[i] for i in rows), key=PRTerm.sort_key)
    rem = set(removed)
    surviving = sorted((t for t in B if t not in rem), key=PRTerm.sort_key)
    return GeneratorRecord(s, n, gens, len(rows), removed, surviving, GElement.from_vector(n, res))


def _apply(system: SystemPR, rec: GeneratorRecord, N: int) -> SystemPR:
    X = rec.combined
    if not X:
        return system
    new = exp_ad(X, system, N)
    n = rec.grade
    if new.body.truncate(n - 1) != system.body.truncate(n - 1):
        raise KernelViolation(f"level-{rec.level} generator at grade {n} changed lower grades")
    if new.grade_part(n) != rec.residual:
        raise HyperNFError(f"grade {n} after transformation differs from the solved residual")
    return new


def _levels(s_max) -> Union[int, str]:
    if isinstance(s_max, str):
        if s_max.lower() in ("inf", "infinite", "infinity"):
            return "inf"
        return int(s_max)
    return int(s_max)


def s_level_normalize(
    system: SystemPR,
    N: int,
    s_max: Union[int, str] = 2,
    style: str = "paper",
    tag: Optional[CaseTag] = None,
    force: bool = False,
    override: Optional[str] = None,
) -> NormalFormReport:
    """Normalize level by level (2, 3, ...) through grade N."""
    lv = _levels(s_max)
    top = N if lv == "inf" else lv
    if tag is None:
        tag = classify_system(system, force=force, override=override)
    report = NormalFormReport(input=system, max_grade=N, level=lv, style=style, case_tag=tag)
    current = system.with_body(system.body.truncate(N))
    for s in range(2, top + 1):
        tracker = KernelTracker(current) if s > 2 else None
        for n in range(s, N + 1):
            if s == 2:
                rec, _ = solve_grade(current, n, style, tag)
            else:
                rec = level_solve(current, n, s, style, tag, tracker)
            current = _apply(current, rec, N)
            report.records.append(rec)
            report.chain.append(rec.combined)
            if s == 2:
                report.rank_table[n] = rec.rank
            for note in rec.notes:
                report.discrepancies.append(f"level {s}, grade {n}: {note}")
    report.final = current
    return report


__all__ = [
    "d_ns",
    "kernel_basis",
    "image_vectors",
    "level_solve",
    "s_level_normalize",
    "KernelTracker",
]
