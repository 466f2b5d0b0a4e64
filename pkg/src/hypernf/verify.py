"""Independent checks: truncated Lie series, chain replay and brute-force images."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from . import linalg
from .liealg import ComplexVF, GElement, SystemPR, basis, bracket_complex, bracket_pr

Element = Union[GElement, ComplexVF, SystemPR]


def exp_ad(X, V, N: int):
    """sum_j ad_X^j V / j!, dropping everything above grade N.

    Works on GElement, SystemPR (Theta is central and passes through) and
    ComplexVF (grade N means polynomial degree 2N+1).
    """
    if isinstance(V, SystemPR):
        if isinstance(X, SystemPR):
            X = X.body
        return V.with_body(exp_ad(X, V.body, N))
    if isinstance(V, GElement):
        if isinstance(X, ComplexVF):
            raise TypeError("mixed representations")
        if X and X.min_grade() < 1:
            raise ValueError("generator must have grade >= 1")
        out = V.truncate(N)
        term = out
        j = 0
        while X and term:
            j += 1
            term = bracket_pr(X, term, max_grade=N).scale(Fraction(1, j))
            out = out + term
        return out
    if isinstance(V, ComplexVF):
        D = 2 * N + 1
        if X and X.min_degree() < 2:
            raise ValueError("generator must be nonlinear")
        out = V.truncate(D)
        term = out
        j = 0
        while X and term:
            j += 1
            term = bracket_complex(X, term, max_degree=D).scale(Fraction(1, j))
            out = out + term
        return out
    raise TypeError(f"unsupported element {type(V).__name__}")


@dataclass
class Verdict:
    status: str
    mismatches: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"status": self.status, "mismatches": list(self.mismatches)}


def apply_chain(V, generators: Sequence, N: int):
    """Left fold of exp_ad over the recorded generator sequence."""
    for X in generators:
        V = exp_ad(X, V, N)
    return V


def compare(expected, actual, N: int) -> List[str]:
    """Term-by-term differences (expected is the recomputed value)."""
    out: List[str] = []
    if isinstance(expected, SystemPR) or isinstance(actual, SystemPR):
        if not (isinstance(expected, SystemPR) and isinstance(actual, SystemPR)):
            return ["representation mismatch"]
        if expected.includes_theta != actual.includes_theta:
            out.append("Theta: presence differs")
        expected, actual = expected.body, actual.body
    if isinstance(expected, GElement):
        e, a = expected.truncate(N), actual.truncate(N)
        terms = sorted(set(e.support()) | set(a.support()), key=lambda t: t.sort_key())
        for t in terms:
            if e[t] != a[t]:
                out.append(f"{t.name()}: recomputed {e[t]}, reported {a[t]}")
        return out
    D = 2 * N + 1
    e, a = expected.truncate(D), actual.truncate(D)
    keys = sorted(set(e.keys()) | set(a.keys()))
    for k in keys:
        if e[k] != a[k]:
            out.append(f"{k}: recomputed {e[k]}, reported {a[k]}")
    return out


def verify_run(input_system, report) -> Verdict:
    """Replay the report's generator chain on the input and compare exactly.

    ``report`` needs ``chain`` (list of generators, applied in order),
    ``final`` (the claimed normal form), ``max_grade`` and optionally
    ``first_level`` (chain of complex generators and the complex-form target).
    """
    mismatches: List[str] = []
    N = report.max_grade
    V = input_system
    if report.first_level is not None:
        fl = report.first_level
        Vc = apply_chain(V, fl.chain, N)
        mismatches += compare(Vc, fl.complex_form, N)
        V = fl.normal_form
        if V is None:
            return Verdict("fail" if mismatches else "pass", mismatches)
    W = apply_chain(V, report.chain, N)
    mismatches += compare(W, report.final, N)
    return Verdict("pass" if not mismatches else "fail", mismatches)


def image_dim_brute(system: SystemPR, n: int, s: int) -> int:
    """dim im d^{n,s}, spanned over kernel-constrained generator tuples."""
    from .hyper.levels import image_vectors

    vecs = image_vectors(system, n, s)
    if not vecs:
        return 0
    return linalg.rank(vecs)


__all__ = ["exp_ad", "verify_run", "image_dim_brute", "apply_chain", "compare", "Verdict"]
