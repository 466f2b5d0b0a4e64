"""The graded Lie algebra of planar-radial (P) and rotating (R) fields.

P^k_{m,n} = |z1|^{2m} |z2|^{2n} (z_k d/dz_k + w_k d/dw_k)
R^k_{m,n} = |z1|^{2m} |z2|^{2n} (i z_k d/dz_k - i w_k d/dw_k)

Grade is m + n; the polynomial degree is 2*grade + 1.  Brackets in the P/R
basis use closed-form structure constants.  The complex-coordinate bracket is
kept as an independent oracle and as the engine for raw inputs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Tuple, Union

from .errors import NotInSpan, RealityViolation
from .scalars import I as SI
from .scalars import ONE, ZERO, FreqScalar, GaussianRational, format_rational

THETA_NAME = "Theta"
THETA_LABEL = "Theta(omega1,omega2)"


class PRTerm(NamedTuple):
    family: str  # "P" or "R"
    k: int
    m: int
    n: int

    @property
    def grade(self) -> int:
        return self.m + self.n

    def sort_key(self) -> Tuple[int, int, int, int]:
        return (self.m + self.n, 0 if self.family == "P" else 1, self.k, self.m)

    def name(self) -> str:
        return f"{self.family}{self.k}[{self.m},{self.n}]"

    def __str__(self) -> str:
        return self.name()


def P(k: int, m: int, n: int) -> PRTerm:
    return PRTerm("P", k, m, n)


def R(k: int, m: int, n: int) -> PRTerm:
    return PRTerm("R", k, m, n)


def grade(t: PRTerm) -> int:
    return t.m + t.n


_NAME_RE = re.compile(r"^\s*([PR])([12])\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*$")


def parse_term(name: str) -> PRTerm:
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"bad term name {name!r}")
    return PRTerm(m.group(1), int(m.group(2)), int(m.group(3)), int(m.group(4)))


def basis(n: int) -> List[PRTerm]:
    """Grade-n basis in row order: group j = 0..n of (P1, P2, R1, R2) at (j, n-j)."""
    out = []
    for j in range(n + 1):
        out += [P(1, j, n - j), P(2, j, n - j), R(1, j, n - j), R(2, j, n - j)]
    return out


# ---------------------------------------------------------------- brackets


@lru_cache(maxsize=None)
def bracket_terms(a: PRTerm, b: PRTerm) -> Tuple[Tuple[PRTerm, int], ...]:
    """[a, b] as integer combination of basis terms."""
    if a.family == "R" and b.family == "R":
        return ()
    if a.family == "R":
        return tuple((t, -c) for t, c in bracket_terms(b, a))
    mi, ni = a.m, a.n
    mm, nn = b.m + a.m, b.n + a.n
    if b.family == "R":
        c = 2 * b.m if a.k == 1 else 2 * b.n
        return ((R(b.k, mm, nn), c),) if c else ()
    # both P
    if a.k == 1 and b.k == 1:
        c = 2 * (b.m - a.m)
        return ((P(1, mm, nn), c),) if c else ()
    if a.k == 2 and b.k == 2:
        c = 2 * (b.n - a.n)
        return ((P(2, mm, nn), c),) if c else ()
    if a.k == 1:  # [P1_{i,j}, P2_{m,n}] = 2m P2 - 2j P1
        out = []
        if b.m:
            out.append((P(2, mm, nn), 2 * b.m))
        if ni:
            out.append((P(1, mm, nn), -2 * ni))
        return tuple(out)
    return tuple((t, -c) for t, c in bracket_terms(b, a))


class GElement:
    """Finitely supported rational combination of P/R terms."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[PRTerm, object] | None = None):
        c: Dict[PRTerm, Fraction] = {}
        if coeffs:
            for t, v in coeffs.items():
                if not isinstance(t, PRTerm):
                    t = parse_term(t)
                v = Fraction(v)
                if v:
                    c[t] = c.get(t, Fraction(0)) + v
                    if not c[t]:
                        del c[t]
        self._c = c

    @classmethod
    def _raw(cls, c: Dict[PRTerm, Fraction]) -> "GElement":
        g = cls.__new__(cls)
        g._c = c
        return g

    @classmethod
    def term(cls, t: PRTerm, coeff=1) -> "GElement":
        return cls({t: coeff})

    # -- mapping-like access
    def __getitem__(self, t: PRTerm) -> Fraction:
        return self._c.get(t, Fraction(0))

    def coeff(self, t: PRTerm) -> Fraction:
        return self._c.get(t, Fraction(0))

    def __contains__(self, t) -> bool:
        return t in self._c

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def support(self) -> List[PRTerm]:
        return sorted(self._c, key=PRTerm.sort_key)

    def items(self) -> List[Tuple[PRTerm, Fraction]]:
        return [(t, self._c[t]) for t in self.support()]

    def as_dict(self) -> Dict[PRTerm, Fraction]:
        return dict(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, GElement):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    # -- linear structure
    def __add__(self, o: "GElement") -> "GElement":
        c = dict(self._c)
        for t, v in o._c.items():
            s = c.get(t, 0) + v
            if s:
                c[t] = s
            else:
                c.pop(t, None)
        return GElement._raw(c)

    def __neg__(self) -> "GElement":
        return GElement._raw({t: -v for t, v in self._c.items()})

    def __sub__(self, o: "GElement") -> "GElement":
        return self + (-o)

    def scale(self, q) -> "GElement":
        q = Fraction(q)
        if not q:
            return GElement()
        return GElement._raw({t: v * q for t, v in self._c.items()})

    __mul__ = scale
    __rmul__ = scale

    # -- grading
    def grades(self) -> List[int]:
        return sorted({t.grade for t in self._c})

    def min_grade(self) -> int | None:
        return min((t.grade for t in self._c), default=None)

    def max_grade(self) -> int | None:
        return max((t.grade for t in self._c), default=None)

    def grade_part(self, n: int) -> "GElement":
        return GElement._raw({t: v for t, v in self._c.items() if t.grade == n})

    def truncate(self, N: int) -> "GElement":
        """Drop terms of grade > N."""
        return GElement._raw({t: v for t, v in self._c.items() if t.grade <= N})

    def without_grade(self, n: int) -> "GElement":
        return GElement._raw({t: v for t, v in self._c.items() if t.grade != n})

    def vector(self, n: int) -> List[Fraction]:
        return [self.coeff(t) for t in basis(n)]

    @classmethod
    def from_vector(cls, n: int, vec: Iterable) -> "GElement":
        return cls(dict(zip(basis(n), vec)))

    def __str__(self) -> str:
        return format_gelement(self)

    def __repr__(self) -> str:
        return f"GElement({str(self)!r})"


def format_gelement(g: GElement, theta: bool = False) -> str:
    parts = [THETA_NAME] if theta else []
    for t, c in g.items():
        parts.append(f"{format_rational(c)}*{t.name()}")
    return " + ".join(parts) if parts else "0"


def bracket_pr(u: GElement, v: GElement, max_grade: int | None = None) -> GElement:
    """Lie bracket [u, v] via structure constants (optionally truncated)."""
    out: Dict[PRTerm, Fraction] = {}
    for a, ca in u._c.items():
        for b, cb in v._c.items():
            if max_grade is not None and a.grade + b.grade > max_grade:
                continue
            for t, c in bracket_terms(a, b):
                s = out.get(t, 0) + ca * cb * c
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
    return GElement._raw(out)


@dataclass(frozen=True)
class SystemPR:
    """Theta (optionally) plus a body of grade >= 1 P/R terms."""

    body: GElement = field(default_factory=GElement)
    includes_theta: bool = True
    omega1: str = "omega1"
    omega2: str = "omega2"

    def __post_init__(self):
        if any(t.grade == 0 for t in self.body.support()):
            raise ValueError("SystemPR body must not contain grade-0 terms")

    def grade_part(self, n: int) -> GElement:
        return self.body.grade_part(n)

    def with_body(self, body: GElement) -> "SystemPR":
        return SystemPR(body, self.includes_theta, self.omega1, self.omega2)

    def cubic(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        b = self.body
        return (b[P(1, 0, 1)], b[P(2, 0, 1)], b[P(1, 1, 0)], b[P(2, 1, 0)])

    def rot(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        b = self.body
        return (b[R(1, 0, 1)], b[R(2, 0, 1)], b[R(1, 1, 0)], b[R(2, 1, 0)])

    def __str__(self) -> str:
        return format_gelement(self.body, theta=self.includes_theta)


# ---------------------------------------------------------------- complex fields

Exps = Tuple[int, int, int, int]
CKey = Tuple[Exps, int]  # (exponents of z1, w1, z2, w2; component 1..4)


class ComplexVF:
    """Polynomial vector field on (z1, w1, z2, w2) with FreqScalar coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[CKey, object] | None = None):
        c: Dict[CKey, FreqScalar] = {}
        if coeffs:
            for (e, j), v in coeffs.items():
                e = tuple(int(x) for x in e)
                if len(e) != 4 or min(e) < 0 or j not in (1, 2, 3, 4):
                    raise ValueError(f"bad monomial key {(e, j)!r}")
                v = FreqScalar.coerce(v)
                s = c.get((e, j), ZERO) + v
                if s:
                    c[(e, j)] = s
                else:
                    c.pop((e, j), None)
        self._c = c

    @classmethod
    def _raw(cls, c: Dict[CKey, FreqScalar]) -> "ComplexVF":
        v = cls.__new__(cls)
        v._c = c
        return v

    def __getitem__(self, key: CKey) -> FreqScalar:
        return self._c.get(key, ZERO)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def keys(self) -> List[CKey]:
        return sorted(self._c, key=_ckey_sort)

    def items(self) -> List[Tuple[CKey, FreqScalar]]:
        return [(k, self._c[k]) for k in self.keys()]

    def __eq__(self, other) -> bool:
        if isinstance(other, ComplexVF):
            return self._c == other._c
        return NotImplemented

    def __add__(self, o: "ComplexVF") -> "ComplexVF":
        c = dict(self._c)
        for k, v in o._c.items():
            s = c[k] + v if k in c else v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return ComplexVF._raw(c)

    def __neg__(self) -> "ComplexVF":
        return ComplexVF._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, o: "ComplexVF") -> "ComplexVF":
        return self + (-o)

    def scale(self, q) -> "ComplexVF":
        q = FreqScalar.coerce(q)
        if not q:
            return ComplexVF()
        return ComplexVF._raw({k: v * q for k, v in self._c.items()})

    def degrees(self) -> List[int]:
        return sorted({sum(e) for e, _ in self._c})

    def min_degree(self) -> int | None:
        return min((sum(e) for e, _ in self._c), default=None)

    def degree_part(self, d: int) -> "ComplexVF":
        return ComplexVF._raw({k: v for k, v in self._c.items() if sum(k[0]) == d})

    def truncate(self, D: int) -> "ComplexVF":
        return ComplexVF._raw({k: v for k, v in self._c.items() if sum(k[0]) <= D})

    def conjugate_partner(self) -> "ComplexVF":
        """The field whose coefficients are the reality-partners of this one."""
        return ComplexVF._raw({partner(k): v.conjugate() for k, v in self._c.items()})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(f"({v})*{_mono_name(k)}" for k, v in self.items())

    def __repr__(self) -> str:
        return f"ComplexVF({str(self)!r})"


_VARS = ("z1", "w1", "z2", "w2")


def _mono_name(k: CKey) -> str:
    e, j = k
    body = "*".join(f"{v}^{x}" if x > 1 else v for v, x in zip(_VARS, e) if x) or "1"
    return f"{body} d/d{_VARS[j - 1]}"


def _ckey_sort(k: CKey):
    e, j = k
    return (sum(e), j, tuple(-x for x in e))


def partner(k: CKey) -> CKey:
    (a, b, c, d), j = k
    return ((b, a, d, c), {1: 2, 2: 1, 3: 4, 4: 3}[j])


def check_reality(v: ComplexVF) -> None:
    for k, c in v._c.items():
        if v[partner(k)] != c.conjugate():
            raise RealityViolation(
                f"coefficient of {_mono_name(k)} is {c} but its partner "
                f"{_mono_name(partner(k))} has {v[partner(k)]}"
            )


def bracket_complex(v: ComplexVF, w: ComplexVF, max_degree: int | None = None) -> ComplexVF:
    """[v, w] = Dw.v - Dv.w (optionally dropping degrees above max_degree)."""
    out: Dict[CKey, FreqScalar] = {}

    def acc(key, val):
        s = out[key] + val if key in out else val
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    for (al, j), c in v._c.items():
        for (be, k), d in w._c.items():
            deg = sum(al) + sum(be) - 1
            if max_degree is not None and deg > max_degree:
                continue
            # Dw.v: component k gains d(z^be)/d(var j) * v_j
            bj = be[j - 1]
            ak = al[k - 1]
            if not bj and not ak:
                continue
            cd = c * d
            if bj:
                e = list(a + b for a, b in zip(al, be))
                e[j - 1] -= 1
                acc((tuple(e), k), cd * bj)
            if ak:
                e = list(a + b for a, b in zip(al, be))
                e[k - 1] -= 1
                acc((tuple(e), j), -(cd * ak))
    return ComplexVF._raw(out)


def linear_part_A() -> ComplexVF:
    w1, w2 = FreqScalar.w1(), FreqScalar.w2()
    return ComplexVF._raw(
        {
            ((1, 0, 0, 0), 1): SI * w1,
            ((0, 1, 0, 0), 2): -(SI * w1),
            ((0, 0, 1, 0), 3): SI * w2,
            ((0, 0, 0, 1), 4): -(SI * w2),
        }
    )


def _term_to_complex(t: PRTerm, c: Fraction) -> Dict[CKey, FreqScalar]:
    m, n = t.m, t.n
    if t.k == 1:
        ka, kb = ((m + 1, m, n, n), 1), ((m, m + 1, n, n), 2)
    else:
        ka, kb = ((m, m, n + 1, n), 3), ((m, m, n, n + 1), 4)
    q = FreqScalar.coerce(c)
    if t.family == "P":
        return {ka: q, kb: q}
    return {ka: q * SI, kb: -(q * SI)}


def pr_to_complex(s: Union[SystemPR, GElement]) -> ComplexVF:
    """Expand a P/R element (or system with Theta) into complex components."""
    if isinstance(s, SystemPR):
        body, theta = s.body, s.includes_theta
    else:
        body, theta = s, False
    out = ComplexVF()
    if theta:
        out = out + linear_part_A()
    acc: Dict[CKey, FreqScalar] = {}
    for t, c in body.items():
        for k, v in _term_to_complex(t, c).items():
            s2 = acc[k] + v if k in acc else v
            if s2:
                acc[k] = s2
            else:
                acc.pop(k, None)
    return out + ComplexVF._raw(acc)


def complex_to_pr(v: ComplexVF) -> SystemPR:
    """Inverse of pr_to_complex; raises NotInSpan for non-P/R patterns."""
    lin = linear_part_A()
    lin_keys = set(lin._c)
    present = [k for k in lin_keys if k in v._c]
    if present and (len(present) != 4 or any(v[k] != lin[k] for k in lin_keys)):
        bad = next(k for k in sorted(lin_keys, key=_ckey_sort) if v[k] != lin[k])
        raise NotInSpan(f"linear coefficient of {_mono_name(bad)} is {v[bad]}, expected {lin[bad]} or 0")
    theta = bool(present)
    coeffs: Dict[PRTerm, Fraction] = {}
    for key in v.keys():
        if key in lin_keys:
            continue
        (a, b, c, d), j = key
        val = v[key]
        if j in (1, 3):
            if j == 1:
                ok, m, n = a == b + 1 and c == d, b, c
            else:
                ok, m, n = c == d + 1 and a == b, a, d
            if not ok:
                raise NotInSpan(f"monomial {_mono_name(key)} is not of P/R shape")
            if not val.is_constant():
                raise NotInSpan(f"coefficient {val} of {_mono_name(key)} depends on the frequencies")
            g = val.constant_value()
            pk = partner(key)
            if v[pk] != val.conjugate():
                raise NotInSpan(
                    f"coefficient of {_mono_name(pk)} is {v[pk]}, expected {val.conjugate()} for a P/R pattern"
                )
            k = 1 if j == 1 else 2
            if g.re:
                coeffs[P(k, m, n)] = g.re
            if g.im:
                coeffs[R(k, m, n)] = g.im
        else:
            pk = partner(key)
            if pk not in v._c:
                raise NotInSpan(f"monomial {_mono_name(key)} has no partner {_mono_name(pk)}")
    body = GElement(coeffs)
    if any(t.grade == 0 for t in body.support()):
        raise NotInSpan("grade-0 terms other than Theta are not allowed")
    return SystemPR(body, includes_theta=theta)


def gelement_to_complex(g: GElement) -> ComplexVF:
    return pr_to_complex(g)


def complex_to_gelement(v: ComplexVF) -> GElement:
    """Like complex_to_pr but allowing grade-0 terms and no Theta."""
    coeffs: Dict[PRTerm, Fraction] = {}
    for key in v.keys():
        (a, b, c, d), j = key
        val = v[key]
        pk = partner(key)
        if v[pk] != val.conjugate():
            raise NotInSpan(f"coefficient of {_mono_name(pk)} breaks the P/R pattern")
        if j not in (1, 3):
            continue
        if j == 1:
            ok, m, n = a == b + 1 and c == d, b, c
        else:
            ok, m, n = c == d + 1 and a == b, a, d
        if not ok or not val.is_constant():
            raise NotInSpan(f"monomial {_mono_name(key)} with coefficient {val} is not a P/R term")
        g = val.constant_value()
        k = 1 if j == 1 else 2
        if g.re:
            coeffs[P(k, m, n)] = g.re
        if g.im:
            coeffs[R(k, m, n)] = g.im
    return GElement(coeffs)


__all__ = [
    "PRTerm",
    "P",
    "R",
    "grade",
    "basis",
    "parse_term",
    "GElement",
    "SystemPR",
    "ComplexVF",
    "bracket_pr",
    "bracket_terms",
    "bracket_complex",
    "pr_to_complex",
    "complex_to_pr",
    "complex_to_gelement",
    "linear_part_A",
    "check_reality",
    "partner",
    "THETA_NAME",
    "THETA_LABEL",
]
