"""Exact scalars: rationals, Gaussian rationals and rational functions in w1, w2.

``Rational`` is :class:`fractions.Fraction`.  ``GaussianRational`` is a pair of
Fractions.  ``FreqPoly`` is a sparse bivariate polynomial in the opaque
frequencies w1, w2 with Gaussian-rational coefficients and ``FreqScalar`` is a
reduced quotient of two such polynomials.

Canonical ``FreqScalar``: gcd(num, den) = 1 and the leading coefficient of
``den`` (graded lexicographic order, w1 > w2) equals 1.  Structural equality is
therefore value equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Tuple, Union

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ScalarError(ValueError):
    """Raised for malformed scalar text or division by zero."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ScalarError(f"bad rational {x!r}") from exc
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """re + im*i with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, key, value):  # immutability
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, str):
            return parse_gaussian(x)
        return cls(x, 0)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, o: "GaussianRational") -> "GaussianRational":
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o) -> "GaussianRational":
        o = GaussianRational.coerce(o)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, o) -> "GaussianRational":
        return GaussianRational.coerce(o) - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, o) -> "GaussianRational":
        o = GaussianRational.coerce(o)
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational(a * c, _ZERO)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if not self:
            raise ScalarError("division by zero")
        a, b = self.re, self.im
        if not b:
            return GaussianRational(1 / a, _ZERO)
        n = a * a + b * b
        return GaussianRational(a / n, -b / n)

    def __truediv__(self, o) -> "GaussianRational":
        return self * GaussianRational.coerce(o).inverse()

    def __rtruediv__(self, o) -> "GaussianRational":
        return GaussianRational.coerce(o) * self.inverse()

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if not self.im:
            return format_rational(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"


G0 = GaussianRational(0, 0)
G1 = GaussianRational(1, 0)
GI = GaussianRational(0, 1)

_GAUSS_RE = re.compile(
    r"^\s*(?:(?P<re>[+-]?\d+(?:/\d+)?)\s*(?:(?P<sign>[+-])\s*(?P<im>\d+(?:/\d+)?)?\s*i)?"
    r"|(?P<pure>[+-]?(?:\d+(?:/\d+)?)?)\s*i)\s*$"
)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse "a", "a+bi", "a-bi", "bi", "i", "-i"."""
    m = _GAUSS_RE.match(text)
    if not m:
        raise ScalarError(f"bad Gaussian rational {text!r}")
    try:
        if m.group("re") is not None:
            re_part = Fraction(m.group("re"))
            if m.group("sign") is None:
                return GaussianRational(re_part, 0)
            im_part = Fraction(m.group("im") or "1")
            if m.group("sign") == "-":
                im_part = -im_part
            return GaussianRational(re_part, im_part)
        pure = m.group("pure")
        if pure in ("", "+"):
            return GI
        if pure == "-":
            return -GI
        return GaussianRational(0, Fraction(pure))
    except ZeroDivisionError as exc:
        raise ScalarError(f"zero denominator in {text!r}") from exc


# ---------------------------------------------------------------- polynomials

Mono = Tuple[int, int]


def _grlex_key(e: Mono) -> Tuple[int, int]:
    return (e[0] + e[1], e[0])


class FreqPoly:
    """Sparse polynomial in w1, w2 over the Gaussian rationals."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[Mono, GaussianRational] | None = None, _clean: bool = False):
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {e: GaussianRational.coerce(c) for e, c in terms.items() if c}
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("FreqPoly is immutable")

    @classmethod
    def const(cls, c) -> "FreqPoly":
        c = GaussianRational.coerce(c)
        return cls({(0, 0): c}, _clean=True) if c else cls({}, _clean=True)

    @classmethod
    def w1(cls) -> "FreqPoly":
        return cls({(1, 0): G1}, _clean=True)

    @classmethod
    def w2(cls) -> "FreqPoly":
        return cls({(0, 1): G1}, _clean=True)

    # -- queries
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self) -> GaussianRational:
        return self.terms.get((0, 0), G0)

    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def leading(self) -> Tuple[Mono, GaussianRational]:
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def __eq__(self, other) -> bool:
        if isinstance(other, FreqPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic
    def __add__(self, o: "FreqPoly") -> "FreqPoly":
        if not o.terms:
            return self
        if not self.terms:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return FreqPoly(out, _clean=True)

    def __neg__(self) -> "FreqPoly":
        return FreqPoly({e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, o: "FreqPoly") -> "FreqPoly":
        return self + (-o)

    def __mul__(self, o: "FreqPoly") -> "FreqPoly":
        if not self.terms or not o.terms:
            return FreqPoly({}, _clean=True)
        out: Dict[Mono, GaussianRational] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in o.terms.items():
                e = (a1 + a2, b1 + b2)
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return FreqPoly({e: c for e, c in out.items() if c}, _clean=True)

    def scale(self, c: GaussianRational) -> "FreqPoly":
        if not c:
            return FreqPoly({}, _clean=True)
        if c == G1:
            return self
        return FreqPoly({e: v * c for e, v in self.terms.items()}, _clean=True)

    def conjugate(self) -> "FreqPoly":
        return FreqPoly({e: c.conjugate() for e, c in self.terms.items()}, _clean=True)

    def monic(self) -> "FreqPoly":
        if not self.terms:
            return self
        return self.scale(self.leading()[1].inverse())

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"FreqPoly({str(self)!r})"


def _mono_str(e: Mono) -> str:
    parts = []
    for name, k in (("w1", e[0]), ("w2", e[1])):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: FreqPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for e in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[e]
        ms = _mono_str(e)
        out.append(f"({c})*{ms}" if ms else f"({c})")
    return " + ".join(out)


def poly_divmod_exact(a: FreqPoly, b: FreqPoly) -> FreqPoly:
    """Return a / b, which must be exact."""
    if not b.terms:
        raise ScalarError("division by zero polynomial")
    if b.is_constant():
        return a.scale(b.constant_value().inverse())
    (lb, cb) = b.leading()
    inv = cb.inverse()
    rem = dict(a.terms)
    quo: Dict[Mono, GaussianRational] = {}
    bterms = list(b.terms.items())
    while rem:
        e = max(rem, key=_grlex_key)
        if e[0] < lb[0] or e[1] < lb[1]:
            raise ScalarError("inexact polynomial division")
        q_e = (e[0] - lb[0], e[1] - lb[1])
        q_c = rem[e] * inv
        quo[q_e] = q_c
        for (x, y), c in bterms:
            t = (x + q_e[0], y + q_e[1])
            v = rem.get(t, G0) - c * q_c
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return FreqPoly(quo, _clean=True)


# gcd: view a bivariate poly as univariate in w2 with coefficients in Q(i)[w1].

UPoly = Dict[int, GaussianRational]  # univariate in w1


def _u_deg(p: UPoly) -> int:
    return max(p) if p else -1


def _u_sub_scaled(a: UPoly, b: UPoly, c: GaussianRational, shift: int) -> UPoly:
    out = dict(a)
    for k, v in b.items():
        t = k + shift
        s = out.get(t, G0) - v * c
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def _u_monic(p: UPoly) -> UPoly:
    if not p:
        return p
    inv = p[_u_deg(p)].inverse()
    return {k: v * inv for k, v in p.items()}


def _u_rem(a: UPoly, b: UPoly) -> UPoly:
    db = _u_deg(b)
    lc_inv = b[db].inverse()
    while a and _u_deg(a) >= db:
        da = _u_deg(a)
        a = _u_sub_scaled(a, b, a[da] * lc_inv, da - db)
    return a


def _u_divexact(a: UPoly, b: UPoly) -> UPoly:
    db = _u_deg(b)
    lc_inv = b[db].inverse()
    q: UPoly = {}
    while a:
        da = _u_deg(a)
        c = a[da] * lc_inv
        q[da - db] = c
        a = _u_sub_scaled(a, b, c, da - db)
    return q


def _u_mul(a: UPoly, b: UPoly) -> UPoly:
    out: UPoly = {}
    for i, x in a.items():
        for j, y in b.items():
            s = out.get(i + j, G0) + x * y
            if s:
                out[i + j] = s
            else:
                out.pop(i + j, None)
    return out


def _u_gcd(a: UPoly, b: UPoly) -> UPoly:
    # monic remainders keep the rational coefficients small
    b = _u_monic(b)
    while b:
        a, b = b, _u_monic(_u_rem(a, b))
    return _u_monic(a)


BPoly = Dict[int, UPoly]  # w2-degree -> coefficient in Q(i)[w1]


def _to_b(p: FreqPoly) -> BPoly:
    out: BPoly = {}
    for (a, b), c in p.terms.items():
        out.setdefault(b, {})[a] = c
    return out


def _from_b(p: BPoly) -> FreqPoly:
    return FreqPoly({(a, b): c for b, u in p.items() for a, c in u.items() if c}, _clean=True)


def _b_content(p: BPoly) -> UPoly:
    g: UPoly = {}
    for u in p.values():
        g = _u_gcd(g, u) if g else _u_monic(u)
        if _u_deg(g) == 0:
            return {0: G1}
    return g


def _b_div_u(p: BPoly, u: UPoly) -> BPoly:
    return {k: _u_divexact(v, u) for k, v in p.items()}


def _b_prem(a: BPoly, b: BPoly) -> BPoly:
    """Pseudo-remainder of a by b with respect to w2."""
    db = max(b)
    lc = b[db]
    a = dict(a)
    while a and max(a) >= db:
        da = max(a)
        la = a.pop(da)
        # a := lc*a - la * w2^(da-db) * b
        new: BPoly = {}
        for k, v in a.items():
            new[k] = _u_mul(lc, v)
        for k, v in b.items():
            if k == db:
                continue
            t = k + da - db
            cur = new.get(t, {})
            prod = _u_mul(la, v)
            for e, c in prod.items():
                s = cur.get(e, G0) - c
                if s:
                    cur[e] = s
                else:
                    cur.pop(e, None)
            new[t] = cur
        a = {k: v for k, v in new.items() if v}
    return a


def _b_primitive(p: BPoly) -> BPoly:
    c = _b_content(p)
    return p if _u_deg(c) == 0 else _b_div_u(p, c)


def _homogeneous_degree(p: FreqPoly) -> int:
    degs = {x + y for x, y in p.terms}
    return degs.pop() if len(degs) == 1 else -1


def _homogeneous_gcd(a: FreqPoly, b: FreqPoly) -> FreqPoly:
    # set w2 = 1, take the univariate gcd in w1, then homogenize back
    ua: UPoly = {x: c for (x, _), c in a.terms.items()}
    ub: UPoly = {x: c for (x, _), c in b.terms.items()}
    ma = min(y for _, y in a.terms)
    mb = min(y for _, y in b.terms)
    g = _u_gcd(ua, ub)
    e = _u_deg(g)
    k = min(ma, mb)
    return FreqPoly({(x, e - x + k): c for x, c in g.items()}, _clean=True).monic()


def poly_gcd(a: FreqPoly, b: FreqPoly) -> FreqPoly:
    """Monic gcd of two bivariate polynomials over Q(i)."""
    if not a.terms:
        return b.monic()
    if not b.terms:
        return a.monic()
    if a.is_constant() or b.is_constant():
        return FreqPoly.const(1)
    if _homogeneous_degree(a) >= 0 and _homogeneous_degree(b) >= 0:
        return _homogeneous_gcd(a, b)
    A, B = _to_b(a), _to_b(b)
    ca, cb = _b_content(A), _b_content(B)
    cont = _u_gcd(ca, cb)
    A = _b_div_u(A, ca) if _u_deg(ca) > 0 else A
    B = _b_div_u(B, cb) if _u_deg(cb) > 0 else B
    if max(A) < max(B):
        A, B = B, A
    while B and max(B) > 0:
        R = _b_prem(A, B)
        A, B = B, (_b_primitive(R) if R else R)
    if B:  # B has w2-degree 0: primitive part is 1
        G: BPoly = {0: {0: G1}}
    else:
        G = _b_primitive(A)
    g = _from_b(G)
    if _u_deg(cont) > 0:
        g = g * _from_b({0: cont})
    return g.monic()


# ---------------------------------------------------------------- fractions


class FreqScalar:
    """Canonical quotient num/den of FreqPolys."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: FreqPoly, den: FreqPoly | None = None, _canonical: bool = False):
        if den is None:
            den = _POLY_ONE
        if not _canonical:
            num, den = _canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("FreqScalar is immutable")

    @classmethod
    def coerce(cls, x) -> "FreqScalar":
        if isinstance(x, FreqScalar):
            return x
        if isinstance(x, FreqPoly):
            return cls(x, _POLY_ONE, _canonical=True)
        if isinstance(x, str):
            return parse_scalar(x)
        return cls(FreqPoly.const(GaussianRational.coerce(x)), _POLY_ONE, _canonical=True)

    @classmethod
    def w1(cls) -> "FreqScalar":
        return cls(FreqPoly.w1(), _POLY_ONE, _canonical=True)

    @classmethod
    def w2(cls) -> "FreqScalar":
        return cls(FreqPoly.w2(), _POLY_ONE, _canonical=True)

    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def is_polynomial(self) -> bool:
        return self.den is _POLY_ONE or self.den == _POLY_ONE

    def is_constant(self) -> bool:
        """True when the value does not depend on w1, w2."""
        return self.is_polynomial() and self.num.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ScalarError(f"{self} depends on the frequencies")
        return self.num.constant_value()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreqScalar):
            try:
                other = FreqScalar.coerce(other)
            except (TypeError, ScalarError):
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.num, self.den)))
        return self._hash

    def __add__(self, o) -> "FreqScalar":
        o = FreqScalar.coerce(o)
        if not o.num.terms:
            return self
        if not self.num.terms:
            return o
        if self.den == o.den:
            if self.den.is_constant():
                return FreqScalar(self.num + o.num, _POLY_ONE, _canonical=True)
            return FreqScalar(self.num + o.num, self.den)
        # Henrici: only factors of g = gcd(d1, d2) can cancel
        g = poly_gcd(self.den, o.den)
        if g.is_constant():
            num = self.num * o.den + o.num * self.den
            return FreqScalar(*_normalize_lc(num, self.den * o.den), _canonical=True)
        d1 = poly_divmod_exact(self.den, g)
        d2 = poly_divmod_exact(o.den, g)
        num = self.num * d2 + o.num * d1
        den = d1 * o.den
        if not num.terms:
            return ZERO
        h = poly_gcd(num, g)
        if not h.is_constant():
            num = poly_divmod_exact(num, h)
            den = poly_divmod_exact(den, h)
        return FreqScalar(*_normalize_lc(num, den), _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "FreqScalar":
        return FreqScalar(-self.num, self.den, _canonical=True)

    def __sub__(self, o) -> "FreqScalar":
        return self + (-FreqScalar.coerce(o))

    def __rsub__(self, o) -> "FreqScalar":
        return FreqScalar.coerce(o) - self

    def __mul__(self, o) -> "FreqScalar":
        o = FreqScalar.coerce(o)
        if not self.num.terms or not o.num.terms:
            return ZERO
        if self.den.is_constant() and o.den.is_constant():
            return FreqScalar(self.num * o.num, _POLY_ONE, _canonical=True)
        if o.is_constant():
            return FreqScalar(self.num.scale(o.num.constant_value()), self.den, _canonical=True)
        if self.is_constant():
            return FreqScalar(o.num.scale(self.num.constant_value()), o.den, _canonical=True)
        # cross-cancel first so the final gcd works on smaller inputs
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = poly_divmod_exact(self.num, g1) if not g1.is_constant() else self.num
        d2 = poly_divmod_exact(o.den, g1) if not g1.is_constant() else o.den
        n2 = poly_divmod_exact(o.num, g2) if not g2.is_constant() else o.num
        d1 = poly_divmod_exact(self.den, g2) if not g2.is_constant() else self.den
        return FreqScalar(*_normalize_lc(n1 * n2, d1 * d2), _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "FreqScalar":
        if not self.num.terms:
            raise ScalarError("division by zero")
        return FreqScalar(*_normalize_lc(self.den, self.num), _canonical=True)

    def __truediv__(self, o) -> "FreqScalar":
        return self * FreqScalar.coerce(o).inverse()

    def __rtruediv__(self, o) -> "FreqScalar":
        return FreqScalar.coerce(o) * self.inverse()

    def conjugate(self) -> "FreqScalar":
        return FreqScalar(*_normalize_lc(self.num.conjugate(), self.den.conjugate()), _canonical=True)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"FreqScalar({str(self)!r})"


_POLY_ONE = FreqPoly({(0, 0): G1}, _clean=True)


def _normalize_lc(num: FreqPoly, den: FreqPoly) -> Tuple[FreqPoly, FreqPoly]:
    if not num.terms:
        return FreqPoly({}, _clean=True), _POLY_ONE
    lc = den.leading()[1]
    if lc != G1:
        inv = lc.inverse()
        num, den = num.scale(inv), den.scale(inv)
    if den == _POLY_ONE:
        den = _POLY_ONE
    return num, den


def _canonicalize(num: FreqPoly, den: FreqPoly) -> Tuple[FreqPoly, FreqPoly]:
    if not den.terms:
        raise ScalarError("division by zero")
    if not num.terms:
        return FreqPoly({}, _clean=True), _POLY_ONE
    if not den.is_constant():
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = poly_divmod_exact(num, g)
            den = poly_divmod_exact(den, g)
    return _normalize_lc(num, den)


def canon(x: FreqScalar) -> FreqScalar:
    """Recanonicalize (idempotent)."""
    return FreqScalar(x.num, x.den)


def scalar_arith(a: FreqScalar, b: FreqScalar, kind: str) -> FreqScalar:
    a, b = FreqScalar.coerce(a), FreqScalar.coerce(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def is_zero(a: FreqScalar) -> bool:
    return FreqScalar.coerce(a).is_zero()


ZERO = FreqScalar(FreqPoly({}, _clean=True), _POLY_ONE, _canonical=True)
ONE = FreqScalar(_POLY_ONE, _POLY_ONE, _canonical=True)
I = FreqScalar(FreqPoly({(0, 0): GI}, _clean=True), _POLY_ONE, _canonical=True)


def format_scalar(x: FreqScalar) -> str:
    if x.is_constant():
        return str(x.num.constant_value())
    if x.den == _POLY_ONE:
        return format_poly(x.num)
    return f"[{format_poly(x.num)}]/[{format_poly(x.den)}]"


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(w1|w2)|(i)|([-+*/^()\[\]]))")


def _tokenize(text: str) -> Iterator[Tuple[str, str]]:
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScalarError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        if m.group(1):
            yield ("num", m.group(1))
        elif m.group(2):
            yield ("var", m.group(2))
        elif m.group(3):
            yield ("i", "i")
        else:
            yield ("op", m.group(4))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = list(_tokenize(text))
        self.k = 0

    def peek(self) -> Tuple[str, str] | None:
        return self.toks[self.k] if self.k < len(self.toks) else None

    def take(self) -> Tuple[str, str]:
        t = self.peek()
        if t is None:
            raise ScalarError(f"unexpected end of {self.text!r}")
        self.k += 1
        return t

    def parse(self) -> FreqScalar:
        if not self.toks:
            raise ScalarError("empty scalar")
        v = self.expr()
        if self.peek() is not None:
            raise ScalarError(f"trailing input in {self.text!r}")
        return v

    def expr(self) -> FreqScalar:
        v = self.term()
        while (t := self.peek()) in (("op", "+"), ("op", "-")):
            self.take()
            w = self.term()
            v = v + w if t[1] == "+" else v - w
        return v

    def term(self) -> FreqScalar:
        v = self.unary()
        while (t := self.peek()) and t[0] == "op" and t[1] in "*/":
            self.take()
            w = self.unary()
            if t[1] == "*":
                v = v * w
            else:
                if w.is_zero():
                    raise ScalarError(f"division by zero in {self.text!r}")
                v = v / w
        return v

    def unary(self) -> FreqScalar:
        t = self.peek()
        if t == ("op", "-"):
            self.take()
            return -self.unary()
        if t == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> FreqScalar:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise ScalarError(f"exponent must be an integer in {self.text!r}")
            out = ONE
            for _ in range(int(val)):
                out = out * base
            return out
        return base

    def atom(self) -> FreqScalar:
        kind, val = self.take()
        if kind == "num":
            try:
                v = FreqScalar.coerce(Fraction(val))
            except ZeroDivisionError as exc:
                raise ScalarError(f"zero denominator in {self.text!r}") from exc
            if self.peek() == ("i", "i"):  # "3i"
                self.take()
                v = v * I
            return v
        if kind == "i":
            return I
        if kind == "var":
            return FreqScalar.w1() if val == "w1" else FreqScalar.w2()
        if val in "([":
            close = ")" if val == "(" else "]"
            v = self.expr()
            if self.take() != ("op", close):
                raise ScalarError(f"unbalanced brackets in {self.text!r}")
            return v
        raise ScalarError(f"unexpected {val!r} in {self.text!r}")


def parse_scalar(text: str) -> FreqScalar:
    """Parse a scalar expression over i, w1, w2 and rationals."""
    if not isinstance(text, str):
        raise ScalarError(f"expected a string, got {type(text).__name__}")
    return _Parser(text).parse()


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational; rejects anything depending on i or w1, w2."""
    v = parse_scalar(text)
    if not v.is_constant() or not v.num.constant_value().is_real():
        raise ScalarError(f"{text!r} is not a rational number")
    return v.num.constant_value().re


def gaussian_linear(c1: int, c2: int) -> FreqScalar:
    """i*(c1*w1 + c2*w2)."""
    t = {}
    if c1:
        t[(1, 0)] = GaussianRational(0, c1)
    if c2:
        t[(0, 1)] = GaussianRational(0, c2)
    return FreqScalar(FreqPoly(t, _clean=True), _POLY_ONE, _canonical=True)


__all__ = [
    "Rational",
    "GaussianRational",
    "FreqPoly",
    "FreqScalar",
    "ScalarError",
    "scalar_arith",
    "is_zero",
    "canon",
    "parse_scalar",
    "parse_gaussian",
    "parse_rational",
    "format_rational",
    "poly_gcd",
    "ZERO",
    "ONE",
    "I",
    "gaussian_linear",
]
