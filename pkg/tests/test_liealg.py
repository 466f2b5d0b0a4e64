from fractions import Fraction as F

import pytest

from hypernf.errors import NotInSpan, RealityViolation
from hypernf.liealg import (
    ComplexVF,
    GElement,
    P,
    R,
    SystemPR,
    basis,
    bracket_complex,
    bracket_pr,
    check_reality,
    complex_to_pr,
    grade,
    linear_part_A,
    parse_term,
    pr_to_complex,
)
from hypernf.scalars import I, FreqScalar

W1, W2 = FreqScalar.w1(), FreqScalar.w2()


def T(t, c=1):
    return GElement.term(t, c)


def test_grade():
    assert grade(P(1, 2, 1)) == 3
    assert grade(R(2, 0, 0)) == 0


@pytest.mark.parametrize(
    "a,b,expected",
    [
        (P(1, 0, 1), P(1, 1, 0), {P(1, 1, 1): 2}),
        (R(1, 2, 0), R(2, 0, 3), {}),
        (P(1, 1, 0), R(1, 2, 0), {R(1, 3, 0): 4}),
        (P(2, 0, 1), P(2, 1, 0), {P(2, 1, 1): -2}),
        (P(1, 1, 2), P(2, 3, 0), {P(2, 4, 2): 6, P(1, 4, 2): -4}),
        (P(2, 1, 0), R(1, 1, 1), {R(1, 2, 1): 2}),
    ],
)
def test_structure_constants(a, b, expected):
    assert bracket_pr(T(a), T(b)) == GElement(expected)


def test_mixed_plane_rule():
    # [P1_{i,j}, P2_{m,n}] = 2m P2 - 2j P1 at (i+m, j+n)
    got = bracket_pr(T(P(1, 0, 2)), T(P(2, 3, 1)))
    assert got == GElement({P(2, 3, 3): 6, P(1, 3, 3): -4})


def test_parse_term_roundtrip():
    for t in basis(3):
        assert parse_term(t.name()) == t
    with pytest.raises(ValueError):
        parse_term("Q1[0,1]")


def test_pr_to_complex_shapes():
    v = pr_to_complex(T(P(1, 1, 0)))
    one = FreqScalar.coerce(1)
    assert v == ComplexVF({((2, 1, 0, 0), 1): one, ((1, 2, 0, 0), 2): one})
    r = pr_to_complex(GElement.term(R(2, 0, 1)))
    assert r == ComplexVF({((0, 0, 2, 1), 3): I, ((0, 0, 1, 2), 4): -I})
    assert pr_to_complex(GElement()) == ComplexVF()


def test_theta_expands_to_linear_part():
    assert pr_to_complex(SystemPR()) == linear_part_A()


def test_complex_to_pr_rejects_nonresonant():
    v = ComplexVF({((2, 0, 0, 1), 1): 1, ((0, 2, 1, 0), 2): 1})
    with pytest.raises(NotInSpan, match="P/R shape"):
        complex_to_pr(v)


def test_complex_to_pr_simple():
    one = FreqScalar.coerce(1)
    v = ComplexVF({((1, 0, 1, 1), 1): one, ((0, 1, 1, 1), 2): one})
    assert complex_to_pr(v) == SystemPR(T(P(1, 0, 1)), includes_theta=False)


def test_reality_check():
    bad = ComplexVF({((2, 1, 0, 0), 1): I})
    with pytest.raises(RealityViolation):
        check_reality(bad)


def test_linear_bracket_eigenvalue():
    mono = ComplexVF({((2, 0, 0, 1), 1): 1})
    got = bracket_complex(linear_part_A(), mono)
    assert got == ComplexVF({((2, 0, 0, 1), 1): I * (W1 - W2)})


@pytest.mark.parametrize("na,nb", [(a, b) for a in range(0, 4) for b in range(0, 4) if a + b <= 4])
def test_bracket_agrees_across_representations(na, nb):
    for a in basis(na):
        for b in basis(nb):
            lhs = bracket_complex(pr_to_complex(T(a)), pr_to_complex(T(b)))
            rhs = pr_to_complex(bracket_pr(T(a), T(b)))
            assert lhs == rhs, (a, b)


def test_roundtrip_complex():
    s = SystemPR(GElement({P(1, 0, 1): F(1, 3), R(2, 2, 1): -2, P(2, 1, 1): 5}))
    assert complex_to_pr(pr_to_complex(s)) == s
