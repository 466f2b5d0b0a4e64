"""Property tests for the bracket in both representations."""

from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from hypernf.liealg import (
    GElement,
    SystemPR,
    basis,
    bracket_complex,
    bracket_pr,
    check_reality,
    complex_to_pr,
    pr_to_complex,
)

coef = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def homogeneous(draw, lo=0, hi=6):
    n = draw(st.integers(lo, hi))
    terms = draw(st.lists(st.sampled_from(basis(n)), min_size=0, max_size=4))
    return GElement({t: draw(coef) for t in terms})


elements = st.lists(homogeneous(), min_size=1, max_size=2).map(lambda xs: sum(xs, GElement()))


@settings(max_examples=200, deadline=None)
@given(elements, elements, elements)
def test_antisymmetry_and_jacobi(u, v, w):
    assert bracket_pr(u, v) == bracket_pr(v, u).scale(-1)
    j = bracket_pr(u, bracket_pr(v, w)) + bracket_pr(v, bracket_pr(w, u)) + bracket_pr(w, bracket_pr(u, v))
    assert not j


@settings(max_examples=100, deadline=None)
@given(homogeneous(), homogeneous())
def test_grading(u, v):
    b = bracket_pr(u, v)
    if u and v:
        g = u.min_grade() + v.min_grade()
        assert all(t.grade == g for t in b.support())


@settings(max_examples=50, deadline=None)
@given(elements)
def test_theta_central(u):
    # Theta = w1 R1[0,0] + w2 R2[0,0]; both summands commute with everything
    from hypernf.liealg import R

    assert not bracket_pr(u, GElement.term(R(1, 0, 0)))
    assert not bracket_pr(u, GElement.term(R(2, 0, 0)))
    from hypernf.liealg import linear_part_A

    assert not bracket_complex(linear_part_A(), pr_to_complex(u))


@settings(max_examples=40, deadline=None)
@given(homogeneous(1, 3), homogeneous(1, 3))
def test_complex_bracket_matches_and_stays_real(u, v):
    cb = bracket_complex(pr_to_complex(u), pr_to_complex(v))
    assert cb == pr_to_complex(bracket_pr(u, v))
    check_reality(cb)


@settings(max_examples=60, deadline=None)
@given(elements.filter(lambda g: all(t.grade >= 1 for t in g.support())), st.booleans())
def test_pr_roundtrip(u, theta):
    s = SystemPR(u, includes_theta=theta)
    assert complex_to_pr(pr_to_complex(s)) == s
