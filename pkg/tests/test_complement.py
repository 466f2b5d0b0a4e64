import random
from fractions import Fraction as F
from math import gcd

import pytest

from conftest import sysfrom
from helpers import branch_systems, caseI_cubic, is_complement, rq
from hypernf.errors import UncoveredCase
from hypernf.hyper import classify_case, classify_system, predicted_complement, predicted_rank, rank_exact, assemble_A
from hypernf.hyper.complement import group
from hypernf.liealg import P, R

SAMPLES = branch_systems()


@pytest.mark.parametrize("branch,system,override", SAMPLES, ids=[f"{b}-{i}" for i, (b, _, _) in enumerate(SAMPLES)])
def test_corrected_sets_are_complements(branch, system, override):
    tag = classify_system(system, override=override)
    assert tag.branch == branch and tag.covered
    for n in range(2, 11):
        S = predicted_complement(tag, n, system)
        assert is_complement(system, n, S), n
        assert predicted_rank(tag, n, system) == rank_exact(assemble_A(n, system))


def test_random_caseI_sweep():
    rnd = random.Random(5)
    done = 0
    while done < 40:
        p, q, r, s = (rnd.randint(1, 5) for _ in range(4))
        if gcd(p, q) != 1 or gcd(r, s) != 1:
            continue
        sy = sysfrom(caseI_cubic(p, q, r, s, abs(rq(rnd)), abs(rq(rnd))), tuple(rq(rnd) for _ in range(4)))
        tag = classify_system(sy)
        for n in range(2, 13):
            assert is_complement(sy, n, predicted_complement(tag, n, sy)), (p, q, r, s, n)
        done += 1


# sub-cases where the stated set is not a complement (see the decisions ledger)
ERRATA = [
    ("P2 j0=j1", caseI_cubic(1, 1, 1, 2), 8),
    ("P3 mp<=m'r+1", caseI_cubic(1, 1, 1, 2), 5),
    ("P4 mp<=m'r", caseI_cubic(1, 1, 1, 2), 4),
    ("opposite a2_10=0 p=1", (F(-1), F(1), F(1), F(0)), 3),
    ("a2_01=0 a1_10=0", (F(2), F(0), F(0), F(3)), 3),
    ("ratio-integer a1_10=0", (F(1), F(2), F(0), F(1)), 3),
]


@pytest.mark.parametrize("label,cubic,n", ERRATA, ids=[e[0] for e in ERRATA])
def test_stated_set_fails_corrected_holds(label, cubic, n):
    sy = sysfrom(cubic, (1, 2, -1, 1))
    tag = classify_system(sy)
    stated = predicted_complement(tag, n, sy, literal=True)
    fixed = predicted_complement(tag, n, sy)
    assert stated != fixed
    assert not is_complement(sy, n, stated)
    assert is_complement(sy, n, fixed)


def test_same_sign_grade2_family():
    sy = sysfrom((1, F(5, 2), 1, -3))
    S = predicted_complement(classify_system(sy), 2, sy)
    assert S == {P(2, 0, 2)} | group(2, 2)


def test_caseI_P7_is_top_group():
    tag = classify_case(*caseI_cubic(1, 2, 1, 1))
    # n = 6 with p+q = 3, r+s = 2 sits in no special class
    assert predicted_complement(tag, 6) == group(6, 6)


def test_a01_zero_branch_two_drops_P1_1():
    sy = sysfrom((0, 0, 3, 0), (0, 0, 1, 1))
    tag = classify_system(sy)
    for n in range(3, 7):
        S = predicted_complement(tag, n, sy)
        assert P(1, 2, n - 2) in S and P(1, 1, n - 1) not in S


def test_uncovered_raises():
    tag = classify_case(0, 0, 2, 1)
    with pytest.raises(UncoveredCase):
        predicted_complement(tag, 3)
