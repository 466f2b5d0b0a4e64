import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

from hypernf.liealg import GElement, P, R, SystemPR

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(Path(__file__).resolve().parent))


def sysfrom(cubic, rot=(0, 0, 0, 0), extra=None):
    """System with the given grade-1 radial and rotating coefficients."""
    names = [(1, 0, 1), (2, 0, 1), (1, 1, 0), (2, 1, 0)]
    body = {P(*k): c for k, c in zip(names, cubic)}
    body.update({R(*k): c for k, c in zip(names, rot)})
    if extra:
        body.update(extra)
    return SystemPR(GElement(body))


def ratio_integer_example(a110=1):
    """The worked ratio-integer (Case II) example; a110 is the P1[1,0] coefficient."""
    g = {
        P(1, 0, 1): 1, P(2, 0, 1): 2, P(1, 1, 0): a110, P(2, 1, 0): -1,
        P(1, 1, 1): 1, P(2, 1, 1): 1, P(2, 2, 0): 1, R(1, 2, 0): 1,
        P(1, 2, 1): F(1, 6), P(2, 2, 1): F(2, 3), P(2, 3, 0): 1,
        P(1, 3, 1): 1, P(2, 3, 1): 1, P(2, 4, 0): 1, R(2, 4, 0): 1,
        P(1, 4, 1): 1, P(2, 4, 1): 1, P(1, 5, 0): 1, P(2, 5, 0): 1,
    }
    return SystemPR(GElement(g))


def a01_zero_example():
    """Case III, a01 = 0, a10 = (2, 1): the ratio-integer body with a new cubic part."""
    s = ratio_integer_example()
    body = s.body.as_dict()
    body.update({P(1, 0, 1): 0, P(2, 0, 1): 0, P(1, 1, 0): 2, P(2, 1, 0): 1})
    return SystemPR(GElement(body))


KERNEL_DIR = GElement({P(1, 0, 1): 1, P(1, 1, 0): 1, P(2, 0, 1): -4, P(2, 1, 0): -4})


def third_level_example():
    g = KERNEL_DIR + GElement({P(1, 2, 0): 1, P(1, 3, 0): 1, P(2, 3, 0): 2, R(1, 3, 0): 1, R(2, 3, 0): 1})
    return SystemPR(g)


@pytest.fixture(scope="session")
def paper_text():
    return (ROOT / "paper.md").read_text(encoding="utf-8")
