"""Random generators shared by several test modules."""

import random
from fractions import Fraction as F

from hypernf.liealg import ComplexVF, GElement, SystemPR, basis, linear_part_A
from hypernf.scalars import FreqScalar, GaussianRational


def random_complex(rnd: random.Random, max_degree: int = 5, count: int = 6) -> ComplexVF:
    """A + a real random field of degrees 2..max_degree with Gaussian coefficients."""
    c = {}
    for _ in range(count):
        d = rnd.randint(2, max_degree)
        e = [0] * 4
        for _ in range(d):
            e[rnd.randrange(4)] += 1
        j = rnd.randint(1, 4)
        g = GaussianRational(F(rnd.randint(-3, 3)), F(rnd.randint(-3, 3)))
        key = (tuple(e), j)
        c[key] = c.get(key, FreqScalar.coerce(0)) + FreqScalar.coerce(g)
    w = ComplexVF(c)
    return linear_part_A() + w + w.conjugate_partner()


def rq(rnd: random.Random) -> F:
    return F(rnd.choice([-3, -2, -1, 1, 2, 3]), rnd.choice([1, 2, 3]))


def random_gelement(rnd: random.Random, max_grade: int, density: float = 0.3, min_grade: int = 1) -> GElement:
    g = {}
    for n in range(min_grade, max_grade + 1):
        for t in basis(n):
            if rnd.random() < density:
                g[t] = rq(rnd)
    return GElement(g)


def random_homogeneous(rnd: random.Random, n: int, density: float = 0.4) -> GElement:
    return random_gelement(rnd, n, density, min_grade=n)


def random_tail(rnd: random.Random, cubic, rot, N: int, density: float = 0.7) -> SystemPR:
    from conftest import sysfrom

    s = sysfrom(cubic, rot)
    tail = random_gelement(rnd, N, density, min_grade=2)
    return SystemPR(s.body + tail)


def caseI_cubic(p, q, r, s, c1=F(1), c2=F(1)):
    """Cubic part with a1_01/a2_01 = -q/p and a1_10/a2_10 = -s/r."""
    return (-c1 * q, c1 * p, -c2 * s, c2 * r)


# cubic parts per covered branch; every branch gets at least three parameter sets
BRANCH_CUBICS = {
    "I:coprime-sums": [caseI_cubic(1, 2, 1, 1), caseI_cubic(2, 1, 1, 3, F(1, 2)), caseI_cubic(2, 3, 1, 1, F(2), F(3))],
    "I:shared-factor": [caseI_cubic(1, 3, 1, 1), caseI_cubic(1, 1, 1, 3, F(3, 2)), caseI_cubic(3, 1, 1, 1, F(1), F(2))],
    "I:equal-ratios": [caseI_cubic(1, 1, 1, 1), caseI_cubic(1, 2, 1, 2, F(1), F(3)), caseI_cubic(3, 1, 3, 1, F(2))],
    "I:equal-sums": [caseI_cubic(1, 2, 2, 1), caseI_cubic(1, 3, 3, 1, F(2)), caseI_cubic(3, 2, 1, 4)],
    "a01-same-sign": [(F(1), F(5, 2), F(1), F(-3)), (F(2), F(3), F(-1), F(2)), (F(-1), F(-3, 2), F(1), F(1))],
    "a01-ratio-integer": [(F(1), F(2), F(1), F(-1)), (F(1), F(3), F(2), F(-1)), (F(2), F(8), F(0), F(3))],
    "a01-ratio-one": [(F(1), F(1), F(2), F(-1)), (F(2), F(2), F(1), F(1)), (F(1), F(1), F(0), F(0))],
    "a10-same-sign": [(F(1), F(-2), F(2), F(5)), (F(0), F(0), F(2), F(5)), (F(-1), F(1), F(3), F(4))],
    "a01-opposite,a2_10=0": [(F(-1), F(2), F(3), F(0)), (F(-2), F(1), F(1), F(0)), (F(-1), F(1), F(1), F(0))],
    "a01-opposite,a1_10=0": [(F(-1), F(2), F(0), F(3)), (F(-2), F(1), F(0), F(1)), (F(-1), F(3), F(0), F(1))],
    "a1_01=0,a1_10=0": [(F(0), F(2), F(0), F(3)), (F(0), F(-1), F(0), F(2)), (F(0), F(1), F(0), F(1))],
    "a1_01=0,a2_10=0": [(F(0), F(2), F(3), F(0)), (F(0), F(-1), F(2), F(0)), (F(0), F(1), F(1), F(0))],
    "a2_01=0,a1_10=0": [(F(2), F(0), F(0), F(3)), (F(-1), F(0), F(0), F(2)), (F(1), F(0), F(0), F(-1))],
    "a2_01=0,a2_10=0": [(F(2), F(0), F(3), F(0)), (F(-1), F(0), F(2), F(0)), (F(1), F(0), F(-1), F(0))],
    "a01=0,a1_10=0": [(F(0), F(0), F(0), F(3)), (F(0), F(0), F(0), F(-1)), (F(0), F(0), F(0), F(1, 2))],
    "a01=0,a2_10=0": [(F(0), F(0), F(3), F(0)), (F(0), F(0), F(-1), F(0)), (F(0), F(0), F(1, 2), F(0))],
}

# rotating parts that reach the sub-items of rotation-dependent branches
BRANCH_ROTS = {
    "a01-ratio-one": [None, None, (0, 0, 0, F(1))],
    "a01=0,a2_10=0": [(0, 0, 1, 1), (F(1), 0, 1, 1), (0, F(2), 1, 1)],
}

OVERRIDE_SAMPLES = {
    "a01-irrational": [(F(1), F(5, 2), F(1), F(-3)), (F(2), F(3), F(1), F(1)), (F(1), F(7, 3), F(0), F(1))],
    "a10-irrational": [(F(1), F(-2), F(5, 2), F(1)), (F(0), F(0), F(3), F(2)), (F(-1), F(1), F(7, 2), F(3))],
}


def branch_systems(seed: int = 0):
    """(expected branch, system, override) for every sample above."""
    from conftest import sysfrom

    rnd = random.Random(seed)
    out = []
    for branch, cubics in BRANCH_CUBICS.items():
        rots = BRANCH_ROTS.get(branch, [None] * len(cubics))
        for cub, rot in zip(cubics, rots):
            if rot is None:
                rot = tuple(rq(rnd) for _ in range(4))
            out.append((branch, sysfrom(cub, rot), None))
    for branch, cubics in OVERRIDE_SAMPLES.items():
        for cub in cubics:
            out.append((branch, sysfrom(cub, tuple(rq(rnd) for _ in range(4))), branch))
    return out


def is_complement(system, n, terms) -> bool:
    """True iff the rows outside ``terms`` span the image at grade n."""
    from hypernf import linalg
    from hypernf.hyper import assemble_A

    M = assemble_A(n, system).dense()
    rk = linalg.rank(M)
    B = basis(n)
    if len(terms) != len(B) - rk:
        return False
    kept = [M[i] for i, t in enumerate(B) if t not in terms]
    return (linalg.rank(kept) if kept else 0) == rk
