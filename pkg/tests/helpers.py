"""Shared random generators and small utilities for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from qact import Mat, Scalar, as_scalar

SMALL_DENOMS = (1, 1, 1, 2, 3)


def random_scalar(rng: random.Random, lo: int = -4, hi: int = 4, complex_ok: bool = True) -> Scalar:
    a = rng.randint(lo, hi)
    b = rng.randint(lo, hi) if complex_ok and rng.random() < 0.3 else 0
    d = rng.choice(SMALL_DENOMS)
    return Scalar(a, b, d)


def random_nonzero_scalar(rng: random.Random, **kw) -> Scalar:
    while True:
        s = random_scalar(rng, **kw)
        if s:
            return s


def random_mat(rng: random.Random, n: int) -> Mat:
    return Mat([[random_scalar(rng) for _ in range(n)] for _ in range(n)])


def random_low_rank(rng: random.Random, n: int, k: int) -> Mat:
    """Product of an n-by-k and a k-by-n slice, so rank is at most k."""
    left = [[random_scalar(rng) for _ in range(k)] for _ in range(n)]
    right = [[random_scalar(rng) for _ in range(n)] for _ in range(k)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            total = as_scalar(0)
            for m in range(k):
                total = total + left[i][m] * right[m][j]
            row.append(total)
        rows.append(row)
    return Mat(rows)


def random_strictly_upper(rng: random.Random, n: int = 4) -> Mat:
    rows = []
    for i in range(n):
        rows.append([as_scalar(0)] * (i + 1) + [random_scalar(rng) for _ in range(n - i - 1)])
    return Mat(rows)


def random_invertible_upper(rng: random.Random, n: int = 4) -> Mat:
    rows = []
    for i in range(n):
        row = [as_scalar(0)] * i
        row.append(rng.choice([as_scalar(1), as_scalar(2), as_scalar(3), as_scalar(-1), Scalar(1, 1)]))
        row.extend(random_scalar(rng, -2, 2) for _ in range(n - i - 1))
        rows.append(row)
    return Mat(rows)


def random_diag(rng: random.Random, values, n: int = 4) -> Mat:
    return Mat.diag(*[as_scalar(rng.choice(values)) for _ in range(n)])


def matvec(m: Mat, vec) -> tuple:
    out = []
    for row in m.rows:
        total = as_scalar(0)
        for entry, x in zip(row, vec):
            if entry and x:
                total = total + entry * x
        out.append(total)
    return tuple(out)


def frac(x) -> Fraction:
    return Fraction(x)
