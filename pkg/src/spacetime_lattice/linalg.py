"""Small exact matrix toolkit over any field whose elements support + - * /.

Matrices are tuples of row tuples.  Sizes here are tiny (d <= ~6), so the
straightforward cubic algorithms are the right tool.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence, Tuple

Matrix = Tuple[Tuple, ...]


class SingularMatrix(ValueError):
    pass


def identity(d: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


def zeros(d: int) -> Matrix:
    return tuple((Fraction(0),) * d for _ in range(d))


def minkowski_metric(d: int) -> Matrix:
    """diag(1, -1, ..., -1)."""
    return tuple(tuple(Fraction((1 if i == 0 else -1) if i == j else 0) for j in range(d))
                 for i in range(d))


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    m = tuple(tuple(r) for r in rows)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    return m


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        new = []
        for col in bt:
            s = row[0] * col[0]
            for x, y in zip(row[1:], col[1:]):
                s = s + x * y
            new.append(s)
        out.append(tuple(new))
    return tuple(out)


def matvec(a: Matrix, v: Sequence) -> tuple:
    out = []
    for row in a:
        s = row[0] * v[0]
        for x, y in zip(row[1:], v[1:]):
            s = s + x * y
        out.append(s)
    return tuple(out)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in r) for r in a)


def column(a: Matrix, j: int) -> tuple:
    return tuple(r[j] for r in a)


def determinant(a: Matrix):
    """Bareiss fraction-free elimination with row pivoting."""
    n = len(a)
    m = [list(r) for r in a]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0) * m[0][0]
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises SingularMatrix."""
    n = len(a)
    one = a[0][0] * 0 + 1
    m = [list(r) + [one if i == j else one * 0 for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is not invertible")
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return tuple(tuple(r[n:]) for r in m)


def cayley(k: Matrix) -> Matrix:
    """(I - K)(I + K)^-1.  Orthogonal for skew K; J-orthogonal for J-skew K."""
    i = identity(len(k))
    return matmul(mat_sub(i, k), inverse(mat_add(i, k)))


def random_rational(rng: random.Random, bound: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_nonzero_rational(rng: random.Random, bound: int = 6, max_den: int = 4) -> Fraction:
    while True:
        x = random_rational(rng, bound, max_den)
        if x:
            return x


def random_skew(rng: random.Random, d: int, bound: int = 3, max_den: int = 3) -> Matrix:
    m = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            x = random_rational(rng, bound, max_den)
            m[i][j], m[j][i] = x, -x
    return tuple(tuple(r) for r in m)


def random_orthogonal(rng: random.Random, d: int, bound: int = 3) -> Matrix:
    """Rational orthogonal matrix via the Cayley transform; det may be +-1."""
    q = cayley(random_skew(rng, d, bound))
    if rng.random() < 0.5:
        # flip one column to reach the other component
        j = rng.randrange(d)
        q = tuple(tuple(-x if c == j else x for c, x in enumerate(r)) for r in q)
    return q


def random_unit_vector(rng: random.Random, n: int, bound: int = 4) -> tuple:
    """Rational point on the unit sphere in Q^n (inverse stereographic projection)."""
    if n == 1:
        return (Fraction(rng.choice((-1, 1))),)
    y = [random_rational(rng, bound, 3) for _ in range(n - 1)]
    s = sum((t * t for t in y), Fraction(0))
    u = [2 * t / (s + 1) for t in y] + [(s - 1) / (s + 1)]
    rng.shuffle(u)
    return tuple(u)


def random_invertible(rng: random.Random, d: int, bound: int = 5, max_den: int = 3) -> Matrix:
    while True:
        m = tuple(tuple(random_rational(rng, bound, max_den) for _ in range(d)) for _ in range(d))
        if determinant(m) != 0:
            return m
