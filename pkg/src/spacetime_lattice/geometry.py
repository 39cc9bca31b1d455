"""Points of F^d, the Euclidean and Minkowski products, and the eight
spacetime relations as exact predicates.

Points are plain tuples of field elements.  Component 0 is the time
coordinate, components 1..d-1 are spatial.  ``unit(i, d)`` uses the
1-based numbering e_1 .. e_d, so ``unit(1, d)`` is the time direction.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence, Tuple

__all__ = [
    "ArityMismatch",
    "DimensionMismatch",
    "Point",
    "ProductForm",
    "RelationId",
    "betweenness",
    "dot",
    "eval_relation",
    "in_sim_origin",
    "in_time_axis",
    "mink",
    "origin",
    "product_from_sqdist",
    "sq_dist",
    "unit",
    "vadd",
    "vscale",
    "vsub",
]

Point = Tuple  # d-tuple of field elements


class DimensionMismatch(ValueError):
    pass


class ArityMismatch(ValueError):
    pass


def _check(*points: Sequence) -> int:
    d = len(points[0])
    if d < 2:
        raise DimensionMismatch(f"points must have at least 2 coordinates, got {d}")
    for p in points[1:]:
        if len(p) != d:
            raise DimensionMismatch(f"expected dimension {d}, got {len(p)}")
    return d


def origin(d: int) -> Point:
    return (Fraction(0),) * d


def unit(i: int, d: int) -> Point:
    """The unit vector e_i, ``1 <= i <= d``."""
    if not 1 <= i <= d:
        raise ValueError(f"unit index {i} outside 1..{d}")
    return tuple(Fraction(int(j == i - 1)) for j in range(d))


def vadd(p: Point, q: Point) -> Point:
    _check(p, q)
    return tuple(x + y for x, y in zip(p, q))


def vsub(p: Point, q: Point) -> Point:
    _check(p, q)
    return tuple(x - y for x, y in zip(p, q))


def vscale(c, p: Point) -> Point:
    return tuple(c * x for x in p)


def dot(p: Point, q: Point):
    _check(p, q)
    total = Fraction(0)
    for x, y in zip(p, q):
        total = total + x * y
    return total


def mink(p: Point, q: Point):
    _check(p, q)
    total = p[0] * q[0]
    for x, y in zip(p[1:], q[1:]):
        total = total - x * y
    return total


class ProductForm(enum.Enum):
    EUCLID = "euclid"
    MINKOWSKI = "minkowski"

    def __call__(self, p: Point, q: Point):
        return dot(p, q) if self is ProductForm.EUCLID else mink(p, q)


def sq_dist(form: ProductForm, p: Point, q: Point):
    v = vsub(p, q)
    return form(v, v)


def product_from_sqdist(form: ProductForm, p: Point, q: Point):
    """Recover the product from squared distances alone (polarization)."""
    o = origin(_check(p, q))
    return (sq_dist(form, p, o) + sq_dist(form, q, o) - sq_dist(form, p, q)) / 2


def betweenness(p: Point, q: Point, r: Point) -> bool:
    """True iff q = p + t(r - p) for some t in [0, 1]."""
    _check(p, q, r)
    if p == r:
        return q == p
    i = next(j for j in range(len(p)) if r[j] != p[j])
    t = (q[i] - p[i]) / (r[i] - p[i])
    if t < 0 or t > 1:
        return False
    return all(q[j] == p[j] + t * (r[j] - p[j]) for j in range(len(p)))


def in_time_axis(p: Point) -> bool:
    return all(x == 0 for x in p[1:])


def in_sim_origin(p: Point) -> bool:
    return p[0] == 0


class RelationId(enum.Enum):
    """The eight relations; value is the stable string name used in JSON."""

    Bw = "Bw"
    S = "S"
    Rest = "Rest"
    Lambda = "lambda"
    CongE = "cong"
    CongMu = "cong_mu"
    CongS = "cong_S"
    Delta = "delta"

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @classmethod
    def parse(cls, name: str) -> RelationId:
        key = name.strip().lower()
        for rel in cls:
            if key in (rel.name.lower(), rel.value.lower()):
                return rel
        raise ValueError(f"unknown relation {name!r}")


_ARITY = {
    RelationId.Bw: 3, RelationId.S: 2, RelationId.Rest: 2, RelationId.Lambda: 2,
    RelationId.CongE: 4, RelationId.CongMu: 4, RelationId.CongS: 4, RelationId.Delta: 3,
}


def _simultaneous(p, q) -> bool:
    return p[0] == q[0]


def _rest(p, q) -> bool:
    return tuple(p[1:]) == tuple(q[1:])


def _lightlike(p, q) -> bool:
    v = vsub(p, q)
    spatial = Fraction(0)
    for x in v[1:]:
        spatial = spatial + x * x
    return v[0] * v[0] == spatial


def eval_relation(rel: RelationId, args: Sequence[Point]) -> bool:
    if len(args) != rel.arity:
        raise ArityMismatch(f"{rel.value} takes {rel.arity} points, got {len(args)}")
    _check(*args)
    if rel is RelationId.Bw:
        return betweenness(*args)
    if rel is RelationId.S:
        return _simultaneous(*args)
    if rel is RelationId.Rest:
        return _rest(*args)
    if rel is RelationId.Lambda:
        return _lightlike(*args)
    p, q, r = args[:3]
    if rel is RelationId.Delta:
        return _simultaneous(p, q) and _lightlike(p, r)
    s = args[3]
    if rel is RelationId.CongE:
        return sq_dist(ProductForm.EUCLID, p, q) == sq_dist(ProductForm.EUCLID, r, s)
    if rel is RelationId.CongMu:
        return sq_dist(ProductForm.MINKOWSKI, p, q) == sq_dist(ProductForm.MINKOWSKI, r, s)
    # CongS
    return (_simultaneous(p, q) and _simultaneous(r, s)
            and sq_dist(ProductForm.EUCLID, p, q) == sq_dist(ProductForm.EUCLID, r, s))
