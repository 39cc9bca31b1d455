"""Affine bijections of F^d and the relation-respect deciders."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from . import linalg
from .field import FieldMode, format_element, to_field
from .geometry import (DimensionMismatch, Point, ProductForm, RelationId, eval_relation,
                       origin, unit, vadd, vscale, vsub)
from .linalg import Matrix, SingularMatrix

try:  # optional fast rationals for the sampling oracle
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = None

__all__ = [
    "AffineMap",
    "SampledRespect",
    "SingularMatrix",
    "compose",
    "decompose",
    "determinant",
    "form_factor",
    "galilean_factor",
    "inverse",
    "preserves_sim_origin",
    "preserves_time_axis",
    "respects_exact",
    "respects_sampled",
]


@dataclass(frozen=True)
class AffineMap:
    """A = translation o linear.  Column i of ``linear`` is the image of e_(i+1)."""

    linear: Matrix
    translation: Point

    def __post_init__(self):
        lin = linalg.as_matrix(self.linear)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "translation", tuple(self.translation))
        if len(lin) < 2:
            raise DimensionMismatch("affine maps need d >= 2")
        if len(self.translation) != len(lin):
            raise DimensionMismatch("translation length does not match the linear part")
        if linalg.determinant(lin) == 0:
            raise SingularMatrix("linear part is singular; affine maps must be bijective")

    @property
    def d(self) -> int:
        return len(self.linear)

    def __call__(self, p: Point) -> Point:
        return apply(self, p)

    @classmethod
    def identity(cls, d: int) -> AffineMap:
        return cls(linalg.identity(d), origin(d))

    @classmethod
    def translation_by(cls, v: Sequence) -> AffineMap:
        return cls(linalg.identity(len(v)), tuple(v))

    @classmethod
    def linear_map(cls, m: Sequence[Sequence]) -> AffineMap:
        m = linalg.as_matrix(m)
        return cls(m, origin(len(m)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], translation: Optional[Sequence] = None) -> AffineMap:
        m = linalg.transpose(tuple(tuple(c) for c in cols))
        return cls(m, tuple(translation) if translation is not None else origin(len(m)))

    def in_field(self, mode: FieldMode) -> AffineMap:
        conv = lambda x: to_field(x, mode.k)
        return AffineMap(tuple(tuple(conv(x) for x in r) for r in self.linear),
                         tuple(conv(x) for x in self.translation))

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "linear": [[format_element(x) for x in r] for r in self.linear],
            "translation": [format_element(x) for x in self.translation],
        }

    @classmethod
    def from_json(cls, obj: dict, mode: FieldMode = FieldMode()) -> AffineMap:
        try:
            d = int(obj["d"])
            rows = [[mode(x) for x in r] for r in obj["linear"]]
            t = [mode(x) for x in obj.get("translation", ["0"] * d)]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed affine map JSON: {exc}") from exc
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError(f"linear part must be {d}x{d}")
        return cls(tuple(map(tuple, rows)), tuple(t))


def apply(a: AffineMap, p: Point) -> Point:
    if len(p) != a.d:
        raise DimensionMismatch(f"map acts on dimension {a.d}, point has {len(p)}")
    return vadd(linalg.matvec(a.linear, p), a.translation)


def compose(a: AffineMap, b: AffineMap) -> AffineMap:
    """a o b: apply b first."""
    if a.d != b.d:
        raise DimensionMismatch("cannot compose maps of different dimension")
    return AffineMap(linalg.matmul(a.linear, b.linear),
                     vadd(linalg.matvec(a.linear, b.translation), a.translation))


def inverse(a: AffineMap) -> AffineMap:
    li = linalg.inverse(a.linear)
    return AffineMap(li, vscale(-1, linalg.matvec(li, a.translation)))


def decompose(a: AffineMap) -> tuple[AffineMap, AffineMap]:
    """Split A into (L, tau) with A = tau o L, tau the translation by A(o)."""
    return (AffineMap(a.linear, origin(a.d)),
            AffineMap.translation_by(apply(a, origin(a.d))))


def determinant(a: AffineMap):
    return linalg.determinant(a.linear)


# -- structural checks on the linear part ----------------------------------

def form_factor(m: Matrix, form: ProductForm):
    """The a with L(e_i) (x) L(e_j) = a (e_i (x) e_j) for all i, j, else None.

    Zero is never returned: a bijection cannot scale a nondegenerate form by 0.
    """
    d = len(m)
    gram = linalg.matmul(linalg.transpose(m), m)
    if form is ProductForm.MINKOWSKI:
        gram = linalg.matmul(linalg.matmul(linalg.transpose(m), linalg.minkowski_metric(d)), m)
    a = gram[0][0]
    if a == 0:
        return None
    for i in range(d):
        for j in range(d):
            if i == j:
                want = a if (i == 0 or form is ProductForm.EUCLID) else -a
            else:
                want = 0
            if gram[i][j] != want:
                return None
    return a


def preserves_sim_origin(m: Matrix) -> bool:
    """L[S] = S: every spatial unit vector keeps time component 0."""
    return all(m[0][i] == 0 for i in range(1, len(m)))


def preserves_time_axis(m: Matrix) -> bool:
    """L[T] = T: the image of e_1 has zero spatial part."""
    return all(m[j][0] == 0 for j in range(1, len(m)))


def galilean_factor(m: Matrix):
    """Spatial square-factor when L preserves S and scales spatial distances
    uniformly within simultaneity slices; otherwise None."""
    if not preserves_sim_origin(m):
        return None
    block = tuple(r[1:] for r in m[1:])
    gram = linalg.matmul(linalg.transpose(block), block)
    a = gram[0][0]
    n = len(block)
    for i in range(n):
        for j in range(n):
            if gram[i][j] != (a if i == j else 0):
                return None
    return a if a > 0 else None


def respects_exact(a: AffineMap, rel: RelationId) -> bool:
    """Decide whether A respects ``rel`` via finitely many unit-vector identities."""
    m = a.linear
    if rel is RelationId.Bw:
        return True
    if rel is RelationId.S:
        return preserves_sim_origin(m)
    if rel is RelationId.Rest:
        return preserves_time_axis(m)
    if rel is RelationId.CongE:
        return form_factor(m, ProductForm.EUCLID) is not None
    if rel in (RelationId.Lambda, RelationId.CongMu):
        return form_factor(m, ProductForm.MINKOWSKI) is not None
    if rel is RelationId.CongS:
        return galilean_factor(m) is not None
    if rel is RelationId.Delta:
        return preserves_sim_origin(m) and form_factor(m, ProductForm.MINKOWSKI) is not None
    raise ValueError(rel)


# -- randomized oracle -----------------------------------------------------

@dataclass(frozen=True)
class SampledRespect:
    respects: bool
    trials: int
    counterexample: Optional[tuple] = None


def _probes(rel: RelationId, d: int) -> list[tuple]:
    """Tuples built from the origin and unit vectors, tried before random ones."""
    o = origin(d)
    e = [unit(i, d) for i in range(1, d + 1)]
    out: list[tuple] = []
    if rel in (RelationId.S, RelationId.Rest):
        out = [(o, ei) for ei in e]
    elif rel is RelationId.Lambda:
        out = [(o, vadd(e[0], ei)) for ei in e[1:]] + [(o, vsub(e[0], ei)) for ei in e[1:]]
    elif rel is RelationId.Bw:
        half = Fraction(1, 2)
        out = [(o, vscale(half, ei), ei) for ei in e] + [(o, vscale(2, ei), ei) for ei in e]
    elif rel is RelationId.Delta:
        out = [(o, ei, vadd(e[0], ej)) for ei in e[1:] for ej in e[1:]]
    else:
        out = [((o, e[i]), (o, e[j])) for i in range(d) for j in range(i + 1, d)]
        out += [((o, vsub(e[0], e[j])), (o, vadd(e[0], e[j]))) for j in range(1, d)]
        out = [p + q for p, q in out]
    return out


def _random_point(rng: random.Random, d: int) -> Point:
    return tuple(linalg.random_rational(rng) for _ in range(d))


def _random_spatial(rng: random.Random, d: int) -> Point:
    return (Fraction(0),) + tuple(linalg.random_rational(rng) for _ in range(d - 1))


def _lightlike_step(rng: random.Random, d: int) -> Point:
    t = linalg.random_nonzero_rational(rng)
    u = linalg.random_unit_vector(rng, d - 1)
    return (t,) + tuple(t * x for x in u)


def _fast(m: Matrix) -> Matrix:
    return m if _mpq is None else tuple(tuple(map(_mpq, r)) for r in m)


def _random_lorentz(rng: random.Random, d: int) -> Matrix:
    j = linalg.minkowski_metric(d)
    for _ in range(20):
        k = linalg.matmul(j, linalg.random_skew(rng, d, 2))
        try:
            return linalg.cayley(_fast(k))
        except SingularMatrix:
            continue
    return linalg.identity(d)


def _random_rotation(rng: random.Random, n: int) -> Matrix:
    """Same distribution as linalg.random_orthogonal, computed on fast rationals."""
    q = linalg.cayley(_fast(linalg.random_skew(rng, n, 3)))
    if rng.random() < 0.5:
        j = rng.randrange(n)
        q = tuple(tuple(-x if c == j else x for c, x in enumerate(r)) for r in q)
    return q


def random_satisfying(rel: RelationId, rng: random.Random, d: int) -> tuple:
    """A random tuple for which ``rel`` holds (constructed, not filtered).

    Coordinates are exact rationals (Fraction or gmpy2 mpq)."""
    p = _random_point(rng, d)
    if rel is RelationId.Bw:
        r = _random_point(rng, d)
        t = Fraction(rng.randint(0, 8), 8)
        return (p, vadd(p, vscale(t, vsub(r, p))), r)
    if rel is RelationId.S:
        return (p, vadd(p, _random_spatial(rng, d)))
    if rel is RelationId.Rest:
        return (p, vadd(p, (linalg.random_rational(rng),) + (Fraction(0),) * (d - 1)))
    if rel is RelationId.Lambda:
        return (p, vadd(p, _lightlike_step(rng, d)))
    if rel is RelationId.Delta:
        return (p, vadd(p, _random_spatial(rng, d)), vadd(p, _lightlike_step(rng, d)))
    r = _random_point(rng, d)
    if rel is RelationId.CongE:
        v = vsub(_random_point(rng, d), p)
        w = linalg.matvec(_random_rotation(rng, d), v)
    elif rel is RelationId.CongMu:
        v = vsub(_random_point(rng, d), p)
        w = linalg.matvec(_random_lorentz(rng, d), v)
    else:
        v = _random_spatial(rng, d)
        rot = _random_rotation(rng, d - 1)
        w = (Fraction(0),) + linalg.matvec(rot, v[1:])
    return (p, vadd(p, v), r, vadd(r, w))


def _random_tuple(rel: RelationId, rng: random.Random, d: int) -> tuple:
    return tuple(_random_point(rng, d) for _ in range(rel.arity))


def _identity_cast(t: tuple) -> tuple:
    return t


def _mpq_cast(t: tuple) -> tuple:
    return tuple(tuple(map(_mpq, p)) for p in t)


def _accelerate(a: AffineMap):
    """Rational maps are re-expressed over gmpy2 rationals, which are ~10x faster."""
    rational = all(isinstance(x, (int, Fraction)) for r in a.linear for x in r) and all(
        isinstance(x, (int, Fraction)) for x in a.translation)
    if _mpq is None or not rational:
        return a, _identity_cast
    fast = AffineMap(tuple(tuple(map(_mpq, r)) for r in a.linear), tuple(map(_mpq, a.translation)))
    return fast, _mpq_cast


def _candidates(a: AffineMap, rel: RelationId, rng: random.Random, cast) -> Iterator[tuple]:
    a_inv = inverse(a)
    back = lambda t: tuple(a_inv(p) for p in t)
    probes = [cast(t) for t in _probes(rel, a.d)]
    yield from probes
    yield from (back(t) for t in probes)
    while True:
        sat = cast(random_satisfying(rel, rng, a.d))
        yield sat
        yield back(sat)
        yield cast(_random_tuple(rel, rng, a.d))


def respects_sampled(a: AffineMap, rel: RelationId, n: int,
                     seed: int | random.Random = 0) -> SampledRespect:
    """Test the biconditional R(args) <=> R(A(args)) on ``n`` tuples.

    Tuples are biased toward satisfying ``rel`` both before and after applying
    A (preimages of satisfying tuples), so each direction is exercised.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    fast, cast = _accelerate(a)
    for i, args in zip(range(n), _candidates(fast, rel, rng, cast)):
        if eval_relation(rel, args) != eval_relation(rel, tuple(fast(p) for p in args)):
            if cast is _mpq_cast:
                args = tuple(tuple(Fraction(x) for x in p) for p in args)
            return SampledRespect(False, i + 1, args)
    return SampledRespect(True, n)
