"""The five similarity groups: membership deciders, random generators,
the witness catalog, and decompositions over Euclidean fields."""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .field import FieldMode, format_element, sqrt_exact
from .geometry import ProductForm
from .linalg import Matrix, SingularMatrix
from .transform import (AffineMap, compose, form_factor, galilean_factor,
                        preserves_time_axis)

__all__ = [
    "GroupId",
    "SimilarityDecomposition",
    "SimilarityVerdict",
    "Witness",
    "classify",
    "decompose_similarity",
    "generate",
    "is_galilean_transformation",
    "witness",
]


class GroupId(enum.Enum):
    EuclSim = "eucl_sim"
    PoiSim = "poi_sim"
    GalSim = "gal_sim"
    TrivGalSim = "triv_gal_sim"
    TrivEuclSim = "triv_eucl_sim"

    @classmethod
    def parse(cls, name: str) -> GroupId:
        key = name.strip().lower()
        for g in cls:
            if key in (g.value, g.name.lower()):
                return g
        raise ValueError(f"unknown group {name!r}")


@dataclass(frozen=True)
class SimilarityVerdict:
    member: bool
    square_factor: Optional[object] = None
    temporal_factor: Optional[object] = None

    def to_json(self) -> dict:
        out: dict = {"member": self.member}
        if self.square_factor is not None:
            out["a"] = format_element(self.square_factor)
        if self.temporal_factor is not None:
            out["b"] = format_element(self.temporal_factor)
        return out


_NOT_MEMBER = SimilarityVerdict(False)


def classify(a: AffineMap, g: GroupId) -> SimilarityVerdict:
    """Exact membership of A in group ``g``.  The translation part is ignored."""
    m = a.linear
    if g in (GroupId.EuclSim, GroupId.TrivEuclSim):
        f = form_factor(m, ProductForm.EUCLID)
        if f is None or (g is GroupId.TrivEuclSim and not preserves_time_axis(m)):
            return _NOT_MEMBER
        return SimilarityVerdict(True, f)
    if g is GroupId.PoiSim:
        f = form_factor(m, ProductForm.MINKOWSKI)
        return _NOT_MEMBER if f is None else SimilarityVerdict(True, f)
    f = galilean_factor(m)
    if f is None or (g is GroupId.TrivGalSim and not preserves_time_axis(m)):
        return _NOT_MEMBER
    return SimilarityVerdict(True, f, m[0][0])


def is_galilean_transformation(a: AffineMap) -> bool:
    v = classify(a, GroupId.GalSim)
    return v.member and v.square_factor == 1 and all(
        x == (1 if i == 0 else 0) for i, x in enumerate(a.linear[0]))


# -- witness catalog -------------------------------------------------------

class Witness(enum.Enum):
    E = "E"
    P = "P"
    N = "N"
    G = "G"
    Swap = "swap"

    @classmethod
    def parse(cls, name: str) -> Witness:
        for w in cls:
            if name in (w.value, w.name) or name.lower() == w.value.lower():
                return w
        raise ValueError(f"unknown witness {name!r}")


def _from_images(d: int, images: dict[int, tuple]) -> AffineMap:
    """Linear map sending e_i to images[i] (1-based), other unit vectors fixed."""
    cols = []
    for i in range(1, d + 1):
        if i in images:
            img = tuple(Fraction(x) for x in images[i]) + (Fraction(0),) * (d - len(images[i]))
        else:
            img = tuple(Fraction(int(j == i - 1)) for j in range(d))
        cols.append(img)
    return AffineMap.from_columns(cols)


def witness(name: Witness | str, d: int) -> AffineMap:
    if isinstance(name, str):
        name = Witness.parse(name)
    if d < 2:
        raise ValueError("witness maps need d >= 2")
    f = Fraction
    if name is Witness.E:
        return _from_images(d, {1: (f(3, 5), f(4, 5)), 2: (f(4, 5), f(-3, 5))})
    if name is Witness.P:
        return _from_images(d, {1: (f(5, 3), f(4, 3)), 2: (f(4, 3), f(5, 3))})
    if name is Witness.N:
        return _from_images(d, {1: (2,)})
    if name is Witness.G:
        return _from_images(d, {1: (1, 1)})
    return _from_images(d, {1: (0, 1), 2: (1, 0)})


# -- generators --------------------------------------------------------------

_SCALES = (Fraction(1), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3), Fraction(2, 3))


def _pick_scale(rng: random.Random) -> Fraction:
    return rng.choice(_SCALES) * rng.choice((1, -1))


def _orthogonal(rng: random.Random, n: int, skew_bound: int, reflect: Optional[bool]) -> Matrix:
    if n == 0:
        return ()
    q = linalg.cayley(linalg.random_skew(rng, n, skew_bound)) if skew_bound else linalg.identity(n)
    if reflect is None:
        reflect = rng.random() < 0.5
    if reflect:
        j = rng.randrange(n)
        q = tuple(tuple(-x if c == j else x for c, x in enumerate(r)) for r in q)
    return q


def _conformal_blocks(rng: random.Random, n: int) -> tuple[Matrix, Fraction]:
    """Block-diagonal [[p,-q],[q,p]] similarity of Q^n (n even), factor p^2+q^2."""
    p, q = rng.choice(((1, 1), (1, 2), (2, 1), (1, 3))) if n else (1, 0)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(0, n, 2):
        m[k][k], m[k][k + 1], m[k + 1][k], m[k + 1][k + 1] = (
            Fraction(p), Fraction(-q), Fraction(q), Fraction(p))
    return tuple(map(tuple, m)), Fraction(p * p + q * q)


def _block_diag(t, spatial: Matrix, boost=None) -> Matrix:
    n = len(spatial)
    rows = [(t,) + (Fraction(0),) * n]
    for i in range(n):
        rows.append(((boost[i] if boost else Fraction(0)),) + tuple(spatial[i]))
    return tuple(rows)


def _lorentz(rng: random.Random, d: int, skew_bound: int) -> Matrix:
    if not skew_bound:
        return linalg.identity(d)
    j = linalg.minkowski_metric(d)
    for _ in range(50):
        try:
            return linalg.cayley(linalg.matmul(j, linalg.random_skew(rng, d, skew_bound)))
        except SingularMatrix:
            continue
    return linalg.identity(d)


def _random_translation(rng: random.Random, d: int):
    return tuple(linalg.random_rational(rng) for _ in range(d))


def generate(g: GroupId, d: int, seed: int | random.Random = 0, *,
             scale=None, temporal=None, reflect: Optional[bool] = None,
             skew_bound: int = 3, boost: bool = True, translate: bool = True,
             nonsquare: Optional[bool] = None) -> AffineMap:
    """Random member of group ``g`` in dimension ``d``.

    ``scale`` fixes the uniform (spatial, for the Galilean groups) scale c, so
    the square-factor is c**2; ``temporal`` fixes the time scale b of the
    Galilean groups.  ``skew_bound=0`` removes the random rotation part and
    ``nonsquare`` mixes in a 2x2-block conformal factor whose square-factor
    is not a rational square (needs an even-sized block).
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    c = Fraction(scale) if scale is not None else _pick_scale(rng)
    if c == 0:
        raise ValueError("scale must be nonzero")
    shift = _random_translation(rng, d) if translate else (Fraction(0),) * d

    if g is GroupId.EuclSim:
        m = linalg.mat_scale(c, _orthogonal(rng, d, skew_bound, reflect))
        if nonsquare is None:
            nonsquare = d % 2 == 0 and rng.random() < 0.25
        if nonsquare and d % 2 == 0:
            m = linalg.matmul(m, _conformal_blocks(rng, d)[0])
    elif g is GroupId.PoiSim:
        m = _lorentz(rng, d, skew_bound)
        if reflect if reflect is not None else rng.random() < 0.5:
            flip = rng.randrange(d)
            m = tuple(tuple(-x if c_ == flip else x for c_, x in enumerate(r)) for r in m)
        m = linalg.mat_scale(c, m)
        if d == 2 and (nonsquare if nonsquare is not None else rng.random() < 0.3):
            # diag(alpha, beta) in the null basis t+x, t-x: square-factor alpha*beta
            al, be = _pick_scale(rng), _pick_scale(rng)
            h = Fraction(1, 2)
            m = linalg.matmul(m, ((h * (al + be), h * (al - be)), (h * (al - be), h * (al + be))))
        if d == 2 and rng.random() < 0.25:
            m = linalg.matmul(m, witness(Witness.Swap, 2).linear)
    else:
        n = d - 1
        b = Fraction(temporal) if temporal is not None else _pick_scale(rng)
        if b == 0:
            raise ValueError("temporal scale must be nonzero")
        spatial = linalg.mat_scale(c, _orthogonal(rng, n, skew_bound, reflect))
        if g is GroupId.TrivEuclSim:
            # time scale must be +-c, so the square-factor c**2 is always a square
            sign = 1 if reflect is False else rng.choice((1, -1))
            m = _block_diag(c * sign, spatial)
        else:
            if nonsquare is None:
                nonsquare = n % 2 == 0 and rng.random() < 0.25
            if nonsquare and n % 2 == 0:
                spatial = linalg.matmul(spatial, _conformal_blocks(rng, n)[0])
            if g is GroupId.TrivGalSim:
                m = _block_diag(b, spatial)
            else:
                kick = [linalg.random_rational(rng) for _ in range(n)] if boost else None
                m = _block_diag(b, spatial, kick)
    out = AffineMap(m, shift)
    if not classify(out, g).member:  # pragma: no cover - construction guarantees membership
        raise AssertionError(f"generator produced a non-member of {g.value}")
    return out


# -- decompositions over Euclidean fields -----------------------------------

@dataclass(frozen=True)
class SimilarityDecomposition:
    """A = transformation o scalings[0] o scalings[1] o ..."""

    transformation: AffineMap
    scalings: tuple[AffineMap, ...]
    square_factor: object
    scale: object

    def recompose(self) -> AffineMap:
        out = self.transformation
        for s in self.scalings:
            out = compose(out, s)
        return out


def _diag(entries) -> AffineMap:
    d = len(entries)
    return AffineMap.linear_map(tuple(tuple(entries[i] if i == j else entries[i] * 0
                                            for j in range(d)) for i in range(d)))


def decompose_similarity(a: AffineMap, g: GroupId, mode: FieldMode = FieldMode()) -> SimilarityDecomposition:
    """Split a Euclidean or Galilean similarity into a transformation and scalings.

    Raises NotRepresentable when the square root of the square-factor is not
    in the field selected by ``mode``.
    """
    if g not in (GroupId.EuclSim, GroupId.GalSim):
        raise ValueError("decomposition is defined for eucl_sim and gal_sim only")
    v = classify(a, g)
    if not v.member:
        raise ValueError(f"map is not a member of {g.value}")
    root = sqrt_exact(v.square_factor, mode.k)
    a = a.in_field(mode) if mode.k is not None else a
    d = a.d
    if g is GroupId.EuclSim:
        scaling = _diag([root] * d)
        lin = linalg.mat_scale(1 / root, a.linear)
        return SimilarityDecomposition(AffineMap(lin, a.translation), (scaling,),
                                       v.square_factor, root)
    b = a.linear[0][0]
    spatial = _diag([root * 0 + 1] + [root] * (d - 1))
    temporal = _diag([b] + [root * 0 + 1] * (d - 1))
    inv = [1 / b] + [1 / root] * (d - 1)
    lin = tuple(tuple(x * inv[j] for j, x in enumerate(r)) for r in a.linear)
    return SimilarityDecomposition(AffineMap(lin, a.translation), (spatial, temporal),
                                   v.square_factor, root)
