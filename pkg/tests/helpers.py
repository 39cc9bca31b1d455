"""Shared strategies and map pools for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from spacetime_lattice import linalg
from spacetime_lattice.geometry import RelationId as R
from spacetime_lattice.groups import GroupId, Witness, classify, generate, witness
from spacetime_lattice.linalg import SingularMatrix
from spacetime_lattice.transform import AffineMap, compose, respects_exact

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
nonzero_rationals = rationals.filter(bool)
dims = st.integers(min_value=2, max_value=4)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def points(d: int, n: int = 1):
    return st.tuples(*[st.tuples(*[rationals] * d)] * n)


def random_affine(rng: random.Random, d: int) -> AffineMap:
    return AffineMap(linalg.random_invertible(rng, d),
                     tuple(linalg.random_rational(rng) for _ in range(d)))


def perturb(a: AffineMap, rng: random.Random) -> AffineMap:
    """Nudge one entry of the linear part; near-misses stress the deciders."""
    for _ in range(20):
        rows = [list(r) for r in a.linear]
        i, j = rng.randrange(a.d), rng.randrange(a.d)
        rows[i][j] += Fraction(rng.choice((1, -1)), rng.randint(1, 4))
        try:
            return AffineMap(rows, a.translation)
        except SingularMatrix:
            continue
    return a


def near_trivial(rng: random.Random, d: int) -> AffineMap:
    """Catalog map composed with a trivial similarity: lands in intersections often."""
    w = witness(rng.choice(list(Witness)), d)
    t = generate(GroupId.TrivEuclSim, d, rng)
    return compose(w, t) if rng.random() < 0.5 else compose(t, w)


def mixed_maps(d: int, n: int, seed) -> list[AffineMap]:
    """Generic maps, members of every group, near-trivial products and perturbed members."""
    rng = random.Random(f"mixed|{d}|{seed}")
    groups = list(GroupId)
    out = []
    for i in range(n):
        k = i % 4
        if k == 0:
            out.append(random_affine(rng, d))
        elif k == 1:
            out.append(generate(groups[(i // 4) % len(groups)], d, rng))
        elif k == 2:
            out.append(near_trivial(rng, d))
        else:
            out.append(perturb(generate(rng.choice(groups), d, rng), rng))
    return out


def group_pool(g: GroupId, d: int, n: int, seed) -> list[AffineMap]:
    rng = random.Random(f"pool|{g.value}|{d}|{seed}")
    return [generate(g, d, rng) for _ in range(n)]


# -- set identities between similarity groups -------------------------------

def in_group(g: GroupId):
    return lambda a: classify(a, g).member


def respects(*rels):
    return lambda a: all(respects_exact(a, r) for r in rels)


def both(p, q):
    return lambda a: p(a) and q(a)


def identity_sources(d: int, n: int, seed) -> list[AffineMap]:
    """Members of every group plus near-trivial products, so intersections get hit."""
    rng = random.Random(f"sources|{d}|{seed}")
    groups = list(GroupId)
    out = []
    for i in range(n):
        if i % 2:
            out.append(near_trivial(rng, d))
        else:
            out.append(generate(groups[(i // 2) % len(groups)], d, rng))
    return out


def _identities():
    G = GroupId
    triv = in_group(G.TrivEuclSim)
    eq, sub = "=", "⊆"
    return {
        "Ai4/S": (both(in_group(G.EuclSim), respects(R.S)), triv, eq, G.TrivEuclSim),
        "Ai4/Rest": (both(in_group(G.EuclSim), respects(R.Rest)), triv, eq, G.TrivEuclSim),
        "Ai3/S": (both(in_group(G.PoiSim), respects(R.S)), triv, eq, G.TrivEuclSim),
        "Ai3/Rest": (both(in_group(G.PoiSim), respects(R.Rest)), triv, eq, G.TrivEuclSim),
        "Ai5": (both(in_group(G.EuclSim), in_group(G.PoiSim)), triv, eq, G.TrivEuclSim),
        "Ai2": (in_group(G.GalSim), respects(R.S), sub, G.GalSim),
        "Ai2.5/left": (triv, in_group(G.TrivGalSim), sub, G.TrivEuclSim),
        "Ai2.5/right": (in_group(G.TrivGalSim), respects(R.S, R.Rest), sub, G.TrivGalSim),
        "Ai6": (both(in_group(G.PoiSim), in_group(G.GalSim)), triv, eq, G.TrivEuclSim),
        "Ai7": (both(in_group(G.EuclSim), in_group(G.GalSim)), triv, eq, G.TrivEuclSim),
    }


IDENTITIES = _identities()


def check_identity(name: str, d: int, n: int, seed) -> tuple[list[AffineMap], int]:
    """Test lhs ⊆ rhs on mixed sources, and rhs ⊆ lhs on generated rhs members
    when the identity is an equality.  Returns (violations, lhs hits)."""
    lhs, rhs, kind, source = IDENTITIES[name]
    bad, hits = [], 0
    pool = identity_sources(d, n, seed) + group_pool(source, d, n, seed)
    for a in pool:
        if lhs(a):
            hits += 1
            if not rhs(a):
                bad.append(a)
    if kind == "=":
        bad += [a for a in group_pool(GroupId.TrivEuclSim, d, n, f"{seed}|back") if not lhs(a)]
    return bad, hits
