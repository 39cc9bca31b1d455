"""The seven geometries and the definability lattice, computed through
affine automorphism groups.

A relation R is a concept of G exactly when every affine automorphism of G
respects R, and Ca(G) is contained in Ca(G') exactly when AffAut(G)
contains AffAut(G').  Both directions are evidenced here: a failure is
certified by an explicit map (conclusive), a success by a recorded number
of sampled group members with no counterexample (supporting, not a proof).
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from . import linalg
from .field import format_element
from .geometry import RelationId
from .groups import GroupId, Witness, classify, generate, witness
from .transform import AffineMap, compose, respects_exact, respects_sampled

__all__ = [
    "Cell",
    "Comparison",
    "DimensionReport",
    "Evidence",
    "ExpandedGeometry",
    "GeometryId",
    "InadmissiblePair",
    "LatticeReport",
    "Leiras2Result",
    "Leiras2Verdict",
    "Relation",
    "TABLE1",
    "TABLE_COLUMNS",
    "TABLE_ROWS",
    "affaut_member",
    "build_dimension",
    "build_report",
    "check_leiras2",
    "compare_concept_sets",
    "concept_in_geometry",
    "contradictions",
    "emit_dot",
    "expected_leiras2",
    "render_table",
]

R = RelationId


class GeometryId(enum.Enum):
    OAff = "OAff"
    Eucl = "Eucl"
    Rel = "Rel"
    Mink = "Mink"
    Gal = "Gal"
    Newt = "Newt"
    LClass = "LClass"

    @property
    def relations(self) -> tuple[RelationId, ...]:
        return _DEFINING[self]

    @property
    def group(self) -> Optional[GroupId]:
        """AffAut(G) as a similarity group; None for OAff (all affine bijections)."""
        return _AUTGROUP[self]

    @classmethod
    def parse(cls, name: str) -> GeometryId:
        for g in cls:
            if name.strip().lower() == g.value.lower():
                return g
        raise ValueError(f"unknown geometry {name!r}")


_DEFINING = {
    GeometryId.OAff: (R.Bw,),
    GeometryId.Eucl: (R.CongE, R.Bw),
    GeometryId.Rel: (R.Lambda, R.Bw),
    GeometryId.Mink: (R.CongMu, R.Bw),
    GeometryId.Gal: (R.CongS, R.Bw),
    GeometryId.Newt: (R.CongS, R.Rest, R.Bw),
    GeometryId.LClass: (R.CongS, R.Lambda, R.Bw),
}

_AUTGROUP = {
    GeometryId.OAff: None,
    GeometryId.Eucl: GroupId.EuclSim,
    GeometryId.Rel: GroupId.PoiSim,
    GeometryId.Mink: GroupId.PoiSim,
    GeometryId.Gal: GroupId.GalSim,
    GeometryId.Newt: GroupId.TrivGalSim,
    GeometryId.LClass: GroupId.TrivEuclSim,
}

TABLE_ROWS = (R.CongE, R.CongMu, R.Lambda, R.CongS, R.S, R.Rest, R.Delta, R.Bw)
TABLE_COLUMNS = (GeometryId.Eucl, GeometryId.Rel, GeometryId.Gal, GeometryId.Newt, GeometryId.LClass)

# Reference concept table; used only to decide admissibility of expansions.
TABLE1 = {
    GeometryId.OAff: frozenset({R.Bw}),
    GeometryId.Eucl: frozenset({R.CongE, R.Bw}),
    GeometryId.Rel: frozenset({R.CongMu, R.Lambda, R.Bw}),
    GeometryId.Mink: frozenset({R.CongMu, R.Lambda, R.Bw}),
    GeometryId.Gal: frozenset({R.CongS, R.S, R.Bw}),
    GeometryId.Newt: frozenset({R.CongS, R.S, R.Rest, R.Bw}),
    GeometryId.LClass: frozenset(R),
}

_SYMBOLS = {R.CongE: "≡", R.CongMu: "≡_μ", R.Lambda: "λ", R.CongS: "≡_S",
            R.S: "S", R.Rest: "Rest", R.Delta: "δ", R.Bw: "Bw"}


def affaut_member(g: GeometryId, a: AffineMap) -> bool:
    grp = g.group
    return True if grp is None else classify(a, grp).member


# -- evidence ---------------------------------------------------------------

@dataclass(frozen=True)
class Evidence:
    """Either a replayable witness map or a sampling certificate."""

    kind: str  # "witness" | "sampled"
    trials: int = 0
    seed: object = None
    stream: str = ""
    name: Optional[str] = None  # catalog name, or "generated"
    map: Optional[AffineMap] = None
    violated: Optional[str] = None
    counterexample: Optional[tuple] = None

    @property
    def conclusive(self) -> bool:
        return self.kind == "witness"

    def to_json(self) -> dict:
        if self.kind == "sampled":
            return {"kind": "sampled", "trials": self.trials, "seed": self.seed,
                    "stream": self.stream, "counterexamples": 0}
        out = {"kind": "witness", "name": self.name, "violated": self.violated,
               "map": self.map.to_json() if self.map is not None else None}
        if self.counterexample is not None:
            out["counterexample"] = [[format_element(x) for x in p] for p in self.counterexample]
        return out


def _rng(seed, *labels) -> tuple[random.Random, str]:
    stream = "|".join(str(x) for x in (seed,) + labels)
    return random.Random(stream), stream


class _Pools:
    """Deterministic per-(d, group) member pools shared across a report."""

    def __init__(self, d: int, trials: int, seed):
        self.d, self.trials, self.seed = d, trials, seed
        self._cache: dict = {}

    def stream(self, key: str) -> str:
        return _rng(self.seed, self.d, "pool", key)[1]

    def members(self, g: GeometryId) -> list[AffineMap]:
        key = g.group.value if g.group else "affine"
        if key not in self._cache:
            rng, _ = _rng(self.seed, self.d, "pool", key)
            self._cache[key] = [_sample_affaut(g, self.d, rng) for _ in range(self.trials)]
        return self._cache[key]


def _sample_affaut(g: GeometryId, d: int, rng: random.Random) -> AffineMap:
    if g.group is None:
        lin = linalg.random_invertible(rng, d)
        return AffineMap(lin, tuple(linalg.random_rational(rng) for _ in range(d)))
    return generate(g.group, d, rng)


def _catalog(d: int) -> list[tuple[str, AffineMap]]:
    return [(w.value, witness(w, d)) for w in Witness]


# -- concepts -----------------------------------------------------------------

@dataclass(frozen=True)
class Cell:
    relation: RelationId
    geometry: GeometryId
    member: bool
    evidence: Evidence

    def to_json(self) -> dict:
        return {"relation": self.relation.value, "geometry": self.geometry.value,
                "verdict": "in" if self.member else "not_in", "evidence": self.evidence.to_json()}


def _counterexample(a: AffineMap, rel: RelationId, seed) -> Optional[tuple]:
    res = respects_sampled(a, rel, 2000, random.Random(f"{seed}|cex|{rel.value}"))
    return res.counterexample


def _concept(rel: RelationId, g: GeometryId, d: int, members: list[AffineMap], trials: int,
             seed, stream: str, tuples_per_member: int) -> Cell:
    for name, w in _catalog(d):
        if affaut_member(g, w) and not respects_exact(w, rel):
            cex = _counterexample(w, rel, seed)
            if cex is not None:
                return Cell(rel, g, False, Evidence("witness", name=name, map=w,
                                                    violated=rel.value, counterexample=cex))
    count = 0
    for i, m in enumerate(members):
        if i >= trials:
            break
        count += 1
        ok = respects_exact(m, rel)
        if ok and tuples_per_member:
            ok = respects_sampled(m, rel, tuples_per_member, random.Random(f"{stream}|{i}")).respects
        if not ok:
            return Cell(rel, g, False, Evidence("witness", name="generated", map=m,
                                                violated=rel.value,
                                                counterexample=_counterexample(m, rel, seed)))
    return Cell(rel, g, True, Evidence("sampled", trials=count, seed=seed, stream=stream))


def concept_in_geometry(rel: RelationId, g: GeometryId, d: int, trials: int = 1000,
                        seed=0, tuples_per_member: int = 4) -> Cell:
    """Is ``rel`` a concept of ``g``?  Witness search first, then sampling."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    pools = _Pools(d, trials, seed)
    members = pools.members(g)
    stream = _rng(seed, d, "cell", rel.value, g.value)[1]
    return _concept(rel, g, d, members, trials, seed, stream, tuples_per_member)


# -- comparing concept sets ---------------------------------------------------

class Relation(enum.Enum):
    EQUAL = "equal"
    STRICT_SUBSET = "strict_subset"
    STRICT_SUPERSET = "strict_superset"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Comparison:
    first: GeometryId
    second: GeometryId
    verdict: Relation
    forward: Evidence   # for Ca(first) ⊆ Ca(second), i.e. AffAut(second) ⊆ AffAut(first)
    backward: Evidence  # for Ca(second) ⊆ Ca(first)

    def to_json(self) -> dict:
        return {"first": self.first.value, "second": self.second.value,
                "verdict": self.verdict.value, "forward": self.forward.to_json(),
                "backward": self.backward.to_json()}


def _group_contained(small: GeometryId, big: GeometryId, pools: _Pools) -> Evidence:
    """Evidence for AffAut(small) ⊆ AffAut(big)."""
    d = pools.d
    for name, w in _catalog(d):
        if affaut_member(small, w) and not affaut_member(big, w):
            return Evidence("witness", name=name, map=w, violated=big.value)
    members = pools.members(small)
    for m in members:
        if not affaut_member(big, m):
            return Evidence("witness", name="generated", map=m, violated=big.value)
    key = small.group.value if small.group else "affine"
    return Evidence("sampled", trials=len(members), seed=pools.seed, stream=pools.stream(key))


def _compare(g1: GeometryId, g2: GeometryId, pools: _Pools) -> Comparison:
    fwd = _group_contained(g2, g1, pools)
    bwd = _group_contained(g1, g2, pools)
    if not fwd.conclusive and not bwd.conclusive:
        v = Relation.EQUAL
    elif not fwd.conclusive:
        v = Relation.STRICT_SUBSET
    elif not bwd.conclusive:
        v = Relation.STRICT_SUPERSET
    else:
        v = Relation.INCOMPARABLE
    return Comparison(g1, g2, v, fwd, bwd)


def compare_concept_sets(g1: GeometryId, g2: GeometryId, d: int, trials: int = 1000,
                         seed=0) -> Comparison:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    return _compare(g1, g2, _Pools(d, trials, seed))


# -- expansions: adding one relation to a geometry ---------------------------

class InadmissiblePair(ValueError):
    """The added relation is already a concept of the geometry."""


@dataclass(frozen=True)
class ExpandedGeometry:
    base: GeometryId
    extra: RelationId

    def member(self, a: AffineMap) -> bool:
        return affaut_member(self.base, a) and respects_exact(a, self.extra)

    @property
    def name(self) -> str:
        return f"<{self.base.value},{self.extra.value}>"


class Leiras2Verdict(enum.Enum):
    EQUIV_LCLASS = "equiv_lclass"
    EQUIV_EXCEPTIONAL_TRIPLE = "equiv_exceptional_triple"
    REJECTED = "rejected"


@dataclass(frozen=True)
class Leiras2Result:
    geometry: GeometryId
    relation: RelationId
    d: int
    verdict: Leiras2Verdict
    reason: str = ""
    evidence: tuple[Evidence, ...] = ()
    candidates: int = 0
    in_expansion: int = 0

    def to_json(self) -> dict:
        return {"geometry": self.geometry.value, "relation": self.relation.value, "d": self.d,
                "verdict": self.verdict.value, "reason": self.reason,
                "candidates": self.candidates, "in_expansion": self.in_expansion,
                "evidence": [e.to_json() for e in self.evidence]}


_LEIRAS2_BASES = (GeometryId.Rel, GeometryId.Eucl, GeometryId.Gal, GeometryId.Newt)


def _candidate_pool(d: int, trials: int, rng: random.Random) -> list[tuple[str, AffineMap]]:
    """Maps drawn from every group, the catalog, and catalog-times-trivial products."""
    pool = _catalog(d)
    groups = list(GroupId)
    catalog = [w for _, w in pool]
    for i in range(trials):
        kind = i % 3
        if kind == 0:
            pool.append(("generated", generate(groups[(i // 3) % len(groups)], d, rng)))
        elif kind == 1:
            w = rng.choice(catalog)
            t = generate(GroupId.TrivEuclSim, d, rng)
            pair = (w, t) if rng.random() < 0.5 else (t, w)
            pool.append(("generated", compose(*pair)))
        else:
            pool.append(("generated", generate(GroupId.TrivEuclSim, d, rng)))
    return pool


def _is_eucl_poi(a: AffineMap) -> bool:
    return classify(a, GroupId.EuclSim).member and classify(a, GroupId.PoiSim).member


def check_leiras2(g: GeometryId, rel: RelationId, d: int, trials: int = 1000,
                  seed=0) -> Leiras2Result:
    """Compare AffAut(<G,R>) with TrivEuclSim (= AffAut(LClass)).

    When a member of AffAut(<G,R>) outside TrivEuclSim turns up, the
    expansion is compared with EuclSim ∩ PoiSim instead.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if rel in TABLE1[g]:
        raise InadmissiblePair(f"{rel.value} is already a concept of {g.value}")
    base = lambda verdict, reason, **kw: Leiras2Result(g, rel, d, verdict, reason, **kw)
    if g is GeometryId.OAff and rel is not RelationId.Delta:
        return base(Leiras2Verdict.REJECTED, "only delta is covered for OAff")
    if g not in _LEIRAS2_BASES + (GeometryId.OAff,):
        return base(Leiras2Verdict.REJECTED, f"{g.value} is not a base geometry for expansion checks")
    if g is GeometryId.Gal and rel is RelationId.Rest:
        return base(Leiras2Verdict.REJECTED, "<Gal,Rest> is Newt, excluded from expansion checks")

    exp = ExpandedGeometry(g, rel)
    rng, stream = _rng(seed, d, "leiras2", g.value, rel.value)
    pool = _candidate_pool(d, trials, rng)
    inside = [(n, a) for n, a in pool if exp.member(a)]
    escapes = [(n, a) for n, a in inside if not classify(a, GroupId.TrivEuclSim).member]
    # prefer a named catalog map (Swap in d=2) as the certificate
    escape = min(escapes, key=lambda na: na[0] == "generated", default=None)
    triv_rng, triv_stream = _rng(seed, d, "leiras2-triv", g.value, rel.value)
    for _ in range(trials):
        t = generate(GroupId.TrivEuclSim, d, triv_rng)
        if not exp.member(t):
            return base(Leiras2Verdict.REJECTED, "a trivial Euclidean similarity is not an automorphism",
                        evidence=(Evidence("witness", name="generated", map=t, violated=exp.name),),
                        candidates=len(pool), in_expansion=len(inside))
    sampled = Evidence("sampled", trials=trials, seed=seed, stream=triv_stream)
    if escape is None:
        return base(Leiras2Verdict.EQUIV_LCLASS, "AffAut matches TrivEuclSim on all samples",
                    evidence=(sampled, Evidence("sampled", trials=len(pool), seed=seed, stream=stream)),
                    candidates=len(pool), in_expansion=len(inside))

    name, a = escape
    cert = Evidence("witness", name=name, map=a, violated=GeometryId.LClass.value)
    outside = next(((n, b) for n, b in inside if not _is_eucl_poi(b)), None)
    if outside is not None:
        return base(Leiras2Verdict.REJECTED, "AffAut matches neither TrivEuclSim nor EuclSim∩PoiSim",
                    evidence=(cert, Evidence("witness", name=outside[0], map=outside[1],
                                             violated="eucl_sim∩poi_sim")),
                    candidates=len(pool), in_expansion=len(inside))
    both = [(n, b) for n, b in pool if _is_eucl_poi(b)]
    missing = next(((n, b) for n, b in both if not exp.member(b)), None)
    if missing is not None:
        return base(Leiras2Verdict.REJECTED, "AffAut is strictly smaller than EuclSim∩PoiSim",
                    evidence=(cert, Evidence("witness", name=missing[0], map=missing[1],
                                             violated=exp.name)),
                    candidates=len(pool), in_expansion=len(inside))
    return base(Leiras2Verdict.EQUIV_EXCEPTIONAL_TRIPLE,
                "AffAut equals EuclSim∩PoiSim on all samples, which strictly contains TrivEuclSim",
                evidence=(cert, Evidence("sampled", trials=len(both), seed=seed, stream=stream)),
                candidates=len(pool), in_expansion=len(inside))


# -- reports ------------------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    lower: GeometryId
    upper: GeometryId
    evidence: Evidence

    def to_json(self) -> dict:
        return {"lower": self.lower.value, "upper": self.upper.value,
                "strictness": self.evidence.to_json()}


@dataclass
class DimensionReport:
    d: int
    cells: dict = field(default_factory=dict)          # (RelationId, GeometryId) -> Cell
    hasse_edges: list = field(default_factory=list)    # [Edge]
    equivalences: list = field(default_factory=list)   # [(GeometryId, GeometryId, Evidence)]
    comparisons: list = field(default_factory=list)    # [Comparison]

    def cell(self, rel: RelationId, g: GeometryId) -> Cell:
        return self.cells[(rel, g)]

    def classes(self) -> list[tuple[GeometryId, ...]]:
        """Equivalence classes of geometries, each listed in enum order."""
        parent = {g: g for g in GeometryId}

        def find(g):
            while parent[g] is not g:
                g = parent[g]
            return g

        order = list(GeometryId)
        for a, b, _ in self.equivalences:
            ra, rb = find(a), find(b)
            if ra is not rb:
                lo, hi = sorted((ra, rb), key=order.index)
                parent[hi] = lo
        groups: dict = {}
        for g in order:
            groups.setdefault(find(g), []).append(g)
        return [tuple(v) for v in groups.values()]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "table": [self.cells[(r, g)].to_json() for r in TABLE_ROWS for g in TABLE_COLUMNS
                      if (r, g) in self.cells],
            "hasse_edges": [e.to_json() for e in self.hasse_edges],
            "equivalences": [{"first": a.value, "second": b.value, "evidence": ev.to_json()}
                             for a, b, ev in self.equivalences],
            "comparisons": [c.to_json() for c in self.comparisons],
        }


@dataclass
class LatticeReport:
    trials: int
    seed: object
    sections: dict = field(default_factory=dict)  # d -> DimensionReport

    def table_cells(self, rel: RelationId, g: GeometryId, d: Optional[int] = None) -> Cell:
        if d is None:
            d = next(iter(self.sections))
        return self.sections[d].cell(rel, g)

    def to_json(self) -> dict:
        return {"trials": self.trials, "seed": self.seed,
                "dimensions": [self.sections[d].to_json() for d in sorted(self.sections)]}


def _hasse(comparisons: list[Comparison]) -> tuple[list, list]:
    equal = [(c.first, c.second, c.forward) for c in comparisons if c.verdict is Relation.EQUAL]
    tmp = DimensionReport(0, equivalences=equal)
    rep = {g: cls[0] for cls in tmp.classes() for g in cls}
    reps = [cls[0] for cls in tmp.classes()]
    below: dict = {}  # (lo, hi) -> evidence that AffAut(lo) ⊄ AffAut(hi)
    for c in comparisons:
        a, b = rep[c.first], rep[c.second]
        if c.first is not a or c.second is not b:
            continue
        if c.verdict is Relation.STRICT_SUBSET:
            below[(a, b)] = c.backward
        elif c.verdict is Relation.STRICT_SUPERSET:
            below[(b, a)] = c.forward
    edges = []
    for (lo, hi), ev in below.items():
        if not any((lo, mid) in below and (mid, hi) in below for mid in reps):
            edges.append(Edge(lo, hi, ev))
    order = list(GeometryId)
    edges.sort(key=lambda e: (order.index(e.lower), order.index(e.upper)))
    return edges, equal


def build_dimension(d: int, trials: int = 1000, seed=0, tuples_per_member: int = 4) -> DimensionReport:
    if d < 2:
        raise ValueError("d must be >= 2")
    pools = _Pools(d, trials, seed)
    out = DimensionReport(d)
    for rel in TABLE_ROWS:
        for g in TABLE_COLUMNS:
            stream = _rng(seed, d, "cell", rel.value, g.value)[1]
            out.cells[(rel, g)] = _concept(rel, g, d, pools.members(g), trials, seed, stream,
                                           tuples_per_member)
    out.comparisons = [_compare(a, b, pools) for a, b in combinations(list(GeometryId), 2)]
    out.hasse_edges, out.equivalences = _hasse(out.comparisons)
    return out


def build_report(d_list: Iterable[int], trials: int = 1000, seed=0,
                 tuples_per_member: int = 4) -> LatticeReport:
    report = LatticeReport(trials, seed)
    for d in d_list:
        report.sections[d] = build_dimension(d, trials, seed, tuples_per_member)
    return report


def render_table(section: DimensionReport) -> str:
    """Plain-text table in the row/column order of the reference table."""
    head = ["", *(f"Ca({g.value})" for g in TABLE_COLUMNS)]
    rows = [head]
    for rel in TABLE_ROWS:
        rows.append([_SYMBOLS[rel], *("∈" if section.cell(rel, g).member else "∉"
                                      for g in TABLE_COLUMNS)])
    widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
    lines = [" | ".join(c.center(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def emit_dot(section: DimensionReport) -> str:
    """Graphviz digraph of the concept-set inclusions, lower -> upper."""
    lines = ["digraph concept_sets {", "  rankdir=BT;"]
    for cls in section.classes():
        label = "=".join(g.value for g in cls)
        lines.append(f'  {cls[0].value} [label="{label}"];')
    for e in section.hasse_edges:
        lines.append(f"  {e.lower.value} -> {e.upper.value};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- reference values (used only to raise the contradiction alarm) ----------

EXPECTED_HASSE = frozenset({
    (GeometryId.OAff, GeometryId.Gal), (GeometryId.OAff, GeometryId.Eucl),
    (GeometryId.OAff, GeometryId.Rel), (GeometryId.Gal, GeometryId.Newt),
    (GeometryId.Newt, GeometryId.LClass), (GeometryId.Eucl, GeometryId.LClass),
    (GeometryId.Rel, GeometryId.LClass),
})
EXPECTED_CLASSES = frozenset({(GeometryId.Rel, GeometryId.Mink)})

_EXCEPTIONAL = frozenset({(GeometryId.Rel, R.CongE), (GeometryId.Eucl, R.CongMu),
                          (GeometryId.Eucl, R.Lambda)})


def expected_leiras2(g: GeometryId, rel: RelationId, d: int) -> Optional[Leiras2Verdict]:
    """Known verdict for an in-scope pair, None for pairs outside the expansion checks."""
    if rel in TABLE1[g]:
        return None
    if g is GeometryId.OAff:
        return Leiras2Verdict.EQUIV_LCLASS if rel is R.Delta else None
    if g not in _LEIRAS2_BASES or (g is GeometryId.Gal and rel is R.Rest):
        return None
    if d == 2 and (g, rel) in _EXCEPTIONAL:
        return Leiras2Verdict.EQUIV_EXCEPTIONAL_TRIPLE
    return Leiras2Verdict.EQUIV_LCLASS


def contradictions(section: DimensionReport) -> list[str]:
    """Disagreements between a computed section and the reference results."""
    out = []
    for rel in TABLE_ROWS:
        for g in TABLE_COLUMNS:
            cell = section.cells.get((rel, g))
            if cell is not None and cell.member != (rel in TABLE1[g]):
                out.append(f"d={section.d}: cell ({rel.value}, {g.value}) disagrees with the table")
    edges = {(e.lower, e.upper) for e in section.hasse_edges}
    for lo, hi in sorted(edges ^ EXPECTED_HASSE, key=lambda p: (p[0].value, p[1].value)):
        out.append(f"d={section.d}: Hasse edge {lo.value} -> {hi.value} "
                   f"{'unexpected' if (lo, hi) in edges else 'missing'}")
    merged = {c for c in section.classes() if len(c) > 1}
    if merged != EXPECTED_CLASSES:
        out.append(f"d={section.d}: equivalence classes {sorted('='.join(g.value for g in c) for c in merged)}")
    return out
