"""
Colouring Conditions

For a right-angled system and a proper colouring c, the kernel Γ1 of
Γ -> C_2^W is generated as a normal subgroup by the words vv' with
c(v) = c(v') when every two colours are adjacent, and as a group when
every two-colour subgraph is connected. When every star sees all colours,
the pullback group has a presentation with length-four relators.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Tuple

import networkx as nx

from common.errors import PreconditionError, StarConditionError
from coxeter.system import CoxeterSystem
from presentations.presentation import Presentation
from presentations.words import Word

from .colorings import Coloring

logger = logging.getLogger(__name__)

GENERATING = "generating"
NORMAL_GENERATING = "normal-generating"
NONE_CERTIFIED = "none-certified"


@dataclass(frozen=True)
class PairReport:
    colours: Tuple[str, str]
    adjacent: bool
    connected: bool


@dataclass(frozen=True)
class ColoringReport:
    pairs: Tuple[PairReport, ...]
    star_missing: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def all_adjacent(self) -> bool:
        return all(p.adjacent for p in self.pairs)

    @property
    def all_connected(self) -> bool:
        return all(p.connected for p in self.pairs)

    @property
    def star_condition(self) -> bool:
        return not any(self.star_missing.values())

    @property
    def mode(self) -> str:
        if self.all_connected:
            return GENERATING
        if self.all_adjacent:
            return NORMAL_GENERATING
        return NONE_CERTIFIED

    def first_star_violation(self):
        for v, missing in self.star_missing.items():
            if missing:
                return v, list(missing)
        return None

    def to_document(self) -> Dict:
        return {
            "mode": self.mode,
            "pairs": [
                {"colours": list(p.colours), "adjacent": p.adjacent, "connected": p.connected}
                for p in self.pairs
            ],
            "star_condition": self.star_condition,
            "star_missing": {v: list(m) for v, m in self.star_missing.items() if m},
        }


def two_colour_subgraph(graph: nx.Graph, c: Coloring, w1: str, w2: str) -> nx.Graph:
    return graph.subgraph([v for v in graph.nodes if c[v] in (w1, w2)])


def check_generation_conditions(sys: CoxeterSystem, c: Coloring) -> ColoringReport:
    graph = sys.labeled_graph()
    c.check_proper(graph, "check_generation_conditions")
    palette = c.palette
    pairs = []
    for w1, w2 in combinations(palette, 2):
        sub = two_colour_subgraph(graph, c, w1, w2)
        adjacent = any(c[u] != c[v] for u, v in sub.edges)
        pairs.append(PairReport((w1, w2), adjacent, nx.is_connected(sub)))
    star_missing = {}
    for v in sys.vertices:
        seen = {c[v]} | {c[u] for u in graph.neighbors(v)}
        star_missing[v] = tuple(w for w in palette if w not in seen)
    return ColoringReport(tuple(pairs), star_missing)


@dataclass(frozen=True)
class GeneratorSet:
    words: List[Word]
    mode: str
    economical: bool

    def to_document(self) -> Dict:
        return {
            "mode": self.mode,
            "economical": self.economical,
            "words": [w.to_document() for w in self.words],
        }


def subgroup_generators(sys: CoxeterSystem, c: Coloring, economical: bool = False) -> GeneratorSet:
    """
    S = {vv' : c(v) = c(v')}. The economical set keeps only v_w v for the
    base point v_w of each class, since vv' = (v_w v)^-1 (v_w v').
    """
    sys.require_right_angled("subgroup_generators")
    report = check_generation_conditions(sys, c)
    words = []
    for colour, members in c.classes().items():
        if economical:
            base = members[0]
            words.extend(Word.from_generators([base, v]) for v in members[1:])
        else:
            words.extend(Word.from_generators([u, v]) for u, v in combinations(members, 2))
    logger.debug(f"{len(words)} generators, mode {report.mode}")
    return GeneratorSet(words, report.mode, economical)


def normal_generation_identity(sys: CoxeterSystem, c: Coloring, u: str, v: str, v2: str) -> List[Word]:
    """
    S-words whose product is u v v2 u, for c(v) = c(v2).

    Along a path v = y0, z1, y1, ..., zr, yr = v2 in the two-colour subgraph
    of c(v) and c(u), each z commutes with its neighbours y, so
    u y y' u = (u z)(y y')(z u).
    """
    sys.require_right_angled("normal_generation_identity")
    if c[v] != c[v2]:
        raise PreconditionError("normal_generation_identity", f"{v} and {v2} have different colours")
    if c[u] == c[v]:
        return [w for w in (Word.from_generators([u, v]), Word.from_generators([v2, u])) if len(set(w.generators())) == 2]

    graph = sys.labeled_graph()
    sub = two_colour_subgraph(graph, c, c[v], c[u])
    try:
        path = nx.shortest_path(sub, v, v2)
    except nx.NetworkXNoPath:
        raise PreconditionError(
            "normal_generation_identity",
            f"{v} and {v2} are not joined in the subgraph of colours {c[v]} and {c[u]}",
        )
    factors: List[Word] = []
    for j in range(0, len(path) - 1, 2):
        y, z, y2 = path[j], path[j + 1], path[j + 2]
        if z != u:
            factors.append(Word.from_generators([u, z]))
        factors.append(Word.from_generators([y, y2]))
        if z != u:
            factors.append(Word.from_generators([z, u]))
    return factors


def pullback_presentation(sys: CoxeterSystem, c: Coloring) -> Presentation:
    """
    Generators V; a commutator for every edge and v^2 v_w^-2 for every
    vertex v other than the base point v_w of its class.
    """
    sys.require_right_angled("pullback_presentation")
    report = check_generation_conditions(sys, c)
    violation = report.first_star_violation()
    if violation is not None:
        raise StarConditionError("pullback_presentation", violation[0], violation[1])

    relators = []
    for u, v, _ in sys.finite_pairs():
        relators.append(Word.of([(u, 1), (v, 1), (u, -1), (v, -1)]))
    base = c.base_points()
    for v in sys.vertices:
        b = base[c[v]]
        if v != b:
            relators.append(Word.of([(v, 1), (v, 1), (b, -1), (b, -1)]))
    return Presentation(sys.vertices, tuple(relators))
