"""
Coxeter Systems

A Coxeter system is stored as its labeled graph: ordered generator names
and a symmetric label m(v, w) in {2, 3, ...} or infinity for each pair.
Pairs without a stored label take the system's default.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from common.errors import InputError, NotRightAngledError, UnknownGeneratorError

logger = logging.getLogger(__name__)

INFINITY = math.inf
Label = Union[int, float]

DEFAULTS = {"infinity": INFINITY, "two": 2}


def label_text(m: Label) -> Union[int, str]:
    return "infinity" if m == INFINITY else int(m)


@dataclass(frozen=True)
class CoxeterSystem:
    vertices: Tuple[str, ...]
    labels: Dict[Tuple[str, str], Label] = field(default_factory=dict)
    default: str = "infinity"

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            seen = set()
            duplicate = next(v for v in vertices if v in seen or seen.add(v))
            raise InputError(f"duplicate vertex {duplicate!r}")
        if self.default not in DEFAULTS:
            raise InputError(f"default must be 'infinity' or 'two', got {self.default!r}")
        object.__setattr__(self, "vertices", vertices)
        position = {v: i for i, v in enumerate(vertices)}
        object.__setattr__(self, "_position", position)

        normalized: Dict[Tuple[str, str], Label] = {}
        for (u, v), m in self.labels.items():
            for name in (u, v):
                if name not in position:
                    raise UnknownGeneratorError(name, context="Coxeter system")
            if u == v:
                raise InputError(f"self-label on {u!r}; m(v, v) = 1 is implicit")
            if m != INFINITY and (not float(m).is_integer() or m < 2):
                raise InputError(f"label {m} on {u}-{v} must be an integer >= 2 or infinity")
            key = self._key(u, v)
            m = INFINITY if m == INFINITY else int(m)
            if key in normalized and normalized[key] != m:
                raise InputError(f"conflicting labels {label_text(normalized[key])} and {label_text(m)} on {u}-{v}")
            normalized[key] = m
        default = DEFAULTS[self.default]
        ordered = sorted(normalized.items(), key=lambda item: self._pair_index(item[0]))
        object.__setattr__(self, "labels", {k: m for k, m in ordered if m != default})

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        edges: Iterable[Tuple[str, str, Label]] = (),
        default: str = "infinity",
    ) -> "CoxeterSystem":
        labels: Dict[Tuple[str, str], Label] = {}
        for u, v, m in edges:
            key = (str(u), str(v)) if str(u) <= str(v) else (str(v), str(u))
            if key in labels and labels[key] != m:
                raise InputError(f"asymmetric or conflicting labels on {u}-{v}: {labels[key]} and {m}")
            labels[key] = m
        return cls(tuple(vertices), labels, default)

    @classmethod
    def right_angled(cls, K) -> "CoxeterSystem":
        """Label every edge of a simplicial complex 2; other pairs are free."""
        return cls.build(K.vertices, ((u, v, 2) for u, v in K.faces(1)), default="infinity")

    def _key(self, u: str, v: str) -> Tuple[str, str]:
        return (u, v) if self._position[u] < self._position[v] else (v, u)

    def _pair_index(self, key: Tuple[str, str]) -> Tuple[int, int]:
        return (self._position[key[0]], self._position[key[1]])

    def index(self, v: str) -> int:
        try:
            return self._position[v]
        except KeyError:
            raise UnknownGeneratorError(v, context="Coxeter system")

    def __contains__(self, v: str) -> bool:
        return v in self._position

    def __len__(self) -> int:
        return len(self.vertices)

    def m(self, v: str, w: str) -> Label:
        self.index(v)
        self.index(w)
        if v == w:
            return 1
        return self.labels.get(self._key(v, w), DEFAULTS[self.default])

    def commutes(self, v: str, w: str) -> bool:
        return v != w and self.m(v, w) == 2

    def check_subset(self, subset: Iterable[str]) -> Tuple[str, ...]:
        """Validate names and return them in vertex order without repeats."""
        names = {str(v) for v in subset}
        for v in names:
            self.index(v)
        return tuple(sorted(names, key=self._position.__getitem__))

    def pairs(self) -> Iterator[Tuple[str, str, Label]]:
        for u, v in combinations(self.vertices, 2):
            yield u, v, self.m(u, v)

    def finite_pairs(self) -> List[Tuple[str, str, int]]:
        return [(u, v, int(m)) for u, v, m in self.pairs() if m != INFINITY]

    def non_right_angled_pair(self) -> Optional[Tuple[str, str]]:
        for u, v, m in self.pairs():
            if m not in (2, INFINITY):
                return (u, v)
        return None

    @property
    def is_right_angled(self) -> bool:
        return self.non_right_angled_pair() is None

    def require_right_angled(self, operation: str) -> None:
        pair = self.non_right_angled_pair()
        if pair is not None:
            raise NotRightAngledError(operation, pair)

    def labeled_graph(self) -> nx.Graph:
        """Vertices plus an edge carrying `m` for every finite label."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for u, v, m in self.finite_pairs():
            graph.add_edge(u, v, m=m)
        return graph

    def restrict(self, subset: Sequence[str]) -> "CoxeterSystem":
        names = self.check_subset(subset)
        keep = set(names)
        labels = {k: m for k, m in self.labels.items() if k[0] in keep and k[1] in keep}
        return CoxeterSystem(names, labels, self.default)

    def edge_list(self) -> List[Tuple[str, str, Label]]:
        """Stored labels, i.e. those that differ from the default, in vertex order."""
        return [(u, v, m) for (u, v), m in self.labels.items()]

    def describe(self) -> str:
        kind = "right-angled" if self.is_right_angled else "general"
        return f"{kind} Coxeter system on {len(self.vertices)} generators, {len(self.finite_pairs())} finite labels"
