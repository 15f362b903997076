"""
Colourings

Proper vertex colourings of graphs. Colours are the strings "0".."k-1".
Exact search is backtracking in which a vertex may only open the next
unused colour, so each colouring is found once up to renaming colours.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence

import networkx as nx

from common.errors import ImproperColoringError, InputError, PreconditionError
from common.settings import get_settings
from common.tracing import traced
from complexes.simplicial import SimplicialComplex, parse_barycentre
from presentations.homomorphisms import TwoGroupHom

logger = logging.getLogger(__name__)


def _colour_key(colour: str):
    return (0, int(colour), colour) if colour.isdigit() else (1, 0, colour)


@dataclass(frozen=True)
class Coloring:
    colors: Dict[str, str] = field(default_factory=dict)
    exact: bool = True

    @classmethod
    def from_classes(cls, classes: Mapping[str, Sequence[str]]) -> "Coloring":
        colors: Dict[str, str] = {}
        for colour, members in classes.items():
            for v in members:
                if v in colors:
                    raise InputError(f"vertex {v!r} is in colour classes {colors[v]} and {colour}")
                colors[str(v)] = str(colour)
        return cls(colors)

    def __getitem__(self, v: str) -> str:
        try:
            return self.colors[v]
        except KeyError:
            raise InputError(f"vertex {v!r} has no colour")

    @property
    def palette(self) -> List[str]:
        return sorted(set(self.colors.values()), key=_colour_key)

    @property
    def color_count(self) -> int:
        return len(self.palette)

    def classes(self) -> Dict[str, List[str]]:
        out: Dict[str, List[str]] = {c: [] for c in self.palette}
        for v, c in self.colors.items():
            out[c].append(v)
        return {c: sorted(members) for c, members in out.items()}

    def base_points(self) -> Dict[str, str]:
        """Lexicographically least vertex of each class."""
        return {c: members[0] for c, members in self.classes().items()}

    def improper_edge(self, graph: nx.Graph) -> Optional[tuple]:
        for u, v in graph.edges:
            if self[u] == self[v]:
                return (u, v)
        return None

    def is_proper(self, graph: nx.Graph) -> bool:
        return all(v in self.colors for v in graph.nodes) and self.improper_edge(graph) is None

    def check_proper(self, graph: nx.Graph, operation: str) -> None:
        for v in graph.nodes:
            if v not in self.colors:
                raise PreconditionError(operation, f"vertex {v} has no colour", subject=v)
        edge = self.improper_edge(graph)
        if edge is not None:
            raise ImproperColoringError(operation, edge)

    def to_document(self) -> Dict:
        return {"classes": self.classes()}


def _search_order(graph: nx.Graph) -> List[str]:
    """Highest degree first, then breadth-first so neighbours are coloured early."""
    order: List[str] = []
    seen = set()
    for start in sorted(graph.nodes, key=lambda v: (-graph.degree(v), str(v))):
        if start in seen:
            continue
        for v in nx.bfs_tree(graph, start):
            if v not in seen:
                seen.add(v)
                order.append(v)
    return order


def _backtrack(graph: nx.Graph, k: int) -> Iterator[Dict[str, int]]:
    order = _search_order(graph)
    position = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in graph.neighbors(v) if position[u] < i] for i, v in enumerate(order)]
    assignment: List[int] = [-1] * len(order)

    def extend(i: int, used: int) -> Iterator[Dict[str, int]]:
        if i == len(order):
            yield {order[j]: assignment[j] for j in range(len(order))}
            return
        blocked = {assignment[position[u]] for u in earlier[i]}
        for colour in range(min(used + 1, k)):
            if colour in blocked:
                continue
            assignment[i] = colour
            yield from extend(i + 1, max(used, colour + 1))
        assignment[i] = -1

    yield from extend(0, 0)


def _as_coloring(assignment: Mapping[str, int], exact: bool = True) -> Coloring:
    return Coloring({str(v): str(c) for v, c in assignment.items()}, exact)


@traced("coloring")
def exact_coloring(graph: nx.Graph, k: int) -> Optional[Coloring]:
    """A proper k-colouring, or None after exhausting the search."""
    if k < 1:
        raise InputError(f"colour count must be at least 1, got {k}")
    for assignment in _backtrack(graph, k):
        return _as_coloring(assignment)
    return None


def all_colorings(graph: nx.Graph, k: int, exactly: bool = False) -> Iterator[Coloring]:
    """Every proper colouring with at most k colours, once per renaming class."""
    for assignment in _backtrack(graph, k):
        if exactly and len(set(assignment.values())) != k:
            continue
        yield _as_coloring(assignment)


def greedy_coloring(graph: nx.Graph) -> Coloring:
    assignment = nx.greedy_color(graph, strategy="largest_first")
    return _as_coloring(assignment, exact=False)


def find_coloring(graph: nx.Graph, k: int) -> Optional[Coloring]:
    """
    Exact search within the configured limits. Larger inputs get a greedy
    colouring marked not exact, or None when greedy needs more than k colours.
    """
    limits = get_settings().coloring
    if graph.number_of_nodes() <= limits.exact_vertex_limit and k <= limits.exact_color_limit:
        return exact_coloring(graph, k)
    logger.warning(
        f"{graph.number_of_nodes()} vertices / {k} colours exceed the exhaustive limits; using greedy colouring"
    )
    coloring = greedy_coloring(graph)
    return coloring if coloring.color_count <= k else None


def chromatic_number(graph: nx.Graph) -> int:
    if graph.number_of_nodes() == 0:
        return 0
    k = 1
    while exact_coloring(graph, k) is None:
        k += 1
    return k


def coloring_by_dimension(K: SimplicialComplex) -> Coloring:
    """Colour the barycentre of an i-simplex with i."""
    colors = {}
    for v in K.vertices:
        source = parse_barycentre(v)
        if source is None:
            raise PreconditionError(
                "coloring_by_dimension", f"vertex {v!r} is not a barycentre of a subdivision", subject=v
            )
        colors[v] = str(len(source) - 1)
    return Coloring(colors)


def coloring_hom(c: Coloring) -> TwoGroupHom:
    """Colour classes onto the standard basis of F_2^W."""
    return TwoGroupHom.from_classes(c.classes())
