"""
Finite Coxeter Groups

Decides whether a special subgroup is finite by splitting its diagram into
irreducible components and matching each against the classification of
finite Coxeter groups. Labels like 5 give irrational cosines, so the
diagram catalog is used instead of a numeric Gram-matrix test.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Iterable, List, Optional, Tuple, Union

import networkx as nx
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from .system import INFINITY, CoxeterSystem, Label

logger = logging.getLogger(__name__)

EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("H", 3): 120,
    ("H", 4): 14400,
}

E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}


@dataclass(frozen=True)
class FiniteType:
    """An irreducible finite Coxeter group: family, rank, and m for I2(m)."""

    family: str
    rank: int
    m: Optional[int] = None

    @property
    def name(self) -> str:
        if self.family == "I":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        if self.family == "B":
            return 2 ** n * factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * factorial(n)
        if self.family == "I":
            return 2 * self.m
        return EXCEPTIONAL_ORDERS[(self.family, n)]

    def __str__(self) -> str:
        return self.name


def diagram(sys: CoxeterSystem, subset: Iterable[str]) -> nx.Graph:
    """Coxeter diagram of the subset: edges where m >= 3, including infinity."""
    names = sys.check_subset(subset)
    graph = nx.Graph()
    graph.add_nodes_from(names)
    for i, u in enumerate(names):
        for v in names[i + 1:]:
            m = sys.m(u, v)
            if m != 2:
                graph.add_edge(u, v, m=m)
    return graph


def irreducible_components(sys: CoxeterSystem, subset: Iterable[str]) -> List[Tuple[str, ...]]:
    graph = diagram(sys, subset)
    components = [tuple(sorted(c, key=sys.index)) for c in nx.connected_components(graph)]
    return sorted(components, key=lambda c: sys.index(c[0]))


def _path_order(tree: nx.Graph) -> List[str]:
    start = next(v for v in tree.nodes if tree.degree(v) <= 1)
    return list(nx.dfs_preorder_nodes(tree, start))


def classify_component(sys: CoxeterSystem, component: Tuple[str, ...]) -> Optional[FiniteType]:
    """Finite type of a connected diagram, or None when the group is infinite."""
    rank = len(component)
    if rank == 1:
        return FiniteType("A", 1)
    graph = diagram(sys, component)
    labels = [m for _, _, m in graph.edges(data="m")]
    if INFINITY in labels:
        return None
    if rank == 2:
        return FiniteType("I", 2, int(labels[0]))
    if not nx.is_tree(graph):
        return None

    degrees = sorted((d for _, d in graph.degree()), reverse=True)
    big = [(u, v, m) for u, v, m in graph.edges(data="m") if m > 3]

    if not big:
        if degrees[0] <= 2:
            return FiniteType("A", rank)
        if degrees[0] == 3 and degrees[1] <= 2:
            centre = next(v for v in graph.nodes if graph.degree(v) == 3)
            pruned = graph.copy()
            pruned.remove_node(centre)
            arms = tuple(sorted(len(c) for c in nx.connected_components(pruned)))
            if arms[0] == 1 and arms[1] == 1:
                return FiniteType("D", rank)
            if arms in E_ARMS:
                return FiniteType("E", E_ARMS[arms])
        return None

    if len(big) != 1 or degrees[0] > 2:
        return None
    path = _path_order(graph)
    u, v, m = big[0]
    position = min(path.index(u), path.index(v))
    at_end = position in (0, rank - 2)
    if m == 4:
        if at_end:
            return FiniteType("B", rank)
        if rank == 4 and position == 1:
            return FiniteType("F", 4)
    if m == 5 and at_end and rank in (3, 4):
        return FiniteType("H", rank)
    return None


def finite_type(sys: CoxeterSystem, subset: Iterable[str]) -> Optional[List[FiniteType]]:
    """Component types of the special subgroup, or None if it is infinite."""
    types = []
    for component in irreducible_components(sys, subset):
        kind = classify_component(sys, component)
        if kind is None:
            return None
        types.append(kind)
    return types


def is_spherical(sys: CoxeterSystem, subset: Iterable[str]) -> bool:
    return finite_type(sys, subset) is not None


def special_subgroup_order(sys: CoxeterSystem, subset: Iterable[str]) -> Union[int, float]:
    """Order of <subset>; INFINITY when infinite, 1 for the empty set."""
    types = finite_type(sys, subset)
    if types is None:
        return INFINITY
    order = 1
    for kind in types:
        order *= kind.order
    return order


def format_order(order: Label) -> str:
    return "infinite" if order == INFINITY else str(order)


def coset_enumeration_order(sys: CoxeterSystem, subset: Iterable[str]) -> int:
    """
    Order of <subset> by Todd-Coxeter enumeration over the trivial subgroup.

    Only terminates for finite groups; call it on spherical subsets.
    """
    names = sys.check_subset(subset)
    if not names:
        return 1
    F, *gens = free_group(" ".join(f"x{i}" for i in range(len(names))))
    relators = [g ** 2 for g in gens]
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            m = sys.m(names[i], names[j])
            if m != INFINITY:
                relators.append((gens[i] * gens[j]) ** int(m))
    order = FpGroup(F, relators).order()
    logger.debug(f"coset enumeration of <{','.join(names)}>: {order}")
    return int(order)
