"""
Nerves

The nerve K(Γ, V) has the nonempty spherical subsets as simplices. For a
right-angled system those are exactly the cliques of the labeled graph.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import networkx as nx

from common.tracing import traced
from complexes.simplicial import Simplex, SimplicialComplex, from_facets
from coxeter.catalog import is_spherical, special_subgroup_order
from coxeter.system import CoxeterSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SphericalSubset:
    subset: Tuple[str, ...]
    order: int

    @property
    def size(self) -> int:
        return len(self.subset)


@dataclass(frozen=True)
class Nerve:
    system: CoxeterSystem
    complex: SimplicialComplex
    orders: Dict[Simplex, int] = field(default_factory=dict)

    def order(self, simplex: Simplex) -> int:
        return self.orders[tuple(sorted(simplex))]

    def spherical_subsets(self, include_empty: bool = True) -> List[SphericalSubset]:
        subsets = [SphericalSubset(s, self.orders[s]) for s in self.complex.simplices()]
        if include_empty:
            subsets.insert(0, SphericalSubset((), 1))
        return subsets

    def maximal_subsets(self) -> Tuple[Simplex, ...]:
        return self.complex.facets

    @property
    def dimension(self) -> int:
        return self.complex.dimension


def _right_angled_subsets(sys: CoxeterSystem) -> List[Tuple[str, ...]]:
    return [tuple(c) for c in nx.enumerate_all_cliques(sys.labeled_graph())]


def _upward_closure(sys: CoxeterSystem) -> List[Tuple[str, ...]]:
    """Extend spherical sets one vertex at a time, in vertex order."""
    graph = sys.labeled_graph()
    level = [(v,) for v in sys.vertices]
    found = list(level)
    while level:
        nxt = []
        for subset in level:
            last = sys.index(subset[-1])
            for v in sys.vertices[last + 1:]:
                if all(graph.has_edge(u, v) for u in subset) and is_spherical(sys, subset + (v,)):
                    nxt.append(subset + (v,))
        found.extend(nxt)
        level = nxt
    return found


@traced("nerve")
def nerve(sys: CoxeterSystem) -> Nerve:
    if sys.is_right_angled:
        subsets = _right_angled_subsets(sys)
        orders = {tuple(sorted(s)): 2 ** len(s) for s in subsets}
    else:
        subsets = _upward_closure(sys)
        orders = {tuple(sorted(s)): int(special_subgroup_order(sys, s)) for s in subsets}
    K = from_facets(subsets)
    logger.debug(f"nerve of {sys.describe()}: f = {K.f_vector()}")
    return Nerve(sys, K, orders)
