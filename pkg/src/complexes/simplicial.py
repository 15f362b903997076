"""
Simplicial Complexes

Finite abstract simplicial complexes stored by facets, with the full face
set generated once at construction. Vertex identifiers are strings and
every simplex is a sorted tuple of them.
"""

import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from common.errors import InputError, PreconditionError

logger = logging.getLogger(__name__)

Simplex = Tuple[str, ...]


def simplex_key(s: Simplex):
    return (len(s), s)


def make_simplex(vertices: Iterable[Any]) -> Simplex:
    names = [str(v) for v in vertices]
    if len(set(names)) != len(names):
        raise InputError(f"simplex {names} repeats a vertex")
    return tuple(sorted(names))


class SimplicialComplex:
    """
    Abstract simplicial complex.

    Build with from_facets(); the constructor expects facets that are
    already sorted and mutually non-dominating.
    """

    def __init__(self, facets: Iterable[Simplex]):
        self._facets: Tuple[Simplex, ...] = tuple(sorted(facets, key=simplex_key))
        by_dim: Dict[int, Set[Simplex]] = defaultdict(set)
        for facet in self._facets:
            for k in range(1, len(facet) + 1):
                by_dim[k - 1].update(combinations(facet, k))
        self._faces: Dict[int, Tuple[Simplex, ...]] = {
            d: tuple(sorted(faces)) for d, faces in sorted(by_dim.items())
        }
        self._face_set = frozenset(f for faces in self._faces.values() for f in faces)

    @property
    def facets(self) -> Tuple[Simplex, ...]:
        return self._facets

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(v for (v,) in self._faces.get(0, ()))

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self._facets), default=-1)

    def is_empty(self) -> bool:
        return not self._facets

    def faces(self, dim: int) -> Tuple[Simplex, ...]:
        return self._faces.get(dim, ())

    def simplices(self) -> List[Simplex]:
        return [s for d in sorted(self._faces) for s in self._faces[d]]

    def f_vector(self) -> List[int]:
        return [len(self.faces(d)) for d in range(self.dimension + 1)]

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(str(v) for v in simplex)) in self._face_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self):
        return hash(self._facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector()})"

    def one_skeleton(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.faces(1))
        return graph

    def facets_containing(self, simplex: Simplex) -> List[Simplex]:
        s = set(simplex)
        return [f for f in self._facets if s.issubset(f)]

    def to_document(self) -> Dict[str, List[List[str]]]:
        return {"facets": [list(f) for f in self._facets]}


def from_facets(facets: Iterable[Iterable[Any]]) -> SimplicialComplex:
    """Deduplicate, drop dominated facets and sort vertices."""
    simplices = set()
    for facet in facets:
        facet = list(facet)
        if not facet:
            raise InputError("empty facet")
        simplices.add(make_simplex(facet))

    kept: List[Simplex] = []
    covered: Set[Simplex] = set()
    for s in sorted(simplices, key=lambda s: (-len(s), s)):
        if s in covered:
            continue
        kept.append(s)
        for k in range(1, len(s)):
            covered.update(combinations(s, k))
    return SimplicialComplex(kept)


def complex_from_document(document: Mapping[str, Any], source: str = "complex") -> SimplicialComplex:
    try:
        facets = document["facets"]
    except (KeyError, TypeError):
        raise InputError("expected key 'facets'", source=source)
    return from_facets(facets)


def link(K: SimplicialComplex, s: Iterable[Any]) -> SimplicialComplex:
    """All t disjoint from s with t ∪ s in K; empty when s is a facet."""
    simplex = tuple(sorted(str(v) for v in s))
    if simplex and simplex not in K:
        raise PreconditionError("link", f"{list(simplex)} is not a simplex of the complex", subject=simplex)
    rest = []
    for facet in K.facets_containing(simplex):
        remainder = tuple(v for v in facet if v not in simplex)
        if remainder:
            rest.append(remainder)
    return from_facets(rest)


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    pieces = list(K.faces(k)) + [f for f in K.facets if len(f) - 1 < k]
    return from_facets(pieces)


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(K.f_vector()))


# Barycentres are named "{a,b,c}" after the simplex they subdivide. A vertex
# name may contain braces only if they balance, and commas only inside them,
# so that distinct simplices get distinct names.

def is_barycentre_safe(name: str) -> bool:
    depth = 0
    for ch in name:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return False
        elif ch == "," and depth == 0:
            return False
    return bool(name) and depth == 0


def barycentre_name(simplex: Simplex) -> str:
    for v in simplex:
        if not is_barycentre_safe(v):
            raise InputError(f"vertex name {v!r} has a top-level comma or unbalanced braces; it cannot name a barycentre")
    return "{" + ",".join(simplex) + "}"


def parse_barycentre(name: str) -> Optional[Simplex]:
    """Inverse of barycentre_name; None when name is not a barycentre."""
    if len(name) < 2 or name[0] != "{" or name[-1] != "}":
        return None
    inner = name[1:-1]
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(inner):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return None
        elif ch == "," and depth == 0:
            parts.append(inner[start:i])
            start = i + 1
    if depth != 0:
        return None
    parts.append(inner[start:])
    if any(not p for p in parts):
        return None
    return tuple(parts)


def order_complex(
    elements: Sequence[str],
    less_than: Callable[[str, str], bool],
) -> SimplicialComplex:
    """Simplicial complex of chains in a finite poset."""
    above: Dict[str, List[str]] = {x: [y for y in elements if less_than(x, y)] for x in elements}
    covers: Dict[str, List[str]] = {}
    for x in elements:
        ups = above[x]
        covers[x] = [y for y in ups if not any(less_than(z, y) for z in ups if z != y)]
    minimal = [x for x in elements if not any(less_than(y, x) for y in elements)]

    chains: List[List[str]] = []
    stack = [[x] for x in minimal]
    while stack:
        chain = stack.pop()
        nxt = covers[chain[-1]]
        if not nxt:
            chains.append(chain)
            continue
        for y in nxt:
            stack.append(chain + [y])
    return from_facets(chains)


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset; vertex names are barycentre_name()."""
    for v in K.vertices:
        barycentre_name((v,))
    chains = []
    for facet in K.facets:
        for order in permutations(facet):
            chains.append([barycentre_name(tuple(sorted(order[:k]))) for k in range(1, len(order) + 1)])
    result = from_facets(chains)
    logger.debug(f"subdivided {K!r} into {result!r}")
    return result


def is_flag(K: SimplicialComplex) -> bool:
    """True iff every clique of the 1-skeleton spans a simplex."""
    for clique in nx.find_cliques(K.one_skeleton()):
        if tuple(sorted(clique)) not in K:
            return False
    return True


@dataclass(frozen=True)
class PseudoManifoldVerdict:
    is_pseudo_manifold: bool
    dimension: int
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_pseudo_manifold


def _codim_one_incidence(K: SimplicialComplex) -> Dict[Simplex, List[Tuple[Simplex, int]]]:
    """(n-1)-face -> [(n-facet, index of the omitted vertex)]."""
    n = K.dimension
    incidence: Dict[Simplex, List[Tuple[Simplex, int]]] = defaultdict(list)
    for facet in K.faces(n):
        for i in range(len(facet)):
            incidence[facet[:i] + facet[i + 1:]].append((facet, i))
    return incidence


def is_pseudo_manifold(K: SimplicialComplex) -> PseudoManifoldVerdict:
    n = K.dimension
    if K.is_empty():
        return PseudoManifoldVerdict(False, n, "empty complex")
    impure = [f for f in K.facets if len(f) - 1 != n]
    if impure:
        return PseudoManifoldVerdict(False, n, f"{list(impure[0])} is not a face of an {n}-simplex")

    incidence = _codim_one_incidence(K)
    for face, cofaces in sorted(incidence.items()):
        if len(cofaces) != 2:
            return PseudoManifoldVerdict(
                False, n, f"{list(face)} lies in {len(cofaces)} {n}-simplices, not 2"
            )

    adjacency = nx.Graph()
    adjacency.add_nodes_from(K.facets)
    for cofaces in incidence.values():
        adjacency.add_edge(cofaces[0][0], cofaces[1][0])
    if not nx.is_connected(adjacency):
        return PseudoManifoldVerdict(False, n, f"{n}-simplices are not connected through {n - 1}-faces")
    return PseudoManifoldVerdict(True, n)


@dataclass(frozen=True)
class OrientationResult:
    orientable: bool
    orientation: Optional[Dict[Simplex, int]] = None

    def __bool__(self) -> bool:
        return self.orientable


def is_orientable(K: SimplicialComplex) -> OrientationResult:
    """
    Assign ±1 to every n-simplex so induced orientations cancel on each
    shared (n-1)-face, propagating breadth-first from the first facet.
    """
    verdict = is_pseudo_manifold(K)
    if not verdict:
        raise PreconditionError("is_orientable", f"not a pseudo-manifold: {verdict.reason}", subject=K)

    incidence = _codim_one_incidence(K)
    neighbours: Dict[Simplex, List[Tuple[Simplex, int, int]]] = defaultdict(list)
    for cofaces in incidence.values():
        (a, i), (b, j) = cofaces
        neighbours[a].append((b, i, j))
        neighbours[b].append((a, j, i))

    signs: Dict[Simplex, int] = {}
    start = K.facets[0]
    signs[start] = 1
    queue = deque([start])
    while queue:
        sigma = queue.popleft()
        for tau, i, j in neighbours[sigma]:
            # induced signs sign(sigma)(-1)^i and sign(tau)(-1)^j must cancel
            required = -signs[sigma] * (-1) ** (i + j)
            if tau not in signs:
                signs[tau] = required
                queue.append(tau)
            elif signs[tau] != required:
                return OrientationResult(False, None)
    return OrientationResult(True, signs)


def orientation_cancels(K: SimplicialComplex, orientation: Mapping[Simplex, int]) -> bool:
    """Check the cancellation condition on every internal (n-1)-face."""
    for cofaces in _codim_one_incidence(K).values():
        total = sum(orientation[f] * (-1) ** i for f, i in cofaces)
        if total != 0:
            return False
    return True
