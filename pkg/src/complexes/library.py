"""
Standard Complexes

Small named complexes used throughout the workbench: simplices and their
boundaries, the bow tie, two triangulations of the projective plane, and
the subdivided pentagon complex.
"""

import logging
from itertools import combinations
from typing import Dict, List, Tuple

import numpy as np
from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import AlternatingGroup

from common.errors import InputError
from common.jsonio import read_json
from common.settings import get_settings

from .simplicial import (
    SimplicialComplex,
    barycentre_name,
    barycentric_subdivision,
    complex_from_document,
    from_facets,
    order_complex,
    skeleton,
)

logger = logging.getLogger(__name__)


def simplex(dim: int) -> SimplicialComplex:
    """The solid dim-simplex on vertices "0".."dim"."""
    return from_facets([[str(i) for i in range(dim + 1)]])


def boundary_of_simplex(dim: int) -> SimplicialComplex:
    """Boundary of the dim-simplex, a (dim - 1)-sphere."""
    vertices = [str(i) for i in range(dim + 1)]
    return from_facets(combinations(vertices, dim))


def hollow_triangle() -> SimplicialComplex:
    return boundary_of_simplex(2)


def bow_tie() -> SimplicialComplex:
    """Two triangles sharing the vertex c."""
    return from_facets([["a", "b", "c"], ["c", "d", "e"]])


def simplex_skeleton(dim: int, k: int) -> SimplicialComplex:
    return skeleton(simplex(dim), k)


def triangle_subdivision() -> SimplicialComplex:
    return barycentric_subdivision(simplex(2))


def bow_tie_subdivision() -> SimplicialComplex:
    return barycentric_subdivision(bow_tie())


def icosahedron() -> Tuple[np.ndarray, List[Tuple[int, int, int]]]:
    """Vertex coordinates (0, ±1, ±φ) and cyclic permutations, plus the 20 faces."""
    phi = (1 + 5 ** 0.5) / 2
    points = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            base = (0.0, s1 * 1.0, s2 * phi)
            points.extend([base, base[1:] + base[:1], base[2:] + base[:2]])
    coords = np.array(points)
    dist = np.linalg.norm(coords[:, None, :] - coords[None, :, :], axis=-1)
    adjacent = np.isclose(dist, 2.0)
    faces = [
        (i, j, k)
        for i, j, k in combinations(range(len(coords)), 3)
        if adjacent[i, j] and adjacent[j, k] and adjacent[i, k]
    ]
    return coords, faces


def rp2_six() -> SimplicialComplex:
    """Antipodal quotient of the icosahedron boundary: 6 vertices, 15 edges, 10 triangles."""
    coords, faces = icosahedron()
    label: Dict[int, str] = {}
    for i, point in enumerate(coords):
        if i in label:
            continue
        opposite = int(np.argmin(np.linalg.norm(coords + point, axis=1)))
        name = str(len(label) // 2 + 1)
        label[i] = label[opposite] = name
    return from_facets([[label[i] for i in face] for face in faces])


def _load_fixture(name: str) -> Dict:
    return read_json(get_settings().data_path("complexes", name))


def rp2_eleven() -> SimplicialComplex:
    """The 11-vertex flag triangulation of the projective plane."""
    return complex_from_document(_load_fixture("rp2_eleven.json"), source="rp2_eleven.json")


def rp2_eleven_classes() -> Dict[str, List[str]]:
    """Its four colour classes {a,c,e}, {b,d,f}, {g,h,j}, {i,k}."""
    return _load_fixture("rp2_eleven.json")["classes"]


def _pentagon_cycles() -> List[Tuple[str, ...]]:
    """Undirected 5-cycles from one A5 conjugacy class of 5-cycles."""
    group = AlternatingGroup(5)
    cycles = set()
    for perm in group.conjugacy_class(Permutation([1, 2, 3, 4, 0])):
        order = [0]
        while len(order) < 5:
            order.append(perm(order[-1]))
        rotations = [order[i:] + order[:i] for i in range(5)]
        rotations += [list(reversed(r)) for r in rotations]
        cycles.add(tuple(str(v) for v in min(rotations)))
    return sorted(cycles)


def pentagon_complex() -> SimplicialComplex:
    """
    Barycentric subdivision of the acyclic 2-complex with 5 vertices,
    10 edges and 6 pentagons. Pentagon barycentres are named "P" plus the
    cycle, since several pentagons share a vertex set.
    """
    pentagons = {"P" + "".join(c): c for c in _pentagon_cycles()}
    vertices = [barycentre_name((str(v),)) for v in range(5)]
    edges = [barycentre_name(e) for e in combinations([str(v) for v in range(5)], 2)]

    def members(name: str):
        if name in pentagons:
            return pentagons[name]
        return tuple(name[1:-1].split(","))

    def cycle_edges(cycle):
        return {tuple(sorted((cycle[i], cycle[(i + 1) % 5]))) for i in range(5)}

    def less_than(x: str, y: str) -> bool:
        if x == y or x in pentagons:
            return False
        if y in pentagons:
            face = members(x)
            if len(face) == 1:
                return face[0] in pentagons[y]
            return face in cycle_edges(pentagons[y])
        return len(members(x)) < len(members(y)) and set(members(x)) < set(members(y))

    result = order_complex(vertices + edges + sorted(pentagons), less_than)
    logger.debug(f"pentagon complex: {result!r}")
    return result


LIBRARY = {
    "point": lambda: simplex(0),
    "hollow-triangle": hollow_triangle,
    "triangle": lambda: simplex(2),
    "tetrahedron-boundary": lambda: boundary_of_simplex(3),
    "bow-tie": bow_tie,
    "bow-tie-subdivision": bow_tie_subdivision,
    "triangle-subdivision": triangle_subdivision,
    "rp2-6": rp2_six,
    "rp2-11": rp2_eleven,
    "pentagon": pentagon_complex,
    "six-simplex-2-skeleton": lambda: simplex_skeleton(6, 2),
}


def named_complex(name: str) -> SimplicialComplex:
    try:
        return LIBRARY[name]()
    except KeyError:
        raise InputError(f"unknown complex {name!r}; known: {', '.join(sorted(LIBRARY))}")
