"""
Chain Complexes

Boundary matrices of finite cell complexes. Simplicial complexes are
converted with the usual alternating-sign boundary; quotient complexes
that are not simplicial arrive as DeltaComplexData directly.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from common.errors import InputError
from complexes.simplicial import SimplicialComplex

from .matrices import IntegerMatrix, product_is_zero

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeltaComplexData:
    """
    Cell counts and boundary maps of a finite chain complex.

    boundaries[k - 1] is ∂_k : C_k -> C_{k-1}, with shape
    (cells_per_dim[k - 1], cells_per_dim[k]).
    """

    cells_per_dim: Tuple[int, ...]
    boundaries: Tuple[IntegerMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "cells_per_dim", tuple(int(n) for n in self.cells_per_dim))
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        if len(self.boundaries) != max(len(self.cells_per_dim) - 1, 0):
            raise InputError(
                f"{len(self.cells_per_dim)} cell dimensions need "
                f"{max(len(self.cells_per_dim) - 1, 0)} boundary maps, got {len(self.boundaries)}"
            )
        for k, matrix in enumerate(self.boundaries, start=1):
            expected = (self.cells_per_dim[k - 1], self.cells_per_dim[k])
            if matrix.shape != expected:
                raise InputError(f"boundary map in degree {k} has shape {matrix.shape}, expected {expected}")

    @property
    def dimension(self) -> int:
        return len(self.cells_per_dim) - 1

    def boundary(self, k: int) -> IntegerMatrix:
        """∂_k, with zero maps outside 1..dimension."""
        if 1 <= k <= self.dimension:
            return self.boundaries[k - 1]
        rows = self.cells_per_dim[k - 1] if 0 <= k - 1 <= self.dimension else 0
        cols = self.cells_per_dim[k] if 0 <= k <= self.dimension else 0
        return IntegerMatrix.zeros(rows, cols)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.cells_per_dim))

    def validate(self) -> "DeltaComplexData":
        """Raise InputError unless ∂_{k-1}∂_k = 0 in every degree."""
        for k in range(2, self.dimension + 1):
            if not product_is_zero(self.boundary(k - 1), self.boundary(k)):
                raise InputError(f"boundary maps do not compose to zero in degree {k}")
        return self

    def to_document(self) -> Dict:
        return {
            "cells_per_dim": list(self.cells_per_dim),
            "boundaries": [m.to_lists() for m in self.boundaries],
        }


def delta_complex_from_document(document: Dict, source: str = "chain complex") -> DeltaComplexData:
    try:
        cells = document["cells_per_dim"]
        raw = document["boundaries"]
    except (KeyError, TypeError):
        raise InputError("expected keys 'cells_per_dim' and 'boundaries'", source=source)
    matrices = [
        IntegerMatrix(rows, cells[k], cells[k + 1])
        for k, rows in enumerate(raw)
    ]
    return DeltaComplexData(tuple(cells), tuple(matrices)).validate()


def _face_index(K: SimplicialComplex) -> List[Dict[Tuple[str, ...], int]]:
    return [{s: i for i, s in enumerate(K.faces(d))} for d in range(K.dimension + 1)]


def simplicial_chain_complex(K: SimplicialComplex) -> DeltaComplexData:
    """Oriented simplicial chains; simplices carry their sorted vertex order."""
    index = _face_index(K)
    cells = tuple(len(ix) for ix in index)
    boundaries = []
    for k in range(1, K.dimension + 1):
        matrix = np.zeros((cells[k - 1], cells[k]), dtype=object)
        lower = index[k - 1]
        for col, simplex in enumerate(K.faces(k)):
            for i in range(len(simplex)):
                matrix[lower[simplex[:i] + simplex[i + 1:]], col] += (-1) ** i
        boundaries.append(IntegerMatrix(matrix, cells[k - 1], cells[k]))
    data = DeltaComplexData(cells, tuple(boundaries))
    logger.debug(f"chain complex of {K!r}: cells {list(cells)}")
    return data


def as_chain_complex(source) -> DeltaComplexData:
    if isinstance(source, DeltaComplexData):
        return source
    if isinstance(source, SimplicialComplex):
        return simplicial_chain_complex(source)
    raise InputError(f"cannot take homology of {type(source).__name__}")
