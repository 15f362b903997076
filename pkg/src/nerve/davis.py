"""
Davis Quotients

For a right-angled system and psi: Γ -> F_2^k whose kernel Γ1 is torsion
free, D(Γ, V)/Γ1 is a finite complex. Its m-cells are classes of pairs
(q, V0 ⊂ V1 ⊂ ... ⊂ Vm) with q in the image of psi and each Vi spherical
(V0 may be empty), where (q, chain) ~ (q + psi(g), chain) for g in <V0>.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from common.errors import PreconditionError
from common.tracing import traced
from coxeter.system import CoxeterSystem
from homology.chains import DeltaComplexData
from homology.matrices import IntegerMatrix
from presentations.homomorphisms import TwoGroupHom, coset_representative, f2_rank, span

from .spherical import nerve

logger = logging.getLogger(__name__)

Chain = Tuple[Tuple[str, ...], ...]
Cell = Tuple[int, Chain]


@dataclass(frozen=True)
class KernelCheck:
    holds: bool
    failing_subset: Optional[Tuple[str, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def torsion_free_kernel_check(sys: CoxeterSystem, psi: TwoGroupHom) -> KernelCheck:
    """
    ker psi is torsion free iff psi is injective on every maximal finite
    special subgroup, i.e. the images of each maximal clique are linearly
    independent over F_2.
    """
    sys.require_right_angled("torsion_free_kernel_check")
    psi.require_domain(sys.vertices, "torsion_free_kernel_check")
    for facet in nerve(sys).maximal_subsets():
        if f2_rank([psi.image(v) for v in facet], psi.rank) != len(facet):
            logger.debug(f"psi is not injective on <{','.join(facet)}>")
            return KernelCheck(False, facet)
    return KernelCheck(True)


@dataclass(frozen=True)
class DavisQuotientCells:
    data: DeltaComplexData
    cells: Tuple[Tuple[Cell, ...], ...]
    index: int

    @property
    def cells_per_dim(self) -> Tuple[int, ...]:
        return self.data.cells_per_dim

    @property
    def euler_characteristic(self) -> int:
        return self.data.euler_characteristic()


def _chains(spherical: List[Tuple[str, ...]]) -> List[List[Chain]]:
    """Strictly increasing chains of spherical subsets, grouped by length - 1."""
    supersets = {
        t: [s for s in spherical if len(s) > len(t) and set(t) < set(s)]
        for t in spherical
    }
    by_dim: List[List[Chain]] = [[(t,) for t in spherical]]
    while True:
        nxt = [chain + (s,) for chain in by_dim[-1] for s in supersets[chain[-1]]]
        if not nxt:
            return by_dim
        by_dim.append(nxt)


@traced("nerve")
def davis_quotient(sys: CoxeterSystem, psi: TwoGroupHom) -> DavisQuotientCells:
    sys.require_right_angled("davis_quotient")
    psi.require_domain(sys.vertices, "davis_quotient")
    check = torsion_free_kernel_check(sys, psi)
    if not check:
        raise PreconditionError(
            "davis_quotient",
            f"kernel has torsion: psi is not injective on <{','.join(check.failing_subset)}>",
            subject=check.failing_subset,
        )

    K = nerve(sys).complex
    spherical = [()] + K.simplices()
    image = psi.image_subgroup()
    subgroups = {t: span(psi.image(v) for v in t) for t in spherical}

    cells: List[List[Cell]] = []
    for chains in _chains(spherical):
        level = []
        for chain in chains:
            reps = sorted({coset_representative(q, subgroups[chain[0]]) for q in image})
            level.extend((q, chain) for q in reps)
        cells.append(level)
    position = [{cell: i for i, cell in enumerate(level)} for level in cells]
    counts = tuple(len(level) for level in cells)

    boundaries = []
    for m in range(1, len(cells)):
        matrix = np.zeros((counts[m - 1], counts[m]), dtype=object)
        lower = position[m - 1]
        for col, (q, chain) in enumerate(cells[m]):
            for i in range(m + 1):
                face = chain[:i] + chain[i + 1:]
                # dropping V0 coarsens the class to a coset of psi<V1>
                rep = coset_representative(q, subgroups[face[0]]) if i == 0 else q
                matrix[lower[(rep, face)], col] += (-1) ** i
        boundaries.append(IntegerMatrix(matrix, counts[m - 1], counts[m]))

    data = DeltaComplexData(counts, tuple(boundaries)).validate()
    logger.info(f"Davis quotient of index {len(image)}: cells {list(counts)}")
    return DavisQuotientCells(data, tuple(tuple(level) for level in cells), len(image))
