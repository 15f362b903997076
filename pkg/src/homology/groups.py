"""
Homology Groups

Homology and cohomology of finite chain complexes over Z, Q and F_p.
Integral groups come from Smith invariant factors of the boundary maps;
field coefficients only need ranks.
"""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from common.errors import InputError
from common.settings import get_settings
from common.tracing import traced

from .chains import DeltaComplexData, as_chain_complex
from .matrices import IntegerMatrix, invariant_factors, modular_rank
from .rings import ZZ, CoefficientRing, RingKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyGroup:
    """
    A finitely generated module: free part plus torsion d1 | d2 | ...

    Over a field torsion is always empty and free_rank is the dimension.
    """

    free_rank: int
    torsion: Tuple[int, ...] = ()
    ring: CoefficientRing = ZZ

    def __post_init__(self):
        if self.free_rank < 0:
            raise InputError(f"negative free rank {self.free_rank}")
        torsion = tuple(sorted(abs(int(d)) for d in self.torsion if abs(int(d)) != 1))
        if any(d == 0 for d in torsion):
            raise InputError("torsion factor 0; count it in the free rank")
        if torsion and self.ring.is_field:
            raise InputError(f"torsion over the field {self.ring}")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise InputError(f"torsion factors {list(torsion)} do not form a divisibility chain")
        object.__setattr__(self, "torsion", torsion)

    @property
    def dimension(self) -> int:
        return self.free_rank

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self) -> str:
        if self.ring.is_field:
            return str(self.free_rank)
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for d in sorted(set(self.torsion)):
            count = self.torsion.count(d)
            parts.append(f"Z/{d}" if count == 1 else f"(Z/{d})^{count}")
        return " + ".join(parts) if parts else "0"

    def to_document(self) -> Dict:
        if self.ring.is_field:
            return {"ring": self.ring.label, "dim": self.free_rank}
        return {"ring": self.ring.label, "rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_document(cls, document: Dict) -> "HomologyGroup":
        ring = CoefficientRing.parse(document.get("ring", "Z"))
        if ring.is_field:
            return cls(int(document["dim"]), (), ring)
        return cls(int(document["rank"]), tuple(document.get("torsion", ())), ring)


def _rank_and_torsion(matrix: IntegerMatrix, ring: CoefficientRing) -> Tuple[int, List[int]]:
    if ring.kind is RingKind.PRIME_FIELD:
        return modular_rank(matrix, ring.p), []
    factors = invariant_factors(matrix)
    if ring.kind is RingKind.RATIONALS:
        return len(factors), []
    return len(factors), [d for d in factors if abs(d) > 1]


def _graded_groups(
    data: DeltaComplexData,
    ring: CoefficientRing,
    reduced: bool,
    cohomology: bool,
) -> List[HomologyGroup]:
    n = data.dimension
    if n < 0:
        return []

    info: Dict[int, Tuple[int, List[int]]] = {}
    for k in range(1, n + 1):
        matrix = data.boundary(k)
        info[k] = _rank_and_torsion(matrix.transpose() if cohomology else matrix, ring)

    def rank(k: int) -> int:
        return info[k][0] if k in info else 0

    groups = []
    for k in range(n + 1):
        free = data.cells_per_dim[k] - rank(k) - rank(k + 1)
        if reduced and k == 0 and data.cells_per_dim[0] > 0:
            free -= 1
        if cohomology:
            # torsion of H^k is the cokernel torsion of δ^{k-1} = ∂_k^T
            torsion = info[k][1] if k in info else []
        else:
            torsion = info[k + 1][1] if (k + 1) in info else []
        groups.append(HomologyGroup(free, tuple(torsion), ring))
    return groups


@traced("homology")
def homology(source, ring: CoefficientRing = ZZ, reduced: bool = False) -> List[HomologyGroup]:
    """
    H_k for 0 <= k <= dim of a SimplicialComplex or DeltaComplexData.

    The reduced variant augments in degree -1, which only lowers the free
    rank in degree 0. The empty complex gives an empty list.
    """
    data = as_chain_complex(source)
    groups = _graded_groups(data, ring, reduced, cohomology=False)
    logger.debug(f"homology over {ring}: {[str(g) for g in groups]}")
    return groups


@traced("homology")
def cohomology(source, ring: CoefficientRing = ZZ, reduced: bool = False) -> List[HomologyGroup]:
    """H^k computed from the transposed boundary maps."""
    data = as_chain_complex(source)
    return _graded_groups(data, ring, reduced, cohomology=True)


def betti_numbers(groups: Sequence[HomologyGroup]) -> List[int]:
    return [g.free_rank for g in groups]


def euler_from_groups(groups: Sequence[HomologyGroup]) -> int:
    return sum((-1) ** k * g.free_rank for k, g in enumerate(groups))


async def _gather(items: List, ring: CoefficientRing, reduced: bool, jobs: int) -> List[List[HomologyGroup]]:
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        tasks = [
            loop.run_in_executor(pool, partial(homology, item, ring, reduced))
            for item in items
        ]
        return list(await asyncio.gather(*tasks))


def homology_batch(
    items: Iterable,
    ring: CoefficientRing = ZZ,
    reduced: bool = False,
    jobs: Optional[int] = None,
) -> List[List[HomologyGroup]]:
    """Homology of independent complexes, fanned out over `jobs` workers."""
    items = list(items)
    jobs = jobs or get_settings().homology.jobs
    if jobs <= 1 or len(items) <= 1:
        return [homology(item, ring, reduced) for item in items]
    logger.info(f"computing homology of {len(items)} complexes with {jobs} workers")
    return asyncio.run(_gather(items, ring, reduced, jobs))
