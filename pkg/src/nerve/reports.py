"""
Dimension Reports

What the nerve's cohomology says about the virtual cohomological dimension
of Γ, and the table of H*(Γ; RΓ) for groups whose nerve is a homology
manifold. Both are derived from H*(K; R); no group-ring cohomology is
computed.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from common.errors import PreconditionError
from common.tracing import traced
from complexes.simplicial import is_orientable, is_pseudo_manifold
from coxeter.system import CoxeterSystem
from homology.groups import HomologyGroup, cohomology
from homology.manifolds import is_r_homology_manifold, is_r_homology_sphere
from homology.rings import ZZ, CoefficientRing, RingKind

from .spherical import nerve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RingVerdict:
    ring: CoefficientRing
    reduced_cohomology: List[HomologyGroup]
    verdict: str
    vcd: Optional[int]
    statement: str
    duality_group: bool = False

    def to_document(self) -> Dict:
        return {
            "reduced_cohomology": [str(g) for g in self.reduced_cohomology],
            "verdict": self.verdict,
            "vcd": self.vcd,
            "statement": self.statement,
            "duality_group": self.duality_group,
        }


@dataclass(frozen=True)
class VcdReport:
    dim_k: int
    pseudo_manifold: bool
    finite_group: bool
    rings: Dict[str, RingVerdict] = field(default_factory=dict)

    @property
    def vcd_upper(self) -> int:
        return self.dim_k + 1

    def to_document(self) -> Dict:
        return {
            "dimK": self.dim_k,
            "vcd_upper": self.vcd_upper,
            "pseudo_manifold": self.pseudo_manifold,
            "finite_group": self.finite_group,
            "rings": {label: v.to_document() for label, v in self.rings.items()},
        }


@traced("nerve")
def vcd_report(sys: CoxeterSystem, rings: Sequence[CoefficientRing] = (ZZ,)) -> VcdReport:
    """
    vcd <= dim K + 1 always. With K a pseudo-manifold, H^{n+1}(Γ1; RΓ1)
    is the top reduced cohomology of K, which certifies vcd_R = n + 1 when
    nonzero. Otherwise only the surjection onto H^{n+1}(Γ1; M) is stated.
    """
    K = nerve(sys).complex
    n = K.dimension
    finite = len(K.facets) == 1 and len(K.facets[0]) == len(sys.vertices)
    pseudo = bool(is_pseudo_manifold(K))
    verdicts: Dict[str, RingVerdict] = {}
    for ring in rings:
        groups = cohomology(K, ring, reduced=True)
        top = groups[n] if n >= 0 else HomologyGroup(0, (), ring)
        if finite:
            verdict, vcd = "finite", 0
            statement = "every subset is spherical, so Γ is finite and vcd = 0"
        elif pseudo and not top.is_zero():
            verdict, vcd = "certified", n + 1
            statement = f"H^{n + 1}(Γ1; {ring}Γ1) = H~^{n}(K; {ring}) = {top} is nonzero, so vcd_{ring} = {n + 1}"
        elif pseudo:
            verdict, vcd = "bounded", None
            statement = f"H~^{n}(K; {ring}) = 0 and K is a pseudo-manifold, so vcd_{ring} <= {n}"
        else:
            verdict, vcd = "surjection", None
            statement = (
                f"H^{n + 1}(Γ1; M) is a quotient of a finite sum of copies of H~^{n}(K; M); "
                f"H~^{n}(K; {ring}) = {top}; vcd_{ring} <= {n + 1}"
            )
        duality = pseudo and bool(is_r_homology_sphere(K, ring))
        if duality:
            statement += f"; K is an {ring}-homology {n}-sphere, so Γ is a duality group over {ring} of dimension {n + 1}"
        verdicts[ring.label] = RingVerdict(ring, groups, verdict, vcd, statement, duality)
        logger.debug(f"vcd over {ring}: {verdict}")
    return VcdReport(n, pseudo, finite, verdicts)


@dataclass(frozen=True)
class DegreeEntry:
    degree: int
    description: str
    source: Optional[HomologyGroup] = None
    note: str = ""

    def to_document(self) -> Dict:
        return {"degree": self.degree, "module": self.description, "note": self.note}


@dataclass(frozen=True)
class FreeCohomologyReport:
    ring: CoefficientRing
    dim_k: int
    entries: List[DegreeEntry]

    def to_document(self) -> Dict:
        return {"ring": self.ring.label, "dimK": self.dim_k, "degrees": [e.to_document() for e in self.entries]}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError("free_cohomology_report", message)


@traced("nerve")
def free_cohomology_report(sys: CoxeterSystem, ring: CoefficientRing = ZZ) -> FreeCohomologyReport:
    """
    H^i(Γ; RΓ) for a nerve that is an orientable R-homology n-manifold
    (or any such manifold when R = F2): zero in degrees 0 and 1,
    H^{i-1}(K; R) tensored with a free module in degrees 2..n, and R with
    each generator acting by -1 in degree n + 1.
    """
    K = nerve(sys).complex
    n = K.dimension
    _require(n >= 1, f"nerve has dimension {n}; the table needs n >= 1")
    verdict = is_pseudo_manifold(K)
    _require(bool(verdict), f"nerve is not a pseudo-manifold: {verdict.reason}")
    manifold = is_r_homology_manifold(K, ring)
    _require(bool(manifold), f"nerve is not an {ring}-homology manifold: {manifold.reason}")
    orientable = bool(is_orientable(K))
    char_two = ring.kind is RingKind.PRIME_FIELD and ring.p == 2
    _require(orientable or char_two, f"nerve is not orientable and 2 != 0 in {ring}")

    groups = cohomology(K, ring)
    entries = [DegreeEntry(0, "0"), DegreeEntry(1, "0")]
    for i in range(2, n + 1):
        group = groups[i - 1]
        if group.is_zero():
            entries.append(DegreeEntry(i, "0", group))
            continue
        note = ""
        if group.torsion:
            note = f"torsion of H^{i - 1}(K; {ring}) contributes finite summands tensored with {ring}Γ"
        entries.append(DegreeEntry(i, f"({group}) ⊗ free module", group, note))
    entries.append(DegreeEntry(n + 1, f"{ring}°", HomologyGroup(1, (), ring), "rank one, every generator acts by -1"))
    return FreeCohomologyReport(ring, n, entries)
