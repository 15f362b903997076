"""
Reidemeister-Schreier

Presentation of the kernel of a homomorphism psi onto a finite elementary
abelian 2-group Q. Cosets of the kernel are the elements of Q, and a
generator g moves coset q to q + psi(g).
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from common.errors import PreconditionError
from common.tracing import traced

from .homomorphisms import TwoGroupHom, evaluate_mask, unpack
from .presentation import Presentation
from .words import Letter, Word, free_reduce

logger = logging.getLogger(__name__)

Edge = Tuple[int, str]


@dataclass(frozen=True)
class SchreierTransversal:
    """Breadth-first spanning tree of the coset graph."""

    rank: int
    cosets: Tuple[int, ...]
    tree_edges: frozenset
    representatives: Dict[int, Word]

    def label(self, q: int) -> str:
        return "".join(str(b) for b in unpack(q, self.rank))

    def generator_name(self, edge: Edge) -> str:
        q, g = edge
        return f"{g}[{self.label(q)}]"


def schreier_transversal(generators: Tuple[str, ...], psi: TwoGroupHom) -> SchreierTransversal:
    """Edges are explored in generator order from each coset, positive letters only."""
    start = 0
    representatives = {start: Word()}
    order = [start]
    tree = set()
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for g in generators:
            target = q ^ psi.image(g)
            if target not in representatives:
                representatives[target] = representatives[q] * Word(((g, 1),))
                tree.add((q, g))
                order.append(target)
                queue.append(target)
    return SchreierTransversal(psi.rank, tuple(order), frozenset(tree), representatives)


def rewrite(word: Word, start: int, transversal: SchreierTransversal, psi: TwoGroupHom) -> Word:
    """Rewrite t_start * word * t_end^-1 over the Schreier generators."""
    letters: List[Letter] = []
    current = start
    for g, e in word:
        if e == 1:
            edge = (current, g)
            current ^= psi.image(g)
        else:
            current ^= psi.image(g)
            edge = (current, g)
        if edge not in transversal.tree_edges:
            letters.append((transversal.generator_name(edge), e))
    return free_reduce(Word(tuple(letters)))


@traced("presentations")
def reidemeister_schreier(pres: Presentation, psi: TwoGroupHom) -> Presentation:
    """
    Schreier generators are the non-tree edges (q, g) of the coset graph,
    |Q| * #generators - (|Q| - 1) of them. Relators are the rewritten
    conjugates t r t^-1 for every coset representative t and relator r.
    """
    psi.require_domain(pres.generators, "reidemeister_schreier")
    for i, relator in enumerate(pres.relators):
        if evaluate_mask(psi, relator):
            raise PreconditionError(
                "reidemeister_schreier",
                f"relator {i} ({relator}) does not map to zero, so psi is not a homomorphism",
                subject=relator,
            )
    transversal = schreier_transversal(pres.generators, psi)
    generators = [
        transversal.generator_name((q, g))
        for q in transversal.cosets
        for g in pres.generators
        if (q, g) not in transversal.tree_edges
    ]
    relators = []
    for q in transversal.cosets:
        for relator in pres.relators:
            rewritten = rewrite(relator, q, transversal, psi)
            if rewritten:
                relators.append(rewritten)
    logger.info(
        f"kernel of index {len(transversal.cosets)}: "
        f"{len(generators)} Schreier generators, {len(relators)} relators"
    )
    return Presentation(tuple(generators), tuple(relators))
