"""
Report Formatter

Render workbench results as stable text lines or canonical JSON.
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from common.errors import WorkbenchError
from common.jsonio import dump_json
from homology.groups import HomologyGroup
from homology.rings import CoefficientRing


class OutputFormat(Enum):
    """Output formats accepted by --format."""
    TEXT = "text"
    JSON = "json"


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class ReportFormatter:
    """
    Format reports for the terminal.

    Text output is one fact per line; JSON output is the canonical
    document that the matching reader accepts back.
    """

    def __init__(self, output_format: OutputFormat = OutputFormat.TEXT):
        self.output_format = output_format
        self._labels = self._load_labels()

    def _load_labels(self) -> Dict[str, str]:
        """Headings shared by several reports."""
        return {
            "holds": "yes",
            "fails": "no",
            "dimension": "dimension",
            "f_vector": "f-vector",
            "euler": "chi",
            "index": "index",
            "generators": "generators",
            "relators": "relators",
            "cells": "cells",
            "mode": "mode",
            "star": "star condition",
            "error": "error",
        }

    def _t(self, key: str) -> str:
        return self._labels.get(key, key)

    @property
    def is_json(self) -> bool:
        return self.output_format is OutputFormat.JSON

    def _render(self, document: Any, lines: Sequence[str]) -> str:
        if self.is_json:
            return dump_json(document).rstrip("\n")
        return "\n".join(lines)

    def join(self, rendered: Sequence[str]) -> str:
        """Several reports as one: lines of text, or a JSON array of the documents."""
        if self.is_json and len(rendered) > 1:
            return "[\n" + ",\n".join(rendered) + "\n]"
        return "\n".join(rendered)

    def _yes_no(self, value: bool) -> str:
        return self._t("holds") if value else self._t("fails")

    def format_groups(
        self,
        groups: Sequence[HomologyGroup],
        ring: CoefficientRing,
        letter: str = "H",
        label: Optional[str] = None,
    ) -> str:
        """
        Format a graded group as "H0=Z H1=Z/2 H2=0".

        Args:
            groups: Groups in degree order
            ring: Coefficient ring, named in the JSON document
            letter: "H" for homology, "H^" style prefixes for cohomology
            label: Optional source name printed before the groups

        Returns:
            Formatted report string
        """
        line = " ".join(f"{letter}{k}={g}" for k, g in enumerate(groups))
        if label:
            line = f"{label}: {line}"
        document = {"ring": ring.label, "groups": [g.to_document() for g in groups]}
        if label:
            document["source"] = label
        return self._render(document, [line])

    def format_verdict(self, question: str, holds: bool, detail: str = "", extra: Optional[Dict] = None) -> str:
        lines = [f"{question}: {self._yes_no(holds)}"]
        if detail:
            lines.append(f"  {detail}")
        document = {"question": question, "holds": holds, "detail": detail}
        document.update(extra or {})
        return self._render(document, lines)

    def format_complex_summary(self, K, title: str = "complex") -> str:
        lines = [
            f"{title}: {len(K.vertices)} vertices, {self._t('dimension')} {K.dimension}",
            f"{self._t('f_vector')}: {' '.join(str(n) for n in K.f_vector())}",
        ]
        return self._render(K.to_document(), lines)

    def format_nerve(self, N) -> str:
        """
        Format the nerve of a Coxeter system.

        Args:
            N: Nerve with its maximal spherical subsets

        Returns:
            Formatted report string
        """
        K = N.complex
        maximal = [{"subset": list(s), "order": N.order(s)} for s in N.maximal_subsets()]
        lines = [
            f"nerve: {len(K.vertices)} vertices, {self._t('dimension')} {K.dimension}",
            f"{self._t('f_vector')}: {' '.join(str(n) for n in K.f_vector())}",
            "maximal spherical subsets:",
        ]
        lines.extend(f"  {{{','.join(m['subset'])}}} order {m['order']}" for m in maximal)
        document = {"dimension": K.dimension, "f_vector": K.f_vector(), "maximal": maximal, "facets": K.to_document()["facets"]}
        return self._render(document, lines)

    def format_euler(self, chi: Fraction, index: Optional[int] = None, f_vector: Optional[List[int]] = None) -> str:
        lines = [f"{self._t('euler')}(Γ) = {_fraction_text(chi)}"]
        document: Dict[str, Any] = {"chi": _fraction_text(chi)}
        if f_vector is not None:
            lines.insert(0, f"{self._t('f_vector')}: {' '.join(str(n) for n in f_vector)}")
            document["f_vector"] = list(f_vector)
        if index is not None:
            scaled = chi * index
            lines.append(f"{index}*{self._t('euler')}(Γ) = {_fraction_text(scaled)}")
            document["index"] = index
            document["scaled"] = _fraction_text(scaled)
        return self._render(document, lines)

    def format_coloring(self, coloring) -> str:
        classes = coloring.classes()
        lines = [f"colours: {coloring.color_count}" + ("" if coloring.exact else " (greedy)")]
        lines.extend(f"  {colour}: {' '.join(members)}" for colour, members in classes.items())
        return self._render(coloring.to_document(), lines)

    def format_coloring_report(self, report) -> str:
        lines = [f"{self._t('mode')}: {report.mode}"]
        for pair in report.pairs:
            w1, w2 = pair.colours
            lines.append(
                f"  colours {w1},{w2}: adjacent {self._yes_no(pair.adjacent)}, connected {self._yes_no(pair.connected)}"
            )
        lines.append(f"{self._t('star')}: {self._yes_no(report.star_condition)}")
        violation = report.first_star_violation()
        if violation is not None:
            lines.append(f"  star of {violation[0]} misses colour {', '.join(violation[1])}")
        return self._render(report.to_document(), lines)

    def format_generator_set(self, generator_set) -> str:
        words = [str(w) for w in generator_set.words]
        lines = [
            f"{self._t('mode')}: {generator_set.mode}",
            f"{self._t('generators')} ({len(words)}): {' '.join(words)}",
        ]
        return self._render(generator_set.to_document(), lines)

    def format_presentation(self, pres) -> str:
        lengths = pres.relator_lengths()
        lines = [
            f"{self._t('generators')}: {len(pres.generators)}",
            f"{self._t('relators')}: {len(pres.relators)} (total length {sum(lengths)})",
            pres.describe(),
        ]
        return self._render(pres.to_document(), lines)

    def format_invariants(self, invariants: HomologyGroup, label: Optional[str] = None) -> str:
        line = str(invariants)
        if label:
            line = f"{label}: {line}"
        return self._render(invariants.to_document(), [line])

    def format_davis_quotient(self, quotient, groups: Sequence[HomologyGroup], ring: CoefficientRing) -> str:
        counts = list(quotient.cells_per_dim)
        lines = [
            f"{self._t('index')}: {quotient.index}",
            f"{self._t('cells')}: {' '.join(str(n) for n in counts)}",
            f"{self._t('euler')} = {quotient.euler_characteristic}",
            " ".join(f"H{k}={g}" for k, g in enumerate(groups)),
        ]
        document = {
            "index": quotient.index,
            "cells": counts,
            "euler": quotient.euler_characteristic,
            "ring": ring.label,
            "homology": [g.to_document() for g in groups],
        }
        return self._render(document, lines)

    def format_vcd_report(self, report) -> str:
        lines = [
            f"dim K = {report.dim_k}, vcd <= {report.vcd_upper}",
            f"pseudo-manifold: {self._yes_no(report.pseudo_manifold)}",
        ]
        for label, verdict in report.rings.items():
            cohomology = " ".join(f"{k}:{g}" for k, g in enumerate(verdict.reduced_cohomology))
            lines.append(f"[{label}] {verdict.verdict}: {verdict.statement}")
            lines.append(f"  reduced cohomology of K: {cohomology}")
        return self._render(report.to_document(), lines)

    def format_free_cohomology(self, report) -> str:
        lines = [f"H^i(Γ; {report.ring}Γ), dim K = {report.dim_k}"]
        for entry in report.entries:
            line = f"  H^{entry.degree} = {entry.description}"
            if entry.note:
                line += f"  [{entry.note}]"
            lines.append(line)
        return self._render(report.to_document(), lines)

    def format_word(self, word, normal_form, length: int) -> str:
        lines = [f"{word} -> {normal_form} (length {length})"]
        document = {"word": word.to_document(), "normal_form": normal_form.to_document(), "length": length}
        return self._render(document, lines)

    def format_hom_check(self, check) -> str:
        if check.holds:
            lines = ["every relator maps to the identity"]
        else:
            lines = [f"relator {check.failing_index} ({check.failing_relator}) maps to {check.image_normal_form}"]
        document = {
            "holds": check.holds,
            "failing_index": check.failing_index,
            "failing_relator": check.failing_relator.to_document() if check.failing_relator is not None else None,
            "image": check.image_normal_form.to_document() if check.image_normal_form is not None else None,
        }
        return self._render(document, lines)

    def format_scorecard(self, scorecard) -> str:
        """
        Format the fixture battery scorecard.

        Args:
            scorecard: Scorecard with one result per criterion

        Returns:
            Formatted report string
        """
        lines = []
        for result in scorecard.results:
            lines.append(f"[{result.status.upper():4}] {result.number}. {result.title} ({result.seconds:.2f}s)")
            if result.detail:
                lines.append(f"       {result.detail}")
        lines.append(f"{scorecard.passed} passed, {scorecard.failed} failed, {scorecard.skipped} skipped")
        return self._render(scorecard.to_document(), lines)

    def format_error(self, error: WorkbenchError) -> str:
        return f"{self._t('error')}: {error.message}"
