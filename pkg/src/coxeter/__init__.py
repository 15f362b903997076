"""
Coxeter Workbench - Coxeter Module
Coxeter systems as labeled graphs, finite special subgroups and the
right-angled word problem.
"""

from .system import INFINITY, CoxeterSystem, label_text
from .catalog import (
    FiniteType,
    finite_type,
    is_spherical,
    special_subgroup_order,
    coset_enumeration_order,
    format_order,
)
from .io import parse_coxeter_graph, dump_coxeter_graph, system_from_document, system_to_document
from .presentation import coxeter_presentation
from .word_problem import (
    HomCheck,
    racg_normal_form,
    racg_equal,
    random_rewrite,
    verify_presentation_hom,
)

__all__ = [
    "INFINITY",
    "CoxeterSystem",
    "label_text",
    "FiniteType",
    "finite_type",
    "is_spherical",
    "special_subgroup_order",
    "coset_enumeration_order",
    "format_order",
    "parse_coxeter_graph",
    "dump_coxeter_graph",
    "system_from_document",
    "system_to_document",
    "coxeter_presentation",
    "HomCheck",
    "racg_normal_form",
    "racg_equal",
    "random_rewrite",
    "verify_presentation_hom",
]
