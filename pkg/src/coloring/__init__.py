"""
Coxeter Workbench - Coloring Module
Graph colourings and the subgroup constructions they induce.
"""

from .colorings import (
    Coloring,
    exact_coloring,
    all_colorings,
    greedy_coloring,
    find_coloring,
    chromatic_number,
    coloring_by_dimension,
    coloring_hom,
)
from .conditions import (
    ColoringReport,
    GeneratorSet,
    check_generation_conditions,
    subgroup_generators,
    normal_generation_identity,
    pullback_presentation,
)

__all__ = [
    "Coloring",
    "exact_coloring",
    "all_colorings",
    "greedy_coloring",
    "find_coloring",
    "chromatic_number",
    "coloring_by_dimension",
    "coloring_hom",
    "ColoringReport",
    "GeneratorSet",
    "check_generation_conditions",
    "subgroup_generators",
    "normal_generation_identity",
    "pullback_presentation",
]
