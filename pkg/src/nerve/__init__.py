"""
Coxeter Workbench - Nerve Module
Nerves of Coxeter systems, Euler characteristics, Davis quotients and
cohomological dimension reports.
"""

from .spherical import Nerve, SphericalSubset, nerve
from .euler import chiswell_euler, euler_from_face_counts
from .davis import DavisQuotientCells, KernelCheck, davis_quotient, torsion_free_kernel_check
from .reports import FreeCohomologyReport, VcdReport, free_cohomology_report, vcd_report

__all__ = [
    "Nerve",
    "SphericalSubset",
    "nerve",
    "chiswell_euler",
    "euler_from_face_counts",
    "DavisQuotientCells",
    "KernelCheck",
    "davis_quotient",
    "torsion_free_kernel_check",
    "FreeCohomologyReport",
    "VcdReport",
    "free_cohomology_report",
    "vcd_report",
]
