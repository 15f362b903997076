"""Euler characteristics of Coxeter groups."""

from fractions import Fraction
from typing import Sequence, Union

from coxeter.system import CoxeterSystem

from .spherical import Nerve, nerve


def chiswell_euler(source: Union[CoxeterSystem, Nerve]) -> Fraction:
    """Sum over spherical T, including the empty set, of (-1)^|T| / |<T>|."""
    N = source if isinstance(source, Nerve) else nerve(source)
    return sum(
        (Fraction((-1) ** s.size, s.order) for s in N.spherical_subsets(include_empty=True)),
        Fraction(0),
    )


def euler_from_face_counts(f: Sequence[int]) -> Fraction:
    """Right-angled case: 1 - f0/2 + f1/4 - f2/8 + ..."""
    return Fraction(1) + sum(
        (Fraction((-1) ** (k + 1) * n, 2 ** (k + 1)) for k, n in enumerate(f)),
        Fraction(0),
    )
