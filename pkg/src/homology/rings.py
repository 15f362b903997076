"""
Coefficient Rings

The integers, the rationals and prime fields.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from sympy import isprime

from common.errors import InputError


class RingKind(Enum):
    INTEGERS = "Z"
    RATIONALS = "Q"
    PRIME_FIELD = "Fp"


@dataclass(frozen=True)
class CoefficientRing:
    kind: RingKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind is RingKind.PRIME_FIELD:
            if self.p is None or not isprime(self.p):
                raise InputError(f"F_p needs a prime p, got {self.p}")
        elif self.p is not None:
            raise InputError(f"{self.kind.value} takes no characteristic")

    @property
    def is_field(self) -> bool:
        return self.kind is not RingKind.INTEGERS

    @property
    def characteristic(self) -> int:
        return self.p if self.kind is RingKind.PRIME_FIELD else 0

    @property
    def label(self) -> str:
        if self.kind is RingKind.PRIME_FIELD:
            return f"F{self.p}"
        return self.kind.value

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, text: str) -> "CoefficientRing":
        """Accepts Z, Q, Fp:<p> and the short form F<p>."""
        value = text.strip()
        if value.upper() == "Z":
            return ZZ
        if value.upper() == "Q":
            return QQ
        digits = None
        if value.lower().startswith("fp:"):
            digits = value[3:]
        elif value[:1] in ("F", "f"):
            digits = value[1:]
        if digits is None or not digits.isdigit():
            raise InputError(f"unknown coefficient ring {text!r}; use Z, Q or Fp:<p>")
        return Fp(int(digits))


ZZ = CoefficientRing(RingKind.INTEGERS)
QQ = CoefficientRing(RingKind.RATIONALS)


def Fp(p: int) -> CoefficientRing:
    return CoefficientRing(RingKind.PRIME_FIELD, p)
