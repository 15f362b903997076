"""
Integer Matrices

Dense integer matrices backed by numpy object arrays, so every entry is an
exact Python int. Smith normal form uses the smallest nonzero pivot.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from common.errors import InputError

logger = logging.getLogger(__name__)

# int64 products are exact while every partial sum stays below this
_INT64_SAFE = 2 ** 62

_to_python_ints = np.frompyfunc(int, 1, 1)


class IntegerMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("_entries",)

    def __init__(self, entries, rows: Optional[int] = None, cols: Optional[int] = None):
        if isinstance(entries, np.ndarray):
            if entries.dtype.kind == "f":
                raise InputError("integer matrix given floating point entries")
            arr = entries.astype(object)
        else:
            arr = np.array(entries, dtype=object)
        if arr.size == 0:
            shape = arr.shape if arr.ndim == 2 else (0, 0)
            arr = np.zeros((shape[0] if rows is None else rows, shape[1] if cols is None else cols), dtype=object)
        elif arr.ndim == 2:
            arr = _to_python_ints(arr)
        if arr.ndim != 2:
            raise InputError(f"integer matrix must be two-dimensional, got shape {arr.shape}")
        if rows is not None and cols is not None and arr.shape != (rows, cols):
            raise InputError(f"expected shape ({rows}, {cols}), got {arr.shape}")
        arr.flags.writeable = False
        self._entries = arr

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(np.zeros((rows, cols), dtype=object), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        arr = np.zeros((n, n), dtype=object)
        for i in range(n):
            arr[i, i] = 1
        return cls(arr, n, n)

    @classmethod
    def diagonal_matrix(cls, diagonal: Sequence[int], rows: int, cols: int) -> "IntegerMatrix":
        arr = np.zeros((rows, cols), dtype=object)
        for i, d in enumerate(diagonal):
            arr[i, i] = int(d)
        return cls(arr, rows, cols)

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._entries.shape

    def __getitem__(self, index):
        return self._entries[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._entries == other._entries))

    def __hash__(self):
        return hash((self.shape, tuple(self._entries.flat)))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return IntegerMatrix.zeros(self.rows, other.cols)
        return IntegerMatrix(self._entries.dot(other._entries), self.rows, other.cols)

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.to_lists()!r})"

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self._entries.T.copy(), self.cols, self.rows)

    @property
    def T(self) -> "IntegerMatrix":
        return self.transpose()

    def to_lists(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self._entries]

    def copy_entries(self) -> np.ndarray:
        arr = self._entries.copy()
        arr.flags.writeable = True
        return arr

    def is_zero(self) -> bool:
        return not bool(np.any(self._entries != 0))

    def is_diagonal(self) -> bool:
        for i, j in np.argwhere(self._entries != 0):
            if i != j:
                return False
        return True

    def diagonal(self) -> List[int]:
        return [int(self._entries[i, i]) for i in range(min(self.shape))]

    def max_abs(self) -> int:
        if self._entries.size == 0:
            return 0
        return max(abs(int(x)) for x in self._entries.flat)

    def sparse_rows(self) -> List[Dict[int, int]]:
        rows: List[Dict[int, int]] = [dict() for _ in range(self.rows)]
        for i, j in np.argwhere(self._entries != 0):
            rows[int(i)][int(j)] = int(self._entries[i, j])
        return rows

    def as_int64(self) -> Optional[np.ndarray]:
        """int64 copy, or None when entries do not fit."""
        if self.max_abs() >= 2 ** 31:
            return None
        return self._entries.astype(np.int64)


def product_is_zero(left: IntegerMatrix, right: IntegerMatrix) -> bool:
    """Check left @ right == 0, in int64 when that is exact."""
    if left.cols != right.rows:
        raise InputError(f"cannot compose {left.shape} with {right.shape}")
    if left.rows == 0 or right.cols == 0 or left.cols == 0:
        return True
    a, b = left.as_int64(), right.as_int64()
    if a is not None and b is not None:
        bound = left.max_abs() * right.max_abs() * left.cols
        if bound < _INT64_SAFE:
            return not bool(np.any(a @ b))
    return (left @ right).is_zero()


@dataclass(frozen=True)
class SmithNormalForm:
    """U @ M @ V == D with U, V unimodular and d1 | d2 | ... on the diagonal."""

    D: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix

    @property
    def invariant_factors(self) -> List[int]:
        return [d for d in self.D.diagonal() if d != 0]


def _swap_rows(arr: Optional[np.ndarray], i: int, j: int) -> None:
    if arr is not None and i != j:
        arr[[i, j]] = arr[[j, i]]


def _swap_cols(arr: Optional[np.ndarray], i: int, j: int) -> None:
    if arr is not None and i != j:
        arr[:, [i, j]] = arr[:, [j, i]]


def _diagonalize(A: np.ndarray, U: Optional[np.ndarray] = None, V: Optional[np.ndarray] = None) -> None:
    """In-place Smith reduction of A; row operations mirrored on U, column operations on V."""
    rows, cols = A.shape
    t = 0
    while t < rows and t < cols:
        sub = A[t:, t:]
        nz = np.argwhere(sub != 0)
        if len(nz) == 0:
            break
        values = [abs(sub[i, j]) for i, j in nz]
        k = min(range(len(values)), key=values.__getitem__)
        pi, pj = t + int(nz[k][0]), t + int(nz[k][1])
        _swap_rows(A, t, pi)
        _swap_rows(U, t, pi)
        _swap_cols(A, t, pj)
        _swap_cols(V, t, pj)

        while True:
            p = A[t, t]
            settled = True
            for i in np.nonzero(A[t + 1:, t])[0] + t + 1:
                q = A[i, t] // p
                A[i, t:] -= q * A[t, t:]
                if U is not None:
                    U[i] -= q * U[t]
                if A[i, t] != 0:
                    settled = False
            for j in np.nonzero(A[t, t + 1:])[0] + t + 1:
                q = A[t, j] // p
                A[t:, j] -= q * A[t:, t]
                if V is not None:
                    V[:, j] -= q * V[:, t]
                if A[t, j] != 0:
                    settled = False

            if not settled:
                # a remainder smaller than the pivot is left in row or column t
                best = None
                for i in np.nonzero(A[t + 1:, t])[0] + t + 1:
                    if best is None or abs(A[i, t]) < best[0]:
                        best = (abs(A[i, t]), "row", int(i))
                for j in np.nonzero(A[t, t + 1:])[0] + t + 1:
                    if best is None or abs(A[t, j]) < best[0]:
                        best = (abs(A[t, j]), "col", int(j))
                if best[1] == "row":
                    _swap_rows(A, t, best[2])
                    _swap_rows(U, t, best[2])
                else:
                    _swap_cols(A, t, best[2])
                    _swap_cols(V, t, best[2])
                continue

            rest = A[t + 1:, t + 1:]
            if rest.size:
                bad = np.argwhere(rest % p != 0)
                if len(bad):
                    i = t + 1 + int(bad[0][0])
                    A[t] += A[i]
                    if U is not None:
                        U[t] += U[i]
                    continue
            break

        if A[t, t] < 0:
            A[t] = -A[t]
            if U is not None:
                U[t] = -U[t]
        t += 1


def smith_normal_form(M: IntegerMatrix) -> SmithNormalForm:
    """Smith normal form with unimodular transforms: U @ M @ V == D."""
    A = M.copy_entries()
    U = IntegerMatrix.identity(M.rows).copy_entries()
    V = IntegerMatrix.identity(M.cols).copy_entries()
    _diagonalize(A, U, V)
    return SmithNormalForm(
        D=IntegerMatrix(A, M.rows, M.cols),
        U=IntegerMatrix(U, M.rows, M.rows),
        V=IntegerMatrix(V, M.cols, M.cols),
    )


def _eliminate_unit_pivots(rows: List[Dict[int, int]]) -> Tuple[int, List[Dict[int, int]]]:
    """
    Split off every block reachable through a ±1 pivot.

    Rows are sparse dicts and are modified in place. Returns the number of
    unit pivots and the residual rows.
    """
    columns: Dict[int, set] = defaultdict(set)
    for r, row in enumerate(rows):
        for c in row:
            columns[c].add(r)
    active = {r for r, row in enumerate(rows) if row}
    units = 0

    progress = True
    while progress:
        progress = False
        for r in sorted(active, key=lambda r: (len(rows[r]), r)):
            if r not in active:
                continue
            row = rows[r]
            unit_cols = [c for c, v in row.items() if v == 1 or v == -1]
            if not unit_cols:
                continue
            c = min(unit_cols, key=lambda c: (len(columns[c]), c))
            pivot = row[c]
            for r2 in list(columns[c]):
                if r2 == r:
                    continue
                row2 = rows[r2]
                factor = row2[c] * pivot
                for c2, v in row.items():
                    new = row2.get(c2, 0) - factor * v
                    if new:
                        if c2 not in row2:
                            columns[c2].add(r2)
                        row2[c2] = new
                    elif c2 in row2:
                        del row2[c2]
                        columns[c2].discard(r2)
                if not row2:
                    active.discard(r2)
            for c2 in row:
                columns[c2].discard(r)
            rows[r] = {}
            active.discard(r)
            units += 1
            progress = True

    return units, [rows[r] for r in sorted(active)]


def invariant_factors(M: IntegerMatrix) -> List[int]:
    """
    Nonzero Smith invariant factors d1 | d2 | ... of M.

    Unit pivots are removed on a sparse copy first; only the residual core
    goes through the dense reduction.
    """
    if M.rows == 0 or M.cols == 0:
        return []
    units, residual = _eliminate_unit_pivots(M.sparse_rows())
    factors = [1] * units
    if residual:
        used = sorted({c for row in residual for c in row})
        position = {c: k for k, c in enumerate(used)}
        core = np.zeros((len(residual), len(used)), dtype=object)
        for i, row in enumerate(residual):
            for c, v in row.items():
                core[i, position[c]] = v
        logger.debug(f"dense core {core.shape} after {units} unit pivots on {M.shape}")
        _diagonalize(core)
        factors.extend(int(core[i, i]) for i in range(min(core.shape)) if core[i, i] != 0)
    return factors


def integer_rank(M: IntegerMatrix) -> int:
    return len(invariant_factors(M))


def modular_rank(M: IntegerMatrix, p: int) -> int:
    """Rank over F_p of M reduced modulo p."""
    if p < 2 or p >= 2 ** 31:
        raise InputError(f"modulus {p} out of range")
    if M.rows == 0 or M.cols == 0:
        return 0
    A = np.array([[int(x) % p for x in row] for row in M.entries], dtype=np.int64)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(A[r:, c])[0]
        if candidates.size == 0:
            continue
        i = r + int(candidates[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        r += 1
    return r


def matrix_from_rows(rows: Iterable[Sequence[int]], cols: int) -> IntegerMatrix:
    data = [list(r) for r in rows]
    return IntegerMatrix(data if data else np.zeros((0, cols), dtype=object), len(data), cols)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free elimination; every intermediate value is an exact minor."""
    A = [list(map(int, r)) for r in rows]
    n = len(A)
    if n == 0:
        return 1
    sign, previous = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // previous
        previous = A[k][k]
    return sign * A[n - 1][n - 1]


def minor_gcd_invariants(M: IntegerMatrix) -> List[int]:
    """
    Invariant factors as quotients of determinantal divisors d_k, the gcd
    of all k x k minors. Exponential in the matrix size; an oracle for
    small matrices only.
    """
    entries = M.to_lists()
    factors: List[int] = []
    previous = 1
    for k in range(1, min(M.rows, M.cols) + 1):
        d = 0
        for rs in combinations(range(M.rows), k):
            for cs in combinations(range(M.cols), k):
                d = gcd(d, bareiss_determinant([[entries[r][c] for c in cs] for r in rs]))
        if d == 0:
            break
        factors.append(d // previous)
        previous = d
    return factors
