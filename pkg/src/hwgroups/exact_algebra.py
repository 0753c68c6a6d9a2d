"""Exact arithmetic substrate.

Integer polynomials, F_2 matrices with rank/kernel, Smith normal form
over Z, binomials and exact rationals.  Everything here is pure and
allocation-cheap; no floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Mapping, Sequence, Tuple, Union

from ._f2 import BACKEND as F2_BACKEND
from ._f2 import f2_rank as _raw_f2_rank
from ._f2 import f2_rank_kernel as _raw_f2_rank_kernel

__all__ = [
    "Rational",
    "IntPolynomial",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "F2Matrix",
    "f2_rank",
    "f2_rank_kernel",
    "f2_rref",
    "f2_reduce",
    "IntMatrix",
    "smith_normal_form",
    "binomial",
    "rational_rank",
    "solve_rational",
    "F2_BACKEND",
]

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, with out-of-range arguments defined as 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with integer coefficients, coeffs[k] at x^k.

    The coefficient tuple carries no trailing zeros, so equality of
    values is equality of tuples.  The zero polynomial has an empty
    tuple and degree -1 (the sentinel).
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for k, c in enumerate(b):
            summed[k] += c
        return IntPolynomial(tuple(summed))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        prod = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    prod[i + j] += ca * cb
        return IntPolynomial(tuple(prod))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, value):
        """Evaluate by Horner's rule; exact for int and Fraction inputs."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: List[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                xk = "x" if k == 1 else f"x^{k}"
                if c == 1:
                    parts.append(xk)
                elif c == -1:
                    parts.append(f"-{xk}")
                else:
                    parts.append(f"{c}*{xk}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(value: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_eval(p: IntPolynomial, value):
    return p(value)


@dataclass(frozen=True)
class F2Matrix:
    """Matrix over F_2; row i is a bit-vector whose bit j is entry (i, j)."""

    rows: Tuple[int, ...]
    n_cols: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        bound = 1 << self.n_cols
        for row in self.rows:
            if row < 0 or row >= bound:
                raise ValueError("row does not fit in n_cols bits")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]], n_cols: int | None = None) -> "F2Matrix":
        if n_cols is None:
            n_cols = len(entries[0]) if entries else 0
        rows = []
        for entry_row in entries:
            if len(entry_row) != n_cols:
                raise ValueError("ragged entry rows")
            row = 0
            for j, v in enumerate(entry_row):
                if v & 1:
                    row |= 1 << j
            rows.append(row)
        return cls(tuple(rows), n_cols)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(tuple(1 << j for j in range(n)), n)

    @classmethod
    def zero(cls, n_rows: int, n_cols: int) -> "F2Matrix":
        return cls((0,) * n_rows, n_cols)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "F2Matrix":
        cols = [0] * self.n_cols
        for i, row in enumerate(self.rows):
            while row:
                low = row & -row
                cols[low.bit_length() - 1] |= 1 << i
                row ^= low
        return F2Matrix(tuple(cols), self.n_rows)

    def apply(self, vec: int) -> int:
        """Image of a column bit-vector: XOR of columns selected by vec."""
        out = 0
        for i, row in enumerate(self.rows):
            if (row & vec).bit_count() & 1:
                out |= 1 << i
        return out

    def rank(self) -> int:
        return _raw_f2_rank(list(self.rows), self.n_cols)

    def rank_kernel(self) -> Tuple[int, List[int]]:
        return _raw_f2_rank_kernel(list(self.rows), self.n_rows, self.n_cols)


def f2_rank(m: F2Matrix) -> int:
    return m.rank()


def f2_rank_kernel(m: F2Matrix) -> Tuple[int, List[int]]:
    """Rank together with a triangular basis of the right kernel."""
    rank, kernel = m.rank_kernel()
    assert rank + len(kernel) == m.n_cols
    return rank, kernel


def f2_rref(rows: Iterable[int]) -> dict:
    """Fully reduced row echelon form with highest-bit pivoting.

    Returns a map lead-column -> pivot row in which every pivot row has
    zero entries in all other pivot columns, so reduction against it is
    a canonical projection onto the non-pivot coordinates.
    """
    pivots: dict = {}
    for row in rows:
        row = f2_reduce(row, pivots)
        if not row:
            continue
        lead = row.bit_length() - 1
        mask = 1 << lead
        for l2, r2 in list(pivots.items()):
            if r2 & mask:
                pivots[l2] = r2 ^ row
        pivots[lead] = row
    return pivots


def f2_reduce(vec: int, pivots: Mapping[int, int]) -> int:
    """Canonical representative of vec modulo the span of the pivot rows."""
    out = 0
    while vec:
        lead = vec.bit_length() - 1
        piv = pivots.get(lead)
        if piv is None:
            bit = 1 << lead
            out |= bit
            vec ^= bit
        else:
            vec ^= piv
    return out


@dataclass(frozen=True)
class IntMatrix:
    """Rectangular integer matrix, row-major."""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        if rows:
            width = len(rows[0])
            for row in rows:
                if len(row) != width:
                    raise ValueError("matrix rows have unequal lengths")
        object.__setattr__(self, "entries", rows)

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


def smith_normal_form(m: Union[IntMatrix, Sequence[Sequence[int]]]) -> Tuple[int, ...]:
    """Diagonal of the Smith normal form: nonnegative, d_k | d_{k+1}.

    Classical pivot/reduce with smallest-nonzero-pivot selection.  Each
    pass picks the entry of least absolute value in the remaining
    submatrix, clears its row and column, and restarts whenever a
    division leaves a remainder or a non-divisible entry is folded in;
    the pivot's absolute value strictly decreases, so this terminates.
    """
    entries = m.entries if isinstance(m, IntMatrix) else m
    mat = [[int(v) for v in row] for row in entries]
    n_rows = len(mat)
    n_cols = len(mat[0]) if mat else 0
    for row in mat:
        if len(row) != n_cols:
            raise ValueError("matrix rows have unequal lengths")
    size = min(n_rows, n_cols)
    t = 0
    while t < size:
        pos = _min_nonzero(mat, t, n_rows, n_cols)
        if pos is None:
            break
        i, j = pos
        if i != t:
            mat[t], mat[i] = mat[i], mat[t]
        if j != t:
            for row in mat:
                row[t], row[j] = row[j], row[t]
        if mat[t][t] < 0:
            mat[t] = [-v for v in mat[t]]
        p = mat[t][t]
        dirty = False
        for i in range(t + 1, n_rows):
            q = mat[i][t] // p
            if q:
                for j2 in range(t, n_cols):
                    mat[i][j2] -= q * mat[t][j2]
            if mat[i][t]:
                dirty = True
        for j in range(t + 1, n_cols):
            q = mat[t][j] // p
            if q:
                for i2 in range(t, n_rows):
                    mat[i2][j] -= q * mat[i2][t]
            if mat[t][j]:
                dirty = True
        if dirty:
            continue
        bad = _non_divisible_row(mat, t, p, n_rows, n_cols)
        if bad is not None:
            for j2 in range(t, n_cols):
                mat[t][j2] += mat[bad][j2]
            continue
        t += 1
    return tuple(mat[k][k] for k in range(size))


def _min_nonzero(mat: List[List[int]], t: int, n_rows: int, n_cols: int):
    best = None
    for i in range(t, n_rows):
        for j in range(t, n_cols):
            v = mat[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
    if best is None:
        return None
    return best[1], best[2]


def _non_divisible_row(mat: List[List[int]], t: int, p: int, n_rows: int, n_cols: int):
    for i in range(t + 1, n_rows):
        for j in range(t + 1, n_cols):
            if mat[i][j] % p:
                return i
    return None


def rational_rank(rows: Sequence[Sequence[Union[int, Fraction]]]) -> int:
    """Rank of a matrix over Q by exact Gaussian elimination."""
    work = [[Fraction(v) for v in row] for row in rows]
    if not work:
        return 0
    n_cols = len(work[0])
    rank = 0
    col = 0
    while rank < len(work) and col < n_cols:
        pivot_row = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            col += 1
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for i in range(rank + 1, len(work)):
            factor = work[i][col] / pivot
            if factor:
                for j in range(col, n_cols):
                    work[i][j] -= factor * work[rank][j]
        rank += 1
        col += 1
    return rank


def solve_rational(
    rows: Sequence[Sequence[Union[int, Fraction]]],
    rhs: Sequence[Union[int, Fraction]],
) -> List[Fraction] | None:
    """One exact solution of A v = b, or None when inconsistent.

    Underdetermined systems get free variables set to zero, so the
    returned witness is deterministic.
    """
    if len(rows) != len(rhs):
        raise ValueError("rhs length must match the row count")
    work = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    if not work:
        return []
    n_cols = len(rows[0])
    pivot_cols: List[int] = []
    rank = 0
    for col in range(n_cols):
        pivot_row = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        work[rank] = [v / pivot for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[rank])]
        pivot_cols.append(col)
        rank += 1
    for i in range(rank, len(work)):
        if work[i][n_cols]:
            return None
    solution = [Fraction(0)] * n_cols
    for k, col in enumerate(pivot_cols):
        solution[col] = work[k][n_cols]
    return solution
