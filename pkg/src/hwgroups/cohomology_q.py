"""Rational cohomology of G_n via sign characters of the quotient.

Every wedge monomial g_A spans a one-dimensional module on which the
generator x_j acts by the sign (-1)^(|A| - [j in A]); the Poincare
polynomial is the subset sum of the h^0/h^1 contributions of these
characters.  The closed form of the same sum is expanded with exact
rational intermediates and must come out integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from .exact_algebra import IntPolynomial, rational_rank
from .cohomology_f2 import poincare_f2_closed

__all__ = [
    "Character",
    "trivial_character",
    "wedge_character",
    "h0",
    "h1",
    "h1_oracle",
    "poincare_q_spectral",
    "poincare_q_closed",
    "mod2_compare",
    "DEFAULT_SUBSET_LIMIT",
]

DEFAULT_SUBSET_LIMIT = 16


@dataclass(frozen=True)
class Character:
    """Sign vector in {+1,-1}^n encoding a one-dimensional module."""

    eps: Tuple[int, ...]

    def __post_init__(self) -> None:
        eps = tuple(int(v) for v in self.eps)
        if any(v not in (1, -1) for v in eps):
            raise ValueError("character entries must be +-1")
        object.__setattr__(self, "eps", eps)

    @property
    def n(self) -> int:
        return len(self.eps)

    @property
    def weight(self) -> int:
        """Number of -1 entries, written |eps|."""
        return sum(1 for v in self.eps if v == -1)

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.eps)

    def __mul__(self, other: "Character") -> "Character":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Character(tuple(a * b for a, b in zip(self.eps, other.eps)))

    def __neg__(self) -> "Character":
        return Character(tuple(-v for v in self.eps))


def trivial_character(n: int) -> Character:
    return Character((1,) * n)


def wedge_character(n: int, subset: Iterable[int]) -> Character:
    """Character of the wedge monomial g_A: entry j is
    (-1)^(|A|+1) on A and (-1)^|A| off A."""
    members = set(subset)
    for i in members:
        if not 1 <= i <= n:
            raise ValueError(f"subset member {i} out of range for rank {n}")
    size = len(members)
    base = -1 if size % 2 else 1
    return Character(tuple(-base if j in members else base for j in range(1, n + 1)))


def h0(eps: Character) -> int:
    """Invariants: 1 for the trivial character, else 0."""
    return 1 if eps.is_trivial() else 0


def h1(eps: Character) -> int:
    """First cohomology dimension: |eps| - 1 off the trivial character."""
    if eps.is_trivial():
        return 0
    return eps.weight - 1


def h1_oracle(n: int, eps: Character) -> int:
    """h^1 recomputed from first principles by rational linear algebra.

    A 1-cocycle on the free product of involutions is a tuple (c_i)
    subject to (1 + eps_i) c_i = 0; coboundaries are spanned by the
    single vector (eps_i - 1).  Both dimensions are honest matrix ranks,
    not case formulas.
    """
    if eps.n != n:
        raise ValueError("character rank mismatch")
    constraints = [
        [Fraction(1 + eps.eps[i]) if j == i else Fraction(0) for j in range(n)]
        for i in range(n)
    ]
    cocycle_dim = n - rational_rank(constraints)
    coboundary = [[Fraction(eps.eps[i] - 1)] for i in range(n)]
    coboundary_dim = rational_rank(coboundary)
    return cocycle_dim - coboundary_dim


def poincare_q_spectral(n: int, subset_limit: int = DEFAULT_SUBSET_LIMIT) -> IntPolynomial:
    """Poincare polynomial as the sum over all 2^n wedge characters.

    Column p contributes x^p * x^|A| * h^p of the character of g_A, and
    columns p > 1 vanish, so the sum has 2^(n+1) terms.  Guarded by
    subset_limit since the term count is exponential.
    """
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if n > subset_limit:
        raise ValueError(
            f"rank {n} exceeds the subset-sum guard {subset_limit}; "
            "raise subset_limit explicitly to force this")
    coeffs = [0] * (n + 2)
    for mask in range(1 << n):
        size = mask.bit_count()
        eps = wedge_character(n, _mask_members(mask))
        coeffs[size] += h0(eps)
        h = h1(eps)
        if h:
            coeffs[size + 1] += h
    return IntPolynomial(tuple(coeffs))


def _mask_members(mask: int) -> List[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _qpoly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _qpoly_add(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return out


def _qpoly_power(base: List[Fraction], k: int) -> List[Fraction]:
    out = [Fraction(1)]
    for _ in range(k):
        out = _qpoly_mul(out, base)
    return out


def poincare_q_closed(n: int) -> IntPolynomial:
    """Closed form of the rational Poincare polynomial.

    (1+x) * (1 + c_n x^n + x((n-2)/2 (1+x)^(n-1) - n/2 (1-x)^(n-1)))
    with c_n = 1 for odd n and 0 for even n.  The half-integer
    intermediates must cancel; integrality is asserted, never rounded.
    """
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if n == 0:
        return IntPolynomial((1,))
    one_plus = _qpoly_power([Fraction(1), Fraction(1)], n - 1)
    one_minus = _qpoly_power([Fraction(1), Fraction(-1)], n - 1)
    mix = _qpoly_add(
        [Fraction(n - 2, 2) * c for c in one_plus],
        [Fraction(-n, 2) * c for c in one_minus],
    )
    inner = [Fraction(0)] * (n + 2)
    inner[0] = Fraction(1)
    if n % 2:
        inner[n] += Fraction(1)
    for k, c in enumerate(mix):
        inner[k + 1] += c
    expanded = _qpoly_mul([Fraction(1), Fraction(1)], inner)
    coeffs = []
    for c in expanded:
        if c.denominator != 1:
            raise AssertionError(f"non-integral coefficient {c} in closed form")
        coeffs.append(c.numerator)
    return IntPolynomial(tuple(coeffs))


def mod2_compare(n: int) -> bool:
    """Coefficientwise congruence mod 2 of the two closed forms (even n only)."""
    if n % 2:
        raise ValueError("the mod-2 congruence is claimed for even rank only")
    a = poincare_q_closed(n)
    b = poincare_f2_closed(n)
    width = max(len(a.coeffs), len(b.coeffs))
    return all(
        (a.coefficient(k) - b.coefficient(k)) % 2 == 0 for k in range(width)
    )
