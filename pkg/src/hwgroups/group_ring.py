"""Finite-support elements of the group ring over F_2 and the
unique-product tally for finite subsets.

Supports are sets of canonical normal forms, so convolution is a double
loop with symmetric-difference accumulation (coefficients live in F_2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .hw_group import (
    ElementSyntaxError,
    GroupElement,
    element_sort_key,
    identity,
    multiply,
    parse_element,
)

__all__ = [
    "RingElement",
    "ring_zero",
    "ring_one",
    "ring_from_elements",
    "ring_mul",
    "ring_add",
    "product_tally",
    "unique_product_witnesses",
    "parse_set_file",
]


@dataclass(frozen=True)
class RingElement:
    """Element of F_2[G_n]: the set of group elements with coefficient 1."""

    n: int
    support: FrozenSet[GroupElement]

    def __post_init__(self) -> None:
        support = frozenset(self.support)
        for g in support:
            if g.n != self.n:
                raise ValueError("support member of wrong rank")
        object.__setattr__(self, "support", support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __add__(self, other: "RingElement") -> "RingElement":
        return ring_add(self, other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return ring_mul(self, other)


def ring_zero(n: int) -> RingElement:
    return RingElement(n, frozenset())


def ring_one(n: int) -> RingElement:
    return RingElement(n, frozenset({identity(n)}))


def ring_from_elements(n: int, elements: Iterable[GroupElement]) -> RingElement:
    """Characteristic-2 sum: elements listed an even number of times cancel."""
    acc: set = set()
    for g in elements:
        acc ^= {g}
    return RingElement(n, frozenset(acc))


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    return RingElement(a.n, a.support ^ b.support)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Convolution over F_2: pairwise products accumulated mod 2."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    acc: set = set()
    for x in a.support:
        for y in b.support:
            acc ^= {multiply(x, y)}
    return RingElement(a.n, frozenset(acc))


def product_tally(
    x_set: Iterable[GroupElement], y_set: Iterable[GroupElement]
) -> Dict[GroupElement, int]:
    """Exact representation counts of products over X x Y."""
    xs = list(x_set)
    ys = list(y_set)
    if not xs or not ys:
        raise ValueError("tally needs nonempty sets")
    counts: Dict[GroupElement, int] = {}
    for x in xs:
        for y in ys:
            g = multiply(x, y)
            counts[g] = counts.get(g, 0) + 1
    return counts


def unique_product_witnesses(
    x_set: Iterable[GroupElement], y_set: Iterable[GroupElement]
) -> List[GroupElement]:
    """Products with exactly one representation, in canonical order.

    An empty result certifies (X, Y) as a nonunique-product pair.
    """
    tally = product_tally(x_set, y_set)
    return sorted(
        (g for g, count in tally.items() if count == 1), key=element_sort_key
    )


def parse_set_file(text: str, n: int) -> List[GroupElement]:
    """Parse a set file: one element per line in the element grammar.

    Blank lines and lines starting with # are ignored; duplicate normal
    forms collapse.  Returns the set in canonical order.
    """
    seen: set = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            seen.add(parse_element(line, n))
        except ElementSyntaxError as exc:
            raise ElementSyntaxError(
                f"line {lineno}: {exc.message}", exc.position) from None
    return sorted(seen, key=element_sort_key)
