"""Elements of G_n in canonical normal form and the group operations.

An element is written uniquely as lift(w) * tau(t): w a reduced word in
the quotient W_n, lifted letterwise, and tau(t) the lattice element
prod x_i^(2 t_i) on the RIGHT.  Appending a generator twists the
lattice vector by the sign action and either extends the word or cancels
its last letter while emitting a lattice unit, so all group operations
reduce to folds of append_letter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .exact_algebra import IntMatrix, smith_normal_form
from .quotient_w import reduce_w

__all__ = [
    "GroupElement",
    "ElementSyntaxError",
    "BallBudgetError",
    "DEFAULT_BALL_BUDGET",
    "identity",
    "generator",
    "lattice_element",
    "sign_action",
    "word_sign_action",
    "append_letter",
    "multiply",
    "inverse",
    "power",
    "commutator",
    "parse_element",
    "format_element",
    "project_w",
    "phi",
    "abelianize",
    "abelianization_relation_matrix",
    "abelianization_invariants",
    "ball",
    "torsion_probe",
    "center_probe",
    "klein_membership",
    "element_sort_key",
]

DEFAULT_BALL_BUDGET = 10**6


class ElementSyntaxError(ValueError):
    """Raised when element text cannot be parsed; carries the offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class BallBudgetError(RuntimeError):
    """Raised when a ball enumeration would exceed its element budget."""


@dataclass(frozen=True)
class GroupElement:
    """Normal form (w, t): reduced word part and lattice exponent vector."""

    w: Tuple[int, ...]
    t: Tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(int(i) for i in self.w)
        t = tuple(int(v) for v in self.t)
        n = len(t)
        prev = 0
        for letter in w:
            if not 1 <= letter <= n:
                raise ValueError(f"letter {letter} out of range for rank {n}")
            if letter == prev:
                raise ValueError("word part is not reduced")
            prev = letter
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "t", t)

    @property
    def n(self) -> int:
        return len(self.t)

    def is_identity(self) -> bool:
        return not self.w and not any(self.t)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __pow__(self, k: int) -> "GroupElement":
        return power(self, k)

    def __str__(self) -> str:
        return format_element(self)


def identity(n: int) -> GroupElement:
    return GroupElement((), (0,) * n)


def generator(n: int, i: int) -> GroupElement:
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    return GroupElement((i,), (0,) * n)


def lattice_element(t: Sequence[int]) -> GroupElement:
    return GroupElement((), tuple(t))


def sign_action(i: int, t: Sequence[int]) -> Tuple[int, ...]:
    """Conjugation action of generator i on the lattice.

    Coordinate i is fixed and every other coordinate is negated; this is
    exactly what the defining relators force on the squares x_j^2.
    """
    n = len(t)
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    return tuple(v if k == i - 1 else -v for k, v in enumerate(t))


def word_sign_action(w: Sequence[int], t: Sequence[int]) -> Tuple[int, ...]:
    """Composite sign action of a word; coordinate j flips once per letter != j."""
    length = len(w)
    occ = [0] * len(t)
    for letter in w:
        occ[letter - 1] += 1
    return tuple(v if (length - occ[k]) % 2 == 0 else -v for k, v in enumerate(t))


def append_letter(g: GroupElement, i: int, exp: int = 1) -> GroupElement:
    """Canonical form of g * x_i^exp for exp in {+1, -1}.

    Pushing x_i through the lattice factor twists t by sign_action(i).
    If the word then ends in i the two letters merge into the lattice
    unit e_i; otherwise the word grows.  x_i^-1 = x_i * tau(-e_i), so the
    inverse case just subtracts e_i afterwards.
    """
    n = g.n
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    if exp not in (1, -1):
        raise ValueError("exp must be +1 or -1")
    t = list(sign_action(i, g.t))
    w = g.w
    if w and w[-1] == i:
        w = w[:-1]
        t[i - 1] += 1
    else:
        w = w + (i,)
    if exp == -1:
        t[i - 1] -= 1
    return GroupElement(w, tuple(t))


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """Product in G_n: fold b's letters into a, then add b's lattice part."""
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} vs {b.n}")
    out = a
    for letter in b.w:
        out = append_letter(out, letter)
    t = tuple(u + v for u, v in zip(out.t, b.t))
    return GroupElement(out.w, t)


def inverse(a: GroupElement) -> GroupElement:
    """Inverse: fold the reversed word with negative exponents, then
    absorb the conjugated lattice part."""
    out = identity(a.n)
    for letter in reversed(a.w):
        out = append_letter(out, letter, -1)
    twisted = word_sign_action(a.w, a.t)
    t = tuple(u - v for u, v in zip(out.t, twisted))
    return GroupElement(out.w, t)


def power(g: GroupElement, k: int) -> GroupElement:
    if k < 0:
        return power(inverse(g), -k)
    out = identity(g.n)
    for _ in range(k):
        out = multiply(out, g)
    return out


def commutator(a: GroupElement, b: GroupElement) -> GroupElement:
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b))


_ATOM = re.compile(r"x(\d+)(?:\^(-?\d+))?$")


def parse_element(s: str, n: int) -> GroupElement:
    """Parse whitespace-separated atoms x<k> or x<k>^<e> into an element.

    The empty string is the identity.  Malformed atoms, zero exponents
    and out-of-range generator indices raise ElementSyntaxError carrying
    the character offset of the offending atom.
    """
    out = identity(n)
    for match in re.finditer(r"\S+", s):
        atom = match.group(0)
        pos = match.start()
        parsed = _ATOM.match(atom)
        if parsed is None:
            raise ElementSyntaxError(f"bad atom {atom!r}", pos)
        index = int(parsed.group(1))
        exp = int(parsed.group(2)) if parsed.group(2) is not None else 1
        if not 1 <= index <= n:
            raise ElementSyntaxError(
                f"generator index {index} out of range for rank {n}", pos)
        if exp == 0:
            raise ElementSyntaxError("exponent must be nonzero", pos)
        step = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            out = append_letter(out, index, step)
    return out


def format_element(g: GroupElement) -> str:
    """Canonical text form: 'w = x1 x2 | t = (1,-1)'."""
    word = " ".join(f"x{i}" for i in g.w)
    vec = ",".join(str(v) for v in g.t)
    return f"w = {word} | t = ({vec})"


def project_w(a: GroupElement) -> Tuple[int, ...]:
    """Image in the quotient W_n; the kernel is the lattice."""
    return a.w


def phi(i: int, a: GroupElement) -> Tuple[int, ...]:
    """Image of the word part under the i-th two-letter projection.

    Letter i maps to the pair (1, 2) and every other letter to (1,);
    the result is reduced in W_2.  Letter 1 plays xi, letter 2 eta.
    """
    n = a.n
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    image: List[int] = []
    for letter in a.w:
        if letter == i:
            image.extend((1, 2))
        else:
            image.append(1)
    return reduce_w(image, 2)


def abelianize(a: GroupElement):
    """Image in the abelianization.

    For n >= 2 this is the vector ((2 t_j + occ_j(w)) mod 4) in (Z_4)^n;
    for n = 1 the group is Z and the integer exponent is returned.
    """
    n = a.n
    if n < 1:
        raise ValueError("abelianization needs rank at least 1")
    occ = [0] * n
    for letter in a.w:
        occ[letter - 1] += 1
    if n == 1:
        return 2 * a.t[0] + occ[0]
    return tuple((2 * a.t[j] + occ[j]) % 4 for j in range(n))


def abelianization_relation_matrix(n: int) -> IntMatrix:
    """Relation matrix of the abelianized presentation.

    Each defining relator with pair (i, j) maps to 4 e_j after killing
    commutators, so the matrix has one row 4 e_j per ordered pair.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    rows = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                rows.append(tuple(4 if k == j - 1 else 0 for k in range(n)))
    return IntMatrix(tuple(rows)) if rows else IntMatrix(())


def abelianization_invariants(n: int) -> Tuple[int, ...]:
    """Invariant factors of the abelianization, by Smith normal form.

    n = 1 gives the empty tuple (the group is Z, free of rank 1).
    """
    matrix = abelianization_relation_matrix(n)
    if not matrix.entries:
        return ()
    diag = smith_normal_form(matrix)
    return tuple(d for d in diag if d != 0)


def element_sort_key(g: GroupElement):
    return (len(g.w), g.w, g.t)


def ball(n: int, r: int, budget: int = DEFAULT_BALL_BUDGET) -> "set[GroupElement]":
    """All products of at most r generators x_i^{+-1}, deduplicated.

    Breadth-first over append_letter moves; raises BallBudgetError as
    soon as the visited set would exceed the budget.
    """
    if r < 0:
        raise ValueError("radius must be nonnegative")
    seen = {identity(n)}
    frontier = [identity(n)]
    for _ in range(r):
        next_frontier: List[GroupElement] = []
        for g in frontier:
            for i in range(1, n + 1):
                for exp in (1, -1):
                    h = append_letter(g, i, exp)
                    if h not in seen:
                        if len(seen) >= budget:
                            raise BallBudgetError(
                                f"ball exceeds budget of {budget} elements")
                        seen.add(h)
                        next_frontier.append(h)
        frontier = next_frontier
    return seen


def torsion_probe(n: int, r: int, kmax: int,
                  budget: int = DEFAULT_BALL_BUDGET) -> List[Tuple[GroupElement, int]]:
    """Nontrivial ball elements with g^k = identity for some k <= kmax.

    Expected empty: the groups are torsion free.  Powers are accumulated
    incrementally, so the cost is one multiply per (element, k) pair.
    """
    if r < 1 or kmax < 1:
        raise ValueError("radius and exponent bound must be at least 1")
    found: List[Tuple[GroupElement, int]] = []
    e = identity(n)
    for g in sorted(ball(n, r, budget), key=element_sort_key):
        if g == e:
            continue
        acc = g
        for k in range(2, kmax + 1):
            acc = multiply(acc, g)
            if acc == e:
                found.append((g, k))
                break
    return found


def center_probe(n: int, r: int,
                 budget: int = DEFAULT_BALL_BUDGET) -> List[GroupElement]:
    """Nontrivial ball elements commuting with every generator.

    Expected empty: the center is trivial for n >= 2.
    """
    if n < 2:
        raise ValueError("center probe needs n >= 2")
    gens = [generator(n, i) for i in range(1, n + 1)]
    found: List[GroupElement] = []
    e = identity(n)
    for g in sorted(ball(n, r, budget), key=element_sort_key):
        if g == e:
            continue
        if all(multiply(g, x) == multiply(x, g) for x in gens):
            found.append(g)
    return found


def klein_membership(a: GroupElement, i: int) -> bool:
    """True iff a lies in the subgroup generated by x_i and the lattice."""
    n = a.n
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    return all(letter == i for letter in a.w)
