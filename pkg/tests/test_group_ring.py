from __future__ import annotations

import random

import pytest

from hwgroups.group_ring import (
    parse_set_file,
    product_tally,
    ring_add,
    ring_from_elements,
    ring_mul,
    ring_one,
    ring_zero,
    unique_product_witnesses,
)
from hwgroups.hw_group import (
    ElementSyntaxError,
    generator,
    identity,
    inverse,
    multiply,
    parse_element,
)


def _random_element(rng, n, length=5):
    g = identity(n)
    for _ in range(rng.randrange(length + 1)):
        factor = generator(n, rng.randrange(1, n + 1))
        if rng.random() < 0.5:
            factor = inverse(factor)
        g = multiply(g, factor)
    return g


def _random_ring_element(rng, n, max_support=4):
    support = {_random_element(rng, n) for _ in range(rng.randrange(max_support + 1))}
    return ring_from_elements(n, support)


def test_ring_unit_and_zero():
    one = ring_one(2)
    zero = ring_zero(2)
    x1 = ring_from_elements(2, [generator(2, 1)])
    assert ring_mul(one, x1) == x1
    assert ring_mul(x1, one) == x1
    assert ring_add(x1, zero) == x1
    # characteristic two: everything is its own negative
    assert ring_add(x1, x1) == zero


def test_ring_mul_inverse_pair():
    g = parse_element("x1 x2^2", 3)
    a = ring_from_elements(3, [g])
    b = ring_from_elements(3, [inverse(g)])
    assert ring_mul(a, b) == ring_one(3)


def test_frobenius_square_in_characteristic_two():
    g = parse_element("x1 x2", 2)
    e = identity(2)
    s = ring_from_elements(2, [e, g])
    squared = ring_mul(s, s)
    assert squared == ring_from_elements(2, [e, multiply(g, g)])


def test_ring_laws_on_random_elements():
    rng = random.Random(59)
    for _ in range(60):
        a = _random_ring_element(rng, 2)
        b = _random_ring_element(rng, 2)
        c = _random_ring_element(rng, 2)
        assert ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c))
        assert ring_mul(a, ring_add(b, c)) == ring_add(
            ring_mul(a, b), ring_mul(a, c))
        assert ring_add(a, b) == ring_add(b, a)


def test_ring_rank_mismatch():
    with pytest.raises(ValueError):
        ring_mul(ring_one(2), ring_one(3))


def test_product_tally_counts():
    e = identity(2)
    g = parse_element("x1 x2", 2)
    tally = product_tally({e, g}, {e, g})
    g2 = multiply(g, g)
    assert tally == {e: 1, g: 2, g2: 1}
    assert sum(tally.values()) == 4


def test_product_tally_total_is_the_pair_count():
    rng = random.Random(61)
    for _ in range(30):
        x = {_random_element(rng, 2) for _ in range(rng.randrange(1, 5))}
        y = {_random_element(rng, 2) for _ in range(rng.randrange(1, 5))}
        tally = product_tally(x, y)
        assert sum(tally.values()) == len(x) * len(y)


def test_unique_product_witnesses():
    e = identity(2)
    g = parse_element("x1 x2", 2)
    witnesses = unique_product_witnesses({e, g}, {e, g})
    assert set(witnesses) == {e, multiply(g, g)}
    # against a singleton everything is unique
    y = {e, g, multiply(g, g)}
    assert set(unique_product_witnesses({e}, y)) == y
    with pytest.raises(ValueError):
        product_tally(set(), {e})


def test_witness_translation_invariance():
    rng = random.Random(67)
    for _ in range(20):
        x = {_random_element(rng, 2) for _ in range(rng.randrange(1, 4))}
        y = {_random_element(rng, 2) for _ in range(rng.randrange(1, 4))}
        g = _random_element(rng, 2)
        h = _random_element(rng, 2)
        base = unique_product_witnesses(x, y)
        shifted = unique_product_witnesses(
            {multiply(g, u) for u in x}, {multiply(v, h) for v in y})
        assert set(shifted) == {
            multiply(multiply(g, w), h) for w in base}


def test_witnesses_are_sorted_deterministically():
    e = identity(2)
    g = parse_element("x1", 2)
    witnesses = unique_product_witnesses({e}, {e, g, multiply(g, g)})
    assert witnesses == sorted(
        witnesses, key=lambda el: (len(el.w), el.w, el.t))


def test_parse_set_file():
    text = """
    # two elements and a duplicate
    x1 x2

    x1 x2
    x2^-1
    """
    out = parse_set_file(text, 2)
    assert len(out) == 2
    assert parse_element("x2^-1", 2) in out
    assert parse_element("x1 x2", 2) in out


def test_parse_set_file_reports_line_numbers():
    with pytest.raises(ElementSyntaxError) as err:
        parse_set_file("x1\nx9\n", 2)
    assert "line 2" in str(err.value)
