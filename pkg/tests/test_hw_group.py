from __future__ import annotations

import random

import pytest

from hwgroups.hw_group import (
    BallBudgetError,
    ElementSyntaxError,
    GroupElement,
    abelianization_invariants,
    abelianization_relation_matrix,
    abelianize,
    append_letter,
    ball,
    center_probe,
    commutator,
    format_element,
    generator,
    identity,
    inverse,
    klein_membership,
    lattice_element,
    multiply,
    parse_element,
    phi,
    power,
    project_w,
    sign_action,
    torsion_probe,
    word_sign_action,
)


def _random_element(rng, n, length=6):
    g = identity(n)
    for _ in range(rng.randrange(length + 1)):
        g = append_letter(g, rng.randrange(1, n + 1), rng.choice((1, -1)))
    return g


def test_identity_and_generator_shapes():
    e = identity(3)
    assert e.w == () and e.t == (0, 0, 0)
    x2 = generator(3, 2)
    assert x2.w == (2,) and x2.t == (0, 0, 0)
    tau = lattice_element((1, -2))
    assert tau.w == () and tau.t == (1, -2)
    with pytest.raises(ValueError):
        generator(2, 3)


def test_sign_action_fixes_own_coordinate():
    assert sign_action(1, (3, 4, 5)) == (3, -4, -5)
    assert sign_action(2, (3, 4, 5)) == (-3, 4, -5)
    assert word_sign_action((1, 2), (3, 4, 5)) == (-3, -4, 5)
    assert word_sign_action((), (3, 4)) == (3, 4)


def test_generator_squares_to_lattice_vector():
    x1 = generator(2, 1)
    assert multiply(x1, x1) == lattice_element((1, 0))
    x2 = generator(2, 2)
    assert multiply(x2, x2) == lattice_element((0, 1))
    # fourth powers are the doubled lattice vectors, not the identity
    assert power(x1, 4) == lattice_element((2, 0))


def test_normal_form_examples():
    g = parse_element("x1 x2 x2 x1", 2)
    assert g.w == () and g.t == (1, -1)
    assert format_element(g) == "w =  | t = (1,-1)"
    h = parse_element("x1 x2^2", 2)
    assert h.w == (1,) and h.t == (0, 1)
    assert format_element(h) == "w = x1 | t = (0,1)"
    assert parse_element("", 3) == identity(3)


def test_relators_vanish():
    for n in range(2, 7):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                xi, xj = generator(n, i), generator(n, j)
                xj2 = multiply(xj, xj)
                relator = multiply(
                    multiply(multiply(inverse(xi), xj2), xi), xj2)
                assert relator == identity(n)


def test_group_laws_on_random_elements():
    rng = random.Random(7)
    for n in (1, 2, 4):
        e = identity(n)
        for _ in range(200):
            a = _random_element(rng, n)
            b = _random_element(rng, n)
            c = _random_element(rng, n)
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
            assert multiply(a, e) == a and multiply(e, a) == a
            assert multiply(a, inverse(a)) == e
            assert multiply(inverse(a), a) == e
            assert inverse(inverse(a)) == a


def test_append_letter_agrees_with_multiply():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randrange(1, 5)
        g = _random_element(rng, n)
        i = rng.randrange(1, n + 1)
        assert append_letter(g, i, 1) == multiply(g, generator(n, i))
        assert append_letter(g, i, -1) == multiply(g, inverse(generator(n, i)))


def test_power_and_commutator():
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randrange(1, 4)
        a = _random_element(rng, n)
        b = _random_element(rng, n)
        assert power(a, 0) == identity(n)
        assert power(a, 3) == multiply(multiply(a, a), a)
        assert power(a, -2) == inverse(multiply(a, a))
        expected = multiply(multiply(inverse(a), inverse(b)), multiply(a, b))
        assert commutator(a, b) == expected


def test_parse_errors_carry_positions():
    with pytest.raises(ElementSyntaxError) as err:
        parse_element("x1 y2", 2)
    assert err.value.position == 3
    assert "(at position 3)" in str(err.value)
    with pytest.raises(ElementSyntaxError):
        parse_element("x3", 2)
    with pytest.raises(ElementSyntaxError):
        parse_element("x1^0", 2)
    with pytest.raises(ElementSyntaxError):
        parse_element("x", 2)


def test_element_validation():
    with pytest.raises(ValueError):
        GroupElement((0,), (0, 0))
    with pytest.raises(ValueError):
        GroupElement((1, 1), (0, 0))
    with pytest.raises(ValueError):
        GroupElement((3,), (0, 0))


def test_project_w_and_phi():
    g = parse_element("x1 x2 x1", 3)
    assert project_w(g) == (1, 2, 1)
    # the two-letter projection sends letter i to (1, 2) and others to 1,
    # then reduces in the rank-2 quotient
    assert phi(1, parse_element("x1", 2)) == (1, 2)
    assert phi(2, parse_element("x1", 2)) == (1,)
    assert phi(1, parse_element("x2 x2", 3)) == ()


def test_abelianize():
    assert abelianize(parse_element("x1", 2)) == (1, 0)
    assert abelianize(parse_element("x1 x1", 2)) == (2, 0)
    assert abelianize(power(generator(2, 1), 4)) == (0, 0)
    assert abelianize(parse_element("x1 x2 x2 x1", 2)) == (2, 2)
    # rank one: the group is infinite cyclic
    assert abelianize(parse_element("x1^5", 1)) == 5
    assert abelianize(parse_element("x1^-2", 1)) == -2
    rng = random.Random(17)
    for _ in range(100):
        a = _random_element(rng, 3)
        b = _random_element(rng, 3)
        ab = abelianize(multiply(a, b))
        assert ab == tuple(
            (x + y) % 4 for x, y in zip(abelianize(a), abelianize(b)))


def test_abelianization_presentation():
    assert abelianization_invariants(1) == ()
    for n in range(2, 7):
        assert abelianization_invariants(n) == (4,) * n
    m = abelianization_relation_matrix(3)
    assert len(m.entries) == 6
    assert sorted(m.entries)[0] == (0, 0, 4)


def test_ball_sizes():
    assert len(ball(2, 0)) == 1
    assert len(ball(2, 1)) == 5
    assert len(ball(1, 3)) == 7
    # frozen from enumeration; growth should never change silently
    assert len(ball(2, 4)) == 83
    assert len(ball(2, 5)) == 147


def test_ball_budget_guard():
    with pytest.raises(BallBudgetError):
        ball(3, 6, budget=50)


def test_probes_find_nothing_small():
    assert torsion_probe(2, 3, 8) == []
    assert center_probe(2, 3) == []


def test_rank_one_center_probe_rejected():
    # rank one is infinite cyclic; the probe only makes sense from rank two
    with pytest.raises(ValueError):
        center_probe(1, 2)


def test_klein_membership():
    assert klein_membership(parse_element("x1 x1", 2), 1)
    assert klein_membership(lattice_element((3, -1)), 2)
    assert not klein_membership(parse_element("x1 x2", 2), 1)
    assert klein_membership(parse_element("x2^3", 2), 2)
