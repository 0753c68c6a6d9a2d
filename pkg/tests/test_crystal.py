from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hwgroups.crystal import (
    AffineIsometry,
    fixed_point_probe,
    fixed_points,
    g2_isometry,
    gamma3_generators,
    gamma_n_generator,
    holonomy_order,
    injectivity_probe,
    rn_action,
    rn_isometry,
    verify_hom_g2_gamma3,
)
from hwgroups.hw_group import (
    generator,
    identity,
    inverse,
    lattice_element,
    multiply,
    parse_element,
)


def _frac(v):
    return tuple(Fraction(x) for x in v)


def test_affine_isometry_validation():
    with pytest.raises(ValueError):
        AffineIsometry(((1, 1), (0, 1)), _frac((0, 0)))
    with pytest.raises(ValueError):
        AffineIsometry(((2, 0), (0, 1)), _frac((0, 0)))
    with pytest.raises(ValueError):
        AffineIsometry(((1, 0),), _frac((0, 0)))


def test_affine_isometry_group_laws():
    rng = random.Random(71)

    def random_isometry(n):
        perm = list(range(n))
        rng.shuffle(perm)
        linear = tuple(
            tuple((1 if rng.random() < 0.5 else -1) if j == perm[i] else 0
                  for j in range(n))
            for i in range(n))
        trans = tuple(Fraction(rng.randrange(-4, 5), rng.randrange(1, 5))
                      for _ in range(n))
        return AffineIsometry(linear, trans)

    for n in (2, 3):
        e = AffineIsometry.identity(n)
        for _ in range(80):
            a, b, c = (random_isometry(n) for _ in range(3))
            assert (a @ b) @ c == a @ (b @ c)
            assert a @ e == a and e @ a == a
            assert a @ a.inv() == e and a.inv() @ a == e
            v = _frac([rng.randrange(-3, 4) for _ in range(n)])
            assert (a @ b).apply(v) == a.apply(b.apply(v))


def test_translation_and_apply():
    shift = AffineIsometry.translation_by(_frac((1, -2)))
    assert shift.apply(_frac((0, 0))) == _frac((1, -2))
    assert not shift.is_identity()
    assert AffineIsometry.identity(2).is_identity()
    with pytest.raises(ValueError):
        shift.apply(_frac((0, 0, 0)))


def test_gamma3_relators_and_squares():
    a, b = gamma3_generators()
    report = verify_hom_g2_gamma3()
    assert report.ok
    assert report.relator_xy.is_identity()
    assert report.relator_yx.is_identity()
    assert (a @ a).translation == _frac((1, 0, 0))
    assert (b @ b).translation == _frac((0, 1, 0))
    assert (a @ a).linear == AffineIsometry.identity(3).linear


def test_gamma_n_generator_squares_translate():
    for n in (3, 5):
        for i in range(1, n):
            gen = gamma_n_generator(n, i)
            square = gen @ gen
            assert square.linear == AffineIsometry.identity(n).linear
            assert square.translation == _frac(
                [1 if k == i - 1 else 0 for k in range(n)])
    with pytest.raises(ValueError):
        gamma_n_generator(4, 1)
    with pytest.raises(ValueError):
        gamma_n_generator(3, 3)


def test_holonomy_orders():
    assert holonomy_order(3) == 4
    assert holonomy_order(5) == 16


def test_g2_isometry_is_a_homomorphism():
    rng = random.Random(73)

    def sample():
        g = identity(2)
        for _ in range(rng.randrange(6)):
            factor = generator(2, rng.randrange(1, 3))
            if rng.random() < 0.5:
                factor = inverse(factor)
            g = multiply(g, factor)
        return g

    for _ in range(120):
        x, y = sample(), sample()
        assert g2_isometry(multiply(x, y)) == g2_isometry(x) @ g2_isometry(y)
    with pytest.raises(ValueError):
        g2_isometry(identity(3))


def test_injectivity_probe_clean():
    assert injectivity_probe(4) == []


def test_rn_isometry_letter_action():
    iso = rn_isometry(generator(2, 1))
    assert iso.apply(_frac((0, 0))) == (Fraction(1, 2), Fraction(0))
    assert iso.linear == ((1, 0), (0, -1))
    # lattice elements act by integer translations
    tau = rn_isometry(lattice_element((2, -1)))
    assert tau.linear == AffineIsometry.identity(2).linear
    assert tau.translation == _frac((2, -1))


def test_rn_action_examples():
    x1 = generator(2, 1)
    assert rn_action(x1, _frac((0, 0))) == (Fraction(1, 2), Fraction(0))
    v = _frac((Fraction(1, 3), Fraction(2, 5), Fraction(-1)))
    squared = multiply(generator(3, 2), generator(3, 2))
    assert rn_action(squared, v) == (v[0], v[1] + 1, v[2])
    with pytest.raises(ValueError):
        rn_action(x1, _frac((0, 0, 0)))


def test_rn_relator_acts_trivially():
    rng = random.Random(79)
    relator = parse_element("x1^-1 x2 x2 x1 x2 x2", 3)
    assert relator == identity(3)
    for _ in range(30):
        v = _frac([Fraction(rng.randrange(-6, 7), rng.randrange(1, 4))
                   for _ in range(3)])
        assert rn_action(relator, v) == v


def test_fixed_points_solver():
    # the first generator shifts its own axis, so no fixed point exists
    assert fixed_points(rn_isometry(generator(2, 1))) is None
    # the rank-2 rotation-like product fixes a quarter-shifted center
    g = parse_element("x1 x2", 2)
    iso = rn_isometry(g)
    point = fixed_points(iso)
    assert point is not None
    assert iso.apply(point) == point
    # pure translations never fix a point, the identity fixes the origin
    assert fixed_points(AffineIsometry.translation_by(_frac((1, 0)))) is None
    origin = fixed_points(AffineIsometry.identity(2))
    assert origin == (Fraction(0), Fraction(0))


def test_fixed_point_probe_matrix_model():
    assert fixed_point_probe(2, 3) == []
    with pytest.raises(ValueError):
        fixed_point_probe(3, 2)
    with pytest.raises(ValueError):
        fixed_point_probe(2, 0)
