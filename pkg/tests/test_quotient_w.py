from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hwgroups.quotient_w import (
    TorusAutomorphism,
    commutator_rank,
    euler_wn,
    inv_w,
    kernel_rank_details,
    kernel_rank_h,
    letter_torus_action,
    mul_w,
    psi,
    reduce_w,
    torus_action,
)


def _random_word(rng, n, length=8):
    return [rng.randrange(1, n + 1) for _ in range(rng.randrange(length + 1))]


def test_reduce_w_cancels_adjacent_involutions():
    assert reduce_w([1, 1]) == ()
    assert reduce_w([1, 2, 2, 1]) == ()
    assert reduce_w([1, 2, 1, 2]) == (1, 2, 1, 2)
    assert reduce_w([3, 1, 1, 3, 2]) == (2,)
    assert reduce_w([]) == ()
    with pytest.raises(ValueError):
        reduce_w([0], 2)
    with pytest.raises(ValueError):
        reduce_w([3], 2)


def test_w_group_laws():
    rng = random.Random(41)
    for n in (1, 2, 4):
        for _ in range(200):
            u = reduce_w(_random_word(rng, n), n)
            v = reduce_w(_random_word(rng, n), n)
            w = reduce_w(_random_word(rng, n), n)
            assert mul_w(mul_w(u, v), w) == mul_w(u, mul_w(v, w))
            assert mul_w(u, inv_w(u)) == ()
            assert mul_w(inv_w(u), u) == ()
            # generators are involutions, so inversion reverses the word
            assert inv_w(u) == tuple(reversed(u))


def test_letter_torus_action():
    act = letter_torus_action(3, 2)
    assert act.signs == (1, -1, 1)
    assert act.conj == (1, 0, 1)
    assert act.compose(act).is_identity()
    with pytest.raises(ValueError):
        letter_torus_action(2, 3)


def test_torus_action_is_a_homomorphism():
    rng = random.Random(43)
    for _ in range(100):
        n = rng.randrange(1, 5)
        u = _random_word(rng, n)
        v = _random_word(rng, n)
        assert torus_action(u + v, n) == torus_action(u, n).compose(
            torus_action(v, n))
    assert torus_action([], 3) == TorusAutomorphism.identity(3)


def test_torus_automorphism_validation():
    with pytest.raises(ValueError):
        TorusAutomorphism((1, 2), (0, 0))
    with pytest.raises(ValueError):
        TorusAutomorphism((1,), (0, 0))
    with pytest.raises(ValueError):
        TorusAutomorphism((1, 1), (0, 2))


def test_psi_values():
    assert psi((1,), 2) == ((1, 1), (1, 0))
    assert psi((), 2) == ((0, 0), (0, 0))
    assert psi((1, 2), 3) == ((0, 1), (0, 1), (0, 0))
    # relator words die: same parity data as the empty word
    assert psi((1, 2, 2, 1), 2) == psi((), 2)


def test_psi_respects_reduction():
    rng = random.Random(47)
    for _ in range(100):
        n = rng.randrange(1, 5)
        word = _random_word(rng, n)
        assert psi(word, n) == psi(reduce_w(word, n), n)


def test_euler_characteristic():
    assert euler_wn(2) == 0
    assert euler_wn(3) == Fraction(-1, 2)
    assert euler_wn(4) == -1
    assert euler_wn(5) == Fraction(-3, 2)


def test_commutator_rank_values():
    assert commutator_rank(2) == 1
    assert commutator_rank(3) == 5
    assert commutator_rank(4) == 17
    assert commutator_rank(5) == 49
    for n in range(2, 13):
        assert commutator_rank(n) == 1 - euler_wn(n) * 2**n


def test_kernel_rank_details():
    r3 = kernel_rank_details(3)
    assert (r3.rank, r3.s, r3.index, r3.euler) == (3, 2, 4, Fraction(-2))
    r4 = kernel_rank_details(4)
    assert (r4.rank, r4.s, r4.index, r4.euler) == (17, 4, 16, Fraction(-16))
    r5 = kernel_rank_details(5)
    assert (r5.rank, r5.s, r5.index, r5.euler) == (25, 4, 16, Fraction(-24))
    for n in range(2, 13):
        details = kernel_rank_details(n)
        assert kernel_rank_h(n) == details.rank
        assert details.rank == 1 - details.euler
    with pytest.raises(ValueError):
        kernel_rank_details(1)
