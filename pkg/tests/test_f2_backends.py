from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest

from hwgroups import _f2, _f2pure

try:
    from hwgroups import _f2core
except ImportError:
    _f2core = None

needs_compiled = pytest.mark.skipif(
    _f2core is None, reason="compiled extension not built")


def _random_case(rng):
    n_rows = rng.randrange(0, 40)
    n_cols = rng.randrange(1, 200)
    rows = [rng.getrandbits(n_cols) for _ in range(n_rows)]
    return rows, n_rows, n_cols


@needs_compiled
def test_backends_agree_on_rank():
    rng = random.Random(101)
    for _ in range(150):
        rows, n_rows, n_cols = _random_case(rng)
        assert (_f2pure.f2_rank(rows, n_cols)
                == _f2core.f2_rank(rows, n_cols))


@needs_compiled
def test_backends_agree_on_kernel():
    rng = random.Random(103)
    for _ in range(150):
        rows, n_rows, n_cols = _random_case(rng)
        pure = _f2pure.f2_rank_kernel(rows, n_rows, n_cols)
        fast = _f2core.f2_rank_kernel(rows, n_rows, n_cols)
        assert pure == fast
        rank, kernel = fast
        assert rank + len(kernel) == n_cols
        for vec in kernel:
            for row in rows:
                assert bin(row & vec).count("1") % 2 == 0


@needs_compiled
def test_backends_agree_on_wide_and_tall_edges():
    cases = [
        ([], 0, 1),
        ([0], 1, 1),
        ([1], 1, 1),
        ([(1 << 64) - 1], 1, 64),
        ([(1 << 65) | 1], 1, 66),
        ([1 << k for k in range(130)], 130, 130),
    ]
    for rows, n_rows, n_cols in cases:
        assert (_f2pure.f2_rank_kernel(rows, n_rows, n_cols)
                == _f2core.f2_rank_kernel(rows, n_rows, n_cols))


def _backend_in_subprocess(env_value):
    env = dict(os.environ)
    env["HWGROUPS_F2_BACKEND"] = env_value
    return subprocess.run(
        [sys.executable, "-c", "import hwgroups._f2 as m; print(m.BACKEND)"],
        capture_output=True, text=True, env=env)


def test_env_var_selects_pure():
    proc = _backend_in_subprocess("pure")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "pure"


@needs_compiled
def test_env_var_selects_compiled():
    proc = _backend_in_subprocess("compiled")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "compiled"


def test_env_var_rejects_unknown_value():
    proc = _backend_in_subprocess("vectorized")
    assert proc.returncode != 0
    assert "HWGROUPS_F2_BACKEND" in proc.stderr


def test_active_backend_exposes_contract():
    assert _f2.BACKEND in ("pure", "compiled")
    rank, kernel = _f2.f2_rank_kernel([0b101, 0b110], 2, 3)
    assert rank == 2 and len(kernel) == 1
