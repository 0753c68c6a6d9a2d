"""Benchmark the GF(2) elimination backends against each other.

Runs rank and rank+kernel computations on dense random matrices and on
the structured differential blocks that dominate real workloads, timing
the pure-Python bitset code against the compiled extension (when built).
Results from the two backends are compared for equality on every input.

Usage:
    python3 benchmarks/bench_f2.py [--seed 7] [--repeats 3] [--n 8]
"""

from __future__ import annotations

import argparse
import random
import time
from typing import Callable, List, Tuple

from hwgroups import _f2pure
from hwgroups.cohomology_f2 import P_MAX, d2_block

try:
    from hwgroups import _f2core
except ImportError:
    _f2core = None

DENSE_SIZES = ((64, 64), (256, 256), (512, 512), (1024, 512), (512, 1024))


def _random_rows(rng: random.Random, n_rows: int, n_cols: int) -> List[int]:
    return [rng.getrandbits(n_cols) for _ in range(n_rows)]


def _time(fn: Callable[[], object], repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _check_agreement(rows: List[int], n_rows: int, n_cols: int) -> None:
    if _f2core is None:
        return
    pure = _f2pure.f2_rank_kernel(rows, n_rows, n_cols)
    fast = _f2core.f2_rank_kernel(rows, n_rows, n_cols)
    if pure != fast:
        raise SystemExit(f"backend mismatch on {n_rows}x{n_cols} input")


def _bench_case(name: str, rows: List[int], n_rows: int, n_cols: int,
                repeats: int) -> None:
    _check_agreement(rows, n_rows, n_cols)
    t_pure = _time(lambda: _f2pure.f2_rank_kernel(rows, n_rows, n_cols), repeats)
    if _f2core is not None:
        t_fast = _time(lambda: _f2core.f2_rank_kernel(rows, n_rows, n_cols),
                       repeats)
        ratio = t_pure / t_fast if t_fast > 0 else float("inf")
        print(f"{name:<28} pure {t_pure * 1e3:9.2f} ms   "
              f"compiled {t_fast * 1e3:9.2f} ms   speedup {ratio:5.1f}x")
    else:
        print(f"{name:<28} pure {t_pure * 1e3:9.2f} ms   compiled (not built)")


def _differential_blocks(n: int) -> List[Tuple[str, List[int], int, int]]:
    cases = []
    for p in range(P_MAX - 1):
        for q in range(n + 1):
            block = d2_block(n, p, q)
            m = block.matrix
            if m.rows and m.n_cols:
                cases.append((f"d2 block n={n} (p,q)=({p},{q})",
                              list(m.rows), len(m.rows), m.n_cols))
    return cases


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--n", type=int, default=8,
                        help="rank for the structured differential blocks")
    args = parser.parse_args()

    backend = "compiled available" if _f2core is not None else "pure only"
    print(f"GF(2) elimination benchmark ({backend})")
    rng = random.Random(args.seed)

    print("\ndense random matrices:")
    for n_rows, n_cols in DENSE_SIZES:
        rows = _random_rows(rng, n_rows, n_cols)
        _bench_case(f"dense {n_rows}x{n_cols}", rows, n_rows, n_cols,
                    args.repeats)

    print(f"\nstructured differential blocks (n={args.n}):")
    for name, rows, n_rows, n_cols in _differential_blocks(args.n):
        if n_rows * n_cols >= 4096:
            _bench_case(name, rows, n_rows, n_cols, args.repeats)


if __name__ == "__main__":
    main()
