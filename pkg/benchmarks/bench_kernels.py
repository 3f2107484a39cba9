#!/usr/bin/env python3
"""Benchmark the compiled GF(p) kernels against their pure-Python twins.

Times the three hot loops (exhaustive last-column enumeration, principal
minor subset sums, dense characteristic polynomials) on both backends
and prints the speedup.  Results are cross-checked for equality, so this
doubles as a coarse backend-equivalence test at sizes the unit tests do
not reach.

Run after installing the package:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --repeats 5
"""

import argparse
import random
import time

from diagcomp import _gfp_py, kernels


def best_of(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(name, pure_fn, compiled_fn, repeats):
    t_pure, r_pure = best_of(pure_fn, repeats)
    if compiled_fn is None:
        print(f"{name:<38} pure {t_pure * 1000:9.1f} ms   (no compiled backend)")
        return
    t_cy, r_cy = best_of(compiled_fn, repeats)
    assert r_pure == r_cy, f"backend mismatch in {name}"
    print(
        f"{name:<38} pure {t_pure * 1000:9.1f} ms   "
        f"compiled {t_cy * 1000:8.1f} ms   speedup {t_pure / t_cy:7.1f}x"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3,
                        help="best-of-N timing (default 3)")
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    cy = kernels.compiled
    print(f"active backend: {kernels.backend_name()}")
    if cy is None:
        print("compiled extension not importable; timing the pure backend only\n")
    else:
        print()

    rng = random.Random(args.seed)

    # exhaustive enumeration: 7^6 = 117649 candidate last columns, n = 7
    p, n = 7, 7
    diag = [rng.randrange(p) for _ in range(n)]
    target = _gfp_py.structured_charpoly(p, diag, [rng.randrange(p) for _ in range(n - 1)])
    bench(
        f"enumerate {p}^{n - 1} last columns",
        lambda: _gfp_py.count_matching_last_cols(p, diag, target),
        (lambda: cy.count_matching_last_cols(p, diag, target)) if cy else None,
        args.repeats,
    )

    # principal minor sums: all C(12, 6) = 924 subsets of a 12 x 12 matrix
    p, n, m = 101, 12, 6
    rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
    bench(
        f"sum of C({n},{m}) principal minors",
        lambda: _gfp_py.principal_minor_sum(p, rows, m),
        (lambda: cy.principal_minor_sum(p, rows, m)) if cy else None,
        args.repeats,
    )

    # dense division-free characteristic polynomial, 50 matrices of order 30
    p, n, count = 101, 30, 50
    mats = [[[rng.randrange(p) for _ in range(n)] for _ in range(n)] for _ in range(count)]
    bench(
        f"charpoly of {count} dense {n}x{n} matrices",
        lambda: [_gfp_py.berkowitz_charpoly(p, M) for M in mats],
        (lambda: [cy.berkowitz_charpoly(p, M) for M in mats]) if cy else None,
        args.repeats,
    )

    # structured charpoly: the enumeration inner loop in isolation
    p, n, count = 101, 12, 20000
    diag = [rng.randrange(p) for _ in range(n)]
    cols = [[rng.randrange(p) for _ in range(n - 1)] for _ in range(count)]
    bench(
        f"structured charpoly x{count}, n={n}",
        lambda: [_gfp_py.structured_charpoly(p, diag, b) for b in cols],
        (lambda: [cy.structured_charpoly(p, diag, b) for b in cols]) if cy else None,
        args.repeats,
    )


if __name__ == "__main__":
    main()
