"""Compare the compiled GF(p) kernel with the pure-Python fallback (and exact elimination).

Two workloads:

* ``brick``: Hom systems ``End(tau B)`` of constructed bricks -- very sparse, 0/+-1 entries;
* ``dense``: Hom systems between random representations with entries in [-9, 9].

Usage: ``python benchmarks/bench_rank.py [--repeat 3]``.  Prints one table row
per system; times are best-of-``repeat`` wall seconds.
"""
import argparse
import random
import time

from kronecker import linalg
from kronecker.bricks import construct_brick
from kronecker.linalg import PRIMES, rank_exact, rank_mod_p
from kronecker.reps import Rep, coxeter_plus, hom_system

EXACT_CELL_LIMIT = 40_000  # exact elimination on dense systems grows big integers quickly


def best_of(repeat, fn):
    best, value = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def random_rep(rng, n, a, b):
    mats = [[[rng.randint(-9, 9) for _ in range(b)] for _ in range(a)] for _ in range(n)]
    return Rep.from_lists(n, (a, b), mats)


def workloads(rng):
    for n, root in [(3, (3, 2)), (3, (5, 3)), (4, (5, 4)), (3, (8, 5))]:
        t = coxeter_plus(construct_brick(n, root).rep)
        yield f"brick n={n} tau{root}={tuple(t.dim)}", hom_system(t, t)
    for n, dim in [(3, (6, 6)), (3, (10, 8)), (3, (14, 12)), (4, (16, 16))]:
        m, k = random_rep(rng, n, *dim), random_rep(rng, n, *dim)
        yield f"dense n={n} dim={dim}", hom_system(m, k)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    have_compiled = linalg.BACKEND == "compiled"
    print(f"compiled kernel available: {have_compiled}")
    print(f"{'system':38} {'rows x vars':>14} {'compiled':>9} {'python':>9} {'exact':>9} {'speedup':>8}")
    p = PRIMES[0]
    for name, (rows, nvars) in workloads(rng):
        t_py, r_py = best_of(args.repeat, lambda: rank_mod_p(rows, nvars, p, backend="python"))
        if have_compiled:
            t_c, r_c = best_of(args.repeat, lambda: rank_mod_p(rows, nvars, p, backend="compiled"))
            assert r_c == r_py, (name, r_c, r_py)
            compiled_col, speed = f"{t_c:9.4f}", f"{t_py / t_c:7.1f}x"
        else:
            compiled_col, speed = f"{'-':>9}", f"{'-':>8}"
        dense = sum(len(r) for r in rows) > 0.05 * len(rows) * nvars
        if dense and len(rows) * nvars > EXACT_CELL_LIMIT:
            exact_col = f"{'skipped':>9}"
        else:
            t_e, r_e = best_of(1, lambda: rank_exact(rows, nvars))
            assert r_e >= r_py, (name, r_e, r_py)  # GF(p) rank never exceeds the rational rank
            exact_col = f"{t_e:9.4f}"
        shape = f"{len(rows)}x{nvars}"
        print(f"{name:38} {shape:>14} {compiled_col} {t_py:9.4f} {exact_col} {speed:>8}")


if __name__ == "__main__":
    main()
