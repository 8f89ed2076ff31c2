"""Acceptance criteria, one check each; every check prints a single PASS/FAIL line.

Run under pytest (lines are printed even with output capture on) or directly:
``python tests/test_acceptance.py``.
"""
import random
import sys
import time

import pytest

from kronecker.bricks import construct_brick, verify_bricks, verify_quasilength
from kronecker.components import (
    ComponentSeed, NodeCoord, dimset_equal, length_census, mesh_holds, samelength_pair_search,
    verify_beta,
)
from kronecker.reps import coxeter_minus, coxeter_plus, end_dim, hom_dim
from kronecker.roots import DimVector, coxeter_apply, euler_form, imaginary_roots
from kronecker.sequences import a_seq, b_seq, verify_identities, verify_inequalities
from kronecker.components import verify_orbit_lemmas

D = DimVector


def criterion_1():
    ws = samelength_pair_search(3, 1, 2, 2)
    got = [(w.i, w.seed, {w.dim_m, w.dim_n}, w.length) for w in ws]
    want = [(1, D(8, 7), {D(21, 39), D(43, 17)}, 60), (2, D(41, 79), {D(237, 588), D(596, 229)}, 825)]
    return got == want, f"witnesses {[(i, tuple(s), L) for i, s, _, L in got]}"


def _fib(k):
    x, y = 0, 1
    for _ in range(k):
        x, y = y, x + y
    return x


def criterion_2():
    fib_ok = all(a_seq(3, i) == _fib(2 * i) for i in range(16))
    bad = []
    for n in range(3, 9):
        table = [0, 1, 1, n - 1, n, n * n - n - 1, n * n - 1, n**3 - n**2 - 2 * n + 1, n**3 - 2 * n]
        got = [b_seq(n, i) for i in range(len(table))]
        if got != table:
            bad.append((n, got))
    return fib_ok and not bad, f"fibonacci={'ok' if fib_ok else 'MISMATCH'} b_table_mismatches={bad}"


def criterion_3():
    rep = verify_bricks([3, 4, 5], {3: 40, 4: 30, 5: 30}, method="exact")
    return rep.ok, f"{rep.cases} roots, {len(rep.failures)} failures, cases {rep.info['cases']}"


def criterion_4():
    rep = verify_beta(3, 8, 200)
    witness = length_census(ComponentSeed(3, D(8, 7)), 60)
    exhibited = witness.count == 2 and dict(witness.hits) == {
        NodeCoord(-1, 2): D(21, 39), NodeCoord(1, 1): D(43, 17)}
    ok = rep.ok and rep.info["max_count"] == 2 and exhibited
    return ok, f"{rep.cases} censuses, max count {rep.info['max_count']}, (8,7)@60 count {witness.count}"


def criterion_5():
    rep = verify_quasilength(3, 60)
    return rep.ok, f"{rep.cases} checks, {len(rep.failures)} failures"


def criterion_6():
    ns = range(3, 9)
    reports = [verify_identities(ns, 30), verify_inequalities(ns, 25, tuple_bound=8),
               verify_orbit_lemmas(ns, 80)]
    cases = sum(r.cases for r in reports)
    failures = [r.first_failure for r in reports if not r.ok]
    return not failures, f"{cases} checks, first failures {failures}"


def criterion_7():
    bad = []
    count = 0
    for n in (3, 4, 5):
        for root in imaginary_roots(n, 20):
            b = construct_brick(n, root).rep
            t = coxeter_plus(b)
            back = coxeter_minus(t)
            count += 1
            if t.dim != coxeter_apply(n, root, 1) or back.dim != root or end_dim(back) != 1:
                bad.append((n, root))
    rng = random.Random(20240611)
    pool = [(n, v) for n in (3, 4) for v in imaginary_roots(n, 12)]
    ar_bad = []
    for _ in range(50):
        n, v = rng.choice(pool)
        w = rng.choice([x for x in pool if x[0] == n])[1]
        M, N = construct_brick(n, v).rep, construct_brick(n, w).rep
        lhs = hom_dim(M, N).dimension - euler_form(n, M.dim, N.dim)
        if lhs != hom_dim(N, coxeter_plus(M)).dimension:
            ar_bad.append((n, v, w))
    return not bad and not ar_bad, f"{count} tau round trips, 50 AR pairs, failures {bad + ar_bad}"


def criterion_8():
    s = ComponentSeed(3, D(8, 7))
    same = dimset_equal(s, ComponentSeed(3, D(43, 17)))
    differ = not dimset_equal(s, ComponentSeed(3, D(7, 8)))
    mesh_bad = []
    checked = 0
    for n in (3, 4, 5):
        for v in imaginary_roots(n, 16):
            seed = ComponentSeed(n, v)
            for i in range(-3, 4):
                for r in range(1, 5):
                    checked += 1
                    if not mesh_holds(seed, i, r):
                        mesh_bad.append((n, v, i, r))
    return same and differ and not mesh_bad, \
        f"(8,7)~(43,17)={same} (8,7)!~(7,8)={differ} mesh {checked} nodes, failures {mesh_bad}"


CRITERIA = [
    (1, "worked same-length example", criterion_1, 1.0),
    (2, "sequence ground truth", criterion_2, 1.0),
    (3, "brick suite", criterion_3, 300.0),
    (4, "beta <= 2", criterion_4, 120.0),
    (5, "quasi-length round trip", criterion_5, 60.0),
    (6, "identity/inequality suites", criterion_6, 120.0),
    (7, "reflection-functor contract", criterion_7, 120.0),
    (8, "dimension-set decision", criterion_8, 10.0),
]


def judge(number, title, fn, limit):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    in_time = elapsed < limit
    verdict = "PASS" if ok and in_time else "FAIL"
    line = f"[{verdict}] criterion {number}: {title} -- {detail} ({elapsed:.2f}s, limit {limit:g}s)"
    return ok and in_time, line


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit, capsys):
    passed, line = judge(number, title, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    results = [judge(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
