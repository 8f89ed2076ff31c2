"""Coordinate sequences A_i, B_i and s_r of the Kronecker quiver K_n.

``A`` satisfies ``A_0 = 0, A_1 = 1, A_{i+2} = n A_{i+1} - A_i`` and lists the
entries of the preprojective dimension vectors.  ``B`` interleaves ``A`` with
consecutive differences: ``B_{2i} = A_i``, ``B_{2i+1} = A_{i+1} - A_i``.

All values are Python integers, so nothing overflows.  Caches are per ``n``,
grow on demand and are guarded by a lock, so they may be shared by threads.

The ``verify_*`` functions run exhaustive exact checks of the identities and
inequalities these sequences satisfy and return a :class:`Report`.
"""
from __future__ import annotations

import itertools
import threading
import time
from typing import Iterable

from .errors import InvalidParameter
from .report import Report

__all__ = [
    "SeqCache",
    "get_cache",
    "a_seq",
    "b_seq",
    "s_r",
    "verify_identities",
    "verify_inequalities",
]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f"n must be an integer >= 3, got {n!r}")


class SeqCache:
    """Memoised A-values for one ``n``; B and s are derived from them."""

    def __init__(self, n: int):
        _check_n(n)
        self.n = n
        self.a_vals: list[int] = [0, 1]
        self._lock = threading.Lock()

    def _grow(self, i: int) -> None:
        with self._lock:
            vals = self.a_vals
            n = self.n
            while len(vals) <= i:
                vals.append(n * vals[-1] - vals[-2])

    def a(self, i: int) -> int:
        if i < 0:
            raise InvalidParameter(f"index must be >= 0, got {i}")
        if i >= len(self.a_vals):
            self._grow(i)
        return self.a_vals[i]

    def b(self, i: int) -> int:
        if i < 0:
            raise InvalidParameter(f"index must be >= 0, got {i}")
        half, odd = divmod(i, 2)
        if odd:
            return self.a(half + 1) - self.a(half)
        return self.a(half)

    @property
    def b_vals(self) -> list[int]:
        """B-values covered by the current A-cache."""
        top = 2 * (len(self.a_vals) - 1)
        return [self.b(i) for i in range(top + 1)]

    def s(self, r: int) -> int:
        if r < 1 or r % 2 == 0:
            raise InvalidParameter(f"s_r needs an odd r >= 1, got {r}")
        total = 0
        sign = 1
        for k in range(r, 0, -2):
            total += sign * self.a(k)
            sign = -sign
        return total


_caches: dict[int, SeqCache] = {}
_caches_lock = threading.Lock()


def get_cache(n: int) -> SeqCache:
    _check_n(n)
    cache = _caches.get(n)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(n, SeqCache(n))
    return cache


def a_seq(n: int, i: int) -> int:
    """Return ``A_i`` for K_n."""
    return get_cache(n).a(i)


def b_seq(n: int, i: int) -> int:
    """Return ``B_i`` for K_n."""
    return get_cache(n).b(i)


def s_r(n: int, r: int) -> int:
    """Return the alternating sum ``A_r - A_{r-2} + ... +- A_1`` (``r`` odd)."""
    return get_cache(n).s(r)


def _n_values(n_range: int | Iterable[int]) -> list[int]:
    if isinstance(n_range, int):
        return [n_range]
    return list(n_range)


def verify_identities(n_range: int | Iterable[int], index_bound: int) -> Report:
    """Check the exact A/B identities for every ``n`` in ``n_range``.

    Covered: the recurrence; ``A_i^2 + A_{i+1}^2 - n A_i A_{i+1} = 1``;
    ``A_{i+1}^2 - A_{i+2} A_i = 1``; ``(A_{i+2}+A_{i+1})^2 -
    (A_{i+1}+A_i)(A_{i+2}+A_{i+3}) = n + 2``;
    ``A_i A_{j+k} - A_j A_{i+k} = A_{i-j} A_k``; ``n s_r = A_{r+1}``;
    ``B_{2s+2t} = B_{2s} B_{2t+1} + B_{2s-1} B_{2t}``;
    ``B_{2i-1} + (n-2) B_{2i} = B_{2i+1}``; strict growth of B.  For ``n >= 4``
    the same B-formula at odd total index 7 (``B_7`` vs ``B_3 B_5 + B_2 B_4``)
    must fail; for ``n = 3`` it holds (Fibonacci addition law).
    """
    report = Report("identities")
    start = time.perf_counter()
    top = index_bound
    for n in _n_values(n_range):
        c = get_cache(n)
        A, B = c.a, c.b
        for i in range(1, top + 1):
            report.check(A(i + 2) == n * A(i + 1) - A(i), identity="recurrence", n=n, i=i)
            v = A(i) ** 2 + A(i + 1) ** 2 - n * A(i) * A(i + 1)
            report.check(v == 1, identity="A_i^2+A_{i+1}^2-nA_iA_{i+1}=1", n=n, i=i, expected=1, actual=v)
            v = A(i + 1) ** 2 - A(i + 2) * A(i)
            report.check(v == 1, identity="A_{i+1}^2-A_{i+2}A_i=1", n=n, i=i, expected=1, actual=v)
            v = (A(i + 2) + A(i + 1)) ** 2 - (A(i + 1) + A(i)) * (A(i + 2) + A(i + 3))
            report.check(v == n + 2, identity="(A_{i+2}+A_{i+1})^2-(A_{i+1}+A_i)(A_{i+2}+A_{i+3})=n+2", n=n, i=i, expected=n + 2, actual=v)
        for i in range(1, top + 1):
            for j in range(0, i + 1):
                for k in range(0, top + 1):
                    lhs = A(i) * A(j + k) - A(j) * A(i + k)
                    rhs = A(i - j) * A(k)
                    report.check(lhs == rhs, identity="A_iA_{j+k}-A_jA_{i+k}=A_{i-j}A_k", n=n, i=i, j=j, k=k,
                                 expected=rhs, actual=lhs)
        for r in range(1, top + 1, 2):
            report.check(n * c.s(r) == A(r + 1), identity="n*s_r=A_{r+1}", n=n, r=r,
                         expected=A(r + 1), actual=n * c.s(r))
        for s in range(1, top // 2 + 1):
            for t in range(1, top // 2 + 1):
                lhs = B(2 * s + 2 * t)
                rhs = B(2 * s) * B(2 * t + 1) + B(2 * s - 1) * B(2 * t)
                report.check(lhs == rhs, identity="B_{2s+2t}", n=n, s=s, t=t,
                             expected=lhs, actual=rhs)
        for i in range(1, top + 1):
            lhs = B(2 * i - 1) + (n - 2) * B(2 * i)
            report.check(lhs == B(2 * i + 1), identity="B_{2i-1}+(n-2)B_{2i}=B_{2i+1}",
                         n=n, i=i, expected=B(2 * i + 1), actual=lhs)
        # B_1 = B_2 = 1, so strict growth starts at index 2
        for i in range(2, 2 * top + 1):
            report.check(B(i) < B(i + 1), identity="B increasing", n=n, i=i,
                          actual=(B(i), B(i + 1)))
        b7, odd_rhs = B(7), B(3) * B(5) + B(2) * B(4)
        if n >= 4:
            report.check(b7 != odd_rhs, identity="B-formula fails at odd index (n>=4)",
                         n=n, expected="unequal", actual=(b7, odd_rhs))
        else:
            report.check(b7 == odd_rhs, identity="B-formula at odd index (n=3)",
                         n=n, expected=b7, actual=odd_rhs)
    report.wall_time = time.perf_counter() - start
    return report


def _frac_gt(p1: int, q1: int, p2: int, q2: int) -> bool:
    """``p1/q1 > p2/q2`` for positive denominators, by cross-multiplication."""
    return p1 * q2 > p2 * q1


def verify_inequalities(
    n_range: int | Iterable[int], index_bound: int, tuple_bound: int | None = None
) -> Report:
    """Exhaustive exact checks of the ratio inequalities of A.

    (i)  ``n = A_2/A_1 > A_{t+1}/A_t > A_{r+1}/A_r > n - 1`` for ``2 <= t < r``
         and ``A_{r+1}^2 > A_r A_{r+2}``;
    (ii) ``A_{j+k}/A_j > A_{s+t}/A_s`` when ``k > t`` or (``k = t`` and
         ``j < s``), hence ``A_i/A_j = A_r/A_s`` with ``i > j``, ``r > s``
         only for ``(i, j) = (r, s)``;
    (iii) no ``i, j, r, s, t`` in ``1..tuple_bound`` with
         ``A_{i+j}/A_s = A_i/A_t + A_j/A_r``.

    ``tuple_bound`` defaults to ``min(index_bound, 8)``; the scan is quintic.
    """
    report = Report("inequalities")
    start = time.perf_counter()
    top = index_bound
    tb = min(top, 8) if tuple_bound is None else tuple_bound
    tuples_equal = 0
    for n in _n_values(n_range):
        A = get_cache(n).a
        for r in range(1, top + 1):
            report.check(A(r + 1) ** 2 > A(r) * A(r + 2), inequality="A_{r+1}^2>A_rA_{r+2}", n=n, r=r)
            report.check(_frac_gt(A(r + 1), A(r), n - 1, 1), inequality="ratio > n-1", n=n, r=r)
            report.check(_frac_gt(n, 1, A(r + 2), A(r + 1)), inequality="ratio < n", n=n, r=r)
        for t in range(2, top + 1):
            for r in range(t + 1, top + 1):
                report.check(_frac_gt(A(t + 1), A(t), A(r + 1), A(r)),
                             inequality="ratio decreasing", n=n, t=t, r=r)
        for j, k, s, t in itertools.product(range(1, top + 1), repeat=4):
            if k > t or (k == t and j < s):
                report.check(_frac_gt(A(j + k), A(j), A(s + t), A(s)),
                             inequality="shifted ratio order", n=n, j=j, k=k, s=s, t=t)
        for i, j, r, s in itertools.product(range(1, top + 1), repeat=4):
            if i <= j or r <= s:
                continue
            equal = A(i) * A(s) == A(r) * A(j)
            report.check(equal == (i == r and j == s), inequality="ratio uniqueness",
                         n=n, i=i, j=j, r=r, s=s)
        for i, j, r, s, t in itertools.product(range(1, tb + 1), repeat=5):
            # A_{i+j}/A_s == A_i/A_t + A_j/A_r  <=>  A_{i+j} A_t A_r == A_s (A_i A_r + A_j A_t)
            equal = A(i + j) * A(t) * A(r) == A(s) * (A(i) * A(r) + A(j) * A(t))
            tuples_equal += equal
            report.check(not equal, inequality="no A_{i+j}/A_s=A_i/A_t+A_j/A_r", n=n, i=i, j=j, r=r, s=s, t=t)
    report.info["equal_sum_tuples"] = tuples_equal
    report.wall_time = time.perf_counter() - start
    return report
