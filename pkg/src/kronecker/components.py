"""Regular components of K_n at the level of dimension vectors.

A component is given by the dimension vector ``X`` of one quasi-simple
(:class:`ComponentSeed`).  Node ``(i, r)`` is the module of quasi-length ``r``
whose quasi-top is ``tau^i X``; its dimension is
``sum_{l=0}^{r-1} dim tau^{i+l} X``.  The module ``X_r`` of the alternating
mono/epi chain starting at ``X`` is node ``(-(r // 2), r)``.

Every scan relies on convexity: ``i -> |node(i, r)|`` is a positive
combination of ``lambda^i`` and ``lambda^-i`` (``lambda > 1`` the Coxeter
eigenvalue), so once it exceeds a target while increasing away from the
minimum it stays above.  Scans carry a hard step cap and fail loudly.
"""
from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .errors import InvalidParameter, TheoremViolation
from .report import Report
from .roots import DimVector, as_dim, compare_holds, coxeter_apply, imaginary_roots, is_imaginary, require_imaginary, sum_shift_holds
from .sequences import get_cache

SCAN_CAP = 100_000


@dataclass(frozen=True)
class ComponentSeed:
    n: int
    qs_dim: DimVector

    def __post_init__(self):
        object.__setattr__(self, "qs_dim", require_imaginary(self.n, self.qs_dim))

    def orbit(self, i: int) -> DimVector:
        return coxeter_apply(self.n, self.qs_dim, i)


@dataclass(frozen=True, order=True)
class NodeCoord:
    i: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise InvalidParameter(f"quasi-length must be >= 1, got {self.r}")

    def __str__(self) -> str:
        return f"({self.i},{self.r})"

    def to_json(self) -> list[int]:
        return [self.i, self.r]


@dataclass
class CensusResult:
    length: int
    hits: list[tuple[NodeCoord, DimVector]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.hits)

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "count": self.count,
            "hits": [{"node": c.to_json(), "dim": d.to_json()} for c, d in self.hits],
        }


def node_dim(seed: ComponentSeed, coord: NodeCoord | tuple[int, int]) -> DimVector:
    i, r = (coord.i, coord.r) if isinstance(coord, NodeCoord) else coord
    if r < 1:
        raise InvalidParameter(f"quasi-length must be >= 1, got {r}")
    total = seed.orbit(i)
    step = total
    for _ in range(1, r):
        step = coxeter_apply(seed.n, step, 1)
        total = total + step
    return total


def chain_coord(r: int, shift: int = 0) -> NodeCoord:
    """Node of ``(tau^shift X)_r``, the r-th module of the mono/epi chain."""
    return NodeCoord(shift - r // 2, r)


def min_orbit_length(n: int, v) -> tuple[int, DimVector]:
    """Shift ``i*`` and vector of minimal length on the Coxeter orbit of ``v``.

    Ties (at most two adjacent shifts) go to the lexicographically smaller vector.
    """
    v = require_imaginary(n, v)
    i, cur = 0, v
    for _ in range(SCAN_CAP):
        nxt = coxeter_apply(n, cur, 1)
        if nxt.length >= cur.length:
            break
        i, cur = i + 1, nxt
    else:
        raise TheoremViolation(f"orbit of {v} kept shrinking for {SCAN_CAP} steps")
    for _ in range(SCAN_CAP):
        prv = coxeter_apply(n, cur, -1)
        if prv.length >= cur.length:
            break
        i, cur = i - 1, prv
    else:
        raise TheoremViolation(f"orbit of {v} kept shrinking for {SCAN_CAP} steps")
    best = (cur, i)
    for j, w in ((i - 1, coxeter_apply(n, cur, -1)), (i + 1, coxeter_apply(n, cur, 1))):
        if w.length == cur.length and w < best[0]:
            best = (w, j)
    return best[1], best[0]


def _scan(length_at, start: int, target: int):
    """Yield every ``i`` with ``length_at(i) == target``, walking out from ``start``."""
    prev = None
    i = start
    for _ in range(SCAN_CAP):
        cur = length_at(i)
        if cur == target:
            yield i
        if prev is not None and cur > target and cur > prev:
            break
        prev, i = cur, i + 1
    else:
        raise TheoremViolation(f"rightward scan from {start} did not pass length {target}")
    prev = length_at(start)
    i = start - 1
    for _ in range(SCAN_CAP):
        cur = length_at(i)
        if cur == target:
            yield i
        if cur > target and cur > prev:
            break
        prev, i = cur, i - 1
    else:
        raise TheoremViolation(f"leftward scan from {start} did not pass length {target}")


def length_census(seed: ComponentSeed, d: int) -> CensusResult:
    """All nodes of length ``d``; more than two is a :class:`TheoremViolation`."""
    if d < 1:
        raise InvalidParameter(f"length must be >= 1, got {d}")
    i0, smallest = min_orbit_length(seed.n, seed.qs_dim)
    m0 = smallest.length
    hits = []
    for r in range(1, d // m0 + 1):
        def length_at(i, r=r):
            return node_dim(seed, NodeCoord(i, r)).length
        for i in _scan(length_at, i0 - r // 2, d):
            coord = NodeCoord(i, r)
            hits.append((coord, node_dim(seed, coord)))
    hits.sort(key=lambda h: (h[0].r, h[0].i))
    result = CensusResult(d, hits)
    if result.count > 2:
        raise TheoremViolation(
            f"{result.count} nodes of length {d} in the component of {seed.qs_dim}: {hits}")
    return result


def length_profile(seed: ComponentSeed, max_length: int) -> dict[int, list[tuple[NodeCoord, DimVector]]]:
    """Every node of length ``<= max_length``, bucketed by length (no bound enforced)."""
    i0, smallest = min_orbit_length(seed.n, seed.qs_dim)
    buckets: dict[int, list] = defaultdict(list)
    for r in range(1, max_length // smallest.length + 1):
        start = i0 - r // 2
        for direction in (1, -1):
            i = start if direction == 1 else start - 1
            prev = None
            for _ in range(SCAN_CAP):
                dim = node_dim(seed, NodeCoord(i, r))
                if dim.length <= max_length:
                    buckets[dim.length].append((NodeCoord(i, r), dim))
                elif prev is not None and dim.length > prev:
                    break
                prev = dim.length
                i += direction
            else:
                raise TheoremViolation(f"profile scan for r={r} did not terminate")
    for hits in buckets.values():
        hits.sort(key=lambda h: (h[0].r, h[0].i))
    return dict(buckets)


@dataclass(frozen=True)
class PairWitness:
    i: int
    seed: DimVector
    raw: DimVector
    node_m: NodeCoord
    dim_m: DimVector
    node_n: NodeCoord
    dim_n: DimVector
    length: int

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "seed": self.seed.to_json(),
            "raw": self.raw.to_json(),
            "node_m": self.node_m.to_json(),
            "dim_m": self.dim_m.to_json(),
            "node_n": self.node_n.to_json(),
            "dim_n": self.dim_n.to_json(),
            "length": self.length,
        }


def _length_functional(n: int, coord: NodeCoord) -> tuple[int, int]:
    """Coefficients ``(u, w)`` with ``|node(coord)| = u c + w d`` for the seed ``(c, d)``."""
    u = w = 0
    for l in range(coord.r):
        u += coxeter_apply(n, (1, 0), coord.i + l).length
        w += coxeter_apply(n, (0, 1), coord.i + l).length
    return u, w


def _strip_a_divisors(n: int, v: DimVector) -> DimVector:
    A = get_cache(n).a
    changed = True
    while changed:
        changed = False
        g = gcd(v.a, v.b)
        t = 2
        while A(t) <= g:
            if g % A(t) == 0:
                v = DimVector(v.a // A(t), v.b // A(t))
                changed = True
                break
            t += 1
    return v


def samelength_pair_search(n: int, r: int, s: int, max_i: int,
                           *, primitive: bool = True) -> list[PairWitness]:
    """Seeds ``X`` with ``|(tau^i X)_r| = |X_s|`` for ``1 <= i <= max_i``.

    For each ``i`` the equal-length condition is one linear equation in
    ``dim X = (c, d)``; its positive solution is reduced to lowest terms
    (``primitive=True``), or only stripped of common factors ``A_t``, ``t >= 2``
    (``primitive=False``).  Each witness is re-verified from scratch.
    """
    if r < 1 or s < 1:
        raise InvalidParameter("quasi-lengths must be >= 1")
    node_n = chain_coord(s)
    un, wn = _length_functional(n, node_n)
    out = []
    for i in range(1, max_i + 1):
        node_m = chain_coord(r, i)
        um, wm = _length_functional(n, node_m)
        e0, e1 = um - un, wm - wn
        c, d = -e1, e0
        if c < 0 and d < 0:
            c, d = -c, -d
        if c <= 0 or d <= 0:
            continue
        raw = DimVector(c, d)
        if primitive:
            g = gcd(c, d)
            cand = DimVector(c // g, d // g)
        else:
            cand = _strip_a_divisors(n, raw)
        if not is_imaginary(n, cand):
            continue
        seed = ComponentSeed(n, cand)
        dim_m, dim_n = node_dim(seed, node_m), node_dim(seed, node_n)
        if dim_m.length != dim_n.length or not (dim_m.is_nonnegative() and dim_n.is_nonnegative()):
            continue
        out.append(PairWitness(i, cand, raw, node_m, dim_m, node_n, dim_n, dim_m.length))
    return out


def _symmetric_shape(n: int, v: DimVector) -> str | None:
    if v.a == v.b:
        return "(m,m)"
    if v.b == (n - 1) * v.a:
        return "(m,(n-1)m)"
    if v.a == (n - 1) * v.b:
        return "((n-1)m,m)"
    return None


def find_symmetric_quasisimple(seed: ComponentSeed, window: int) -> tuple[int, DimVector, str] | None:
    """First shift ``i`` (by ``|i|``, then ``i``) with ``tau^i X`` of a symmetric shape.

    Shapes: ``(m, m)``, ``(m, (n-1) m)`` and its neighbour ``((n-1) m, m)``.
    """
    for i in sorted(range(-window, window + 1), key=lambda k: (abs(k), k)):
        v = seed.orbit(i)
        shape = _symmetric_shape(seed.n, v)
        if shape:
            return i, v, shape
    return None


def same_orbit_samelength(seed: ComponentSeed, window: int, r_max: int = 4
                          ) -> list[tuple[NodeCoord, NodeCoord, int]]:
    """Pairs of distinct nodes with equal quasi-length and equal length, ``|i| <= window``."""
    out = []
    for r in range(1, r_max + 1):
        by_len: dict[int, list[int]] = defaultdict(list)
        for i in range(-window, window + 1):
            by_len[node_dim(seed, NodeCoord(i, r)).length].append(i)
        for length, shifts in sorted(by_len.items()):
            for x in range(len(shifts)):
                for y in range(x + 1, len(shifts)):
                    out.append((NodeCoord(shifts[x], r), NodeCoord(shifts[y], r), length))
    out.sort(key=lambda p: (p[0].r, p[0].i, p[1].i))
    return out


def symmetric_layer_dim(n: int, r: int, b: int, kind: str = "equal") -> tuple[DimVector, int]:
    """Quasi-top of an ``[r+1]``-node with dim ``(m, m)`` (``kind="equal"``) or
    ``(m (n-1), m)`` (``kind="skew"``), together with ``m = b A_{r+1}``."""
    if r < 1 or b < 1:
        raise InvalidParameter("r and b must be >= 1")
    c = get_cache(n)
    if kind == "equal":
        top = DimVector(c.b(2 * r - 1), c.b(2 * r + 1))
    elif kind == "skew":
        top = DimVector(1, 1) if r == 1 else DimVector(c.b(2 * r - 3), c.b(2 * r - 1))
    else:
        raise InvalidParameter(f"kind must be 'equal' or 'skew', got {kind!r}")
    return top * b, b * c.a(r + 1)


def dimset_equal(seed_c: ComponentSeed, seed_d: ComponentSeed) -> bool:
    """Whether the quasi-simple of ``seed_d`` lies on the Coxeter orbit of ``seed_c``.

    Components with quasi-simples on one orbit share their dimension sets.
    """
    if seed_c.n != seed_d.n:
        raise InvalidParameter("seeds belong to different quivers")
    n, target = seed_c.n, seed_d.qs_dim
    i0, _ = min_orbit_length(n, seed_c.qs_dim)
    bound = target.length
    for direction in (1, -1):
        i = i0 if direction == 1 else i0 - 1
        prev = None
        for _ in range(SCAN_CAP):
            v = seed_c.orbit(i)
            if v == target:
                return True
            if v.length > bound and prev is not None and v.length > prev:
                break
            prev = v.length
            i += direction
        else:
            raise TheoremViolation("dimset scan did not terminate")
    return False


def mesh_holds(seed: ComponentSeed, i: int, r: int) -> bool:
    """``node(i,r) + node(i+1,r) == node(i,r+1) + node(i+1,r-1)`` with ``node(., 0) = 0``."""
    left = node_dim(seed, NodeCoord(i, r)) + node_dim(seed, NodeCoord(i + 1, r))
    right = node_dim(seed, NodeCoord(i, r + 1))
    if r > 1:
        right = right + node_dim(seed, NodeCoord(i + 1, r - 1))
    return left == right


# -- verification suites -----------------------------------------------------

def verify_beta(n: int, seed_bound: int, length_bound: int) -> Report:
    """Census of every length ``<= length_bound`` for imaginary seeds with entries ``<= seed_bound``."""
    report = Report("beta")
    start = time.perf_counter()
    max_count = 0
    witness = None
    for a in range(1, seed_bound + 1):
        for b in range(1, seed_bound + 1):
            if not is_imaginary(n, (a, b)):
                continue
            seed = ComponentSeed(n, DimVector(a, b))
            for d in range(1, length_bound + 1):
                try:
                    res = length_census(seed, d)
                except TheoremViolation as exc:
                    report.check(False, seed=seed.qs_dim, length=d, error=str(exc))
                    continue
                report.check(res.count <= 2, seed=seed.qs_dim, length=d, actual=res.count)
                if res.count > max_count:
                    max_count, witness = res.count, (seed.qs_dim, d)
    report.info["max_count"] = max_count
    report.info["max_count_witness"] = witness
    report.wall_time = time.perf_counter() - start
    return report


def verify_pairs(n: int, r_max: int, max_i: int) -> Report:
    """Every witness of the same-length search re-checked; at least one witness per (r, s)."""
    report = Report("pairs")
    start = time.perf_counter()
    found = {}
    for r in range(1, r_max + 1):
        for s in range(1, r_max + 1):
            ws = samelength_pair_search(n, r, s, max_i)
            found[f"{r},{s}"] = len(ws)
            report.check(bool(ws), n=n, r=r, s=s, max_i=max_i, error="no witness")
            for w in ws:
                seed = ComponentSeed(n, w.seed)
                dm, dn = node_dim(seed, w.node_m), node_dim(seed, w.node_n)
                report.check(dm.length == dn.length == w.length and w.node_m.r == r
                             and w.node_n.r == s, n=n, r=r, s=s, witness=w.to_json())
    report.info["witnesses"] = found
    report.wall_time = time.perf_counter() - start
    return report


def verify_dimset(n: int, seed_bound: int, window: int = 3) -> Report:
    """Orbit membership decided by scanning agrees with canonical orbit minima; mesh relation."""
    report = Report("dimset")
    start = time.perf_counter()
    seeds = [v for v in imaginary_roots(n, 2 * seed_bound) if v.a <= seed_bound and v.b <= seed_bound]
    canon = {v: min_orbit_length(n, v)[1] for v in seeds}
    for v in seeds:
        sv = ComponentSeed(n, v)
        for k in (-2, -1, 1, 2):
            w = coxeter_apply(n, v, k)
            report.check(dimset_equal(sv, ComponentSeed(n, w)), n=n, seed=v, shift=k)
        for i in range(-window, window + 1):
            for r in range(1, window + 2):
                report.check(mesh_holds(sv, i, r), n=n, seed=v, node=(i, r), check="mesh")
    for v in seeds:
        for w in seeds:
            expected = canon[v] == canon[w]
            report.check(dimset_equal(ComponentSeed(n, v), ComponentSeed(n, w)) == expected,
                         n=n, seeds=(v, w), expected=expected)
    report.wall_time = time.perf_counter() - start
    return report


def verify_orbit_lemmas(n_values: Iterable[int], sum_bound: int, window: int = 6) -> Report:
    """Ratio comparison along ``Phi^-1`` and propagation of equal lengths along an orbit."""
    report = Report("orbit-lemmas")
    start = time.perf_counter()
    premises = 0
    for n in n_values:
        for v in imaginary_roots(n, sum_bound):
            report.check(compare_holds(n, v), check="ratio comparison", n=n, v=v)
        for total in range(1, sum_bound + 1):
            for a in range(0, total + 1):
                v = DimVector(a, total - a)
                for i in range(1, window + 1):
                    held = sum_shift_holds(n, v, i)
                    if held is None:
                        continue
                    premises += 1
                    report.check(held, check="equal length propagates", n=n, v=v, i=i)
    report.info["equal_length_premises"] = premises
    report.wall_time = time.perf_counter() - start
    return report
