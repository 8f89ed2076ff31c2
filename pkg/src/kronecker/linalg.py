"""Exact matrices and the elimination routines behind Hom computations.

Ranks come in two flavours:

* :func:`rank_exact` -- rank over Q by fraction-free elimination, always exact;
* :func:`rank_mod_p` -- rank over GF(p).  For an integer matrix the GF(p) rank
  never exceeds the rational rank, so a GF(p) nullity that already equals a
  known lower bound for the rational nullity certifies the rational nullity.

``rank_mod_p`` runs on the compiled kernel when it was built, otherwise on the
pure-Python kernel in :mod:`kronecker._kernels`.  Set ``KRONECKER_PURE=1`` to
force the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import InvalidParameter

try:
    if os.environ.get("KRONECKER_PURE"):
        raise ImportError("pure-Python kernels requested")
    from ._core import rank_dense_mod_p as _rank_dense_mod_p
except ImportError:
    _rank_dense_mod_p = None

BACKEND = "compiled" if _rank_dense_mod_p is not None else "python"

# two primes below 2**31 so products fit in int64
PRIMES = (2147483647, 2147483629)

Entry = int | Fraction


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable ``rows x cols`` matrix of ints/Fractions; empty shapes are explicit."""

    rows: int
    cols: int
    entries: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InvalidParameter(f"entries do not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Entry]], cols: int | None = None) -> "ExactMatrix":
        data = tuple(tuple(_normalize(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise InvalidParameter("cols must be given for a matrix with no rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls(size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise InvalidParameter(f"cannot multiply {self.shape} by {other.shape}")
        cols_t = other.transpose().entries
        out = []
        for row in self.entries:
            nz = [(k, x) for k, x in enumerate(row) if x]
            out.append(tuple(sum(x * col[k] for k, x in nz) for col in cols_t))
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise InvalidParameter(f"cannot add {self.shape} and {other.shape}")
        return ExactMatrix(self.rows, self.cols, tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def transpose(self) -> "ExactMatrix":
        if self.rows == 0:
            return ExactMatrix.zeros(self.cols, 0)
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for r in self.entries for x in r)

    def col_slice(self, start: int, stop: int) -> "ExactMatrix":
        return ExactMatrix(self.rows, stop - start, tuple(r[start:stop] for r in self.entries))

    def row_shift(self) -> "ExactMatrix":
        """Drop the last row and insert a zero row on top (shape preserved)."""
        if self.rows == 0:
            raise InvalidParameter("row_shift needs at least one row")
        return ExactMatrix(self.rows, self.cols, ((0,) * self.cols,) + self.entries[:-1])

    def to_lists(self) -> list[list[Entry]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]

    @classmethod
    def from_json(cls, data, rows: int, cols: int) -> "ExactMatrix":
        m = cls.from_rows(([_parse_entry(x) for x in r] for r in data), cols=cols)
        if m.shape != (rows, cols):
            raise InvalidParameter(f"matrix has shape {m.shape}, expected {(rows, cols)}")
        return m


def vstack(blocks: Sequence[ExactMatrix], cols: int | None = None) -> ExactMatrix:
    if cols is None:
        if not blocks:
            raise InvalidParameter("cols must be given when stacking nothing")
        cols = blocks[0].cols
    rows = []
    for blk in blocks:
        if blk.cols != cols:
            raise InvalidParameter(f"block has {blk.cols} columns, expected {cols}")
        rows.extend(blk.entries)
    return ExactMatrix(len(rows), cols, tuple(rows))


def _normalize(x) -> Entry:
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return _parse_entry(x)
    if isinstance(x, np.integer):
        return int(x)
    raise InvalidParameter(f"unsupported matrix entry {x!r}")


def _parse_entry(x) -> Entry:
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    if not isinstance(x, str):
        raise InvalidParameter(f"matrix entries must be decimal strings, got {x!r}")
    try:
        return _normalize(Fraction(x.strip()))
    except (ValueError, ZeroDivisionError):
        raise InvalidParameter(f"bad matrix entry {x!r}") from None


def integral_row(row: dict[int, Entry]) -> dict[int, int]:
    """Scale a sparse rational row to integers (same kernel)."""
    dens = [x.denominator for x in row.values() if isinstance(x, Fraction)]
    if not dens:
        return dict(row)
    m = lcm(*dens)
    return {k: int(x * m) for k, x in row.items()}


def rank_exact(rows: Sequence[dict[int, Entry]], ncols: int) -> int:
    return _kernels.rank_exact([integral_row(r) for r in rows], ncols)


def rank_mod_p(rows: Sequence[dict[int, Entry]], ncols: int, p: int = PRIMES[0],
               backend: str | None = None) -> int:
    """Rank over GF(p) of sparse integer rows.

    ``backend`` may force ``"python"`` or ``"compiled"``; default is the best
    available.
    """
    backend = backend or BACKEND
    int_rows = [integral_row(r) for r in rows]
    if backend == "python":
        return _kernels.rank_mod_p(int_rows, ncols, p)
    if _rank_dense_mod_p is None:
        raise InvalidParameter("compiled kernel is not available")
    if not int_rows or ncols == 0:
        return 0
    dense = np.zeros((len(int_rows), ncols), dtype=np.int64)
    for i, row in enumerate(int_rows):
        for k, v in row.items():
            dense[i, k] = v % p
    return int(_rank_dense_mod_p(dense, p))


def rref(mat: ExactMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q with first-nonzero pivot order."""
    m = [[Fraction(x) for x in r] for r in mat.entries]
    pivots: list[int] = []
    r = 0
    for c in range(mat.cols):
        if r == mat.rows:
            break
        sel = next((i for i in range(r, mat.rows) if m[i][c] != 0), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        prow = m[r]
        nz = [k for k in range(c, mat.cols) if prow[k] != 0]
        for i in range(mat.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row = m[i]
                for k in nz:
                    row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _primitive(vec: list[Fraction]) -> list[int]:
    den = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [x.numerator * (den // x.denominator) if x else 0 for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def nullspace(mat: ExactMatrix) -> ExactMatrix:
    """Basis of ``{x : mat @ x = 0}`` as the ROWS of the result, primitive integer vectors."""
    red, pivots = rref(mat)
    pivset = set(pivots)
    free = [c for c in range(mat.cols) if c not in pivset]
    basis = []
    for f in free:
        vec = [Fraction(0)] * mat.cols
        vec[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            vec[pc] = -row[f]
        basis.append(_primitive(vec))
    return ExactMatrix(len(basis), mat.cols, tuple(tuple(v) for v in basis))


def left_kernel(mat: ExactMatrix) -> ExactMatrix:
    """Basis of ``{x : x @ mat = 0}`` (row vectors), as the rows of the result."""
    return nullspace(mat.transpose())


def rank(mat: ExactMatrix) -> int:
    return len(rref(mat)[1])
