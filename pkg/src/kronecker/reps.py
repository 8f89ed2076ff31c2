"""Representations of K_n with exact matrices.

A :class:`Rep` with dimension vector ``(a, b)`` carries ``n`` matrices of
shape ``a x b``; a source row vector ``x`` goes to ``x @ mats[i]`` in the sink
space.  A morphism ``M -> N`` is a pair ``(g, h)`` with ``g`` of shape
``a x a'`` and ``h`` of shape ``b x b'`` such that
``M.mats[i] @ h == g @ N.mats[i]`` for every arrow.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import ContractViolation, InvalidParameter
from .linalg import PRIMES, ExactMatrix, left_kernel, nullspace, rank_exact, rank_mod_p, vstack
from .roots import DimVector, as_dim, coxeter_apply, is_root, quadratic_form


@dataclass(frozen=True)
class Rep:
    n: int
    dim: DimVector
    mats: tuple[ExactMatrix, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"arrow count must be >= 1, got {self.n}")
        object.__setattr__(self, "dim", as_dim(self.dim))
        object.__setattr__(self, "mats", tuple(self.mats))
        a, b = self.dim
        if a < 0 or b < 0:
            raise InvalidParameter(f"dimensions must be nonnegative, got {self.dim}")
        if len(self.mats) != self.n:
            raise InvalidParameter(f"expected {self.n} matrices, got {len(self.mats)}")
        for i, m in enumerate(self.mats):
            if m.shape != (a, b):
                raise InvalidParameter(f"matrix {i} has shape {m.shape}, expected {(a, b)}")

    @classmethod
    def from_lists(cls, n: int, dim, mats: Sequence[Sequence[Sequence]]) -> "Rep":
        a, b = dim
        return cls(n, as_dim(dim), tuple(ExactMatrix.from_rows(m, cols=b) for m in mats))

    @classmethod
    def zero_arrows(cls, n: int, dim) -> "Rep":
        a, b = dim
        return cls(n, as_dim(dim), tuple(ExactMatrix.zeros(a, b) for _ in range(n)))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim": [self.dim.a, self.dim.b],
            "mats": [m.to_json() for m in self.mats],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Rep":
        try:
            n = int(data["n"])
            a, b = (int(x) for x in data["dim"])
            raw = data["mats"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParameter(f"malformed Rep JSON: {exc}") from None
        if len(raw) != n:
            raise InvalidParameter(f"Rep JSON lists {len(raw)} matrices for n={n}")
        return cls(n, DimVector(a, b), tuple(ExactMatrix.from_json(m, a, b) for m in raw))

    def dump(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json()) + "\n")

    @classmethod
    def load(cls, path) -> "Rep":
        return cls.from_json(json.loads(Path(path).read_text()))


def simple(n: int, vertex: int) -> Rep:
    """Simple module at the sink (``vertex=1``, dim (0,1)) or source (``vertex=2``, dim (1,0))."""
    if vertex not in (1, 2):
        raise InvalidParameter("vertex must be 1 (sink) or 2 (source)")
    return Rep.zero_arrows(n, (0, 1) if vertex == 1 else (1, 0))


def projective_source(n: int) -> Rep:
    """``P_2`` with dim ``(1, n)``: arrow ``i`` sends the source basis vector to ``e_i``."""
    return Rep.from_lists(n, (1, n), [[[int(j == i) for j in range(n)]] for i in range(n)])


def direct_sum(M: Rep, N: Rep) -> Rep:
    if M.n != N.n:
        raise InvalidParameter("direct sum needs equal arrow counts")
    a1, b1 = M.dim
    a2, b2 = N.dim
    mats = []
    for m, k in zip(M.mats, N.mats):
        top = [list(r) + [0] * b2 for r in m.entries]
        bottom = [[0] * b1 + list(r) for r in k.entries]
        mats.append(ExactMatrix.from_rows(top + bottom, cols=b1 + b2))
    return Rep(M.n, DimVector(a1 + a2, b1 + b2), tuple(mats))


@dataclass(frozen=True)
class HomSolution:
    dimension: int
    basis: tuple[tuple[ExactMatrix, ExactMatrix], ...] | None = None
    method: str = "exact"


def hom_system(M: Rep, N: Rep) -> tuple[list[dict[int, int]], int]:
    """Sparse equations of ``M.mats[i] @ h - g @ N.mats[i] = 0`` in the entries of (g, h).

    Unknown ``g[p, k]`` has index ``p * a' + k``; ``h[k, q]`` has index
    ``a * a' + k * b' + q``.
    """
    if M.n != N.n:
        raise InvalidParameter(f"arrow counts differ: {M.n} vs {N.n}")
    a, b = M.dim
    a2, b2 = N.dim
    h0 = a * a2
    rows: list[dict[int, int]] = []
    for Mi, Ni in zip(M.mats, N.mats):
        m_nz = [[(k, x) for k, x in enumerate(r) if x] for r in Mi.entries]
        n_cols = Ni.transpose().entries
        n_nz = [[(k, y) for k, y in enumerate(col) if y] for col in n_cols]
        for p in range(a):
            mp = m_nz[p]
            for q in range(b2):
                row = {h0 + k * b2 + q: x for k, x in mp}
                for k, y in n_nz[q]:
                    row[p * a2 + k] = -y
                if row:
                    rows.append(row)
    return rows, a * a2 + b * b2


def hom_dim(M: Rep, N: Rep, *, basis: bool = False, method: str = "auto") -> HomSolution:
    """Dimension of Hom(M, N) over Q.

    ``method="exact"`` runs fraction-free elimination.  ``"auto"`` first
    computes the nullity over two primes; that nullity bounds the rational one
    from above, so it is accepted when it meets the lower bound (1 for
    ``M == N`` since scalars are endomorphisms, else 0) and otherwise the exact
    elimination decides.  Sparse or very large systems skip the modular pass:
    there the sparse exact elimination is already the faster route, and the
    dense modular kernel would need ``rows x unknowns`` memory.
    """
    rows, nvars = hom_system(M, N)
    if basis:
        return _hom_basis(M, N, rows, nvars)
    if method not in ("auto", "exact"):
        raise InvalidParameter(f"unknown method {method!r}")
    if method == "auto" and _dense_enough(rows, nvars):
        lower = 1 if (M == N and nvars) else 0
        nullity = min(nvars - rank_mod_p(rows, nvars, p) for p in PRIMES)
        if nullity == lower:
            return HomSolution(nullity, method="mod-p certified")
    return HomSolution(nvars - rank_exact(rows, nvars), method="exact")


# dense modular pass only when rows are reasonably full and the dense copy is small
DENSE_MIN_FILL = 0.05
DENSE_MAX_CELLS = 4_000_000


def _dense_enough(rows: list[dict[int, int]], nvars: int) -> bool:
    if not rows or not nvars or len(rows) * nvars > DENSE_MAX_CELLS:
        return False
    fill = sum(len(r) for r in rows) / (len(rows) * nvars)
    return fill >= DENSE_MIN_FILL


def _hom_basis(M: Rep, N: Rep, rows, nvars) -> HomSolution:
    dense = [[0] * nvars for _ in rows]
    for i, row in enumerate(rows):
        for k, v in row.items():
            dense[i][k] = v
    system = ExactMatrix.from_rows(dense, cols=nvars)
    kernel = nullspace(system)
    a, b = M.dim
    a2, b2 = N.dim
    h0 = a * a2
    pairs = []
    for vec in kernel.entries:
        g = ExactMatrix.from_rows([vec[p * a2:(p + 1) * a2] for p in range(a)], cols=a2)
        h = ExactMatrix.from_rows([vec[h0 + k * b2:h0 + (k + 1) * b2] for k in range(b)], cols=b2)
        pairs.append((g, h))
    return HomSolution(len(pairs), tuple(pairs), method="exact")


def is_morphism(M: Rep, N: Rep, g: ExactMatrix, h: ExactMatrix) -> bool:
    return all(Mi @ h == g @ Ni for Mi, Ni in zip(M.mats, N.mats))


def end_dim(M: Rep, *, method: str = "auto") -> int:
    return hom_dim(M, M, method=method).dimension


def is_brick(M: Rep, *, method: str = "auto") -> bool:
    return end_dim(M, method=method) == 1


def dual(M: Rep) -> Rep:
    """Swap the vertices and transpose every matrix (an involution)."""
    return Rep(M.n, M.dim.swapped(), tuple(m.transpose() for m in M.mats))


def row_shift_F(m: ExactMatrix) -> ExactMatrix:
    """Shift rows down by one: drop the last row, insert a zero first row."""
    return m.row_shift()


def reflect_at_sink(M: Rep) -> tuple[ExactMatrix, list[ExactMatrix]]:
    """BGP reflection at the sink.

    The new space at vertex 1 is the kernel of ``(x_1..x_n) -> sum x_i M_i``
    on ``n`` copies of the source space; its arrows now point to vertex 2 and
    are the coordinate projections.  Returns the kernel basis (rows, inside
    ``k^{n a}``) and the ``n`` projection matrices of shape ``k1 x a``.
    """
    a, b = M.dim
    kernel = left_kernel(vstack(M.mats, cols=b))
    if kernel.rows != M.n * a - b:
        raise ContractViolation(
            f"sink reflection of dim {M.dim}: kernel has dim {kernel.rows}, "
            f"expected {M.n * a - b} (simple projective summand?)")
    return kernel, [kernel.col_slice(i * a, (i + 1) * a) for i in range(M.n)]


def reflect_at_source(maps: Sequence[ExactMatrix], k1: int, a: int) -> Rep:
    """BGP reflection at vertex 2 after :func:`reflect_at_sink`.

    ``maps`` are ``k1 x a`` matrices from the reflected sink (now a source of
    dim ``k1``) to vertex 2 (now a sink of dim ``a``).  Vertex 2 is replaced by
    the kernel of ``(y_1..y_n) -> sum y_i maps[i]``, restoring the original
    orientation; arrow ``i`` becomes the ``i``-th coordinate projection.
    """
    n = len(maps)
    kernel = left_kernel(vstack(maps, cols=a))
    if kernel.rows != n * k1 - a:
        raise ContractViolation(
            f"source reflection: kernel has dim {kernel.rows}, expected {n * k1 - a}")
    mats = tuple(kernel.col_slice(i * k1, (i + 1) * k1) for i in range(n))
    return Rep(n, DimVector(kernel.rows, k1), mats)


def coxeter_plus(M: Rep) -> Rep:
    """Auslander-Reiten translate ``tau M`` (sink reflection, then source reflection)."""
    a, b = M.dim
    kernel, proj = reflect_at_sink(M)
    out = reflect_at_source(proj, kernel.rows, a)
    if M.n >= 3 and out.dim != coxeter_apply(M.n, M.dim, 1):
        raise ContractViolation(f"dim tau{M.dim} = {out.dim} is not dim . Phi")
    return out


def coxeter_minus(M: Rep) -> Rep:
    """Inverse translate ``tau^-1 M``, computed as ``D tau D M``."""
    return dual(coxeter_plus(dual(M)))


def embed(M: Rep, slot: int) -> Rep:
    """View a K_{n-1} representation as a K_n one by inserting a zero arrow at ``slot``.

    When ``dim M`` is an imaginary root for K_{n-1} (n >= 4), also checks that
    it stays imaginary for K_n and that its K_n Coxeter image is no longer a
    K_{n-1} root; a failure raises :class:`ContractViolation`.
    """
    if not 0 <= slot <= M.n:
        raise InvalidParameter(f"slot must lie in 0..{M.n}, got {slot}")
    n = M.n + 1
    a, b = M.dim
    mats = list(M.mats)
    mats.insert(slot, ExactMatrix.zeros(a, b))
    if n >= 4 and a > 0 and b > 0 and quadratic_form(M.n, M.dim) < 0:
        facts = embedding_facts(n, M.dim)
        if not (facts["imaginary_for_n"] and not facts["image_is_root_for_n_minus_1"]):
            raise ContractViolation(f"embedding facts fail for {M.dim}: {facts}")
    return Rep(n, M.dim, tuple(mats))


def embedding_facts(n: int, v) -> dict:
    """Dimension-level facts for ``v`` seen in K_{n-1} and K_n."""
    v = as_dim(v)
    image = coxeter_apply(n, v, 1)
    return {
        "q_n_minus_1": quadratic_form(n - 1, v),
        "q_n": quadratic_form(n, v),
        "imaginary_for_n": quadratic_form(n, v) < 0,
        "image": image,
        "q_n_minus_1_of_image": quadratic_form(n - 1, image),
        "image_is_root_for_n_minus_1": is_root(n - 1, image),
    }
