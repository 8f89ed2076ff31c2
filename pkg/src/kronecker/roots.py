"""Dimension-vector calculus for K_n.

A :class:`DimVector` ``(a, b)`` records the dimension ``a`` at the source
vertex 2 and ``b`` at the sink vertex 1, so ``dim P_1 = (0, 1)``,
``dim P_2 = (1, n)`` and ``dim I_0 = (1, 0)``.  The Coxeter matrix acts on the
right of row vectors::

    Phi   = [[n^2 - 1,  n],      Phi^-1 = [[-1,     -n     ],
             [     -n, -1]]                [ n,  n^2 - 1 ]]

Ratios are always compared by integer cross-multiplication.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import InvalidParameter
from .sequences import get_cache

Matrix2 = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True, order=True, slots=True)
class DimVector:
    a: int
    b: int

    def __iter__(self):
        yield self.a
        yield self.b

    def __add__(self, other: "DimVector") -> "DimVector":
        return DimVector(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DimVector") -> "DimVector":
        return DimVector(self.a - other.a, self.b - other.b)

    def __mul__(self, k: int) -> "DimVector":
        return DimVector(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.a},{self.b})"

    @property
    def length(self) -> int:
        return self.a + self.b

    def swapped(self) -> "DimVector":
        return DimVector(self.b, self.a)

    def is_nonnegative(self) -> bool:
        return self.a >= 0 and self.b >= 0

    def to_json(self) -> list:
        return [_num_json(self.a), _num_json(self.b)]

    @classmethod
    def parse(cls, text: str) -> "DimVector":
        parts = text.replace("(", "").replace(")", "").split(",")
        if len(parts) != 2:
            raise InvalidParameter(f"expected a vector 'a,b', got {text!r}")
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError:
            raise InvalidParameter(f"expected integers in {text!r}") from None


def _num_json(x: int):
    return x if abs(x) < 2**53 else str(x)


def as_dim(v) -> DimVector:
    if isinstance(v, DimVector):
        return v
    a, b = v
    return DimVector(int(a), int(b))


class Tag(enum.Enum):
    REAL = "Real"
    IMAGINARY = "Imaginary"
    NONROOT = "NonRoot"


class RootClass(NamedTuple):
    tag: Tag
    q_value: int

    def __str__(self) -> str:
        return f"{self.tag.value} q={self.q_value}"


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f"n must be an integer >= 3, got {n!r}")


def quadratic_form(n: int, v) -> int:
    a, b = v
    return a * a + b * b - n * a * b


def euler_form(n: int, v, w) -> int:
    """``<v, w> = v.a w.a + v.b w.b - n v.a w.b`` (dim Hom - dim Ext^1)."""
    va, vb = v
    wa, wb = w
    return va * wa + vb * wb - n * va * wb


def classify(n: int, v) -> RootClass:
    _check_n(n)
    v = as_dim(v)
    if v.a == 0 and v.b == 0:
        raise InvalidParameter("the zero vector is not classified")
    if not v.is_nonnegative():
        raise InvalidParameter(f"classify expects a nonnegative vector, got {v}")
    q = quadratic_form(n, v)
    if q == 1:
        return RootClass(Tag.REAL, q)
    if q < 0:
        return RootClass(Tag.IMAGINARY, q)
    return RootClass(Tag.NONROOT, q)


def is_imaginary(n: int, v) -> bool:
    a, b = v
    return a > 0 and b > 0 and quadratic_form(n, (a, b)) < 0


def require_imaginary(n: int, v) -> DimVector:
    _check_n(n)
    v = as_dim(v)
    if not is_imaginary(n, v):
        raise InvalidParameter(f"{v} is not an imaginary root of K_{n}")
    return v


def is_root(n_arrows: int, v) -> bool:
    """Root test valid for any arrow count, including the tame ``n = 2`` (q = 0 roots)."""
    a, b = v
    if a < 0 or b < 0 or (a == 0 and b == 0):
        return False
    q = quadratic_form(n_arrows, (a, b))
    return q == 1 or q <= 0


def coxeter_matrix(n: int) -> Matrix2:
    return ((n * n - 1, n), (-n, -1))


def coxeter_inverse(n: int) -> Matrix2:
    return ((-1, -n), (n, n * n - 1))


def cartan_matrix(n: int) -> Matrix2:
    return ((1, 0), (n, 1))


def _mat_mul(x: Matrix2, y: Matrix2) -> Matrix2:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


@lru_cache(maxsize=4096)
def coxeter_power(n: int, power: int) -> Matrix2:
    """``Phi^power`` by binary exponentiation (negative powers use ``Phi^-1``)."""
    base = coxeter_matrix(n) if power >= 0 else coxeter_inverse(n)
    k = abs(power)
    result: Matrix2 = ((1, 0), (0, 1))
    while k:
        if k & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        k >>= 1
    return result


def coxeter_apply(n: int, v, power: int = 1) -> DimVector:
    """Return ``v . Phi^power`` (row-vector convention)."""
    a, b = v
    if power == 1:
        return DimVector((n * n - 1) * a - n * b, n * a - b)
    if power == -1:
        return DimVector(-a + n * b, -n * a + (n * n - 1) * b)
    m = coxeter_power(n, power)
    return DimVector(a * m[0][0] + b * m[1][0], a * m[0][1] + b * m[1][1])


def tau_power_dim(n: int, v, i: int) -> DimVector:
    """Closed form ``(A_{2i+1} a - A_{2i} b, A_{2i} a - A_{2i-1} b)`` of ``dim tau^i``."""
    if i < 1:
        raise InvalidParameter(f"tau_power_dim needs i >= 1, got {i}")
    A = get_cache(n).a
    a, b = v
    return DimVector(A(2 * i + 1) * a - A(2 * i) * b, A(2 * i) * a - A(2 * i - 1) * b)


def preprojective_dim(n: int, i: int) -> DimVector:
    """``dim P_i = (A_{i-1}, A_i)`` for ``i >= 1``."""
    if i < 1:
        raise InvalidParameter(f"preprojective index must be >= 1, got {i}")
    A = get_cache(n).a
    return DimVector(A(i - 1), A(i))


def preinjective_dim(n: int, j: int) -> DimVector:
    """``dim I_j = (A_{j+1}, A_j)`` for ``j >= 0``."""
    if j < 0:
        raise InvalidParameter(f"preinjective index must be >= 0, got {j}")
    A = get_cache(n).a
    return DimVector(A(j + 1), A(j))


def compare_holds(n: int, v) -> bool:
    """``d/c > (nb - a)/b > b/a`` for ``(c, d) = (a, b) Phi^-1`` (imaginary ``(a, b)``)."""
    a, b = v
    c, d = coxeter_apply(n, (a, b), -1)
    mid_num = n * b - a
    return d * b > mid_num * c and mid_num * a > b * b


def sum_shift_holds(n: int, v, i: int) -> bool | None:
    """Check that equal lengths of ``v`` and ``v Phi^i`` propagate one step inward.

    With ``(c, d) = v Phi^i`` and ``a + b = c + d``, the images ``v Phi`` and
    ``(c, d) Phi^-1`` have equal length.  Returns ``None`` when the premise
    fails.  The shift must be positive: for ``i = 0`` the premise is empty
    and the conclusion false in general.
    """
    if i < 1:
        raise InvalidParameter(f"shift must be >= 1, got {i}")
    v = as_dim(v)
    w = coxeter_apply(n, v, i)
    if w.length != v.length:
        return None
    return coxeter_apply(n, v, 1).length == coxeter_apply(n, w, -1).length


def imaginary_roots(n: int, sum_bound: int) -> list[DimVector]:
    """All imaginary roots ``(a, b)`` with ``a + b <= sum_bound``, sorted by (a+b, a)."""
    out = []
    for total in range(2, sum_bound + 1):
        for a in range(1, total):
            if quadratic_form(n, (a, total - a)) < 0:
                out.append(DimVector(a, total - a))
    return out
