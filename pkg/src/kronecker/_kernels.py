"""Pure-Python elimination kernels.

These are the reference implementations; ``_core.pyx`` provides a compiled
``rank_mod_p`` with the same contract.  Rows are sparse ``{column: value}``
dicts throughout.
"""
from __future__ import annotations

from math import gcd


def rank_mod_p(rows, ncols, p):
    """Rank over GF(p) of the sparse integer rows (entries reduced internally)."""
    pivots = {}
    for src in rows:
        row = {}
        for k, v in src.items():
            v %= p
            if v:
                row[k] = v
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], p - 2, p)
                pivots[lead] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[lead]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if len(pivots) == ncols:
            break
    return len(pivots)


def rank_exact(rows, ncols):
    """Rank over Q of sparse integer rows, by fraction-free incremental elimination."""
    pivots = {}
    for src in rows:
        row = {k: v for k, v in src.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if row[lead] < 0:
                    g = -g
                pivots[lead] = {k: v // g for k, v in row.items()}
                break
            f, pl = row[lead], piv[lead]
            new = {}
            for k, v in row.items():
                new[k] = pl * v
            for k, v in piv.items():
                nv = new.get(k, 0) - f * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            row = new
        if len(pivots) == ncols:
            break
    return len(pivots)
