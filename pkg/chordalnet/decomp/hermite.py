"""Row Hermite normal form of a lattice of Laurent binomials.

A row ``(a, c)`` stands for the toral equation ``x^a = c`` over GF(p)*.
Unimodular row operations act on the constants multiplicatively: subtracting
k times row j from row i divides c_i by c_j^k, negating a row inverts c.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


@dataclass
class ToralRow:
    exps: List[int]
    c: int

    def pivot(self) -> int:
        for j, e in enumerate(self.exps):
            if e:
                return j
        return -1


def _sub(ri: ToralRow, rj: ToralRow, k: int, p: int) -> None:
    if not k:
        return
    ri.exps = [a - k * b for a, b in zip(ri.exps, rj.exps)]
    ri.c = ri.c * pow(rj.c, -k, p) % p


def _neg(r: ToralRow, p: int) -> None:
    r.exps = [-a for a in r.exps]
    r.c = pow(r.c, -1, p)


def toral_hnf(rows: Sequence[Tuple[Sequence[int], int]], p: int) -> Optional[List[ToralRow]]:
    """Bring the rows to Hermite normal form.

    Pivots are positive, entries above a pivot lie in ``[0, pivot)`` and zero
    rows are dropped. Returns None when a zero row keeps a constant other than
    1, i.e. the system has no point on the torus.
    """
    work = [ToralRow(list(a), c % p) for a, c in rows]
    if not work:
        return []
    ncols = len(work[0].exps)
    r = 0
    for j in range(ncols):
        while True:
            live = [i for i in range(r, len(work)) if work[i].exps[j]]
            if not live:
                break
            k = min(live, key=lambda i: (abs(work[i].exps[j]), i))
            if len(live) == 1:
                work[r], work[k] = work[k], work[r]
                break
            for i in live:
                if i != k:
                    _sub(work[i], work[k], work[i].exps[j] // work[k].exps[j], p)
        if r >= len(work) or not work[r].exps[j]:
            continue
        if work[r].exps[j] < 0:
            _neg(work[r], p)
        piv = work[r].exps[j]
        for i in range(r):
            _sub(work[i], work[r], work[i].exps[j] // piv, p)
        r += 1
    for row in work[r:]:
        if row.c != 1:
            return None
    return work[:r]
