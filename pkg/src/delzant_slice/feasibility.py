"""Exact rational feasibility for ``{x : A x = b, x >= 0}``.

Phase one of the primal simplex method on a dense ``Fraction`` tableau,
with Bland's rule so it cannot cycle.  Only feasibility is needed here; there
is no phase two.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def nonnegative_solution(A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Return some ``x >= 0`` with ``A x = b``, or ``None`` if there is none."""
    m = len(A)
    if m == 0:
        return ()
    n = len(A[0])
    width = n + m
    T: list[list[Fraction]] = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        T.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    # reduced costs of "minimise the sum of artificials", last entry = -objective
    cost = [-sum(T[i][j] for i in range(m)) for j in range(n)] + [Fraction(0)] * m
    cost.append(-sum(T[i][width] for i in range(m)))

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded direction; cannot happen for a bounded-below phase-one objective
            raise ArithmeticError("phase-one objective unbounded")
        piv = T[leave][enter]
        prow = T[leave] = [v / piv for v in T[leave]]
        nz = [k for k, v in enumerate(prow) if v]
        for row in T + [cost]:
            if row is not prow and row[enter]:
                f = row[enter]
                for k in nz:
                    row[k] -= f * prow[k]
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = T[i][width]
    return tuple(x)
