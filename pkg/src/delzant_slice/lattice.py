"""Exact integer and rational linear algebra.

Vectors are tuples of ``int`` (or ``Fraction``); matrices are tuples of row
tuples.  Nothing in here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .errors import (
    CrossCheckMismatch,
    DependentInput,
    DimensionMismatch,
    InputError,
    PreconditionViolated,
)

Vec = tuple
Mat = tuple


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise DimensionMismatch(f"dot of vectors of length {len(a)} and {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def as_int_vec(v) -> tuple[int, ...]:
    out = []
    for x in v:
        if isinstance(x, bool) or int(x) != x:
            raise InputError(f"non-integer entry {x!r}")
        out.append(int(x))
    if not out:
        raise DimensionMismatch("empty vector")
    return tuple(out)


def as_matrix(rows) -> Mat:
    rows = tuple(tuple(r) for r in rows)
    if not rows or not rows[0]:
        raise DimensionMismatch("empty matrix")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionMismatch("ragged matrix")
    return rows


def identity(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(M: Sequence[Sequence]) -> Mat:
    return tuple(zip(*M))


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Mat:
    cols = transpose(B)
    if len(A[0]) != len(B):
        raise DimensionMismatch(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(cols)}")
    return tuple(tuple(dot(r, c) for c in cols) for r in A)


def matvec(A: Sequence[Sequence], x: Sequence) -> Vec:
    return tuple(dot(r, x) for r in A)


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_primitive(v: Sequence[int]) -> bool:
    return content(v) == 1


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = content(v)
    if g == 0:
        raise DependentInput("zero vector has no primitive multiple")
    return tuple(x // g for x in v)


def normalize_sign(v: Sequence[int]) -> tuple[int, ...]:
    """Flip ``v`` so that its first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def clear_denominators(v: Sequence) -> tuple[int, ...]:
    """Smallest positive integer multiple of a rational vector."""
    v = [Fraction(x) for x in v]
    m = 1
    for x in v:
        m = m * x.denominator // gcd(m, x.denominator)
    return tuple(int(x * m) for x in v)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


# --- rational elimination -------------------------------------------------


def _row_reduce(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    A = [[Fraction(x) for x in row] for row in M]
    pivots: list[int] = []
    r = 0
    rows = len(A)
    cols = len(A[0]) if rows else 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    return len(_row_reduce(M)[1])


def det(M: Sequence[Sequence]):
    """Exact determinant; returns ``int`` for integer input."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise DimensionMismatch("determinant of a non-square matrix")
    A = [[Fraction(x) for x in row] for row in M]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            sign = -sign
        piv = A[c][c]
        result *= piv
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / piv
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    result *= sign
    if all(isinstance(x, int) for row in M for x in row):
        return int(result)
    return result


def solve(M: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...]:
    """Unique solution of the square system ``M x = b``."""
    n = len(M)
    aug = [list(M[i]) + [b[i]] for i in range(n)]
    R, pivots = _row_reduce(aug)
    if pivots != list(range(n)):
        raise DependentInput("singular system")
    return tuple(R[i][n] for i in range(n))


def inverse(M: Sequence[Sequence]) -> Mat:
    n = len(M)
    aug = [list(M[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    R, pivots = _row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise DependentInput("singular matrix")
    return tuple(tuple(R[i][n:]) for i in range(n))


def integer_inverse(M: Sequence[Sequence[int]]) -> Mat:
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    inv = inverse(M)
    if any(x.denominator != 1 for row in inv for x in row):
        raise PreconditionViolated("matrix is not unimodular")
    return tuple(tuple(int(x) for x in row) for row in inv)


# --- normal forms -------------------------------------------------------


def hnf(M: Sequence[Sequence[int]]) -> tuple[Mat, Mat]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ M`` and ``U`` unimodular.  ``H`` is in
    row echelon form: pivots are positive, move strictly right going down,
    entries above a pivot lie in ``[0, pivot)``, zero rows come last.
    """
    A = [list(r) for r in as_matrix(M)]
    m, n = len(A), len(A[0])
    U = [list(r) for r in identity(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            g, x, y = xgcd(a, b)
            s, t = a // g, b // g
            # [[x, y], [-t, s]] has determinant 1
            for T in (A, U):
                ri, rr = T[i], T[r]
                T[r] = [x * p + y * q for p, q in zip(rr, ri)]
                T[i] = [-t * p + s * q for p, q in zip(rr, ri)]
        piv = A[r][c]
        if piv == 0:
            continue
        if piv < 0:
            A[r] = [-x for x in A[r]]
            U[r] = [-x for x in U[r]]
            piv = -piv
        for i in range(r):
            k = A[i][c] // piv
            if k:
                A[i] = [p - k * q for p, q in zip(A[i], A[r])]
                U[i] = [p - k * q for p, q in zip(U[i], U[r])]
        r += 1
    return tuple(map(tuple, A)), tuple(map(tuple, U))


def snf_diagonal(M: Sequence[Sequence[int]]) -> list[int]:
    """Elementary divisors ``d1 | d2 | ...`` (``min(rows, cols)`` of them, zeros last)."""
    A = [list(r) for r in as_matrix(M)]
    m, n = len(A), len(A[0])
    k = min(m, n)
    for t in range(k):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not entries:
                return [abs(A[i][i]) for i in range(t)] + [0] * (k - t)
            _, pi, pj = min(entries)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = A[i][t] // piv
                A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                dirty |= A[i][t] != 0
            for j in range(t + 1, n):
                q = A[t][j] // piv
                for row in A:
                    row[j] -= q * row[t]
                dirty |= A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % piv),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
    return [abs(A[i][i]) for i in range(k)]


def integer_kernel(M: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Z-basis of ``{x in Z^n : M x = 0}``.

    Read off from the transform of the HNF of ``M^T``: the rows of ``U`` that
    hit zero rows of ``H`` span the kernel lattice, and because ``U`` is
    unimodular they span all of it.
    """
    M = as_matrix(M)
    H, U = hnf(transpose(M))
    return [U[i] for i, row in enumerate(H) if not any(row)]


# --- lattice predicates used by the subspace code ----------------------


def _check_family(P: Sequence[Sequence[int]]) -> Mat:
    P = as_matrix(P)
    n = len(P[0])
    if len(P) != n - 1:
        raise DimensionMismatch(f"need {n - 1} vectors in dimension {n}, got {len(P)}")
    if rank(P) != len(P):
        raise DependentInput("vectors are linearly dependent")
    return P


def is_saturated_basis(P: Sequence[Sequence[int]]) -> bool:
    P = _check_family(P)
    return all(d == 1 for d in snf_diagonal(P))


def orthogonal_primitive(P: Sequence[Sequence[int]]) -> tuple[int, ...]:
    P = _check_family(P)
    (q,) = integer_kernel(P)
    return normalize_sign(q)


def gram(P: Sequence[Sequence[int]]) -> Mat:
    return tuple(tuple(dot(a, b) for b in P) for a in P)


class GramCheck(NamedTuple):
    lhs: int
    rhs: int
    gram_det: int
    ok: bool


def gram_identity_check(P: Sequence[Sequence[int]], q: Sequence[int]) -> GramCheck:
    """Check ``|det[p_1 .. p_{n-1} q]| == <q, q> == det Gram(P)``."""
    P = as_matrix(P)
    q = tuple(q)
    if not is_saturated_basis(P):
        raise PreconditionViolated("basis is not saturated")
    if normalize_sign(q) != orthogonal_primitive(P):
        raise PreconditionViolated("q is not the primitive orthogonal vector of P")
    lhs = abs(det(P + (q,)))
    rhs = dot(q, q)
    g = det(gram(P))
    if g != rhs:
        raise CrossCheckMismatch(f"det Gram(P) = {g} but <q,q> = {rhs}")
    return GramCheck(lhs, rhs, g, lhs == rhs)
