"""Rational-slope affine hyperplanes ``V = R p_1 + ... + R p_{n-1} + a``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import lattice as la
from .errors import DimensionMismatch


@dataclass(frozen=True)
class AffineSubspace:
    dim: int
    basis: tuple[tuple[int, ...], ...]
    offset: tuple[Fraction, ...]
    q: tuple[int, ...]
    # the basis as given, when it had to be replaced by a saturated one
    original_basis: tuple[tuple[int, ...], ...] | None = None

    @property
    def substituted(self) -> bool:
        return self.original_basis is not None


def saturate(basis: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Saturated Z-basis of ``span(basis) ∩ Z^n``, in row Hermite normal form."""
    q = la.orthogonal_primitive(basis)
    H, _ = la.hnf(la.integer_kernel([q]))
    return tuple(r for r in H if any(r))


def new_subspace(basis: Sequence[Sequence[int]], offset: Sequence | None = None) -> AffineSubspace:
    """Validate ``basis``, saturating it if needed, and derive ``q``.

    >>> new_subspace([[2, 4]]).basis
    ((1, 2),)
    """
    basis = tuple(la.as_int_vec(p) for p in basis)
    if not basis:
        raise DimensionMismatch("empty basis")
    n = len(basis[0])
    if n < 2 or len(basis) != n - 1 or any(len(p) != n for p in basis):
        raise DimensionMismatch(f"need n-1 vectors of length n, got {len(basis)} of length {n}")
    offset = tuple(Fraction(0) for _ in range(n)) if offset is None else tuple(Fraction(x) for x in offset)
    if len(offset) != n:
        raise DimensionMismatch(f"offset has length {len(offset)}, expected {n}")
    original = None
    if not la.is_saturated_basis(basis):
        original, basis = basis, saturate(basis)
    return AffineSubspace(n, basis, offset, la.orthogonal_primitive(basis), original)


def pullback(sub: AffineSubspace, xi: Sequence) -> tuple:
    """``xi -> (<p_1, xi>, ..., <p_{n-1}, xi>)``."""
    if len(xi) != sub.dim:
        raise DimensionMismatch(f"vector of length {len(xi)} in dimension {sub.dim}")
    return tuple(la.dot(p, xi) for p in sub.basis)


def chart_constant_exponent(sub: AffineSubspace) -> Fraction:
    return Fraction(la.dot(sub.offset, sub.q))


def with_offset(sub: AffineSubspace, offset: Sequence) -> AffineSubspace:
    return new_subspace(sub.basis, offset)


# --- generators ----------------------------------------------------------


def _primitive_reps(n: int, height: int) -> list[tuple[int, ...]]:
    # one representative per +-pair: first nonzero entry positive
    out = []
    for v in itertools.product(range(-height, height + 1), repeat=n):
        if any(v) and la.normalize_sign(v) == v and la.is_primitive(v):
            out.append(v)
    return out


def enumerate_saturated_bases(n: int, height: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Saturated hyperplane bases with entries in ``[-height, height]``.

    Each hyperplane lattice is yielded once (deduplicated by the row HNF of
    the basis), represented by the first basis met in lexicographic order.
    """
    if height < 1:
        return
    seen = set()
    for basis in itertools.combinations(_primitive_reps(n, height), n - 1):
        if la.rank(basis) != n - 1 or not la.is_saturated_basis(basis):
            continue
        key = la.hnf(basis)[0]
        if key in seen:
            continue
        seen.add(key)
        yield basis


def random_saturated_basis(rng: random.Random, n: int, bound: int = 4) -> tuple[tuple[int, ...], ...]:
    """Rejection-sample an (n-1) x n saturated basis with entries in ``[-bound, bound]``."""
    while True:
        basis = tuple(tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(n - 1))
        if la.rank(basis) == n - 1 and la.is_saturated_basis(basis):
            return basis
