"""Per-vertex chart binomials and their singular points.

At a vertex the subtorus closure is cut out by ``z^a - c * z^b`` where the
exponent vectors ``a`` and ``b`` have disjoint supports and ``c`` is a
positive real constant.  Only ``c != 0`` matters for singularity, so ``c``
is carried symbolically by its exponent.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import lattice as la
from .errors import CrossCheckMismatch, DimensionMismatch
from .polytope import DelzantPolytope, VertexFrame
from .subspace import AffineSubspace, chart_constant_exponent


@dataclass(frozen=True)
class ChartBinomial:
    aexp: tuple[int, ...]
    bexp: tuple[int, ...]
    const_exponent: Fraction = Fraction(0)

    def __post_init__(self):
        if len(self.aexp) != len(self.bexp):
            raise ValueError("exponent vectors differ in length")
        if any(x < 0 for x in self.aexp + self.bexp):
            raise ValueError("exponents must be nonnegative")
        if any(x and y for x, y in zip(self.aexp, self.bexp)):
            raise ValueError("exponent supports overlap")
        if not any(self.aexp + self.bexp):
            raise ValueError("binomial is constant")

    @property
    def dim(self) -> int:
        return len(self.aexp)

    @property
    def asupp(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.aexp) if x)

    @property
    def bsupp(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.bexp) if x)


class Reason(str, enum.Enum):
    EMPTY_SIDE = "EmptySideNoBoundary"
    UNIT_EXPONENT = "UnitExponentSide"
    BOTH_DEGREE_TWO = "BothSidesDegreeTwo"


@dataclass(frozen=True)
class SmoothnessVerdict:
    smooth: bool
    reason: Reason
    singular_stratum: frozenset[int] | None = None


def build_binomial(frame: VertexFrame, sub: AffineSubspace) -> ChartBinomial:
    if frame.dim != sub.dim:
        raise DimensionMismatch(f"frame in dimension {frame.dim}, subspace in {sub.dim}")
    c = [la.dot(u, sub.q) for u in frame.normals]
    return ChartBinomial(
        tuple(max(x, 0) for x in c),
        tuple(max(-x, 0) for x in c),
        chart_constant_exponent(sub),
    )


def closed_form_smooth(b: ChartBinomial) -> bool:
    return sum(b.aexp) <= 1 or sum(b.bexp) <= 1


def _partial_vanishes(exp: Sequence[int], i: int, S: frozenset[int]) -> bool:
    # d/dz_i of z^exp restricted to the stratum: zero iff some other factor is zeroed
    return any((exp[k] - (k == i)) > 0 for k in S)


def singular_strata(b: ChartBinomial) -> list[frozenset[int]]:
    """Ground-truth enumeration of coordinate strata carrying rank-0 points.

    A stratum ``S`` is ``{z_k = 0 for k in S, z_k != 0 otherwise}``, with ``S``
    ranging over subsets of the combined support (coordinates outside it are
    irrelevant).  The binomial vanishes somewhere on ``S`` iff ``S`` meets
    both supports or neither; on a stratum each partial is a single monomial
    and so is identically zero or nowhere zero.
    """
    A, B = b.asupp, b.bsupp
    support = sorted(A | B)
    found = []
    for size in range(len(support) + 1):
        for S in itertools.combinations(support, size):
            S = frozenset(S)
            if bool(S & A) != bool(S & B):
                continue
            if all(_partial_vanishes(b.aexp, i, S) for i in A) and all(
                _partial_vanishes(b.bexp, i, S) for i in B
            ):
                found.append(S)
    return found


def is_smooth(b: ChartBinomial) -> SmoothnessVerdict:
    strata = singular_strata(b)
    smooth = closed_form_smooth(b)
    if smooth != (not strata):
        raise CrossCheckMismatch(f"closed form says smooth={smooth}, enumeration found {strata}")
    if min(sum(b.aexp), sum(b.bexp)) == 0:
        return SmoothnessVerdict(True, Reason.EMPTY_SIDE)
    if smooth:
        return SmoothnessVerdict(True, Reason.UNIT_EXPONENT)
    return SmoothnessVerdict(False, Reason.BOTH_DEGREE_TWO, strata[0])


# --- explicit witness points -------------------------------------------


def _monomial(exp, z):
    out = Fraction(1)
    for e, x in zip(exp, z):
        out *= Fraction(x) ** e
    return out


def evaluate(b: ChartBinomial, z: Sequence, c) -> Fraction:
    return _monomial(b.aexp, z) - c * _monomial(b.bexp, z)


def gradient(b: ChartBinomial, z: Sequence, c) -> tuple[Fraction, ...]:
    def d(exp, i):
        if not exp[i]:
            return Fraction(0)
        lowered = list(exp)
        lowered[i] -= 1
        return exp[i] * _monomial(lowered, z)

    return tuple(d(b.aexp, i) - c * d(b.bexp, i) for i in range(b.dim))


def witness_point(b: ChartBinomial, stratum: frozenset[int]) -> tuple[int, ...]:
    return tuple(0 if i in stratum else 1 for i in range(b.dim))


@dataclass(frozen=True)
class ChartReport:
    vertex: int
    binomial: ChartBinomial
    verdict: SmoothnessVerdict


def smoothness_report(poly: DelzantPolytope, sub: AffineSubspace) -> list[ChartReport]:
    out = []
    for i, frame in enumerate(poly.frames):
        b = build_binomial(frame, sub)
        out.append(ChartReport(i, b, is_smooth(b)))
    return out
