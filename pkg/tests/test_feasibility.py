from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from delzant_slice.feasibility import nonnegative_solution


def test_trivial():
    assert nonnegative_solution([[1, 1]], [1]) is not None
    assert nonnegative_solution([[1, 1]], [-1]) is None


def test_unique_point():
    x = nonnegative_solution([[1, -1], [1, 1]], [0, 1])
    assert x == (Fraction(1, 2), Fraction(1, 2))


def test_redundant_rows():
    x = nonnegative_solution([[1, 2], [2, 4]], [3, 6])
    assert x is not None and x[0] + 2 * x[1] == 3


def test_degenerate_does_not_cycle():
    # a classic degenerate system; Bland's rule must terminate
    A = [[Fraction(1, 4), -8, -1, 9], [Fraction(1, 2), -12, Fraction(-1, 2), 3], [0, 0, 1, 0]]
    assert nonnegative_solution(A, [0, 0, 1]) is not None


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda m: st.tuples(
            st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=m, max_size=m),
            st.lists(st.integers(-3, 3), min_size=m, max_size=m),
        )
    )
)
def test_agrees_with_float_lp(data):
    A, b = data
    x = nonnegative_solution(A, b)
    res = linprog(np.zeros(4), A_eq=np.array(A, float), b_eq=np.array(b, float), bounds=[(0, None)] * 4, method="highs")
    assert (x is not None) == (res.status == 0)
    if x is not None:
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(A, b))
