import functools
import itertools
import random
from math import gcd

import pytest

from delzant_slice.analysis import equivalence_verdict
from delzant_slice.polytope import cube, hirzebruch, product, simplex
from delzant_slice.subspace import enumerate_saturated_bases, new_subspace, random_saturated_basis


def corpus():
    """The builtin corpus used by the corpus-wide properties."""
    out = {f"simplex({n})": simplex(n) for n in (2, 3, 4)}
    out.update({f"cube({n})": cube(n) for n in (2, 3)})
    out.update({f"hirzebruch({k})": hirzebruch(k) for k in range(4)})
    out["simplex(1)xsimplex(2)"] = product(simplex(1), simplex(2))
    return out


def corpus_pairs(random_per_polytope=100, height=3, seed=20261019):
    """(name, polytope, subspace) pairs: all height-3 lines in dim 2, random hyperplanes above."""
    rng = random.Random(seed)
    for name, poly in corpus().items():
        if poly.dim == 2:
            bases = list(enumerate_saturated_bases(2, height))
        else:
            bases = [random_saturated_basis(rng, poly.dim) for _ in range(random_per_polytope)]
        for b in bases:
            yield name, poly, new_subspace(b)


@functools.cache
def corpus_reports():
    """Equivalence reports for every corpus pair, computed once per session."""
    return tuple((name, poly, sub, equivalence_verdict(poly, sub)) for name, poly, sub in corpus_pairs())


def leibniz_det(M):
    """Determinant by the permutation expansion; independent of the library's elimination."""
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= M[i][perm[i]]
        total += term
    return total


def determinantal_divisors(M):
    """Elementary divisors from gcds of k x k minors (D_k / D_{k-1})."""
    m, n = len(M), len(M[0])
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, leibniz_det([[M[r][c] for c in cols] for r in rows]))
        if g == 0:
            out += [0] * (min(m, n) - k + 1)
            break
        out.append(g // prev)
        prev = g
    return out


@pytest.fixture(scope="session")
def cp2():
    return simplex(2, 1)


@pytest.fixture(scope="session")
def square():
    return cube(2, 1)
