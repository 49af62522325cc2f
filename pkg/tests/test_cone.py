from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from shilab.cone import in_cone, nonnegative_combination


def _check(gens, target, sol):
    assert all(c >= 0 for c in sol)
    for i in range(len(target)):
        assert sum(c * g[i] for c, g in zip(sol, gens)) == target[i]


def test_known_decompositions():
    gens = [(1, 0), (0, 1)]
    assert nonnegative_combination(gens, (3, 5)) == [3, 5]
    assert nonnegative_combination(gens, (-1, 0)) is None
    sol = nonnegative_combination([(2, 0), (0, 3)], (1, 1))
    assert sol == [Fraction(1, 2), Fraction(1, 3)]
    assert nonnegative_combination([], (0, 0)) == []
    assert nonnegative_combination([], (1, 0)) is None
    assert in_cone([(1, 1, 0), (0, 1, 1)], (1, 2, 1))
    assert not in_cone([(1, 1, 0), (0, 1, 1)], (1, 1, 1))


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        nonnegative_combination([(1, 0), (1,)], (1, 0))


def test_degenerate_cycling_candidate():
    # many parallel and redundant generators; Bland's rule must terminate
    gens = [(1, 0, 0), (2, 0, 0), (1, 1, 0), (0, 1, 0), (1, 1, 1), (0, 0, 1), (1, 2, 1)]
    sol = nonnegative_combination(gens, (2, 2, 1))
    _check(gens, (2, 2, 1), sol)


vectors = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@settings(max_examples=400, deadline=None)
@given(st.lists(vectors, min_size=0, max_size=6), vectors)
def test_agrees_with_highs(gens, target):
    sol = nonnegative_combination(gens, target)
    if gens:
        res = linprog(np.zeros(len(gens)), A_eq=np.array(gens, dtype=float).T,
                      b_eq=np.array(target, dtype=float), bounds=(0, None), method="highs")
        feasible = res.status == 0
    else:
        feasible = not any(target)
    assert (sol is not None) == feasible
    if sol is not None:
        _check(gens, target, sol)
