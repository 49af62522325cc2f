"""Exact cone membership by phase-one simplex with integer (fraction-free) pivoting.

Decides whether ``target = sum c_i g_i`` has a solution with rational
``c_i >= 0``.  Entries stay integral throughout: every row of the tableau
shares the denominator ``d`` (the previous pivot), and each pivot divides
exactly by it.  Bland's rule prevents cycling.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

__all__ = ["nonnegative_combination", "in_cone"]


def nonnegative_combination(
    gens: Sequence[Sequence[int]], target: Sequence[int]
) -> Optional[list[Fraction]]:
    """Return ``c >= 0`` with ``sum c_i gens[i] == target``, or ``None``."""
    m = len(target)
    ng = len(gens)
    if any(len(g) != m for g in gens):
        raise ValueError("generator dimension mismatch")
    if not any(target):
        return [Fraction(0)] * ng
    if ng == 0:
        return None

    # rows: constraint i reads sum_j g_j[i] x_j + a_i = b_i with b_i >= 0
    rows = []
    for i in range(m):
        sign = -1 if target[i] < 0 else 1
        rows.append([sign * g[i] for g in gens] + [sign * target[i]])
    rhs = ng
    # objective row: total infeasibility sum_i a_i = sum_i (b_i - A_i x)
    obj = [sum(r[j] for r in rows) for j in range(ng + 1)]
    basis = [ng + 1 + i for i in range(m)]  # artificials, never re-enter
    d = 1

    while True:
        if obj[rhs] == 0:
            break
        col = next((j for j in range(ng) if obj[j] > 0), None)
        if col is None:
            return None
        best = None
        for i, r in enumerate(rows):
            a = r[col]
            if a > 0:
                if best is None:
                    best = i
                else:
                    # compare r[rhs]/a with rows[best][rhs]/rows[best][col]
                    lhs = r[rhs] * rows[best][col]
                    cur = rows[best][rhs] * a
                    if lhs < cur or (lhs == cur and basis[i] < basis[best]):
                        best = i
        assert best is not None  # obj[col] > 0 forces a positive entry
        piv = rows[best]
        p = piv[col]
        for i, r in enumerate(rows):
            if i != best:
                f = r[col]
                rows[i] = [(p * x - f * y) // d for x, y in zip(r, piv)]
        f = obj[col]
        obj = [(p * x - f * y) // d for x, y in zip(obj, piv)]
        basis[best] = col
        d = p

    sol = [Fraction(0)] * ng
    for i, b in enumerate(basis):
        if b < ng:
            sol[b] = Fraction(rows[i][rhs], d)
    return sol


def in_cone(gens: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    return nonnegative_combination(gens, target) is not None
