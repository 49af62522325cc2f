"""Root ideals and antichains of the root poset, bracket powers and counting formulas.

Subsets of the positive roots are bitmasks over the canonical root order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Iterable, Union

from .affine_weyl import AffineRoot
from .root_system import CartanType, Root, RootSystem

__all__ = [
    "RootSet",
    "RootIdeal",
    "Antichain",
    "NotAnIdeal",
    "NotAnAntichain",
    "UnsupportedFormula",
    "minimal_elements",
    "up_closure",
    "enumerate_antichains",
    "enumerate_ideals",
    "bracket",
    "ideal_power",
    "powers",
    "l_set",
    "mu_formula",
    "catalan_product",
    "cellini_papi_count",
    "weyl_group_order",
]


class NotAnIdeal(ValueError):
    pass


class NotAnAntichain(ValueError):
    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


class UnsupportedFormula(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class RootSet:
    """An arbitrary subset of the positive roots.

    Equality ignores the subclass, so an ideal equals the plain set with the
    same members.
    """

    rs: RootSystem
    mask: int

    def __post_init__(self):
        pass

    def __eq__(self, other):
        if not isinstance(other, RootSet):
            return NotImplemented
        return self.mask == other.mask and self.rs == other.rs

    def __hash__(self):
        return hash((self.rs, self.mask))

    @classmethod
    def of(cls, rs: RootSystem, roots: Iterable[Root]):
        return cls(rs, rs.mask_of(roots))

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.rs.roots_of(self.mask)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return bin(self.mask).count("1")

    def __bool__(self):
        return bool(self.mask)

    def __contains__(self, r):
        i = self.rs.index.get(r)
        return i is not None and bool(self.mask >> i & 1)

    def names(self) -> list[str]:
        return [self.rs.name(r) for r in self.roots]

    def __repr__(self):
        return f"{type(self).__name__}({self.rs.cartan}, {{{', '.join(self.names())}}})"


class RootIdeal(RootSet):
    """An up-closed subset of ``(Phi_0^+, <=)``."""

    def __post_init__(self):
        up = self.rs.leq_masks
        m = self.mask
        for i in _bits(m):
            if up[i] & ~m:
                missing = self.rs.roots_of(up[i] & ~m)[0]
                raise NotAnIdeal(
                    f"not up-closed: contains {self.rs.name(self.rs.positive_roots[i])} "
                    f"but not {self.rs.name(missing)}"
                )


class Antichain(RootSet):
    """A set of pairwise incomparable positive roots."""

    def __post_init__(self):
        up = self.rs.leq_masks
        m = self.mask
        for i in _bits(m):
            other = up[i] & m & ~(1 << i)
            if other:
                P = self.rs.positive_roots
                a, b = P[i], self.rs.roots_of(other)[0]
                raise NotAnAntichain(
                    f"{self.rs.name(a)} and {self.rs.name(b)} are comparable", (a, b)
                )


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _as_mask(rs: RootSystem, s) -> int:
    if isinstance(s, RootSet):
        return s.mask
    return rs.mask_of(s)


def minimal_elements(psi: RootSet) -> Antichain:
    rs, m = psi.rs, psi.mask
    down = rs.geq_masks
    return Antichain(rs, sum(1 << i for i in _bits(m) if down[i] & m == 1 << i))


def up_closure(a: Union[Antichain, Iterable[Root]], rs: RootSystem = None) -> RootIdeal:
    """The root ideal generated by an antichain (validated)."""
    if not isinstance(a, Antichain):
        a = Antichain(rs, rs.mask_of(a))
    rs = a.rs
    up = rs.leq_masks
    m = 0
    for i in _bits(a.mask):
        m |= up[i]
    return RootIdeal(rs, m)


@lru_cache(maxsize=None)
def _antichain_masks(rs: RootSystem) -> tuple[int, ...]:
    N = rs.num_positive
    full = (1 << N) - 1
    incomparable = [full & ~(u | d) for u, d in zip(rs.leq_masks, rs.geq_masks)]
    out = []

    def extend(start: int, allowed: int, cur: int):
        out.append(cur)
        for j in range(start, N):
            if allowed >> j & 1:
                extend(j + 1, allowed & incomparable[j], cur | 1 << j)

    extend(0, full, 0)
    return tuple(out)


def enumerate_antichains(rs: RootSystem) -> list[Antichain]:
    return [Antichain(rs, m) for m in _antichain_masks(rs)]


def enumerate_ideals(rs: RootSystem) -> list[RootIdeal]:
    """All root ideals, in the order of :func:`enumerate_antichains`."""
    return [up_closure(a) for a in enumerate_antichains(rs)]


@lru_cache(maxsize=None)
def _sum_partners(rs: RootSystem) -> tuple[tuple[tuple[int, int], ...], ...]:
    # for each i: pairs (j, k) with P[i] + P[j] = P[k]
    P, idx = rs.positive_roots, rs.index
    out = []
    for a in P:
        row = []
        for j, b in enumerate(P):
            k = idx.get(a + b)
            if k is not None:
                row.append((j, k))
        out.append(tuple(row))
    return tuple(out)


def _bracket_mask(rs: RootSystem, m1: int, m2: int) -> int:
    partners = _sum_partners(rs)
    out = 0
    for i in _bits(m1):
        for j, k in partners[i]:
            if m2 >> j & 1:
                out |= 1 << k
    return out


def bracket(p1, p2, rs: RootSystem = None) -> RootSet:
    """``{a1 + a2 : a_i in p_i, a1 + a2 in Phi_0^+}``."""
    rs = rs or getattr(p1, "rs", None) or p2.rs
    return RootSet(rs, _bracket_mask(rs, _as_mask(rs, p1), _as_mask(rs, p2)))


@lru_cache(maxsize=4096)
def _power_masks(rs: RootSystem, mask: int) -> tuple[int, ...]:
    seq = []
    cur = mask
    while cur:
        seq.append(cur)
        cur = _bracket_mask(rs, cur, mask)
    return tuple(seq)


def powers(psi: RootSet) -> list[RootSet]:
    """The nonempty powers ``[psi^1, psi^2, ...]``."""
    return [RootSet(psi.rs, m) for m in _power_masks(psi.rs, psi.mask)]


def ideal_power(psi: RootSet, k: int) -> RootSet:
    if k < 1:
        raise ValueError("power must be >= 1")
    seq = _power_masks(psi.rs, psi.mask)
    return RootSet(psi.rs, seq[k - 1] if k <= len(seq) else 0)


def l_set(psi: RootSet) -> frozenset:
    """``{k delta - b : k >= 1, b in psi^k}``."""
    out = set()
    for k, p in enumerate(powers(psi), start=1):
        out.update(AffineRoot(-b, k) for b in p.roots)
    return frozenset(out)


def mu_formula(cartan: CartanType) -> int:
    """Closed-form number of dominant Shi regions in the classical types."""
    fam, n = cartan.family, cartan.rank
    if fam == "A":
        return _integral(Fraction(comb(2 * n + 2, n + 1), n + 2))
    if fam in "BC":
        return comb(2 * n, n)
    if fam == "D":
        return comb(2 * n - 1, n) + comb(2 * n - 2, n)
    raise UnsupportedFormula(f"no classical formula for type {cartan}")


def _integral(q: Fraction) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {q}")
    return int(q)


def catalan_product(rs: RootSystem) -> int:
    h = rs.coxeter_number
    return _integral(prod((Fraction(e + h + 1, e + 1) for e in rs.exponents), start=Fraction(1)))


def weyl_group_order(rs: RootSystem) -> int:
    return prod(e + 1 for e in rs.exponents)


def cellini_papi_count(rs: RootSystem) -> int:
    h = rs.coxeter_number
    return _integral(Fraction(prod(e + h + 1 for e in rs.exponents), weyl_group_order(rs)))
