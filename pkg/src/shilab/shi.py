"""Sign types, dominant Shi regions and their minimal elements, small roots and lowness."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .affine_weyl import AffineElement, AffineRoot, element_from_inversions
from .cone import in_cone
from .ideals import (
    Antichain,
    RootIdeal,
    RootSet,
    l_set,
    minimal_elements,
    up_closure,
)
from .root_system import Root, RootSystem

__all__ = [
    "SignType",
    "DominantRegion",
    "InadmissibleSignType",
    "zeta",
    "sign_type_of_ideal",
    "ideal_of_sign_type",
    "is_admissible_dominant",
    "region_from_antichain",
    "region_from_ideal",
    "minimal_element_of_ideal",
    "small_roots",
    "cone_member",
    "is_low",
    "descent_antichain_by_flip",
    "descent_roots_of_region",
]

_SIGNS = "-0+"


class InadmissibleSignType(ValueError):
    pass


@dataclass(frozen=True)
class SignType:
    """A map ``Phi_0^+ -> {-, 0, +}`` stored as a string in canonical root order."""

    rs: RootSystem = field(repr=False)
    entries: str

    def __post_init__(self):
        if len(self.entries) != self.rs.num_positive or set(self.entries) - set(_SIGNS):
            raise ValueError(f"bad sign type {self.entries!r} for {self.rs.cartan}")

    def __str__(self):
        return self.entries

    def __getitem__(self, r: Root) -> str:
        return self.entries[self.rs.index[r]]

    def is_dominant(self) -> bool:
        return "-" not in self.entries

    @property
    def plus_mask(self) -> int:
        return sum(1 << i for i, c in enumerate(self.entries) if c == "+")

    def with_entry(self, r: Root, sign: str) -> "SignType":
        i = self.rs.index[r]
        e = self.entries
        return SignType(self.rs, e[:i] + sign + e[i + 1:])


def zeta(w: AffineElement) -> SignType:
    return SignType(w.rs, "".join(_SIGNS[(k > 0) - (k < 0) + 1] for k in w.k_vector))


def sign_type_of_ideal(psi: RootSet) -> SignType:
    return SignType(psi.rs, "".join("+" if psi.mask >> i & 1 else "0"
                                    for i in range(psi.rs.num_positive)))


def is_admissible_dominant(x: SignType) -> bool:
    """Dominant sign types are admissible exactly when their ``+`` set is a root ideal."""
    if not x.is_dominant():
        return False
    m = x.plus_mask
    up = x.rs.leq_masks
    return all(up[i] & ~m == 0 for i in range(x.rs.num_positive) if m >> i & 1)


def ideal_of_sign_type(x: SignType) -> RootIdeal:
    if not is_admissible_dominant(x):
        raise InadmissibleSignType(f"{x} is not an admissible dominant sign type")
    return RootIdeal(x.rs, x.plus_mask)


@lru_cache(maxsize=None)
def minimal_element_of_ideal(psi: RootSet) -> AffineElement:
    """The element whose inversion set is ``L_psi``."""
    return element_from_inversions(psi.rs, l_set(psi))


@dataclass(frozen=True)
class DominantRegion:
    ideal: RootIdeal
    antichain: Antichain
    sign_type: SignType
    minimal_element: AffineElement

    @property
    def rs(self) -> RootSystem:
        return self.ideal.rs

    def inequalities(self) -> list[tuple[Root, int, str]]:
        """Open-polytope description as ``(root, bound, direction)`` triples.

        ``<x, b> > 1`` for ``b`` in the ideal; ``0 < <x, b> < 1`` otherwise.
        """
        out = []
        for b in self.rs.positive_roots:
            if b in self.ideal:
                out.append((b, 1, ">"))
            else:
                out.append((b, 0, ">"))
                out.append((b, 1, "<"))
        return out


def region_from_ideal(psi: RootIdeal) -> DominantRegion:
    return DominantRegion(
        psi, minimal_elements(psi), sign_type_of_ideal(psi), minimal_element_of_ideal(psi)
    )


def region_from_antichain(a: Antichain) -> DominantRegion:
    return region_from_ideal(up_closure(a))


def small_roots(rs: RootSystem) -> frozenset:
    """``{a, delta - a : a in Phi_0^+}``."""
    return frozenset(
        r for a in rs.positive_roots for r in (AffineRoot(a, 0), AffineRoot(-a, 1))
    )


def cone_member(beta: AffineRoot, gens: Iterable[AffineRoot]) -> bool:
    """Whether ``beta`` is a nonnegative rational combination of ``gens``."""
    gens = list(gens)
    if beta in gens:
        return True
    return in_cone([g.key for g in gens], beta.key)


def is_low(w: AffineElement) -> bool:
    """``N(w) subset cone(Sigma cap N(w))``.

    Sums of two already-certified members are accepted without an LP; any
    remaining root goes through the exact simplex.
    """
    inv = w.inversions()
    sigma = small_roots(w.rs)
    gens = [r for r in inv if r in sigma]
    certified = {r.key for r in gens}
    rest = sorted(
        (r for r in inv if r.key not in certified),
        key=lambda r: (abs(r.level), abs(r.finite.height)),
    )
    keys = [g.key for g in gens]
    for r in rest:
        rk = r.key
        if any(tuple(x - y for x, y in zip(rk, gk)) in certified for gk in keys):
            certified.add(rk)
            continue
        if not in_cone(keys, rk):
            return False
        certified.add(rk)
    return True


def descent_antichain_by_flip(x: SignType) -> RootSet:
    """Positions whose single ``+ -> 0`` flip keeps the sign type admissible."""
    if not is_admissible_dominant(x):
        raise InadmissibleSignType(f"{x} is not an admissible dominant sign type")
    rs = x.rs
    flippable = 0
    for i, c in enumerate(x.entries):
        if c == "+" and is_admissible_dominant(x.with_entry(rs.positive_roots[i], "0")):
            flippable |= 1 << i
    return RootSet(rs, flippable)


def descent_roots_of_region(region: DominantRegion) -> frozenset:
    """``{delta - a : a flippable}``, the walls separating the region from ``C_o``."""
    return frozenset(AffineRoot(-a, 1) for a in descent_antichain_by_flip(region.sign_type))
