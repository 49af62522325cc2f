"""Brute-force ground truth built from breadth-first search of W by length."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

from .affine_weyl import AffineElement, AffineRoot, identity, simple_reflections
from .ideals import RootSet, powers
from .root_system import RootSystem
from .shi import SignType, cone_member, is_low, zeta

__all__ = [
    "BallOfW",
    "Fiber",
    "Certificate",
    "MinimumNotUnique",
    "InsufficientRadius",
    "bfs",
    "iter_layers",
    "fibers",
    "required_radius",
    "dominant_minima",
    "dominant_low_elements",
    "fiber_census",
    "certify_small",
    "orbit_count",
    "finite_weyl_order",
    "convexity_counterexamples",
]


class MinimumNotUnique(AssertionError):
    """Two distinct elements of one sign-type fiber tie for minimal length."""


class InsufficientRadius(ValueError):
    pass


@dataclass
class BallOfW:
    rs: RootSystem
    radius: int
    layers: list[list[AffineElement]]
    dominant_only: bool = False

    @property
    def elements(self) -> list[AffineElement]:
        return [w for layer in self.layers for w in layer]

    def counts(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def __len__(self):
        return sum(self.counts())


@dataclass
class Fiber:
    sign_type: SignType
    members: list[AffineElement] = field(default_factory=list)
    minimum: Optional[AffineElement] = None


def _sort_key(w: AffineElement):
    return (w.u, w.lam)


def iter_layers(rs: RootSystem, dominant_only: bool = False) -> Iterator[list[AffineElement]]:
    """Yield the elements of length 0, 1, 2, ... (unbounded).

    With ``dominant_only`` the search stays inside the minimal coset
    representatives, which are closed under deleting a last letter.
    """
    gens = simple_reflections(rs)
    layer = [identity(rs)]
    while True:
        yield layer
        nxt = set()
        for w in layer:
            for i, s in enumerate(gens):
                if w.is_descent(i):
                    continue
                v = w * s
                if dominant_only and not v.is_dominant():
                    continue
                nxt.add(v)
        layer = sorted(nxt, key=_sort_key)


def bfs(rs: RootSystem, radius: int, dominant_only: bool = False) -> BallOfW:
    """All elements of length at most ``radius``, grouped by length."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    layers = []
    for k, layer in enumerate(iter_layers(rs, dominant_only)):
        layers.append(layer)
        if k == radius:
            break
    return BallOfW(rs, radius, layers, dominant_only)


def fibers(ball: BallOfW) -> list[Fiber]:
    """Group the ball by sign type; every fiber records its unique shortest member."""
    table: dict[str, Fiber] = {}
    for w in ball.elements:  # increasing length
        x = zeta(w)
        f = table.get(x.entries)
        if f is None:
            table[x.entries] = Fiber(x, [w], w)
            continue
        if w.length == f.minimum.length:
            raise MinimumNotUnique(
                f"sign type {x} has two shortest members {f.minimum.reduced_word()} "
                f"and {w.reduced_word()}"
            )
        f.members.append(w)
    return sorted(table.values(), key=lambda f: (f.minimum.length, f.sign_type.entries))


def required_radius(rs: RootSystem) -> int:
    """Length of the longest dominant minimal element (that of the full ideal)."""
    return sum(len(p) for p in powers(RootSet(rs, (1 << rs.num_positive) - 1)))


def dominant_minima(ball: BallOfW, fiber_list: Optional[list[Fiber]] = None) -> frozenset:
    need = required_radius(ball.rs)
    if ball.radius < need:
        raise InsufficientRadius(
            f"radius {ball.radius} is too small for {ball.rs.cartan}; need at least {need}"
        )
    fiber_list = fibers(ball) if fiber_list is None else fiber_list
    return frozenset(f.minimum for f in fiber_list if f.sign_type.is_dominant())


def dominant_low_elements(ball: BallOfW) -> frozenset:
    return frozenset(w for w in ball.elements if w.is_dominant() and is_low(w))


@dataclass
class Census:
    radius: int
    count: int
    expected: int
    stabilized: bool


def fiber_census(rs: RootSystem, max_radius: int) -> Census:
    """Grow the ball until two consecutive layers add no new sign type.

    The count is cross-checked against ``(h+1)^n``; ``stabilized`` is False if
    the radius cap is hit first or the two disagree.
    """
    expected = (rs.coxeter_number + 1) ** rs.rank
    seen: set[str] = set()
    quiet = 0
    radius = 0
    for radius, layer in enumerate(iter_layers(rs)):
        before = len(seen)
        seen.update(zeta(w).entries for w in layer)
        quiet = quiet + 1 if len(seen) == before else 0
        if quiet >= 2 or radius >= max_radius:
            break
    return Census(radius, len(seen), expected, quiet >= 2 and len(seen) == expected)


@dataclass
class Certificate:
    """Witnesses ``w`` with ``beta in N(w)`` and ``alpha not in N(w)``."""

    beta: AffineRoot
    witnesses: dict = field(default_factory=dict)  # alpha -> reduced word
    unwitnessed: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unwitnessed


def _positive_roots_up_to(rs: RootSystem, level: int) -> list[AffineRoot]:
    out = [AffineRoot(a, 0) for a in rs.positive_roots]
    for k in range(1, level + 1):
        out += [AffineRoot(a, k) for a in rs.roots]
    return out


def certify_small(beta: AffineRoot, rs: RootSystem, radius: int,
                  ball: Optional[BallOfW] = None) -> Certificate:
    """Bounded search showing no positive root of level ``<= level(beta)+1`` lies
    below ``beta`` in the dominance order.  A failure is inconclusive."""
    if not beta.is_positive():
        raise ValueError("beta must be a positive affine root")
    if ball is None or ball.radius < radius or ball.dominant_only:
        ball = bfs(rs, radius)
    holders = [w for w in ball.elements if w.length <= radius and beta in w.inversions()]
    cert = Certificate(beta)
    for alpha in _positive_roots_up_to(rs, beta.level + 1):
        if alpha == beta:
            continue
        for w in holders:
            if alpha not in w.inversions():
                cert.witnesses[alpha] = w.reduced_word()
                break
        else:
            cert.unwitnessed.append(alpha)
    return cert


def _reflection_action(rs: RootSystem, lattice: str):
    A = rs.cartan_matrix
    n = rs.rank
    if lattice == "root":
        # s_i(b) = b - <alpha_i^vee, b> alpha_i
        return [[A[i][j] for j in range(n)] for i in range(n)]
    if lattice == "coroot":
        # s_i(mu) = mu - <alpha_i, mu> alpha_i^vee
        return [[A[j][i] for j in range(n)] for i in range(n)]
    raise ValueError(f"lattice must be 'root' or 'coroot', got {lattice!r}")


def orbit_count(rs: RootSystem, lattice: str = "coroot") -> int:
    """Number of ``W_0``-orbits on ``L / (h+1) L`` by explicit partitioning."""
    pair = _reflection_action(rs, lattice)
    n, q = rs.rank, rs.coxeter_number + 1
    seen = set()
    orbits = 0
    for start in product(range(q), repeat=n):
        if start in seen:
            continue
        orbits += 1
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for i in range(n):
                p = sum(c * x[j] for j, c in enumerate(pair[i]))
                if p % q:
                    y = list(x)
                    y[i] = (y[i] - p) % q
                    y = tuple(y)
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
    return orbits


def finite_weyl_order(rs: RootSystem) -> int:
    """``|W_0|`` by enumerating the orbit of the identity under simple reflections."""
    gens = simple_reflections(rs)[1:]
    e = identity(rs)
    seen = {e}
    stack = [e]
    while stack:
        w = stack.pop()
        for s in gens:
            v = w * s
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen)


def convexity_counterexamples(w: AffineElement) -> list[AffineRoot]:
    """Positive roots up to the top level of ``N(w)`` on which membership in
    ``N(w)`` and in ``cone(N(w))`` disagree; empty for every genuine ``w``."""
    inv = w.inversions()
    if not inv:
        return []
    top = max(r.level for r in inv)
    gens = sorted(inv, key=lambda r: r.key)
    return [b for b in _positive_roots_up_to(w.rs, top)
            if cone_member(b, gens) != (b in inv)]
