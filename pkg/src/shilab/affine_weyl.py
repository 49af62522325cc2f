"""The affine Weyl group ``W = Q^vee x| W_0`` acting on affine roots.

An element ``w = t_lam . u`` acts on ``V_0`` by ``x -> u(x) + lam``.  The finite
part ``u`` is stored as the images of the simple roots (simple-root
coordinates), the translation ``lam`` in simple-coroot coordinates, so all
arithmetic is on small integers.

Index ``0`` is the affine simple reflection ``s_0`` (reflection in the
hyperplane ``<x, alpha_0> = 1``); indices ``1..n`` are the finite ones.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .root_system import Root, RootSystem

__all__ = [
    "AffineRoot",
    "AffineElement",
    "NotAnInversionSet",
    "identity",
    "simple_reflections",
    "simple_root",
    "from_word",
    "multiply",
    "element_from_inversions",
    "inversions_from_word",
    "inversions_by_scan",
    "word_relabelings",
    "affine_name",
]


class NotAnInversionSet(ValueError):
    """The given set of affine roots is not ``N(w)`` for any ``w``."""


@dataclass(frozen=True)
class AffineRoot:
    """The affine root ``finite + level * delta``."""

    finite: Root
    level: int

    def is_positive(self) -> bool:
        if self.finite.is_positive():
            return self.level >= 0
        return self.level >= 1

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(-self.finite, -self.level)

    def __add__(self, other: "AffineRoot") -> "AffineRoot":
        return AffineRoot(self.finite + other.finite, self.level + other.level)

    def __sub__(self, other: "AffineRoot") -> "AffineRoot":
        return AffineRoot(self.finite - other.finite, self.level - other.level)

    @property
    def key(self) -> tuple[int, ...]:
        """Coordinates ``(c_1, ..., c_n, level)`` in the basis ``Delta_0, delta``."""
        return self.finite.coeffs + (self.level,)

    def __repr__(self):
        return f"AffineRoot({list(self.finite.coeffs)}, {self.level})"


def simple_root(rs: RootSystem, i: int) -> AffineRoot:
    """``alpha_i`` for ``i >= 1`` and ``delta - alpha_0`` for ``i = 0``."""
    if i == 0:
        return AffineRoot(-rs.highest_root, 1)
    return AffineRoot(rs.simple_roots[i - 1], 0)


def _delta(k: int) -> str:
    return "δ" if k == 1 else f"{k}δ"


def affine_name(rs: RootSystem, r: AffineRoot) -> str:
    """Human readable form, e.g. ``2δ-e13`` or ``e12+δ``."""
    k = r.level
    if r.finite.is_positive():
        base = rs.name(r.finite)
        if k == 0:
            return base
        return f"{base}+{_delta(k)}" if k > 0 else f"{base}-{_delta(-k)}"
    base = rs.name(-r.finite)
    if k == 0:
        return f"-{base}"
    return f"{_delta(k)}-{base}" if k > 0 else f"-{_delta(-k)}-{base}"


@dataclass(frozen=True)
class AffineElement:
    """``w = t_lam . u``: ``u`` as images of simple roots, ``lam`` in coroot basis."""

    u: tuple[tuple[int, ...], ...]
    lam: tuple[int, ...]
    rs: RootSystem = field(compare=False, repr=False)

    # -- finite part ----------------------------------------------------------

    def apply_finite(self, r: Root) -> Root:
        out = [0] * len(r.coeffs)
        for c, img in zip(r.coeffs, self.u):
            if c:
                for k, x in enumerate(img):
                    out[k] += c * x
        return Root(tuple(out))

    @cached_property
    def _u_coroot(self) -> tuple[tuple[int, ...], ...]:
        # images of simple coroots, in coroot coordinates
        rs = self.rs
        return tuple(rs.coroot_coeffs(Root(img)) for img in self.u)

    def apply_coroot(self, mu: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(mu)
        for m, img in zip(mu, self._u_coroot):
            if m:
                for k, x in enumerate(img):
                    out[k] += m * x
        return tuple(out)

    @cached_property
    def _negated_positive(self) -> frozenset:
        """``{a in Phi_0^+ : u^{-1}(a) in Phi_0^-}``."""
        out = set()
        for b in self.rs.positive_roots:
            ub = self.apply_finite(b)
            if not ub.is_positive():
                out.add(-ub)
        return frozenset(out)

    # -- group structure ------------------------------------------------------

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        return multiply(self, other)

    def inverse(self) -> "AffineElement":
        rs = self.rs
        n = rs.rank
        # solve u^{-1}: images of simple roots under u^{-1}
        images = {}
        for b in rs.roots:
            ub = self.apply_finite(b)
            if ub.height == 1 and ub.is_positive():
                images[ub.coeffs.index(1)] = b.coeffs
        uinv = tuple(images[i] for i in range(n))
        tmp = AffineElement(uinv, (0,) * n, rs)
        neg = tmp.apply_coroot(tuple(-x for x in self.lam))
        return AffineElement(uinv, neg, rs)

    def is_identity(self) -> bool:
        return not any(self.lam) and all(
            img == r.coeffs for img, r in zip(self.u, self.rs.simple_roots)
        )

    # -- action on affine roots -------------------------------------------------

    def act(self, r: AffineRoot) -> AffineRoot:
        ua = self.apply_finite(r.finite)
        return AffineRoot(ua, r.level - self.rs.pairing(self.lam, ua))

    # -- Shi coefficients, inversions, length -----------------------------------

    @cached_property
    def k_vector(self) -> tuple[int, ...]:
        """Shi coefficients ``k(w, a)`` in canonical positive-root order."""
        rs, neg = self.rs, self._negated_positive
        return tuple(
            rs.pairing(self.lam, a) - (a in neg) for a in rs.positive_roots
        )

    def shi_coefficients(self) -> tuple[int, ...]:
        return self.k_vector

    @cached_property
    def _inversions(self) -> frozenset:
        out = set()
        for a, k in zip(self.rs.positive_roots, self.k_vector):
            if k < 0:
                out.update(AffineRoot(a, j) for j in range(-k))
            elif k > 0:
                na = -a
                out.update(AffineRoot(na, j) for j in range(1, k + 1))
        return frozenset(out)

    def inversions(self) -> frozenset:
        """``N(w)``, read off the Shi coefficients.

        ``a + j delta`` (``0 <= j < -k(w,a)``) and ``j delta - a``
        (``1 <= j <= k(w,a)``) are exactly the positive affine roots sent
        negative by ``w^{-1}``.
        """
        return self._inversions

    @property
    def length(self) -> int:
        return sum(abs(k) for k in self.k_vector)

    def is_descent(self, i: int) -> bool:
        """Whether ``s_i`` is a right descent, i.e. ``w(alpha_i) < 0``."""
        return not self.act(simple_root(self.rs, i)).is_positive()

    def right_descents(self) -> frozenset:
        return frozenset(i for i in range(self.rs.rank + 1) if self.is_descent(i))

    def left_descents(self) -> frozenset:
        inv = self._inversions
        return frozenset(
            i for i in range(self.rs.rank + 1) if simple_root(self.rs, i) in inv
        )

    def nd_r(self) -> frozenset:
        """Right descent roots ``-w(alpha_s)`` for ``s`` in ``D_R(w)``."""
        out = set()
        for i in range(self.rs.rank + 1):
            img = self.act(simple_root(self.rs, i))
            if not img.is_positive():
                out.add(-img)
        return frozenset(out)

    def is_dominant(self) -> bool:
        return all(k >= 0 for k in self.k_vector)

    def reduced_word(self) -> list[int]:
        """Reduced word, peeling the lowest-index left descent first."""
        return _peel(self.rs, set(self._inversions))

    def word_string(self) -> str:
        w = self.reduced_word()
        return "".join(f"s{i}" for i in w) if w else "e"

    def __repr__(self):
        return f"AffineElement({self.rs.cartan}, word={self.reduced_word()})"


def identity(rs: RootSystem) -> AffineElement:
    return AffineElement(tuple(r.coeffs for r in rs.simple_roots), (0,) * rs.rank, rs)


def simple_reflections(rs: RootSystem) -> list[AffineElement]:
    """``[s_0, s_1, ..., s_n]``."""
    n = rs.rank
    theta = rs.highest_root
    s0 = AffineElement(
        tuple(rs.reflect_by(theta, a).coeffs for a in rs.simple_roots),
        rs.coroot_coeffs(theta),
        rs,
    )
    out = [s0]
    for i in range(n):
        out.append(
            AffineElement(
                tuple(rs.reflect(i, a).coeffs for a in rs.simple_roots), (0,) * n, rs
            )
        )
    return out


def multiply(a: AffineElement, b: AffineElement) -> AffineElement:
    """Composition ``a o b`` of affine maps."""
    if a.rs != b.rs:
        raise ValueError(f"cannot multiply elements of {a.rs.cartan} and {b.rs.cartan}")
    u = tuple(a.apply_finite(Root(img)).coeffs for img in b.u)
    shift = a.apply_coroot(b.lam)
    lam = tuple(x + y for x, y in zip(a.lam, shift))
    return AffineElement(u, lam, a.rs)


def from_word(rs: RootSystem, word: Iterable[int]) -> AffineElement:
    gens = simple_reflections(rs)
    w = identity(rs)
    for i in word:
        w = multiply(w, gens[i])
    return w


def _reflect_affine(rs: RootSystem, i: int, r: AffineRoot) -> AffineRoot:
    if i == 0:
        theta = rs.highest_root
        p = 2 * rs.inner(theta, r.finite) // rs.norm2(theta)
        return AffineRoot(r.finite - theta * p, r.level + p)
    return AffineRoot(rs.reflect(i - 1, r.finite), r.level)


def _peel(rs: RootSystem, inv: set) -> list[int]:
    simple = [simple_root(rs, i) for i in range(rs.rank + 1)]
    word = []
    while inv:
        for i, a in enumerate(simple):
            if a in inv:
                break
        else:
            raise NotAnInversionSet("nonempty set contains no simple affine root")
        inv.discard(a)
        nxt = set()
        for r in inv:
            s = _reflect_affine(rs, i, r)
            if not s.is_positive():
                raise NotAnInversionSet(f"reflection by s{i} produced non-positive root {s!r}")
            nxt.add(s)
        inv = nxt
        word.append(i)
    return word


def element_from_inversions(rs: RootSystem, roots: Iterable[AffineRoot]) -> AffineElement:
    """The unique ``w`` with ``N(w) = roots``; raises :class:`NotAnInversionSet`."""
    roots = set(roots)
    for r in roots:
        if not r.is_positive() or not rs.is_root(r.finite):
            raise NotAnInversionSet(f"{r!r} is not a positive affine root")
    return from_word(rs, _peel(rs, roots))


def inversions_from_word(rs: RootSystem, word: Sequence[int]) -> frozenset:
    """``{a_{i1}, s_{i1}(a_{i2}), ...}`` for a reduced word.

    Raises ``ValueError`` when the word is not reduced.
    """
    gens = simple_reflections(rs)
    prefix = identity(rs)
    out = set()
    for i in word:
        r = prefix.act(simple_root(rs, i))
        if not r.is_positive() or r in out:
            raise ValueError(f"word {list(word)} is not reduced")
        out.add(r)
        prefix = multiply(prefix, gens[i])
    return frozenset(out)


def inversions_by_scan(w: AffineElement) -> frozenset:
    """``Phi^+ cap w(Phi^-)`` by testing every positive affine root up to a level bound.

    Affine roots with level above ``max_a |<lam, a>| + 1`` cannot be inverted,
    so the scan is exhaustive.
    """
    rs = w.rs
    winv = w.inverse()
    bound = max((abs(rs.pairing(w.lam, a)) for a in rs.positive_roots), default=0) + 1
    out = set()
    for a in rs.roots:
        start = 0 if a.is_positive() else 1
        for k in range(start, bound + 1):
            r = AffineRoot(a, k)
            if not winv.act(r).is_positive():
                out.add(r)
    return frozenset(out)


def word_relabelings(rs: RootSystem, word: Sequence[int], target: AffineElement) -> list[dict]:
    """Injective relabelings of the letters of ``word`` into ``{0..n}`` under
    which the word multiplies to ``target``."""
    letters = sorted(set(word))
    found = []
    for image in permutations(range(rs.rank + 1), len(letters)):
        relabel = dict(zip(letters, image))
        if from_word(rs, [relabel[x] for x in word]) == target:
            found.append(relabel)
    return found
