"""Finite crystallographic root systems with exact arithmetic.

Roots are stored by their integer coordinates in the basis of simple roots;
ambient Euclidean coordinates (exact rationals) are derived on demand from the
standard models of each Cartan type.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Optional

__all__ = [
    "CartanType",
    "Root",
    "RootSystem",
    "RootSystemError",
    "build",
]


class RootSystemError(ValueError):
    """Invalid Cartan type or a root that does not belong to the system."""


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if not isinstance(n, int) or isinstance(n, bool):
            raise RootSystemError(f"rank must be an integer, got {n!r}")
        if fam in _MIN_RANK:
            ok = n >= _MIN_RANK[fam]
        elif fam == "E":
            ok = n in (6, 7, 8)
        elif fam == "F":
            ok = n == 4
        elif fam == "G":
            ok = n == 2
        else:
            raise RootSystemError(f"unknown Cartan family {fam!r}")
        if not ok:
            raise RootSystemError(f"invalid rank {n} for type {fam}")

    @classmethod
    def parse(cls, text: str, rank: Optional[int] = None) -> "CartanType":
        """Parse ``"A3"``, ``"A 3"`` or ``("A", 3)``-style input."""
        text = text.strip()
        if rank is None:
            fam, digits = text[:1], text[1:].strip()
            if not digits.isdigit():
                raise RootSystemError(f"cannot parse Cartan type {text!r}")
            rank = int(digits)
        else:
            fam = text
        return cls(fam.upper(), int(rank))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root written in the basis of simple roots."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "Root":
        return Root(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def is_positive(self) -> bool:
        # every root is either nonnegative or nonpositive in the simple basis
        return any(c > 0 for c in self.coeffs)

    def __repr__(self):
        return f"Root({list(self.coeffs)})"


def _unit(dim: int, i: int, scale=1) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(scale)
    return v


def _sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _add(a, b):
    return [x + y for x, y in zip(a, b)]


def _ambient_simple_roots(ct: CartanType) -> list[list[Fraction]]:
    fam, n = ct.family, ct.rank
    half = Fraction(1, 2)
    if fam == "A":
        return [_sub(_unit(n + 1, i), _unit(n + 1, i + 1)) for i in range(n)]
    if fam in "BCD":
        simple = [_sub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
        if fam == "B":
            simple.append(_unit(n, n - 1))
        elif fam == "C":
            simple.append(_unit(n, n - 1, 2))
        else:
            simple.append(_add(_unit(n, n - 2), _unit(n, n - 1)))
        return simple
    if fam == "G":
        return [
            [Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(-2), Fraction(1), Fraction(1)],
        ]
    if fam == "F":
        return [
            _sub(_unit(4, 1), _unit(4, 2)),
            _sub(_unit(4, 2), _unit(4, 3)),
            _unit(4, 3),
            [half, -half, -half, -half],
        ]
    # E_n inside the E8 lattice, Bourbaki numbering
    e8 = [
        [half, -half, -half, -half, -half, -half, -half, half],
        _add(_unit(8, 0), _unit(8, 1)),
    ]
    for i in range(6):
        e8.append(_sub(_unit(8, i + 1), _unit(8, i)))
    return e8[:n]


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


class RootSystem:
    """Finite crystallographic root system of a given Cartan type.

    Positive roots are listed by height and, within a height, in decreasing
    lexicographic order of their simple-root coordinates (so type ``A3`` reads
    ``e12, e23, e34, e13, e24, e14``).  The bilinear form is the ambient dot
    product rescaled so that short roots (all roots, when simply laced) have
    squared length 2.
    """

    def __init__(self, cartan: CartanType):
        self.cartan = cartan
        self.rank = n = cartan.rank
        self._ambient = _ambient_simple_roots(cartan)
        raw = [[_dot(a, b) for b in self._ambient] for a in self._ambient]
        short = min(raw[i][i] for i in range(n))
        scale = Fraction(2) / short
        self._form_scale = scale
        gram = [[raw[i][j] * scale for j in range(n)] for i in range(n)]
        assert all(x.denominator == 1 for row in gram for x in row)
        self.gram: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(x) for x in row) for row in gram
        )
        # cartan[i][j] = <alpha_i^vee, alpha_j>
        self.cartan_matrix: tuple[tuple[int, ...], ...] = tuple(
            tuple(2 * self.gram[i][j] // self.gram[i][i] for j in range(n))
            for i in range(n)
        )
        self.simple_roots: tuple[Root, ...] = tuple(
            Root(tuple(int(i == j) for j in range(n))) for i in range(n)
        )
        self.positive_roots: tuple[Root, ...] = self._close_positive_roots()
        self.index: dict[Root, int] = {r: i for i, r in enumerate(self.positive_roots)}
        self.highest_root: Root = self.positive_roots[-1]
        self.coxeter_number: int = self.highest_root.height + 1
        self.exponents: tuple[int, ...] = self._exponents()

    def _close_positive_roots(self) -> tuple[Root, ...]:
        found = set(self.simple_roots)
        queue = list(self.simple_roots)
        while queue:
            r = queue.pop()
            for i in range(self.rank):
                s = self.reflect(i, r)
                if s.is_positive() and s not in found:
                    found.add(s)
                    queue.append(s)
        return tuple(sorted(found, key=lambda r: (r.height, tuple(-c for c in r.coeffs))))

    def _exponents(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for r in self.positive_roots:
            counts[r.height] = counts.get(r.height, 0) + 1
        top = max(counts)
        exps = []
        for k in range(1, top + 1):
            exps += [k] * (counts.get(k, 0) - counts.get(k + 1, 0))
        return tuple(sorted(exps))

    def __repr__(self):
        return f"RootSystem({self.cartan})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.cartan == self.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __reduce__(self):
        return (build, (self.cartan,))

    # -- basic geometry -----------------------------------------------------

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """All roots: positive roots followed by their negatives."""
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(self.roots)

    def is_root(self, r: Root) -> bool:
        return r in self._root_set

    def inner(self, a: Root, b: Root) -> int:
        g = self.gram
        return sum(
            a.coeffs[i] * g[i][j] * b.coeffs[j]
            for i in range(self.rank)
            if a.coeffs[i]
            for j in range(self.rank)
        )

    def norm2(self, a: Root) -> int:
        return self.inner(a, a)

    def vector(self, a: Root) -> tuple[Fraction, ...]:
        """Ambient coordinates of a root (exact rationals)."""
        dim = len(self._ambient[0])
        out = [Fraction(0)] * dim
        for c, v in zip(a.coeffs, self._ambient):
            if c:
                for k in range(dim):
                    out[k] += c * v[k]
        return tuple(out)

    def ambient_inner(self, x, y) -> Fraction:
        """The rescaled bilinear form on ambient vectors."""
        return _dot(x, y) * self._form_scale

    def coroot(self, a: Root) -> tuple[Fraction, ...]:
        """Ambient coordinates of ``2a/<a,a>``."""
        f = Fraction(2, self.norm2(a))
        return tuple(f * x for x in self.vector(a))

    def coroot_coeffs(self, a: Root) -> tuple[int, ...]:
        """``a^vee`` in the basis of simple coroots."""
        na = self.norm2(a)
        out = []
        for i, c in enumerate(a.coeffs):
            q, r = divmod(c * self.gram[i][i], na)
            assert r == 0
            out.append(q)
        return tuple(out)

    def pairing(self, coroot_coeffs: Iterable[int], a: Root) -> int:
        """``<lam, a>`` for ``lam`` given in simple-coroot coordinates."""
        A = self.cartan_matrix
        total = 0
        for i, m in enumerate(coroot_coeffs):
            if m:
                row = A[i]
                total += m * sum(row[j] * c for j, c in enumerate(a.coeffs) if c)
        return total

    def reflect(self, i: int, r: Root) -> Root:
        """Simple reflection ``s_i`` applied to a root."""
        row = self.cartan_matrix[i]
        p = sum(row[j] * c for j, c in enumerate(r.coeffs) if c)
        if not p:
            return r
        coeffs = list(r.coeffs)
        coeffs[i] -= p
        return Root(tuple(coeffs))

    def reflect_by(self, a: Root, r: Root) -> Root:
        """Reflection ``s_a`` applied to ``r``."""
        p = 2 * self.inner(a, r) // self.norm2(a)
        return r - a * p if p else r

    # -- poset structure ------------------------------------------------------

    def add_roots(self, a: Root, b: Root) -> Optional[Root]:
        """``a + b`` if it is a positive root, else ``None``."""
        s = a + b
        return s if s in self.index else None

    def poset_leq(self, a: Root, b: Root) -> bool:
        return all(x <= y for x, y in zip(a.coeffs, b.coeffs))

    def height(self, a: Root) -> int:
        if a not in self.index:
            raise RootSystemError(f"{a!r} is not a positive root of {self.cartan}")
        return a.height

    @cached_property
    def leq_masks(self) -> tuple[int, ...]:
        """Bitmask of the up-set ``{b : a <= b}`` for each positive root ``a``."""
        P = self.positive_roots
        return tuple(
            sum(1 << j for j, b in enumerate(P) if self.poset_leq(a, b)) for a in P
        )

    @cached_property
    def geq_masks(self) -> tuple[int, ...]:
        """Bitmask of the down-set ``{b : b <= a}`` for each positive root ``a``."""
        P = self.positive_roots
        return tuple(
            sum(1 << j for j, b in enumerate(P) if self.poset_leq(b, a)) for a in P
        )

    def mask_of(self, roots: Iterable[Root]) -> int:
        m = 0
        for r in roots:
            try:
                m |= 1 << self.index[r]
            except KeyError:
                raise RootSystemError(f"{r!r} is not a positive root of {self.cartan}") from None
        return m

    def roots_of(self, mask: int) -> tuple[Root, ...]:
        P = self.positive_roots
        return tuple(P[i] for i in range(len(P)) if mask >> i & 1)

    # -- type A shorthand -----------------------------------------------------

    def e(self, i: int, j: int) -> Root:
        """The type-A root ``e_i - e_j`` (1-based, ``i < j``)."""
        if self.cartan.family != "A":
            raise RootSystemError("eIJ names exist only in type A")
        n = self.rank
        if not 1 <= i < j <= n + 1:
            raise RootSystemError(f"e{i}{j} is not a positive root of {self.cartan}")
        return Root(tuple(int(i - 1 <= k < j - 1) for k in range(n)))

    def name(self, a: Root) -> str:
        """Readable name: ``eIJ`` in type A, else ``a1+a2+2a3`` style."""
        if self.cartan.family == "A" and a in self.index:
            nz = [k for k, c in enumerate(a.coeffs) if c]
            i, j = nz[0] + 1, nz[-1] + 2
            return f"e{i}{j}" if j < 10 else f"e{i}_{j}"
        terms = []
        for k, c in enumerate(a.coeffs):
            if c:
                sign = "-" if c < 0 else "+"
                mag = "" if abs(c) == 1 else str(abs(c))
                terms.append(f"{sign}{mag}a{k + 1}")
        s = "".join(terms) or "0"
        return s[1:] if s.startswith("+") else s


@lru_cache(maxsize=None)
def _build(cartan: CartanType) -> RootSystem:
    return RootSystem(cartan)


def build(cartan, rank: Optional[int] = None) -> RootSystem:
    """Construct (and cache) the root system of a Cartan type.

    Accepts a :class:`CartanType`, a string such as ``"B3"``, or a family
    letter together with ``rank``.
    """
    if not isinstance(cartan, CartanType):
        cartan = CartanType.parse(str(cartan), rank)
    return _build(cartan)
