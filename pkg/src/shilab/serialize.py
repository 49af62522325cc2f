"""JSON encodings (schema ``shilab/1``) and the type-A staircase triangle.

See ``docs/formats.md`` for the field-by-field description.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence, Union

from .affine_weyl import AffineElement, AffineRoot, from_word
from .ideals import Antichain, RootIdeal, RootSet
from .root_system import Root, RootSystem, RootSystemError
from .shi import DominantRegion, SignType

SCHEMA = "shilab/1"

__all__ = [
    "SCHEMA",
    "parse_root",
    "root_to_json",
    "affine_root_to_json",
    "affine_root_from_json",
    "element_to_json",
    "element_from_json",
    "rootset_to_json",
    "ideal_from_json",
    "antichain_from_json",
    "parse_antichain_spec",
    "sign_type_from_json",
    "region_to_json",
    "render_triangle",
    "render_triangle_inline",
    "parse_triangle",
]

_E_NAME = re.compile(r"^e(\d)(\d)$|^e(\d+)_(\d+)$")
_TERM = re.compile(r"^(\d*)a(\d+)$")


def parse_root(rs: RootSystem, obj) -> Root:
    """Accept a coordinate array (ints or ``"p/q"`` strings in the simple-root
    basis), an ``eIJ`` name in type A, ``"theta"``, or a sum like ``"a1+2a2"``."""
    if isinstance(obj, (list, tuple)):
        coeffs = []
        for x in obj:
            q = Fraction(x) if isinstance(x, str) else Fraction(x)
            if q.denominator != 1:
                raise RootSystemError(f"non-integral simple-root coordinate {x!r}")
            coeffs.append(int(q))
        if len(coeffs) != rs.rank:
            raise RootSystemError(f"expected {rs.rank} coordinates, got {len(coeffs)}")
        r = Root(tuple(coeffs))
    elif isinstance(obj, str):
        text = obj.strip().replace(" ", "")
        m = _E_NAME.match(text)
        if text == "theta":
            r = rs.highest_root
        elif m:
            i, j = (m.group(1), m.group(2)) if m.group(1) else (m.group(3), m.group(4))
            r = rs.e(int(i), int(j))
        else:
            coeffs = [0] * rs.rank
            for term in text.split("+"):
                t = _TERM.match(term)
                if not t or not 1 <= int(t.group(2)) <= rs.rank:
                    raise RootSystemError(f"cannot parse root {obj!r}")
                coeffs[int(t.group(2)) - 1] += int(t.group(1) or 1)
            r = Root(tuple(coeffs))
    else:
        raise RootSystemError(f"cannot parse root {obj!r}")
    if not rs.is_root(r):
        raise RootSystemError(f"{obj!r} is not a root of {rs.cartan}")
    return r


def root_to_json(rs: RootSystem, r: Root, names: bool = False):
    if names and rs.cartan.family == "A" and r.is_positive():
        return rs.name(r)
    return list(r.coeffs)


def affine_root_to_json(rs: RootSystem, r: AffineRoot) -> dict:
    return {"finite": list(r.finite.coeffs), "level": r.level}


def affine_root_from_json(rs: RootSystem, obj: dict) -> AffineRoot:
    return AffineRoot(parse_root(rs, obj["finite"]), int(obj["level"]))


def element_to_json(w: AffineElement) -> dict:
    return {
        "word": w.reduced_word(),
        "u": [list(img) for img in w.u],
        "lambda": list(w.lam),
    }


def element_from_json(rs: RootSystem, obj: dict) -> AffineElement:
    """Rebuild from ``u``/``lambda`` when present, else from ``word``; if both
    are given they must agree."""
    w = None
    if "u" in obj and "lambda" in obj:
        w = AffineElement(tuple(tuple(int(x) for x in img) for img in obj["u"]),
                          tuple(int(x) for x in obj["lambda"]), rs)
    if "word" in obj:
        v = from_word(rs, [int(i) for i in obj["word"]])
        if w is not None and v != w:
            raise ValueError("word and (u, lambda) describe different elements")
        w = v
    if w is None:
        raise ValueError("element needs 'word' or both 'u' and 'lambda'")
    return w


def rootset_to_json(s: RootSet, names: bool = False) -> list:
    return [root_to_json(s.rs, r, names) for r in s.roots]


def ideal_from_json(rs: RootSystem, arr: Sequence) -> RootIdeal:
    return RootIdeal(rs, rs.mask_of(parse_root(rs, x) for x in arr))


def antichain_from_json(rs: RootSystem, arr: Sequence) -> Antichain:
    return Antichain(rs, rs.mask_of(parse_root(rs, x) for x in arr))


def parse_antichain_spec(rs: RootSystem, spec: str) -> Antichain:
    """Comma separated root names, e.g. ``"e23,e35"`` or ``"a1,a2+a3"``."""
    parts = [p for p in spec.split(",") if p.strip()]
    return antichain_from_json(rs, parts)


def sign_type_from_json(rs: RootSystem, text: str) -> SignType:
    return SignType(rs, text)


def region_to_json(region: DominantRegion, names: bool = False) -> dict:
    w = region.minimal_element
    return {
        "ideal": rootset_to_json(region.ideal, names),
        "antichain": rootset_to_json(region.antichain, names),
        "sign_type": region.sign_type.entries,
        "minimal_element": element_to_json(w),
        "length": w.length,
        "k_vector": list(w.k_vector),
    }


# -- staircase triangle (type A only) -------------------------------------------


def _rows(rs: RootSystem, entries: Sequence) -> list[list[str]]:
    if rs.cartan.family != "A":
        raise ValueError("triangle layout exists only in type A")
    if len(entries) != rs.num_positive:
        raise ValueError("entry count does not match the number of positive roots")
    rows, pos = [], 0
    for width in range(rs.rank, 0, -1):
        rows.append([str(x) for x in entries[pos:pos + width]])
        pos += width
    return rows  # rows[0] = height 1


def render_triangle(rs: RootSystem, entries: Union[SignType, Sequence]) -> str:
    """Multi-line staircase, highest root on top, height-1 roots on the last line."""
    if isinstance(entries, SignType):
        entries = entries.entries
    rows = _rows(rs, list(entries))
    width = max(len(x) for row in rows for x in row)
    pitch = width + 1
    lines = []
    for h in range(len(rows), 0, -1):
        cells = " ".join(x.rjust(width) for x in rows[h - 1])
        lines.append(" " * ((h - 1) * pitch // 2) + cells)
    return "\n".join(lines)


def render_triangle_inline(rs: RootSystem, entries: Union[SignType, Sequence]) -> str:
    """One line, bottom row first: ``"0 + 0 / + + / +"``."""
    if isinstance(entries, SignType):
        entries = entries.entries
    return " / ".join(" ".join(row) for row in _rows(rs, list(entries)))


def parse_triangle(rs: RootSystem, text: str) -> list[str]:
    """Inverse of both renderers; returns entries in canonical root order."""
    if "/" in text:
        rows = [r.split() for r in text.split("/")]
    else:
        rows = [line.split() for line in text.strip("\n").splitlines() if line.strip()][::-1]
    widths = [len(r) for r in rows]
    if widths != list(range(rs.rank, 0, -1)):
        raise ValueError(f"row widths {widths} do not fit type {rs.cartan}")
    return [x for row in rows for x in row]
