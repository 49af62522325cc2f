"""Static SVG drawings of rank-2 Shi arrangements.

Geometry is exact up to the final projection: the plane ``V_0`` is drawn in
coordinates obtained from the Cholesky factor of the Gram matrix, and each
dominant region is marked by the alcove of its minimal element.
"""
from __future__ import annotations

import math

from .affine_weyl import AffineElement
from .ideals import enumerate_ideals
from .root_system import RootSystem
from .shi import region_from_ideal

__all__ = ["shi_svg"]

SIZE = 640


def _basis(rs: RootSystem):
    (a, b), (_, c) = rs.gram
    x1 = math.sqrt(a)
    return [(x1, 0.0), (b / x1, math.sqrt(c - (b / x1) ** 2))]


def _vec(basis, coeffs):
    return (sum(c * v[0] for c, v in zip(coeffs, basis)),
            sum(c * v[1] for c, v in zip(coeffs, basis)))


def _solve(rows, rhs):
    (a, b), (c, d) = rows
    det = a * d - b * c
    return ((rhs[0] * d - b * rhs[1]) / det, (a * rhs[1] - c * rhs[0]) / det)


def _linear_map(src, dst):
    """2x2 matrix sending ``src[i]`` to ``dst[i]``."""
    (a, c), (b, d) = src
    det = a * d - b * c
    sinv = [[d / det, -b / det], [-c / det, a / det]]
    cols = [[dst[0][0], dst[1][0]], [dst[0][1], dst[1][1]]]
    return [[sum(cols[i][k] * sinv[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def _alcove(rs: RootSystem, basis, w: AffineElement):
    """Vertices of ``w . A_o`` in drawing coordinates."""
    simple = [_vec(basis, r.coeffs) for r in rs.simple_roots]
    theta = rs.highest_root.coeffs
    verts = [(0.0, 0.0)]
    for i in range(2):
        rhs = [0.0, 0.0]
        rhs[i] = 1.0 / theta[i]
        verts.append(_solve(simple, rhs))
    m = _linear_map(simple, [_vec(basis, img) for img in w.u])
    shift = (0.0, 0.0)
    for mcoef, r in zip(w.lam, rs.simple_roots):
        v = _vec(basis, r.coeffs)
        f = 2.0 * mcoef / rs.norm2(r)
        shift = (shift[0] + f * v[0], shift[1] + f * v[1])
    return [(m[0][0] * x + m[0][1] * y + shift[0], m[1][0] * x + m[1][1] * y + shift[1])
            for x, y in verts]


def _clip_line(n, k, R):
    """Endpoints of ``{p : n.p = k}`` inside the square ``[-R, R]^2``."""
    pts = []
    nx, ny = n
    for x in (-R, R):
        if abs(ny) > 1e-12:
            y = (k - nx * x) / ny
            if -R - 1e-9 <= y <= R + 1e-9:
                pts.append((x, y))
    for y in (-R, R):
        if abs(nx) > 1e-12:
            x = (k - ny * y) / nx
            if -R - 1e-9 <= x <= R + 1e-9:
                pts.append((x, y))
    pts = sorted(set((round(a, 9), round(b, 9)) for a, b in pts))
    return pts[0], pts[-1]


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def shi_svg(rs: RootSystem) -> str:
    """SVG of the Shi lines ``<x, a> = 0, 1`` with dominant regions labelled."""
    if rs.rank != 2:
        raise ValueError(f"plotting needs a rank-2 type, got {rs.cartan}")
    basis = _basis(rs)
    regions = [region_from_ideal(p) for p in enumerate_ideals(rs)]
    alcoves = [_alcove(rs, basis, r.minimal_element) for r in regions]
    R = 1.35 * max(max(abs(c) for p in a for c in p) for a in alcoves)
    scale = SIZE / (2 * R)

    def px(p):
        return _fmt(SIZE / 2 + scale * p[0]), _fmt(SIZE / 2 - scale * p[1])

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE + 40}" '
        f'viewBox="0 0 {SIZE} {SIZE + 40}">',
        f"<title>Shi arrangement of affine {rs.cartan}</title>",
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]
    # dominant chamber: cone over the two fundamental coweights
    simple = [_vec(basis, r.coeffs) for r in rs.simple_roots]
    rays = [_solve(simple, (1.0, 0.0)), _solve(simple, (0.0, 1.0))]
    far = [(4 * R * x / math.hypot(x, y), 4 * R * y / math.hypot(x, y)) for x, y in rays]
    pts = " ".join(",".join(px(p)) for p in [(0.0, 0.0), far[0], far[1]])
    out.append(f'<polygon class="chamber" points="{pts}" fill="#eef3fb" stroke="none"/>')
    for a in alcoves:
        pts = " ".join(",".join(px(p)) for p in a)
        out.append(f'<polygon class="alcove" points="{pts}" fill="#f6c26b" stroke="#b07a1f"/>')
    for ray in far:
        x1, y1 = px((0.0, 0.0))
        x2, y2 = px(ray)
        out.append(f'<line class="wall" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                   'stroke="#4060a0" stroke-width="2" stroke-dasharray="6 4"/>')
    for r in rs.positive_roots:
        n = _vec(basis, r.coeffs)
        for k in (0, 1):
            p, q = _clip_line(n, k, R)
            x1, y1 = px(p)
            x2, y2 = px(q)
            out.append(f'<line class="shi" data-root="{rs.name(r)}" data-k="{k}" '
                       f'x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="1"/>')
    for region, a in zip(regions, alcoves):
        cx = sum(p[0] for p in a) / 3
        cy = sum(p[1] for p in a) / 3
        x, y = px((cx, cy))
        out.append(f'<text class="region" x="{x}" y="{y}" font-size="11" '
                   f'text-anchor="middle" font-family="monospace">{region.sign_type.entries}</text>')
    out.append(f'<text class="count" x="10" y="{SIZE + 25}" font-size="14" '
               f'font-family="sans-serif">{len(regions)} dominant regions, '
               f'{2 * rs.num_positive} Shi lines</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
