"""Command line interface: ``shilab VERB FAMILY RANK [options]``.

Exit codes: 0 success, 1 usage error, 2 verification failure or disagreement.
"""
from __future__ import annotations

import argparse
import json
import sys

from .affine_weyl import affine_name
from .ideals import (
    NotAnAntichain,
    UnsupportedFormula,
    catalan_product,
    cellini_papi_count,
    enumerate_ideals,
    l_set,
    minimal_elements,
    mu_formula,
)
from .oracle import orbit_count
from .plot import shi_svg
from .root_system import CartanType, RootSystemError, build
from .serialize import (
    SCHEMA,
    parse_antichain_spec,
    region_to_json,
    render_triangle,
    render_triangle_inline,
    rootset_to_json,
)
from .shi import is_low, region_from_antichain, region_from_ideal
from .verify import run_verification

USAGE, FAIL = 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)


def _names(rs, roots) -> str:
    return "{" + ", ".join(rs.name(r) for r in roots) + "}"


def _affine_names(rs, roots) -> str:
    ordered = sorted(roots, key=lambda r: (r.level, r.finite.coeffs))
    return "{" + ", ".join(affine_name(rs, r) for r in ordered) + "}"


def _triangle_ok(rs, fmt):
    if fmt == "triangle" and rs.cartan.family != "A":
        raise UsageError("--format triangle is only available in type A")
    return fmt == "triangle" or (fmt == "text" and rs.cartan.family == "A")


def cmd_roots(rs, args, out):
    if args.format == "json":
        out.write(_dump({
            "schema": SCHEMA, "type": str(rs.cartan), "coxeter_number": rs.coxeter_number,
            "exponents": list(rs.exponents),
            "positive_roots": [{"name": rs.name(r), "coeffs": list(r.coeffs),
                                "height": r.height} for r in rs.positive_roots],
        }) + "\n")
        return 0
    out.write(f"type {rs.cartan}: {rs.num_positive} positive roots, h = {rs.coxeter_number}, "
              f"exponents {list(rs.exponents)}\n")
    for r in rs.positive_roots:
        vec = " ".join(str(x) for x in rs.vector(r))
        out.write(f"  {rs.name(r):<16} coeffs {list(r.coeffs)}  height {r.height}  ambient ({vec})\n")
    return 0


def cmd_ideals(rs, args, out):
    ideals = enumerate_ideals(rs)
    if args.format == "json":
        out.write(_dump({
            "schema": SCHEMA, "type": str(rs.cartan),
            "ideals": [{"antichain": rootset_to_json(minimal_elements(p), True),
                        "ideal": rootset_to_json(p, True)} for p in ideals],
        }) + "\n")
        return 0
    out.write(f"{len(ideals)} root ideals of {rs.cartan}\n")
    for p in ideals:
        out.write(f"  min {_names(rs, minimal_elements(p))}  ideal {_names(rs, p)}\n")
    return 0


def cmd_regions(rs, args, out):
    tri = _triangle_ok(rs, args.format)
    regions = [region_from_ideal(p) for p in enumerate_ideals(rs)]
    if args.format == "json":
        out.write(_dump({"schema": SCHEMA, "type": str(rs.cartan),
                         "regions": [region_to_json(r, True) for r in regions]}) + "\n")
        return 0
    out.write(f"{len(regions)} dominant Shi regions of affine {rs.cartan}\n")
    for r in regions:
        w = r.minimal_element
        sign = render_triangle_inline(rs, r.sign_type) if tri else r.sign_type.entries
        out.write(f"  antichain {_names(rs, r.antichain)}  sign type [{sign}]  "
                  f"w = {w.word_string()}  length {w.length}\n")
    return 0


def cmd_minimal(rs, args, out):
    tri = _triangle_ok(rs, args.format)
    try:
        region = region_from_antichain(parse_antichain_spec(rs, args.antichain))
    except NotAnAntichain as exc:
        raise UsageError(f"invalid antichain: {exc}") from None
    w = region.minimal_element
    lset = l_set(region.ideal)
    if args.format == "json":
        obj = {"schema": SCHEMA, "type": str(rs.cartan)}
        obj.update(region_to_json(region, True))
        obj["l_set"] = [affine_name(rs, r) for r in sorted(lset, key=lambda r: (r.level, r.finite.coeffs))]
        obj["nd_r"] = sorted(affine_name(rs, r) for r in w.nd_r())
        obj["dominant"] = w.is_dominant()
        obj["low"] = is_low(w)
        out.write(_dump(obj) + "\n")
        return 0
    out.write(f"type          {rs.cartan}\n")
    out.write(f"antichain     {_names(rs, region.antichain)}\n")
    out.write(f"ideal         {_names(rs, region.ideal)}\n")
    out.write(f"L set         {_affine_names(rs, lset)}\n")
    out.write(f"reduced word  {w.word_string()}  {w.reduced_word()}\n")
    out.write(f"length        {w.length}\n")
    out.write(f"ND_R          {_affine_names(rs, w.nd_r())}\n")
    out.write(f"dominant      {w.is_dominant()}\n")
    out.write(f"low           {is_low(w)}\n")
    if tri:
        out.write("k-vector      " + render_triangle_inline(rs, w.k_vector) + "\n")
        out.write(render_triangle(rs, w.k_vector) + "\n")
        out.write("sign type     " + render_triangle_inline(rs, region.sign_type) + "\n")
        out.write(render_triangle(rs, region.sign_type) + "\n")
    else:
        out.write(f"k-vector      {list(w.k_vector)}\n")
        out.write(f"sign type     {region.sign_type.entries}\n")
    return 0


def cmd_count(rs, args, out):
    rows = [("enumeration", len(enumerate_ideals(rs)))]
    try:
        rows.append(("mu_formula", mu_formula(rs.cartan)))
    except UnsupportedFormula:
        rows.append(("mu_formula", None))
    rows.append(("catalan_product", catalan_product(rs)))
    rows.append(("cellini_papi_count", cellini_papi_count(rs)))
    values = {v for _, v in rows if v is not None}
    agree = len(values) == 1
    if args.format == "json":
        out.write(_dump({"schema": SCHEMA, "type": str(rs.cartan), "counts": dict(rows),
                         "verdict": "AGREE" if agree else "DISAGREE"}) + "\n")
    else:
        for name, v in rows:
            out.write(f"{name:<20} {'n/a' if v is None else v}\n")
        out.write(("AGREE" if agree else "DISAGREE") + "\n")
    return 0 if agree else FAIL


def cmd_verify(rs, args, out):
    report = run_verification(rs, args.max_length)
    if args.format == "json":
        out.write(_dump(report.to_json()) + "\n")
    else:
        out.write("\n".join(report.lines()) + "\n")
    return 0 if report.passed else FAIL


def cmd_orbits(rs, args, out):
    if rs.rank > 4:
        raise UsageError("orbit enumeration is limited to rank <= 4")
    n = len(enumerate_ideals(rs))
    counts = {lat: orbit_count(rs, lat) for lat in ("coroot", "root")}
    if args.format == "json":
        out.write(_dump({"schema": SCHEMA, "type": str(rs.cartan), "ideals": n,
                         "orbits": counts,
                         "match": {k: v == n for k, v in counts.items()}}) + "\n")
        return 0
    out.write(f"ideal count          {n}\n")
    for lat, c in counts.items():
        out.write(f"{lat + '-lattice orbits':<20} {c}  {'match' if c == n else 'MISMATCH'}\n")
    return 0


def cmd_plot(rs, args, out):
    if rs.rank != 2:
        raise UsageError(f"plot needs a rank-2 type (A2, B2, C2, G2), got {rs.cartan}")
    svg = shi_svg(rs)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    out.write(f"wrote {args.out}\n")
    return 0


COMMANDS = {
    "roots": cmd_roots,
    "ideals": cmd_ideals,
    "regions": cmd_regions,
    "minimal": cmd_minimal,
    "count": cmd_count,
    "verify": cmd_verify,
    "orbits": cmd_orbits,
    "plot": cmd_plot,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shilab", description="Dominant Shi regions, root ideals and minimal elements.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in COMMANDS:
        p = sub.add_parser(verb)
        p.add_argument("family", help="Cartan family letter, e.g. A")
        p.add_argument("rank", type=int)
        p.add_argument("--format", choices=("text", "json", "triangle"), default="text")
        if verb == "minimal":
            p.add_argument("--antichain", required=True,
                           help='comma separated roots, e.g. "e23,e35" or "a1,a2+a3"; "" for none')
        elif verb == "verify":
            p.add_argument("--max-length", type=int, required=True)
        elif verb == "plot":
            p.add_argument("--out", required=True)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        rs = build(CartanType.parse(args.family, args.rank))
        return COMMANDS[args.verb](rs, args, out)
    except (UsageError, RootSystemError) as exc:
        sys.stderr.write(f"shilab: error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
