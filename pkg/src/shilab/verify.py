"""Desk-scale verification of the dominant-region bijections for one type."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .affine_weyl import AffineRoot
from .ideals import (
    RootIdeal,
    UnsupportedFormula,
    catalan_product,
    cellini_papi_count,
    enumerate_antichains,
    enumerate_ideals,
    l_set,
    minimal_elements,
    mu_formula,
    powers,
    up_closure,
)
from .oracle import (
    InsufficientRadius,
    bfs,
    dominant_low_elements,
    dominant_minima,
    fibers,
    orbit_count,
    required_radius,
)
from .root_system import CartanType, RootSystem, build
from .shi import (
    cone_member,
    descent_antichain_by_flip,
    descent_roots_of_region,
    is_low,
    minimal_element_of_ideal,
    region_from_ideal,
    sign_type_of_ideal,
    zeta,
)

__all__ = ["CheckResult", "VerifyReport", "check_ideal", "run_verification", "worker_count"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0


@dataclass
class VerifyReport:
    cartan: CartanType
    max_length: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            out.append(f"{status}  {c.name:<28} {self.cartan}  {c.detail}  ({c.elapsed:.2f}s)")
        out.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return out

    def to_json(self) -> dict:
        return {
            "schema": "shilab/1",
            "type": str(self.cartan),
            "max_length": self.max_length,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail,
                 "elapsed": round(c.elapsed, 3)}
                for c in self.checks
            ],
        }


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SHILAB_THREADS", "1")))
    except ValueError:
        return 1


def check_ideal(psi: RootIdeal) -> Optional[str]:
    """Run the per-ideal invariant; return a failure description or None."""
    w = minimal_element_of_ideal(psi)
    mins = minimal_elements(psi)
    label = "{" + ",".join(mins.names()) + "}"
    lset = l_set(psi)
    if w.inversions() != lset:
        return f"{label}: N(w) != L"
    if not w.is_dominant():
        return f"{label}: not dominant"
    if not is_low(w):
        return f"{label}: not low"
    if zeta(w) != sign_type_of_ideal(psi):
        return f"{label}: zeta(w) != X_psi"
    walls = frozenset(AffineRoot(-a, 1) for a in mins)
    if w.nd_r() != walls:
        return f"{label}: ND_R(w) != delta - minimal elements"
    if w.length != sum(len(p) for p in powers(psi)):
        return f"{label}: length != sum |psi^k|"
    gens = [AffineRoot(-a, 1) for a in psi]
    if not all(g in lset for g in gens) or not all(cone_member(b, gens) for b in lset):
        return f"{label}: L != cone(delta - psi)"
    if descent_antichain_by_flip(sign_type_of_ideal(psi)) != mins:
        return f"{label}: flip set != minimal elements"
    if descent_roots_of_region(region_from_ideal(psi)) != walls:
        return f"{label}: descent walls != ND_R"
    return None


def _check_mask(cartan: CartanType, mask: int) -> Optional[str]:
    return check_ideal(RootIdeal(build(cartan), mask))


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # reported, not raised: the report is the output
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, ok, detail, time.perf_counter() - t)


def run_verification(rs: RootSystem, max_length: int, workers: Optional[int] = None) -> VerifyReport:
    workers = worker_count() if workers is None else workers
    report = VerifyReport(rs.cartan, max_length)
    add = report.checks.append
    ideals = enumerate_ideals(rs)

    def counting():
        vals = {"enumeration": len(ideals), "antichains": len(enumerate_antichains(rs)),
                "catalan_product": catalan_product(rs),
                "cellini_papi": cellini_papi_count(rs)}
        try:
            vals["mu_formula"] = mu_formula(rs.cartan)
        except UnsupportedFormula:
            pass
        return len(set(vals.values())) == 1, ", ".join(f"{k}={v}" for k, v in vals.items())

    def roundtrip():
        ok = all(up_closure(minimal_elements(p)) == p for p in ideals) and all(
            minimal_elements(up_closure(a)) == a for a in enumerate_antichains(rs))
        return ok, f"{len(ideals)} ideals"

    def per_ideal():
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                res = list(pool.map(_check_mask, [rs.cartan] * len(ideals),
                                    [p.mask for p in ideals]))
        else:
            res = [check_ideal(p) for p in ideals]
        bad = [r for r in res if r]
        return not bad, f"{len(ideals) - len(bad)}/{len(ideals)} ideals" + (
            f"; first failure {bad[0]}" if bad else "")

    def injective():
        types = {zeta(minimal_element_of_ideal(p)).entries for p in ideals}
        return len(types) == len(ideals), f"{len(types)} distinct regions"

    add(_timed("counting formulas", counting))
    add(_timed("ideal/antichain roundtrip", roundtrip))
    add(_timed("per-ideal invariants", per_ideal))
    add(_timed("regions distinct", injective))

    state = {}

    def ball_checks():
        need = required_radius(rs)
        if max_length < need:
            raise InsufficientRadius(f"--max-length {max_length} < required radius {need}")
        ball = bfs(rs, max_length)
        fl = fibers(ball)  # raises on a tied minimum
        state.update(ball=ball, fibers=fl)
        return True, f"{len(ball)} elements, {len(fl)} fibers, minima unique"

    def prop34():
        ball, fl = state["ball"], state["fibers"]
        dm = dominant_minima(ball, fl)
        built = {minimal_element_of_ideal(p) for p in ideals}
        low = dominant_low_elements(ball)
        return dm == built == low, f"{len(dm)} minima, {len(built)} constructed, {len(low)} dominant low"

    def dominant_types():
        realized = {f.sign_type.entries for f in state["fibers"] if f.sign_type.is_dominant()}
        expected = {sign_type_of_ideal(p).entries for p in ideals}
        return realized == expected, f"{len(realized)} dominant sign types realized"

    def minima_low():
        fl = state["fibers"]
        lows = sum(is_low(f.minimum) for f in fl)
        excluded = []
        for layer in state["ball"].layers:
            excluded = [w for w in layer if not is_low(w)]
            if excluded:
                break
        ex = ", ".join(w.word_string() for w in excluded[:4]) or "none"
        return lows == len(fl), f"{lows}/{len(fl)} fiber minima low; shortest non-low excluded: {ex}"

    add(_timed("ball and fiber uniqueness", ball_checks))
    if "ball" in state:
        add(_timed("dominant minima = w_J = low", prop34))
        add(_timed("dominant sign types", dominant_types))
        add(_timed("fiber minima are low", minima_low))

    if rs.rank <= 4:
        def orbits():
            c = orbit_count(rs, "coroot")
            r = orbit_count(rs, "root")
            note = "" if r == len(ideals) else " (root lattice differs)"
            return c == len(ideals), f"coroot {c}, root {r}, ideals {len(ideals)}{note}"
        add(_timed("orbit count", orbits))
    return report
