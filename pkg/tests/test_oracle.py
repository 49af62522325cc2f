import pytest

from shilab import AffineRoot, build, enumerate_ideals, minimal_element_of_ideal
from shilab.oracle import (
    InsufficientRadius,
    MinimumNotUnique,
    bfs,
    certify_small,
    convexity_counterexamples,
    dominant_minima,
    fiber_census,
    fibers,
    finite_weyl_order,
    orbit_count,
    required_radius,
)
from shilab.verify import run_verification


def test_dihedral_ball():
    assert bfs(build("A1"), 3).counts() == [1, 2, 2, 2]
    assert bfs(build("A2"), 2).counts() == [1, 3, 6]


def test_dominant_only_ball_is_prefix_closed():
    rs = build("B2")
    full = bfs(rs, 9)
    dom = bfs(rs, 9, dominant_only=True)
    assert set(dom.elements) == {w for w in full.elements if w.is_dominant()}


@pytest.mark.parametrize("name,radius", [("A1", 1), ("A2", 4), ("B2", 7), ("G2", 16), ("A3", 10)])
def test_required_radius(name, radius):
    rs = build(name)
    assert required_radius(rs) == radius
    assert max(minimal_element_of_ideal(p).length for p in enumerate_ideals(rs)) == radius


def test_radius_too_small():
    rs = build("A2")
    with pytest.raises(InsufficientRadius):
        dominant_minima(bfs(rs, 3))


def test_tied_minimum_is_reported():
    rs = build("A2")
    ball = bfs(rs, 2)
    # a repeated element gives its fiber two shortest members
    ball.layers[1].append(ball.layers[1][0])
    with pytest.raises(MinimumNotUnique):
        fibers(ball)


@pytest.mark.parametrize("name,total", [("A1", 3), ("A2", 16), ("B2", 25)])
def test_census_reaches_all_regions(name, total):
    c = fiber_census(build(name), 40)
    assert c.stabilized and c.count == total == c.expected


def test_certificates():
    a2 = build("A2")
    theta = a2.highest_root
    assert certify_small(AffineRoot(-theta, 1), a2, 8).ok
    a1 = build("A1")
    a = a1.simple_roots[0]
    assert certify_small(AffineRoot(a, 0), a1, 2).ok
    bad = certify_small(AffineRoot(a, 1), a1, 8)
    assert not bad.ok and AffineRoot(a, 0) in bad.unwitnessed
    with pytest.raises(ValueError):
        certify_small(AffineRoot(-a, 0), a1, 2)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "G2"])
def test_orbit_counts(name):
    rs = build(name)
    n = len(enumerate_ideals(rs))
    assert orbit_count(rs, "coroot") == n
    assert orbit_count(rs, "root") == n
    with pytest.raises(ValueError):
        orbit_count(rs, "weight")


def test_finite_weyl_order():
    assert finite_weyl_order(build("A3")) == 24
    assert finite_weyl_order(build("G2")) == 12
    assert finite_weyl_order(build("B3")) == 48


def test_convexity_on_ball():
    for w in bfs(build("G2"), 8).elements:
        assert convexity_counterexamples(w) == []


def test_verify_report():
    rep = run_verification(build("A2"), 10)
    assert rep.passed
    assert rep.lines()[-1] == "overall: PASS"
    short = run_verification(build("A2"), 3)
    assert not short.passed
    assert any("required radius" in c.detail for c in short.checks)


def test_verify_parallel_matches_serial():
    rs = build("B3")
    a = run_verification(rs, 22, workers=1)
    b = run_verification(rs, 22, workers=2)
    assert a.passed and b.passed
    assert [c.detail for c in a.checks] == [c.detail for c in b.checks]
