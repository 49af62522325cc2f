import xml.etree.ElementTree as ET

import pytest

from shilab import build, enumerate_ideals, region_from_ideal
from shilab.plot import SIZE, _basis, _vec, shi_svg

NS = {"s": "http://www.w3.org/2000/svg"}


@pytest.mark.parametrize("name,regions,lines", [("A2", 5, 6), ("B2", 6, 8), ("C2", 6, 8),
                                                 ("G2", 8, 12)])
def test_counts(name, regions, lines):
    root = ET.fromstring(shi_svg(build(name)))
    assert len(root.findall("s:text[@class='region']", NS)) == regions
    assert len(root.findall("s:line[@class='shi']", NS)) == lines
    assert len(root.findall("s:polygon[@class='alcove']", NS)) == regions
    count = root.find("s:text[@class='count']", NS).text
    assert count == f"{regions} dominant regions, {lines} Shi lines"


def _pairing(basis, root, X, Y):
    """``scale * <p, root>`` for the drawing point ``(X, Y)``."""
    n = _vec(basis, root.coeffs)
    return (X - SIZE / 2) * n[0] + (SIZE / 2 - Y) * n[1]


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_labels_sit_inside_their_regions(name):
    rs = build(name)
    root = ET.fromstring(shi_svg(rs))
    basis = _basis(rs)
    # any point on a level-1 Shi line has <p, b> = 1, which fixes the scale
    line = root.find("s:line[@class='shi'][@data-k='1']", NS)
    b = next(r for r in rs.positive_roots if rs.name(r) == line.get("data-root"))
    scale = _pairing(basis, b, float(line.get("x1")), float(line.get("y1")))
    regions = {region_from_ideal(p).sign_type.entries: p for p in enumerate_ideals(rs)}
    for text in root.findall("s:text[@class='region']", NS):
        psi = regions[text.text]
        X, Y = float(text.get("x")), float(text.get("y"))
        for r in rs.positive_roots:
            val = _pairing(basis, r, X, Y) / scale
            if r in psi:
                assert val > 1
            else:
                assert 0 < val < 1


def test_rank_check():
    with pytest.raises(ValueError):
        shi_svg(build("A3"))


def test_deterministic():
    assert shi_svg(build("B2")) == shi_svg(build("B2"))
