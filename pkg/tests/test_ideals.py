import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shilab import (
    AffineRoot,
    Antichain,
    NotAnAntichain,
    NotAnIdeal,
    RootIdeal,
    build,
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
from shilab.ideals import UnsupportedFormula, bracket, ideal_power, weyl_group_order
from shilab.oracle import finite_weyl_order


def _example(rs):
    return RootIdeal.of(rs, [rs.e(2, 3), rs.e(1, 3), rs.e(2, 4), rs.e(1, 4)])


def test_a3_example_ideal():
    rs = build("A3")
    psi = _example(rs)
    assert minimal_elements(psi) == Antichain.of(rs, [rs.e(2, 3)])
    assert up_closure(Antichain.of(rs, [rs.e(2, 3)])) == psi
    assert len(bracket(psi, psi)) == 0
    assert len(ideal_power(psi, 2)) == 0
    assert ideal_power(psi, 1) == psi
    assert l_set(psi) == {AffineRoot(-r, 1) for r in psi}


def test_a6_staircase_antichain():
    rs = build("A6")
    a = Antichain.of(rs, [rs.e(2, 3), rs.e(3, 5), rs.e(4, 6)])
    assert minimal_elements(up_closure(a)) == a


def test_trivial_cases():
    rs = build("A3")
    empty = RootIdeal(rs, 0)
    assert len(minimal_elements(empty)) == 0
    assert len(up_closure(Antichain(rs, 0))) == 0
    assert up_closure([rs.highest_root], rs) == RootIdeal.of(rs, [rs.highest_root])
    assert l_set(empty) == frozenset()
    assert len(bracket(empty, _example(rs))) == 0


def test_full_ideal_a2():
    rs = build("A2")
    full = RootIdeal.of(rs, rs.positive_roots)
    theta = rs.highest_root
    assert set(bracket(full, full)) == {theta}
    assert set(ideal_power(full, 2)) == {theta}
    assert len(ideal_power(full, 3)) == 0
    a1, a2 = rs.simple_roots
    assert l_set(full) == {AffineRoot(-a1, 1), AffineRoot(-a2, 1), AffineRoot(-theta, 1),
                           AffineRoot(-theta, 2)}


def test_validation_errors():
    rs = build("A3")
    with pytest.raises(NotAnAntichain) as exc:
        Antichain.of(rs, [rs.e(1, 2), rs.e(1, 3)])
    assert set(exc.value.pair) == {rs.e(1, 2), rs.e(1, 3)}
    with pytest.raises(NotAnIdeal):
        RootIdeal.of(rs, [rs.e(2, 3)])


@pytest.mark.parametrize("name,count", [("A1", 2), ("A2", 5), ("A3", 14), ("A4", 42), ("B2", 6),
                                        ("B3", 20), ("C3", 20), ("D4", 50), ("G2", 8),
                                        ("F4", 105), ("E6", 833)])
def test_counts(name, count):
    rs = build(name)
    assert len(enumerate_ideals(rs)) == count
    assert catalan_product(rs) == count
    assert cellini_papi_count(rs) == count
    if rs.cartan.family in "ABCD":
        assert mu_formula(rs.cartan) == count
    else:
        with pytest.raises(UnsupportedFormula):
            mu_formula(rs.cartan)


@pytest.mark.parametrize("name", ["A1", "A3", "B2", "B3", "C3", "D4", "G2"])
def test_weyl_group_order(name):
    rs = build(name)
    assert weyl_group_order(rs) == finite_weyl_order(rs)


def test_enumeration_is_canonical(small_rs):
    ideals = enumerate_ideals(small_rs)
    antichains = enumerate_antichains(small_rs)
    assert [minimal_elements(p) for p in ideals] == antichains
    assert len(set(ideals)) == len(ideals)


def test_brute_force_ideal_count():
    # every up-closed subset, found by scanning all 2^6 subsets of A3^+
    rs = build("A3")
    up = rs.leq_masks
    n = rs.num_positive
    closed = [m for m in range(1 << n) if all(up[i] & ~m == 0 for i in range(n) if m >> i & 1)]
    assert sorted(p.mask for p in enumerate_ideals(rs)) == sorted(closed)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["A3", "A4", "B3", "C3", "D4", "G2"]), st.data())
def test_powers_properties(name, data):
    rs = build(name)
    psi = data.draw(st.sampled_from(enumerate_ideals(rs)))
    ps = powers(psi)
    if ps:
        assert ps[0] == psi
    for p, q in zip(ps, ps[1:]):
        assert set(q) <= set(p)  # powers of an ideal decrease
        assert all(rs.poset_leq(a, b) <= (b in q) for a in q for b in rs.positive_roots)
    assert len(l_set(psi)) == sum(len(p) for p in ps)
