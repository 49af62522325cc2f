"""
Dominant Shi regions from root ideals
=====================================

Each root ideal gives a dominant region of the Shi arrangement.  Its minimal
element is built directly from bracket powers of the ideal, without any search.
"""
from shilab import (
    Antichain,
    build,
    enumerate_ideals,
    is_low,
    l_set,
    powers,
    region_from_antichain,
    region_from_ideal,
)
from shilab.affine_weyl import affine_name
from shilab.serialize import render_triangle, render_triangle_inline
from shilab.shi import descent_antichain_by_flip

rs = build("A3")
region = region_from_antichain(Antichain.of(rs, [rs.e(2, 3)]))
w = region.minimal_element
print("ideal", region.ideal.names())
print("L", sorted(affine_name(rs, r) for r in l_set(region.ideal)))
print("minimal element", w.word_string(), "length", w.length)
print("k", render_triangle_inline(rs, w.k_vector))
print("low:", is_low(w), " dominant:", w.is_dominant())

# A bigger one: the flip test recovers the antichain from the sign type.
a6 = build("A6")
a = Antichain.of(a6, [a6.e(2, 3), a6.e(3, 5), a6.e(4, 6)])
big = region_from_antichain(a)
print(render_triangle(a6, big.sign_type))
print("flippable", descent_antichain_by_flip(big.sign_type).names())
print("powers", [len(p) for p in powers(big.ideal)], "length", big.minimal_element.length)

# every dominant region of B3, shortest minimal elements first
b3 = build("B3")
regions = sorted((region_from_ideal(p) for p in enumerate_ideals(b3)),
                 key=lambda r: (r.minimal_element.length, r.sign_type.entries))
for r in regions:
    print(f"{r.sign_type.entries}  {r.minimal_element.word_string():<28} {r.antichain.names()}")
