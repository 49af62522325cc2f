"""
Checking against brute force
============================

Breadth-first search over the group gives an independent view: group the
elements of a ball by sign type, keep the shortest of each fiber, and compare
the dominant ones with the elements built from ideals.
"""
from shilab import AffineRoot, build, enumerate_ideals, from_word, is_low, minimal_element_of_ideal
from shilab.oracle import (
    bfs,
    certify_small,
    dominant_low_elements,
    dominant_minima,
    fibers,
    required_radius,
)

rs = build("G2")
radius = required_radius(rs)  # length of the longest minimal element
ball = bfs(rs, radius)
print(f"{len(ball)} elements up to length {radius}; per layer {ball.counts()}")

fl = fibers(ball)  # raises if some fiber has two shortest members
print(len(fl), "sign types seen")

searched = dominant_minima(ball, fl)
built = {minimal_element_of_ideal(p) for p in enumerate_ideals(rs)}
low = dominant_low_elements(ball)
print("search == construction == dominant low:", searched == built == low)

# low elements are those whose inversion set is spanned by its small roots
a1 = build("A1")
for word in ([0], [1, 0], [0, 1, 0]):
    w = from_word(a1, word)
    print(w.word_string(), "low" if is_low(w) else "not low")

# a bounded certificate that delta - theta is a small root of affine A2
a2 = build("A2")
cert = certify_small(AffineRoot(-a2.highest_root, 1), a2, 8)
print("certificate complete:", cert.ok, "with", len(cert.witnesses), "witnesses")
