"""
Elements of the affine Weyl group
=================================

An element ``w = t_lam u`` acts on ``V`` by ``x -> u(x) + lam``.  Its Shi
coefficients ``k(w, a)`` say which strip between parallel hyperplanes holds the
alcove ``w A_o``; their absolute values add up to the length.
"""
from shilab import build, element_from_inversions, from_word
from shilab.affine_weyl import affine_name
from shilab.serialize import render_triangle

rs = build("A3")
w = from_word(rs, [0, 1, 2, 3, 2, 1])
print("word", w.word_string(), "length", w.length)
print("finite part", w.u, "translation", w.lam)

# inversion set N(w): positive affine roots sent negative
print(sorted(affine_name(rs, r) for r in w.inversions()))

# the same numbers, laid out as a staircase
print(render_triangle(rs, w.k_vector))
print("sum |k| =", sum(abs(k) for k in w.k_vector))

# an inversion set determines the element
v = element_from_inversions(rs, w.inversions())
print("recovered:", v == w, v.reduced_word())

# right descents and the walls of the alcove they correspond to
print("descents", sorted(w.right_descents()),
      "walls", sorted(affine_name(rs, r) for r in w.nd_r()))
print("dominant:", w.is_dominant())
