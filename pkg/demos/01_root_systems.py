"""
Root systems and the root poset
===============================

Every computation starts from a finite crystallographic root system.  Roots
are integer vectors in the basis of simple roots; ambient coordinates are
exact fractions.
"""
from shilab import build

rs = build("B3")
print(rs, "h =", rs.coxeter_number, "exponents", rs.exponents)

# positive roots come in canonical order: by height, then reverse lexicographic
for r in rs.positive_roots:
    print(f"{rs.name(r):>10}  height {r.height}  ambient {[str(x) for x in rs.vector(r)]}")

# the Gram matrix is normalized so short roots have squared length 2
print("gram", rs.gram)
print("cartan", rs.cartan_matrix)

# the root poset: beta covers alpha when beta - alpha is a simple root
theta = rs.highest_root
print("everything lies below theta:", all(rs.poset_leq(a, theta) for a in rs.positive_roots))

# type A roots have the usual eIJ names
a4 = build("A4")
print([a4.name(r) for r in a4.positive_roots])
