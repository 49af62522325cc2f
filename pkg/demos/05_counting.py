"""
How many dominant regions?
==========================

Four independent counts: direct enumeration of antichains, the classical
binomial formulas, the product over exponents, and orbits of the finite Weyl
group on a finite quotient of the coroot lattice.
"""
from shilab import build, catalan_product, cellini_papi_count, enumerate_ideals, mu_formula
from shilab.ideals import UnsupportedFormula
from shilab.oracle import orbit_count

print(f"{'type':<5}{'enum':>7}{'formula':>9}{'product':>9}{'orbits':>8}")
for name in ["A2", "A3", "A4", "B3", "C3", "D4", "G2", "F4", "E6"]:
    rs = build(name)
    try:
        mu = mu_formula(rs.cartan)
    except UnsupportedFormula:
        mu = "n/a"
    orbits = orbit_count(rs) if rs.rank <= 3 else "-"
    print(f"{name:<5}{len(enumerate_ideals(rs)):>7}{mu!s:>9}{catalan_product(rs):>9}{orbits!s:>8}")

# the product formulas reach E8 without listing its antichains
e8 = build("E8")
print("E8:", catalan_product(e8), cellini_papi_count(e8))
