"""Quotient rings, standard bases, Hilbert series, and growth.

The running example is k[x,y,z] / ((x,y)^3 + (z^2)), a tensor product of two
small Artinian rings.  Everything is truncated at a degree cap; for this
ring degree 3 is the top, so the numbers below are exact.
"""

from hilbemb import MonomialIdeal, QuotientRing, Monomial
from hilbemb.formats import monomial_str, parse_monomial, parse_ring

ring = parse_ring({
    "vars": ["x", "y", "z"],
    "relations": ["x^3", "x^2*y", "x*y^2", "y^3", "z^2"],
    "truncate_above": 3,
    "cap": 3,
})

print("standard bases (grlex listing, multiples of x first):")
for d in range(ring.cap + 1):
    names = [monomial_str(m, ring.var_names) for m in ring.standard_basis(d)]
    print(f"  degree {d}: {names}")

print("\nHilbert series of two principal ideals:")
for gen in ("x", "z"):
    ideal = MonomialIdeal.from_generators(ring, [parse_monomial(gen, ring.var_names)])
    print(f"  H_({gen}) = {tuple(ideal.hilbert_series())}")

print("\ngrowth of single quadrics (products with the degree-one part):")
for text in ("x^2", "x*z", "y*z"):
    m = parse_monomial(text, ring.var_names)
    grown = sorted(monomial_str(g, ring.var_names) for g in ring.growth([m]))
    print(f"  {text} -> {grown}")

print("\nminimum growth over r-element monomial subsets of degree 2:")
for r in range(len(ring.standard_basis(2)) + 1):
    print(f"  r={r}: {ring.min_growth_oracle(2, r)}")

print("\ngenerator counts via first Betti numbers:")
ideal = MonomialIdeal.from_generators(ring, [parse_monomial("x*z", ring.var_names),
                                             parse_monomial("y^2", ring.var_names)])
print(f"  ideal (x*z, y^2): betti1 by degree = "
      f"{[ideal.betti1(j) for j in range(ring.cap + 1)]}")
