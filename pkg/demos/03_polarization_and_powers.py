"""
Products as sums of powers
==========================

Over a field of characteristic zero, t1*...*ts is a signed sum of s-th
powers of subset sums with weights 1/s!.  Substituting t1 = f and the
rest = 1 writes any polynomial f through s-th powers.
"""

# %%
from quatnull import CPoly, decompose_into_powers, parse_cpoly, polarization_rhs
from quatnull.cpoly import indexed_variables, recombine_powers

for s in range(1, 6):
    t = CPoly.gens(indexed_variables("t", s))
    print(s, polarization_rhs(s, list(t)))

# %%
f = parse_cpoly("y1*y2 - 3*y3^2 + 1/2")
for s in (2, 3):
    pairs = decompose_into_powers(f, s)
    print(f"s={s}:", ", ".join(f"{c}*({g})^{s}" for c, g in pairs))
    assert recombine_powers(pairs, s, f.variables) == f

# %%
# With s = 2 the pieces g_k are central maps, and N(g_k) = g_k^2.  That is
# what lets a witness with central companions become one with norms.
y = parse_cpoly("y")
print(decompose_into_powers(y, 2))
