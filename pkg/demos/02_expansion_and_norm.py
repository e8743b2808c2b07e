"""
From monomials to coordinates
=============================

An nc-polynomial a1 x a2 x ... is expanded into four commutative
polynomials in the coordinates y{i}_{j} of the variables.  Equality of
functions is decided on that expansion.
"""

# %%
from quatnull import QuatAlgebra, expand, parse_nc, print_nc, reduced_norm_poly, reduced_trace_poly
from quatnull.coordbridge import realize, realize_central

H = QuatAlgebra(-1, -1)
f = parse_nc("x1*i - i*x1", H, 1)
for name, comp in zip("1ijk", expand(f).components):
    print(f"{name}: {comp}")

# %%
# Evaluating f and reassembling its coordinates agree pointwise.
p = (H.parse("1 + 2i + 3j + 4k"),)
print("f(p) =", f(p), "  coordinates at p =", expand(f).evaluate(p))

# %%
# i*x*i is minus the conjugation of x by i, a fact the expansion sees directly.
g = parse_nc("i*x1*i", H, 1)
h = parse_nc("x1", H, 1).conjugate_by(H.unit(1)).scale_left(-1)
print("i*x1*i == -(i x1 i^-1):", g.equals_fn(h))

# %%
# Reduced norm and trace as polynomials in the coordinates.
x1 = parse_nc("x1", H, 1)
print("N(x1)   =", reduced_norm_poly(x1))
print("trd(x1) =", reduced_trace_poly(x1))

# %%
# Every x satisfies x^2 - trd(x) x + N(x) = 0.  The central coefficients are
# realized back as nc-polynomials, built from two-sided operations on x1.
trd = realize_central(reduced_trace_poly(x1), H, 1)
nrd = realize_central(reduced_norm_poly(x1), H, 1)
print("x1^2 - trd*x1 + N is the zero map:", (x1 * x1 - trd * x1 + nrd).is_zero_function())

# %%
# Realization inverts expansion.
v = expand(parse_nc("x1*j*x1 + k", H, 1))
r = realize(v)
print(len(r.terms), "monomials;", "round trip exact:", expand(r) == v)
print(print_nc(parse_nc("x1*j*x1 + k", H, 1)))
