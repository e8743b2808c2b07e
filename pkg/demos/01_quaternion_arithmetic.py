"""
Quaternion arithmetic over the rationals
========================================

Exact products, norms, traces and inverses in (a, b / Q).
"""

# %%
from fractions import Fraction

from quatnull import QuatAlgebra, parse_quaternion

H = QuatAlgebra(-1, -1)
one, i, j, k = H.basis()
print("i*j =", i * j, "  j*i =", j * i)

# %%
# A non-Hamilton algebra: i^2 = -2, j^2 = -3.
A = QuatAlgebra(-2, -3)
x = parse_quaternion("3/2 + i - 2j", A)
y = parse_quaternion("1 - k", A)
print("x*y =", x * y)
print("nrd(x*y) == nrd(x)*nrd(y):", (x * y).nrd() == x.nrd() * y.nrd())

# %%
# The norm form is positive definite, so every nonzero element inverts.
print("x^-1 =", x.inv())
print("x * x^-1 =", x * x.inv())
print("trd(x) =", x.trd(), "  x + conj(x) =", x + x.conj())

# %%
# Coordinates stay exact rationals in lowest terms.
z = x ** 5
print(z, [type(c).__name__ for c in z])
assert all(isinstance(c, Fraction) for c in z)
