"""Monomial ideal arithmetic on k[x, y, z]."""
from mixmult import GradedRing, MonomialIdeal

R = GradedRing.standard_graded(3)
x, y, z = (MonomialIdeal(R, (R.variable(i),)) for i in range(3))
m = MonomialIdeal.maximal(R)

I = MonomialIdeal(R, ((2, 1, 0), (0, 2, 1), (1, 0, 3)))
print("I                =", I)
print("I + (x)          =", I + x)
print("I * m            =", I * m)
print("I & (y)          =", I & y)
print("I : x^oo         =", I.saturation(x))
print("sqrt(I)          =", I.radical())
print("dim R/I          =", I.krull_dim_quotient())
print("height I         =", I.height())

J = MonomialIdeal(R, ((2, 0, 0), (0, 3, 0), (0, 0, 1)))
print("J                =", J)
print("m^c inside J for c =", J.m_primary_exponent())
print("length R/J       =", len(J.standard_monomials()))
