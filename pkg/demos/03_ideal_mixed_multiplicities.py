"""Mixed multiplicities of J = (x, y) and I = (x^2, y^3) on k[x, y].

The fiber function length(J^n0 I^n1 / J^(n0+1) I^n1) becomes n0 + 2 n1 + 1,
so e(J^[2], I^[0]) = 1 and e(J^[1], I^[1]) = 2.  The same numbers, times the
rank, come out for a module with torsion.
"""
from mixmult import (
    GradedRing,
    IdealSystem,
    MonomialIdeal,
    MonomialModule,
    check_cor_3_8,
    check_thm_3_4,
    fiber_hilbert,
    ideal_mixed_multiplicities,
    rees_module_multiplicity,
)

A = GradedRing.standard_graded(2)
J = MonomialIdeal.maximal(A)
I = MonomialIdeal(A, ((2, 0), (0, 3)))
sys = IdealSystem(J, (I,))

print("fiber table (rows n0, columns n1):")
for n0 in range(4):
    print("   ", [fiber_hilbert(sys, n0, (n1,)) for n1 in range(5)])

mm = ideal_mixed_multiplicities(sys)
print("polynomial  =", mm.polynomial)
print("values      =", mm.values)
print("Rees mult.  =", rees_module_multiplicity(sys), "= sum of values", mm.total())

N = MonomialModule.free(A, 2) + MonomialModule.quotient(MonomialIdeal(A, ((1, 0),)))
print(check_thm_3_4(sys.with_module(N)).to_text(timing=False))
print(check_cor_3_8(sys.with_module(N)).to_text(timing=False))
