"""Mixed multiplicities of bigraded monomial modules over k[x1, x2, y1, y2].

The top-degree part of the bigraded Hilbert polynomial scales with the rank:
torsion summands and shifts never change it.
"""
from mixmult import (
    GradedRing,
    MonomialIdeal,
    MonomialModule,
    check_thm_3_1,
    graded_mixed_multiplicities,
    hilbert_polynomial,
)

S = GradedRing.multigraded([2, 2])
free = MonomialModule.free(S)
print("P_S(n0, n1) =", hilbert_polynomial(free))
print("e(S; k)     =", graded_mixed_multiplicities(free).nonzero())

torsion = MonomialModule.quotient(MonomialIdeal(S, ((1, 0, 1, 0), (0, 2, 0, 0))), (1, 1))
M = MonomialModule.free(S, 2, [(1, 0), (0, 2)]) + torsion
print("rank M      =", M.rank())
print("P_M(n0, n1) =", hilbert_polynomial(M))
print(check_thm_3_1(S, M).to_text(timing=False))
