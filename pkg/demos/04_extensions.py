"""Multiplicities along a module-finite monomial extension.

B = k[u, v] x k[u, v] over A = k[x, y], with x -> u^2, y -> v on the first
factor and x -> v, y -> u^3 on the second.  B has rank 2 + 3 = 5 over A, and
the base multiplicities are the average of the local ones.
"""
from mixmult import GradedRing, IdealSystem, MonomialExtension, MonomialIdeal, check_thm_3_9
from mixmult.extensions import local_mixed_multiplicities

A = GradedRing.standard_graded(2)
ext = MonomialExtension.from_matrices(A, [[[2, 0], [0, 1]], [[0, 1], [3, 0]]])
sys = IdealSystem(MonomialIdeal.maximal(A), (MonomialIdeal(A, ((2, 0), (0, 1))),))

print("rank_A B =", ext.rank_over_base())
for j, comp in enumerate(ext.components):
    print(f"component {j}: lattice basis {comp.lattice_basis()}")
    print("   local values", local_mixed_multiplicities(ext, j, sys).values)
print(check_thm_3_9(ext, sys).to_text(timing=False))
