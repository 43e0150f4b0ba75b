"""How much of L descends to X/G?

Two subgroups of the same order can behave very differently. The cyclic
group generated by lambda2/d lies in K(L), so L itself descends (n = 1) to a
principal polarization. The group generated by lambda1/k and mu1/k meets the
form badly and only k^2 L descends.
"""

from fractions import Fraction

from abelian_seshadri import (
    PolarizedSurface,
    SubgroupPresentation,
    descend,
    gram_matrix,
    quotient_invariants,
    superlattice,
)


def show(d, gens):
    s = PolarizedSurface(d)
    basis = superlattice(SubgroupPresentation(s, gens))
    inv = quotient_invariants(basis)
    data = descend(s, basis, inv.order)
    print(f"d={d}  G={inv.invariant_factors or 'trivial'}  n={data.n}  M of type {data.type_of_M}")
    for row in gram_matrix(s, basis):
        print("   ", [str(x) for x in row])


show(4, [(0, Fraction(1, 4), 0, 0)])
show(4, [(Fraction(1, 2), 0, 0, 0), (0, 0, Fraction(1, 2), 0)])
show(1, [(Fraction(1, 3), 0, 0, 0), (0, 0, Fraction(1, 3), 0)])
