"""Pell equations and continued fractions.

Every irrational case of the closed forms ends in ``l^2 - D k^2 = 1``. This
script expands a few square roots, shows the convergent that solves the
equation, and compares with a plain search.
"""

from abelian_seshadri import cf_expand, fundamental_solution, pell_bruteforce

for D in (2, 6, 8, 12, 32, 61):
    cf = cf_expand(D)
    sol = fundamental_solution(D)
    print(f"sqrt({D}) = [{cf.a0}; {list(cf.period)}]  ->  (l0, k0) = ({sol.l0}, {sol.k0})")

# A plain scan finds the small ones quickly ...
print(pell_bruteforce(6, 100))
# ... but D = 61 needs k0 = 226153980, far past any reasonable scan.
print(pell_bruteforce(61, 10_000))
sol = fundamental_solution(61)
print(sol.l0 ** 2 - 61 * sol.k0 ** 2)
