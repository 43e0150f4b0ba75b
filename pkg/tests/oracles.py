"""Independent reference computations used by the tests.

Nothing here imports the package: these are deliberately naive versions of
what the library computes, so agreement is meaningful.
"""

import math
from fractions import Fraction
from itertools import product


def brute_pell(D, k_max=10**5):
    """Smallest (l, k) with l^2 - D k^2 = 1 by scanning k."""
    for k in range(1, k_max + 1):
        t = 1 + D * k * k
        l = math.isqrt(t)
        if l * l == t:
            return l, k
    return None


def closure(gens):
    """All sums of generators mod Z^4, as tuples of Fractions in [0, 1)."""
    zero = (Fraction(0),) * 4
    elems = {zero}
    stack = [zero]
    gens = [tuple(Fraction(x) % 1 for x in g) for g in gens]
    while stack:
        x = stack.pop()
        for g in gens:
            y = tuple((a + b) % 1 for a, b in zip(x, g))
            if y not in elems:
                elems.add(y)
                stack.append(y)
    return elems


def element_order(v):
    return math.lcm(*(Fraction(x).denominator for x in v))


def pairing(d, v, w):
    """E(v, w) written out from the block matrix [[0, D], [-D, 0]], D = diag(1, d)."""
    J = [[0, 0, 1, 0], [0, 0, 0, d], [-1, 0, 0, 0], [0, -d, 0, 0]]
    return sum(Fraction(v[i]) * J[i][j] * Fraction(w[j]) for i in range(4) for j in range(4))


def minimal_n_by_elements(d, gens):
    """Least n with n*E integral on every pair of lifts of G, plus Lambda itself.

    Uses all elements of G together with the unit vectors rather than a basis.
    """
    units = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    vecs = list(closure(gens)) + units
    n = 1
    for v, w in product(vecs, repeat=2):
        n = math.lcm(n, pairing(d, v, w).denominator)
    return n


def is_rational_square(q):
    q = Fraction(q)
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    return a * a == q.numerator and b * b == q.denominator


def theorem_epsilon(d, g, n, fallback=None, k_max=10**5):
    """Closed form for eps(L; x+G) from (d, g, n), using brute-force Pell.

    ``fallback`` is an (l0, k0) pair used only when the scan up to ``k_max``
    finds nothing; it must solve the equation with k0 beyond the scan.
    """
    q = Fraction(2 * d, g)
    if is_rational_square(q):
        return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))
    D = Fraction(2 * n * n * d, g)
    assert D.denominator == 1
    found = brute_pell(int(D), k_max)
    if found is None:
        assert fallback is not None, f"no Pell solution for D={D} with k <= {k_max}"
        l0, k0 = fallback
        assert l0 * l0 - D * k0 * k0 == 1 and k0 > k_max
    else:
        l0, k0 = found
    return Fraction(k0, l0) * Fraction(2 * d * n, g)
