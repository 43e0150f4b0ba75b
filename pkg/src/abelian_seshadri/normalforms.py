"""Hermite and Smith normal forms of small integer matrices.

Matrices are lists of rows of Python ints. Both reductions pivot on the
entry of smallest magnitude, which keeps intermediate entries small for the
4x4 and 8x4 matrices this package produces.
"""

from __future__ import annotations

from typing import List, Sequence

IntMatrix = List[List[int]]


def _copy(rows: Sequence[Sequence[int]]) -> IntMatrix:
    out = [list(map(int, r)) for r in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form of the row lattice of ``rows``.

    Returns the nonzero rows only: an echelon basis with positive pivots and
    every entry above a pivot reduced into ``[0, pivot)``. Two matrices
    generate the same row lattice iff their HNFs are equal.

    >>> hermite_normal_form([[2, 0], [0, 2], [1, 1]])
    [[1, 1], [0, 2]]
    """
    A = _copy(rows)
    if not A:
        return []
    m, ncols = len(A), len(A[0])
    p = 0
    for c in range(ncols):
        if p == m:
            break
        while True:
            nz = [i for i in range(p, m) if A[i][c] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(A[i][c]))
            A[p], A[i_min] = A[i_min], A[p]
            clean = True
            for i in range(p + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[p][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[p])]
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if A[p][c] == 0:
            continue
        if A[p][c] < 0:
            A[p] = [-x for x in A[p]]
        for i in range(p):
            q = A[i][c] // A[p][c]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[p])]
        p += 1
    return A[:p]


def smith_diagonal(rows: Sequence[Sequence[int]]) -> List[int]:
    """Diagonal of the Smith normal form, each entry dividing the next.

    The list has ``min(nrows, ncols)`` entries; trailing zeros mark rank
    deficiency.

    >>> smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    [2, 6, 12]
    """
    A = _copy(rows)
    if not A:
        return []
    m, n = len(A), len(A[0])
    diag: List[int] = []
    for t in range(min(m, n)):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        A[t], A[i0] = A[i0], A[t]
        for r in A:
            r[t], r[j0] = r[j0], r[t]
        while True:
            for i in range(t + 1, m):
                q = A[i][t] // A[t][t]
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            for j in range(t + 1, n):
                q = A[t][j] // A[t][t]
                if q:
                    for r in A:
                        r[j] -= q * r[t]
            rest = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                _, i1, j1 = min(rest)
                if j1 == t:
                    A[t], A[i1] = A[i1], A[t]
                else:
                    for r in A:
                        r[t], r[j1] = r[j1], r[t]
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
    return diag + [0] * (min(m, n) - len(diag))
