"""Exact integer matrix algebra: determinants, Hermite and Smith forms,
kernels, and unimodular monomial substitutions.

Everything here is fraction-free: Bareiss elimination for determinants and
extended-gcd row operations for the normal forms, so intermediate entries
stay integers of modest size.  Matrices are lists of lists of Python ints,
row-major.
"""

from __future__ import annotations

from math import gcd


def _copy(M):
    return [list(row) for row in M]


def mat_mul(A, B):
    """Integer matrix product A @ B."""
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    assert all(len(r) == k for r in A)
    return [
        [sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
        for i in range(n)
    ]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def determinant(M) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    assert all(len(row) == n for row in M)
    A = _copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _egcd(a: int, b: int):
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_factor(M):
    """Row-style Hermite normal form: returns (H, U) with U @ M == H,
    U unimodular.

    H is upper echelon with positive pivots and entries above each pivot
    reduced into [0, pivot).  Works for any rectangular integer matrix.
    """
    H = _copy(M)
    n = len(H)
    m = len(H[0]) if n else 0
    U = identity(n)
    row = 0
    for col in range(m):
        if row >= n:
            break
        pivot = None
        for i in range(row, n):
            if H[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        H[row], H[pivot] = H[pivot], H[row]
        U[row], U[pivot] = U[pivot], U[row]
        # kill entries below with combined-gcd row operations
        for i in range(row + 1, n):
            if H[i][col] == 0:
                continue
            a, b = H[row][col], H[i][col]
            g, s, t = _egcd(a, b)
            p, q = a // g, b // g
            # [[s, t], [-q, p]] is unimodular: s*p + t*q == 1
            r1 = [s * H[row][j] + t * H[i][j] for j in range(m)]
            r2 = [-q * H[row][j] + p * H[i][j] for j in range(m)]
            H[row], H[i] = r1, r2
            u1 = [s * U[row][j] + t * U[i][j] for j in range(n)]
            u2 = [-q * U[row][j] + p * U[i][j] for j in range(n)]
            U[row], U[i] = u1, u2
        if H[row][col] < 0:
            H[row] = [-v for v in H[row]]
            U[row] = [-v for v in U[row]]
        # reduce entries above the pivot into [0, pivot)
        p = H[row][col]
        for i in range(row):
            q = H[i][col] // p
            if q:
                H[i] = [H[i][j] - q * H[row][j] for j in range(m)]
                U[i] = [U[i][j] - q * U[row][j] for j in range(n)]
        row += 1
    return H, U


def smith_factor(M):
    """Smith normal form: returns (S, U, V) with U @ M @ V == S.

    U and V are unimodular; S is diagonal with nonnegative entries
    satisfying the divisibility chain s1 | s2 | ... .
    """
    S = _copy(M)
    n = len(S)
    m = len(S[0]) if n else 0
    U = identity(n)
    V = identity(m)

    def row_op(i1, i2, s, t, q, p):
        S[i1], S[i2] = (
            [s * S[i1][j] + t * S[i2][j] for j in range(m)],
            [-q * S[i1][j] + p * S[i2][j] for j in range(m)],
        )
        U[i1], U[i2] = (
            [s * U[i1][j] + t * U[i2][j] for j in range(n)],
            [-q * U[i1][j] + p * U[i2][j] for j in range(n)],
        )

    def col_op(j1, j2, s, t, q, p):
        for i in range(n):
            S[i][j1], S[i][j2] = (
                s * S[i][j1] + t * S[i][j2],
                -q * S[i][j1] + p * S[i][j2],
            )
        for i in range(m):
            V[i][j1], V[i][j2] = (
                s * V[i][j1] + t * V[i][j2],
                -q * V[i][j1] + p * V[i][j2],
            )

    k = 0
    while k < min(n, m):
        # find a pivot
        piv = None
        for i in range(k, n):
            for j in range(k, m):
                if S[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i0, j0 = piv
        if i0 != k:
            S[k], S[i0] = S[i0], S[k]
            U[k], U[i0] = U[i0], U[k]
        if j0 != k:
            for i in range(n):
                S[i][k], S[i][j0] = S[i][j0], S[i][k]
            for i in range(m):
                V[i][k], V[i][j0] = V[i][j0], V[i][k]
        while True:
            # clear column k below the pivot
            for i in range(k + 1, n):
                if S[i][k]:
                    a, b = S[k][k], S[i][k]
                    g, s, t = _egcd(a, b)
                    row_op(k, i, s, t, b // g, a // g)
            if all(S[k][j] % S[k][k] == 0 for j in range(k + 1, m)):
                # plain subtractions leave the cleared column untouched
                for j in range(k + 1, m):
                    if S[k][j]:
                        col_op(k, j, 1, 0, S[k][j] // S[k][k], 1)
                break
            # the pivot strictly shrinks here, so this terminates even
            # though the gcd rotation may disturb the cleared column
            for j in range(k + 1, m):
                if S[k][j]:
                    a, b = S[k][k], S[k][j]
                    g, s, t = _egcd(a, b)
                    col_op(k, j, s, t, b // g, a // g)
        # enforce divisibility: if s_k does not divide some later entry,
        # fold that entry's row into row k and redo the elimination
        fixed = True
        for i in range(k + 1, n):
            for j in range(k + 1, m):
                if S[i][j] % S[k][k] != 0:
                    S[k] = [S[k][t2] + S[i][t2] for t2 in range(m)]
                    U[k] = [U[k][t2] + U[i][t2] for t2 in range(n)]
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if S[k][k] < 0:
            S[k] = [-v for v in S[k]]
            U[k] = [-v for v in U[k]]
        k += 1
    return S, U, V


def integer_kernel(M):
    """A basis of the integer null space {v : M @ v == 0}, as a list of
    integer row vectors.

    Computed via the Hermite form of the transpose: rows of U whose image
    row in H is zero form a lattice basis of the kernel.
    """
    n = len(M)
    m = len(M[0]) if n else 0
    T = [[M[i][j] for i in range(n)] for j in range(m)]
    H, U = hermite_factor(T)
    basis = []
    for i in range(m):
        if all(v == 0 for v in H[i]):
            basis.append(list(U[i]))
    return basis


def primitive_vector(v):
    """Scale an integer vector by 1/gcd so that its entries are coprime."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return list(v)
    return [x // g for x in v]


def rank(M) -> int:
    """Rank over Q, via the Hermite form."""
    if not M:
        return 0
    H, _ = hermite_factor(M)
    return sum(1 for row in H if any(v != 0 for v in row))


def monomial_substitute(points, U):
    """Apply the monomial change of variables x := y^U to a support.

    Each exponent vector a maps to U @ a.  Returns the new list of points
    in the same order.
    """
    n = len(U)
    out = []
    for a in points:
        assert len(a) == n
        out.append(tuple(sum(U[i][j] * a[j] for j in range(n)) for i in range(n)))
    return out
