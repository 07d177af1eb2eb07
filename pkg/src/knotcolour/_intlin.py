"""Exact integer linear algebra: products, determinants, inverses, Smith
normal form, and linear solves over Z and Z/n.

Everything here works on plain lists/tuples of Python ints; matrices are
row-major. Sizes in this package stay small (at most a few dozen rows),
so clarity wins over asymptotics throughout.
"""

from fractions import Fraction
from math import gcd

from .errors import NotUnimodular


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(row) for row in zip(*A)] if A else []


def mat_mul(A, B):
    rows, inner = len(A), len(B)
    cols = len(B[0]) if B else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(cols):
                    row[j] += a * Bk[j]
    return out


def mat_vec(A, v):
    return [sum(A[i][j] * v[j] for j in range(len(v))) for i in range(len(A))]


def mat_pow(A, k):
    n = len(A)
    out = identity(n)
    base = [list(r) for r in A]
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def det(A):
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def inverse_unimodular(A):
    """Exact inverse of an integer matrix with det = +-1.

    Gauss-Jordan over Fraction, certified back to int entries at the end.
    """
    n = len(A)
    d = det(A)
    if d not in (1, -1):
        raise NotUnimodular(f"determinant {d}, expected +-1")
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [[int(M[i][n + j]) for j in range(n)] for i in range(n)]


def smith(A):
    """Smith normal form with transforms: (U, D, V) with U*A*V = D,
    U and V unimodular, D diagonal, nonnegative, d1 | d2 | ...
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    D = [list(r) for r in A]
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(i, j, t):  # row_i += t * row_j
        D[i] = [a + t * b for a, b in zip(D[i], D[j])]
        U[i] = [a + t * b for a, b in zip(U[i], U[j])]

    def add_col(i, j, t):  # col_i += t * col_j
        for row in D:
            row[i] += t * row[j]
        for row in V:
            row[i] += t * row[j]

    def neg_row(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    rank = 0
    for t in range(min(rows, cols)):
        # smallest-magnitude nonzero pivot in the trailing block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if D[i][j] and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            for i in range(t + 1, rows):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
            rest = [i for i in range(t + 1, rows) if D[i][t]]
            if rest:
                swap_rows(t, rest[0])  # strictly smaller remainder as pivot
                continue
            for j in range(t + 1, cols):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
            rest = [j for j in range(t + 1, cols) if D[t][j]]
            if rest:
                swap_cols(t, rest[0])
                continue
            break
        if D[t][t] < 0:
            neg_row(t)
        rank = t + 1

    # enforce d_i | d_{i+1} by folding adjacent pairs
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if b % a == 0:
                continue
            changed = True
            add_col(i, i + 1, 1)  # corner becomes [[a, 0], [b, b]]
            while D[i + 1][i]:
                add_row(i, i + 1, -(D[i][i] // D[i + 1][i]))
                swap_rows(i, i + 1)
            # pivot is now +-gcd(a, b); it divides the dirty corner entry
            if D[i][i + 1]:
                add_col(i + 1, i, -(D[i][i + 1] // D[i][i]))
            if D[i][i] < 0:
                neg_row(i)
            if D[i + 1][i + 1] < 0:
                neg_row(i + 1)
    return U, D, V


def smith_diagonal(A):
    _, D, _ = smith(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def solve_integer(A, b):
    """One integer solution x of A x = b, or None if none exists."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    U, D, V = smith(A)
    c = mat_vec(U, b)
    y = [0] * cols
    for i in range(min(rows, cols)):
        d = D[i][i]
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    for i in range(min(rows, cols), rows):
        if c[i] != 0:
            return None
    return mat_vec(V, y)


def solve_mod(C, target, mods):
    """Integer vector x with C x = target modulo per-row moduli.

    C is r x k over Z, target and mods have length r. Returns x of
    length k, or None when no solution exists; solved by augmenting C
    with diag(mods) and solving over Z.
    """
    r = len(mods)
    k = len(C[0]) if r and C else 0
    aug = [list(C[i]) + [mods[i] if j == i else 0 for j in range(r)]
           for i in range(r)]
    sol = solve_integer(aug, list(target))
    if sol is None:
        return None
    return sol[:k]


def gcd_many(values):
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
