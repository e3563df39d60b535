"""Small exact linear-algebra helpers over Fraction / int matrices."""

from __future__ import annotations

from fractions import Fraction


def mat_inv(m):
    """Invert a square matrix of Fractions by Gauss-Jordan elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def mat_solve(m, rhs):
    """Solve m @ x = rhs exactly; m square over Fractions."""
    inv = mat_inv(m)
    return tuple(sum(inv[i][j] * Fraction(rhs[j]) for j in range(len(rhs)))
                 for i in range(len(rhs)))


def det(m):
    """Exact determinant by fraction-free-ish elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = Fraction(sign)
    for i in range(n):
        out *= a[i][i]
    return out


def unitriangular_int_inverse(m):
    """Invert an upper unitriangular integer matrix exactly (integer output)."""
    n = len(m)
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            s = -sum(m[i][k] * inv[k][j] for k in range(i + 1, j + 1))
            inv[i][j] = s
    return tuple(tuple(row) for row in inv)


def smith_normal_form(m):
    """Smith normal form of an integer matrix.

    Returns (d, u) with u unimodular and u @ m @ v = diag(d) for some
    unimodular v; only the invariant factors d and the row transform u are
    needed by callers (coset labels of Z^n modulo the column lattice of m).
    """
    a = [list(map(int, row)) for row in m]
    n = len(a)
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def add_row(i, j, c):
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    def add_col(i, j, c):
        for row in a:
            row[i] += c * row[j]

    for t in range(n):
        while True:
            piv = min(((abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, n)
                       if a[i][j] != 0), default=None)
            if piv is None:
                break
            _, pi, pj = piv
            swap_rows(t, pi)
            swap_cols(t, pj)
            done = True
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0:
                        done = False
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0:
                        done = False
            if done and all(a[i][t] == 0 for i in range(t + 1, n)) \
                    and all(a[t][j] == 0 for j in range(t + 1, n)):
                break
        if t < n and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    d = [a[i][i] for i in range(n)]
    return d, tuple(tuple(row) for row in u)
