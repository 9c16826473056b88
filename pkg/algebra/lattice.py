"""
Integer lattice helpers behind every additive subgroup computation.

A subgroup H of Z/d1 + ... + Z/dk is stored through its preimage lattice L in Z^k
(which always contains every d_i e_i). The Hermite rows of L are canonical, so two
subgroups are equal exactly when their rows are equal.
"""
from typing import List, Optional, Sequence, Tuple

Rows = Tuple[Tuple[int, ...], ...]


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hermite_rows(vectors: Sequence[Sequence[int]], orders: Sequence[int]) -> Rows:
    """Hermite rows of the lattice spanned by `vectors` and the d_i e_i.

    Row c has zeros before column c, a positive pivot h_c dividing d_c at column c,
    and entries in [0, h_j) at every later column j.
    """
    k = len(orders)
    rows = [[v % d for v, d in zip(vec, orders)] for vec in vectors]
    rows = [r for r in rows if any(r)]
    basis: List[List[int]] = []
    for c in range(k):
        pivot = [0] * k
        pivot[c] = orders[c]
        rest = []
        for r in rows:
            if r[c] == 0:
                rest.append(r)
                continue
            g, x, y = ext_gcd(pivot[c], r[c])
            a, b = pivot[c] // g, r[c] // g
            new_pivot = [x * p + y * q for p, q in zip(pivot, r)]
            other = [b * p - a * q for p, q in zip(pivot, r)]
            for j in range(c + 1, k):
                new_pivot[j] %= orders[j]
                other[j] %= orders[j]
            pivot = new_pivot
            if any(other):
                rest.append(other)
        rows = rest
        basis.append(pivot)
    for j in range(k):
        h = basis[j][j]
        for i in range(j):
            q = basis[i][j] // h
            if q:
                basis[i] = [a - q * b for a, b in zip(basis[i], basis[j])]
    return tuple(tuple(row) for row in basis)


def lattice_coefficients(rows: Rows, orders: Sequence[int], vector: Sequence[int]) -> Optional[List[int]]:
    """Coefficients t with vector = sum t_c rows[c] modulo the d_i, or None if outside."""
    v = [x % d for x, d in zip(vector, orders)]
    coeffs = []
    k = len(orders)
    for c in range(k):
        h = rows[c][c]
        if v[c] % h:
            return None
        t = v[c] // h
        coeffs.append(t)
        if t:
            v = [a - t * b for a, b in zip(v, rows[c])]
            for j in range(c + 1, k):
                v[j] %= orders[j]
    return coeffs


def exact_coefficients(rows: Rows, vector: Sequence[int]) -> List[int]:
    """Integer y with y * rows == vector exactly; the vector must lie in the lattice."""
    v = list(vector)
    coeffs = []
    for c, row in enumerate(rows):
        h = row[c]
        if v[c] % h:
            raise ValueError("vector is not in the lattice")
        t = v[c] // h
        coeffs.append(t)
        if t:
            v = [a - t * b for a, b in zip(v, row)]
    if any(v):
        raise ValueError("vector is not in the lattice")
    return coeffs


def smith_form(matrix: Sequence[Sequence[int]]):
    """Smith form of a nonsingular square integer matrix.

    Returns (diagonal, V, V_inv) with U * M * V = diag for some unimodular U; the
    diagonal is positive and each entry divides the next. Only the column transform
    is tracked, which is all a presentation Z^n / rowspace(M) needs.
    """
    n = len(matrix)
    a = [list(row) for row in matrix]
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    v_inv = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def sub_col(j: int, t: int, q: int) -> None:
        # col_j -= q * col_t
        for row in a:
            row[j] -= q * row[t]
        for row in v:
            row[j] -= q * row[t]
        v_inv[t] = [x + q * y for x, y in zip(v_inv[t], v_inv[j])]

    for t in range(n):
        while True:
            candidates = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, n) if a[i][j]]
            if not candidates:
                raise ValueError("matrix is singular")
            _, pi, pj = min(candidates)
            a[t], a[pi] = a[pi], a[t]
            if pj != t:
                swap_cols(t, pj)
            pivot = a[t][t]
            clean = True
            for i in range(t + 1, n):
                q = a[i][t] // pivot
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = a[t][j] // pivot
                if q:
                    sub_col(j, t, q)
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % pivot), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
    return [a[i][i] for i in range(n)], v, v_inv


def solve_mod_p(matrix: Sequence[Sequence[int]], rhs: Sequence[int], p: int, columns: int) -> Optional[List[int]]:
    """One solution of matrix * x = rhs over Z/p (free variables set to 0), or None."""
    aug = [[x % p for x in row] + [b % p] for row, b in zip(matrix, rhs)]
    m = len(aug)
    pivots = []
    r = 0
    for c in range(columns):
        piv = next((i for i in range(r, m) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [x * inv % p for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][columns] for i in range(r, m)):
        return None
    x = [0] * columns
    for i, c in enumerate(pivots):
        x[c] = aug[i][columns]
    return x
