"""Exact scalars and dense linear algebra over the rationals.

Vectors are lists of fractions.Fraction, matrices are lists of row vectors.
No floating point is used anywhere; every routine returns exact results.
Echelon forms break pivot ties by lowest row/column index so that reduced
bases are canonical and byte-reproducible.
"""

from __future__ import annotations

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


def frac_str(x) -> str:
    """Render an exact scalar as 'p' or 'p/q'."""
    return str(Fraction(x))


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def fzeros(n: int) -> list[Fraction]:
    return [F0] * n


def unit_vector(n: int, i: int) -> list[Fraction]:
    v = [F0] * n
    v[i] = F1
    return v


def identity_matrix(n: int) -> list[list[Fraction]]:
    return [unit_vector(n, i) for i in range(n)]


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    c = Fraction(c)
    return [c * a for a in v]


def vec_is_zero(v) -> bool:
    return all(a == 0 for a in v)


def mat_vec(m, v):
    return [sum((r[j] * v[j] for j in range(len(v))), F0) for r in m]


def mat_mul(a, b):
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [
        [sum((ra[k] * b[k][j] for k in range(len(ra))), F0) for j in range(cols)]
        for ra in a
    ]


def transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def rref(rows):
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column indices).  The input is not
    modified.  Pivots are chosen at the lowest available column, scanning
    rows top to bottom, which makes the output canonical for a given row
    span regardless of the order of the spanning vectors.
    """
    work = [list(map(Fraction, r)) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    out: list[list[Fraction]] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = F1 / work[r][col]
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                c = work[i][col]
                work[i] = [x - c * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    out = work[:r]
    return out, pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def reduce_vector(basis_rows, pivots, v):
    """Eliminate the pivot coordinates of v against a reduced basis."""
    v = list(map(Fraction, v))
    for row, p in zip(basis_rows, pivots):
        c = v[p]
        if c != 0:
            v = [x - c * y for x, y in zip(v, row)]
    return v


def solve_linear(a_rows, b):
    """One exact solution x of A x = b, or None when inconsistent.

    Free variables are set to zero, so the returned solution is canonical.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    aug = [list(map(Fraction, a_rows[i])) + [Fraction(b[i])] for i in range(m)]
    red, pivots = rref(aug)
    x = [F0] * n
    for row, p in zip(red, pivots):
        if p == n:
            return None
        x[p] = row[n]
    return x


def invert_matrix(m):
    """Exact inverse of a square matrix; None when singular."""
    n = len(m)
    aug = [list(map(Fraction, m[i])) + unit_vector(n, i) for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]
