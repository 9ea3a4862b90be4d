"""Exact dense linear algebra over a field (rationals or a prime field).

Plain Gaussian elimination; matrices are lists of rows of scalars.  All
arithmetic is exact, so rank and solvability decisions are certain.
"""

from __future__ import annotations


def _echelonize(rows, ncols, field):
    """In-place forward elimination; returns the list of pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def matrix_rank(matrix, field) -> int:
    if not matrix:
        return 0
    rows = [list(row) for row in matrix]
    return len(_echelonize(rows, len(rows[0]), field))


def solve_unique(matrix, rhs, field):
    """Solve A x = rhs exactly.

    Returns the solution vector, or None if the system is inconsistent.
    Raises ValueError if the system is solvable but underdetermined; the
    callers in this package expect a unique solution when one exists.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    if not rows:
        return []
    pivots = _echelonize(rows, ncols, field)
    for row in rows[len(pivots):]:
        if row[-1]:
            return None
    if len(pivots) < ncols:
        raise ValueError("linear system is underdetermined")
    sol = [field.zero] * ncols
    for r, c in enumerate(pivots):
        sol[c] = rows[r][-1]
    return sol
