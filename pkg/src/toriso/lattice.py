"""Exact linear algebra over the integers.

Everything here works on immutable row-major matrices of Python ints, so all
results are exact at arbitrary precision.  The matrices that show up in this
package are tiny (n is the ambient rank, rarely above 4; m is the number of
rays, rarely above 20), so the classical cubic algorithms below are more than
fast enough and much easier to audit than anything clever.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows) -> Matrix:
    """Freeze an iterable of rows into a Matrix, checking shape and content.

    >>> as_matrix([[1, 2], [3, 4]])
    ((1, 2), (3, 4))
    """
    out = tuple(tuple(r) for r in rows)
    if not out:
        raise ValueError("matrix must have at least one row")
    width = len(out[0])
    if width == 0:
        raise ValueError("matrix rows must be nonempty")
    for row in out:
        if len(row) != width:
            raise ValueError("matrix rows have unequal lengths")
        for x in row:
            # bool is an int subclass; keep it out of exact arithmetic.
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError(f"matrix entries must be ints, got {x!r}")
    return out


def shape(mat: Matrix) -> tuple[int, int]:
    return len(mat), len(mat[0])


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(mat: Matrix) -> Matrix:
    return tuple(zip(*mat))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise ValueError("incompatible shapes for multiplication")
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    if shape(a)[1] != len(v):
        raise ValueError("incompatible shapes for matrix-vector product")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def det(mat: Matrix) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Every intermediate quotient is exact, so the result is exact for any
    integer matrix.

    >>> det(((0, -1), (1, -1)))
    1
    """
    r, c = shape(mat)
    if r != c:
        raise ValueError("determinant requires a square matrix")
    a = [list(row) for row in mat]
    n = r
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Division by the previous pivot is exact (Sylvester identity).
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _minor(mat: Matrix, drop_row: int, drop_col: int) -> Matrix:
    return tuple(
        tuple(x for j, x in enumerate(row) if j != drop_col)
        for i, row in enumerate(mat)
        if i != drop_row
    )


def adjugate(mat: Matrix) -> Matrix:
    """Classical adjugate: adjugate(M) @ M == det(M) * identity."""
    r, c = shape(mat)
    if r != c:
        raise ValueError("adjugate requires a square matrix")
    n = r
    if n == 1:
        return ((1,),)
    return tuple(
        tuple((-1) ** (i + j) * det(_minor(mat, j, i)) for j in range(n))
        for i in range(n)
    )


def inverse_unimodular(mat: Matrix) -> Matrix:
    """Exact inverse of a matrix with determinant +-1."""
    d = det(mat)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (determinant {d})")
    # 1/d == d here, so the adjugate needs at most a global sign flip.
    adj = adjugate(mat)
    if d == 1:
        return adj
    return tuple(tuple(-x for x in row) for row in adj)


def inverse_mod2(mat: Matrix) -> Matrix:
    """Inverse of a square matrix over the field with two elements."""
    d = det(mat)
    if d % 2 == 0:
        raise ValueError("matrix is singular mod 2")
    return tuple(tuple(x % 2 for x in row) for row in adjugate(mat))


@dataclass(frozen=True)
class SmithDecomposition:
    """Smith normal form with its unimodular change-of-basis matrices.

    left @ original @ right equals the diagonal matrix described by `diag`;
    the diagonal entries are nonnegative and each divides the next.
    """

    left: Matrix
    diag: tuple[int, ...]
    right: Matrix

    def diagonal_matrix(self) -> Matrix:
        rows = shape(self.left)[0]
        cols = shape(self.right)[0]
        return tuple(
            tuple(
                self.diag[i] if i == j and i < len(self.diag) else 0
                for j in range(cols)
            )
            for i in range(rows)
        )

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


def smith_normal_form(mat: Matrix) -> SmithDecomposition:
    """Smith normal form over the integers, tracking both transforms.

    >>> smith_normal_form(((1, 0, -1), (0, 1, -1))).diag
    (1, 1)
    >>> smith_normal_form(((0, 0), (0, 0))).diag
    (0, 0)
    """
    mat = as_matrix(mat)
    r, c = shape(mat)
    a = [list(row) for row in mat]
    left = [list(row) for row in identity(r)]
    right = [list(row) for row in identity(c)]

    def add_row(i: int, k: int, f: int) -> None:
        # row i += f * row k, applied to the work matrix and to `left`.
        a[i] = [x + f * y for x, y in zip(a[i], a[k])]
        left[i] = [x + f * y for x, y in zip(left[i], left[k])]

    def add_col(j: int, k: int, f: int) -> None:
        for row in a:
            row[j] += f * row[k]
        for row in right:
            row[j] += f * row[k]

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        left[i], left[k] = left[k], left[i]

    def swap_cols(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in right:
            row[j], row[k] = row[k], row[j]

    t = 0
    while t < min(r, c):
        pivot = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] and (pivot is None or abs(a[i][j]) < pivot[0]):
                    pivot = (abs(a[i][j]), i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[1])
        swap_cols(t, pivot[2])
        while True:
            # Shrink the pivot until it divides its whole row and column.
            improved = False
            for i in range(t + 1, r):
                if a[i][t] % a[t][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    swap_rows(t, i)
                    improved = True
                    break
            if improved:
                continue
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, c):
                if a[t][j] % a[t][t]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    swap_cols(t, j)
                    improved = True
                    break
            if improved:
                continue
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            # Row and column are clear; force divisibility of the rest.
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % a[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        t += 1
    for k in range(min(r, c)):
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            left[k] = [-x for x in left[k]]
    return SmithDecomposition(
        left=tuple(tuple(row) for row in left),
        diag=tuple(a[k][k] for k in range(min(r, c))),
        right=tuple(tuple(row) for row in right),
    )


def row_hermite_form(mat: Matrix) -> Matrix:
    """Canonical basis of the lattice spanned by the rows.

    Row-style Hermite normal form: pivots positive, entries above each pivot
    reduced into [0, pivot), zero rows dropped.  Two integer matrices span the
    same row lattice iff their forms are identical, which is how all lattice
    comparisons in this package are done.

    >>> row_hermite_form(((2, 4), (1, 1)))
    ((1, 1), (0, 2))
    >>> row_hermite_form(((-1, -1, -1),))
    ((1, 1, 1),)
    """
    mat = as_matrix(mat)
    r, c = shape(mat)
    a = [list(row) for row in mat]
    piv = 0
    for col in range(c):
        if piv >= r:
            break
        while True:
            nz = [i for i in range(piv, r) if a[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(a[i][col]), i))
            a[piv], a[i0] = a[i0], a[piv]
            done = True
            for i in range(piv + 1, r):
                if a[i][col]:
                    q = a[i][col] // a[piv][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[piv])]
                    if a[i][col]:
                        done = False
            if done:
                break
        if a[piv][col] == 0:
            continue
        if a[piv][col] < 0:
            a[piv] = [-x for x in a[piv]]
        for i in range(piv):
            q = a[i][col] // a[piv][col]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[piv])]
        piv += 1
    return tuple(tuple(row) for row in a[:piv])


def solve_basis_map(src: tuple[Vector, ...], dst: tuple[Vector, ...]) -> Matrix:
    """The unique integer matrix sending basis `src` to `dst` columnwise.

    `src` must be a lattice basis (the matrix with those columns has
    determinant +-1); `dst` may be any tuple of vectors of the same length.

    >>> solve_basis_map(((1, 0), (0, 1)), ((-1, 1), (0, 1)))
    ((-1, 0), (1, 1))
    """
    s = transpose(as_matrix(src))
    d = transpose(as_matrix(dst))
    if shape(s)[0] != shape(s)[1]:
        raise ValueError("source vectors must form a square matrix")
    return mat_mul(d, inverse_unimodular(s))


def is_primitive(v: Vector) -> bool:
    """True iff the gcd of the entries is exactly 1."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1
