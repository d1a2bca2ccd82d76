"""Exact dense linear algebra over a Field.

Vectors are tuples of scalars, matrices tuples of row tuples.  Subspaces are
always normalized to reduced row echelon form with unit pivots; two subspaces
are equal iff their echelon bases are equal tuples, which makes subobject
equality deterministic and hashable.
"""

from __future__ import annotations

from .fields import Field


def vec(field: Field, entries) -> tuple:
    return tuple(field.coerce(x) for x in entries)


def zero_vec(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def unit_vec(field: Field, n: int, i: int) -> tuple:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(field: Field, u, v) -> tuple:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: Field, u, v) -> tuple:
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_neg(field: Field, u) -> tuple:
    return tuple(field.neg(a) for a in u)


def vec_scale(field: Field, c, u) -> tuple:
    return tuple(field.mul(c, a) for a in u)


def is_zero_vec(field: Field, u) -> bool:
    return all(field.is_zero(a) for a in u)


def mat(field: Field, rows) -> tuple:
    return tuple(vec(field, row) for row in rows)


def identity_mat(field: Field, n: int) -> tuple:
    return tuple(unit_vec(field, n, i) for i in range(n))


def zero_mat(field: Field, rows: int, cols: int) -> tuple:
    return tuple(zero_vec(field, cols) for _ in range(rows))


def transpose(m) -> tuple:
    if not m:
        return ()
    return tuple(zip(*m))


def mat_vec(field: Field, m, v) -> tuple:
    out = []
    for row in m:
        acc = field.zero
        for a, b in zip(row, v):
            acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return tuple(out)


def mat_mul(field: Field, a, b, cols: int | None = None) -> tuple:
    """a @ b; cols must be given when b can be empty (rows x 0 times 0 x cols
    drops the column count from the data)."""
    if not b:
        if cols is None:
            cols = 0
        return tuple(zero_vec(field, cols) for _ in a)
    bt = transpose(b)
    return tuple(tuple(_dot(field, row, col) for col in bt) for row in a)


def _dot(field: Field, u, v):
    acc = field.zero
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


def rref(field: Field, rows):
    """Reduced row echelon form.

    Returns (echelon_rows, pivot_columns); zero rows are dropped, pivots are
    scaled to 1 and cleared above and below, so the output is the canonical
    basis of the row space.
    """
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if not field.is_zero(work[i][c]):
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        scale = field.inv(work[r][c])
        work[r] = [field.mul(scale, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and not field.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    ech = tuple(tuple(row) for row in work[:r])
    return ech, tuple(pivots)


def echelon_basis(field: Field, rows) -> tuple:
    return rref(field, rows)[0]


def rank(field: Field, rows) -> int:
    return len(rref(field, rows)[0])


def nullspace(field: Field, m) -> tuple:
    """Canonical echelon basis of {v : m v = 0}."""
    if not m:
        return ()
    ncols = len(m[0])
    ech, pivots = rref(field, m)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for r, p in enumerate(pivots):
            v[p] = field.neg(ech[r][f])
        basis.append(tuple(v))
    return echelon_basis(field, basis)


def reduce_against(field: Field, basis_ech, pivots, v):
    """Subtract basis rows to clear the pivot coordinates of v."""
    v = list(v)
    for row, p in zip(basis_ech, pivots):
        c = v[p]
        if not field.is_zero(c):
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return tuple(v)


def in_row_space(field: Field, basis_ech, pivots, v) -> bool:
    return is_zero_vec(field, reduce_against(field, basis_ech, pivots, v))


def coords_in_basis(field: Field, basis_rows, v):
    """Coefficients x with  sum_i x_i basis_rows[i] = v,  or None.

    basis_rows need not be echelonized but must be independent for the
    coefficients to be meaningful.
    """
    k = len(basis_rows)
    if k == 0:
        return () if is_zero_vec(field, v) else None
    n = len(v)
    aug = [[basis_rows[i][c] for i in range(k)] + [v[c]] for c in range(n)]
    ech, pivots = rref(field, aug)
    coords = [field.zero] * k
    for row, p in zip(ech, pivots):
        if p == k:  # pivot in the augmented column: inconsistent
            return None
        coords[p] = row[k]
    # guard against dependent basis rows hiding an inconsistency
    check = zero_vec(field, n)
    for c, b in zip(coords, basis_rows):
        check = vec_add(field, check, vec_scale(field, c, b))
    return tuple(coords) if check == tuple(v) else None


def solve(field: Field, m, b):
    """One solution x of m x = b, or None."""
    if not m:
        return None
    cols = transpose(m)
    return coords_in_basis(field, cols, b)


def mat_inverse(field: Field, m):
    n = len(m)
    if n == 0:
        return ()
    if any(len(row) != n for row in m):
        return None
    aug = [list(row) + list(unit_vec(field, n, i)) for i, row in enumerate(m)]
    ech, pivots = rref(field, aug)
    if len(ech) < n or tuple(pivots) != tuple(range(n)):
        return None
    return tuple(tuple(row[n:]) for row in ech)


def column_space(field: Field, m) -> tuple:
    return echelon_basis(field, transpose(m))


def is_subspace(field: Field, inner_ech, outer_ech) -> bool:
    ech, pivots = outer_ech, tuple(_leading(field, row) for row in outer_ech)
    return all(in_row_space(field, ech, pivots, v) for v in inner_ech)


def _leading(field: Field, row) -> int:
    for i, x in enumerate(row):
        if not field.is_zero(x):
            return i
    raise ValueError("zero row in echelon basis")


def pivots_of(field: Field, ech) -> tuple:
    return tuple(_leading(field, row) for row in ech)


def intersect_row_spaces(field: Field, a_ech, b_ech, ncols: int) -> tuple:
    """Canonical basis of rowspace(a) ∩ rowspace(b) (Zassenhaus-style)."""
    if not a_ech or not b_ech:
        return ()
    rows = []
    for r in a_ech:
        rows.append(tuple(r) + tuple(r))
    for r in b_ech:
        rows.append(tuple(r) + zero_vec(field, ncols))
    ech, _ = rref(field, rows)
    out = [row[ncols:] for row in ech if all(field.is_zero(x) for x in row[:ncols])]
    return echelon_basis(field, out)


def sum_row_spaces(field: Field, a_ech, b_ech) -> tuple:
    return echelon_basis(field, list(a_ech) + list(b_ech))
