"""Linear backend: structure constants over an exact field.

Elements are coordinate vectors; + is componentwise (so the additive group is
abelian, conjugation trivial, and the group axioms, distributivity and the
products-commute-additively axiom all hold by representation).  Each binary
operation is a tensor c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k; swap
partners are stored as the (i,j)-transpose.  Unary operations are matrices
acting on column vectors.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la
from .errors import (
    IdealInvalidError,
    InvalidInputError,
    SignatureMismatchError,
    UnsupportedCheckError,
)
from .fields import Field, PrimeField, Rationals
from .reports import BY_CONSTRUCTION, FAIL, PASS, Report
from .signature import Signature


def _coerce_tensor(field: Field, t, n):
    t = tuple(tuple(tuple(field.coerce(x) for x in row) for row in plane) for plane in t)
    if len(t) != n or any(len(p) != n for p in t) or any(len(r) != n for p in t for r in p):
        raise InvalidInputError(f"tensor is not {n}x{n}x{n}")
    return t


def _coerce_matrix(field: Field, m, n):
    m = tuple(tuple(field.coerce(x) for x in row) for row in m)
    if len(m) != n or any(len(r) != n for r in m):
        raise InvalidInputError(f"matrix is not {n}x{n}")
    return m


def tensor_transpose(t):
    n = len(t)
    return tuple(tuple(t[j][i] for j in range(n)) for i in range(n))


class LinearObject:
    def __init__(self, signature: Signature, field: Field, dim: int,
                 binary: dict | None = None, unary: dict | None = None,
                 basis_labels=None):
        self.signature = signature
        self.field = field
        self.dim = int(dim)
        if self.dim < 0:
            raise InvalidInputError("negative dimension")
        binary = dict(binary or {})
        for bop in signature.binary:
            if bop.name not in binary:
                if self.dim == 0:
                    binary[bop.name] = ()
                    continue
                src, transposed = signature.source_of(bop.name)
                if src not in binary:
                    raise InvalidInputError(f"missing tensor for operation {bop.name!r}")
                binary[bop.name] = (
                    tensor_transpose(binary[src]) if transposed else binary[src]
                )
        self.binary = {
            name: _coerce_tensor(field, binary[name], self.dim)
            for name in signature.binary_names
        }
        unary = dict(unary or {})
        self.unary = {}
        for u in signature.unary:
            if u not in unary:
                if self.dim == 0:
                    unary[u] = ()
                else:
                    raise InvalidInputError(f"missing matrix for unary operation {u!r}")
            self.unary[u] = _coerce_matrix(field, unary[u], self.dim)
        for extra in set(unary) - set(signature.unary):
            raise InvalidInputError(f"unary matrix {extra!r} not in signature")
        self.basis_labels = tuple(basis_labels) if basis_labels else tuple(
            f"e{i+1}" for i in range(self.dim)
        )
        if len(self.basis_labels) != self.dim:
            raise InvalidInputError("basis label count != dim")
        self._left_ops = None

    # -- element operations ---------------------------------------------------
    def zero_el(self) -> tuple:
        return la.zero_vec(self.field, self.dim)

    def basis_el(self, i: int) -> tuple:
        return la.unit_vec(self.field, self.dim, i)

    def add_el(self, u, v) -> tuple:
        return la.vec_add(self.field, u, v)

    def neg_el(self, u) -> tuple:
        return la.vec_neg(self.field, u)

    def mul(self, op: str, u, v) -> tuple:
        if op == "+":
            return self.add_el(u, v)
        if op not in self.binary:
            raise SignatureMismatchError(f"no binary operation {op!r}")
        f = self.field
        t = self.binary[op]
        out = [f.zero] * self.dim
        for i, ui in enumerate(u):
            if f.is_zero(ui):
                continue
            for j, vj in enumerate(v):
                if f.is_zero(vj):
                    continue
                c = f.mul(ui, vj)
                row = t[i][j]
                for k in range(self.dim):
                    if not f.is_zero(row[k]):
                        out[k] = f.add(out[k], f.mul(c, row[k]))
        return tuple(out)

    def apply_unary(self, op: str, u) -> tuple:
        if op == "-":
            return self.neg_el(u)
        if op not in self.unary:
            raise SignatureMismatchError(f"no unary operation {op!r}")
        return la.mat_vec(self.field, self.unary[op], u)

    def basis_product(self, op: str, i: int, j: int) -> tuple:
        return tuple(self.binary[op][i][j])

    def left_mult_matrix(self, op: str, u) -> tuple:
        """Matrix of v |-> u * v (covers right actions through swap partners)."""
        f = self.field
        t = self.binary[op]
        rows = []
        for k in range(self.dim):
            row = []
            for j in range(self.dim):
                acc = f.zero
                for i in range(self.dim):
                    acc = f.add(acc, f.mul(u[i], t[i][j][k]))
                row.append(acc)
            rows.append(tuple(row))
        return tuple(rows)

    def basis_left_ops(self):
        """Cached matrices of v |-> e_i * v for every op and basis index."""
        if self._left_ops is None:
            ops = []
            for name in self.signature.binary_names:
                for i in range(self.dim):
                    ops.append(self.left_mult_matrix(name, self.basis_el(i)))
            self._left_ops = tuple(ops)
        return self._left_ops

    def elements(self):
        """All coordinate vectors (prime fields only)."""
        if not isinstance(self.field, PrimeField):
            raise UnsupportedCheckError("cannot enumerate a Q-vector space")
        p = self.field.p

        def gen(prefix, k):
            if k == 0:
                yield tuple(prefix)
                return
            for c in range(p):
                yield from gen(prefix + [c], k - 1)

        return gen([], self.dim)

    def __eq__(self, other):
        return (
            isinstance(other, LinearObject)
            and self.signature == other.signature
            and self.field == other.field
            and self.dim == other.dim
            and self.binary == other.binary
            and self.unary == other.unary
        )

    def __repr__(self):
        return (f"LinearObject(dim={self.dim}, field={self.field.name}, "
                f"ops={list(self.binary)}, unary={list(self.unary)})")


def validate_linear(obj: LinearObject) -> Report:
    rep = Report("linear-structure")
    rep.add("group-axioms", BY_CONSTRUCTION)          # componentwise abelian +
    rep.add("distributivity", BY_CONSTRUCTION)        # bilinear tensors
    rep.add("products-central", BY_CONSTRUCTION)      # + is abelian
    f = obj.field
    for bop in obj.signature.binary:
        if bop.derived_from is not None:
            continue
        t = obj.binary[bop.name]
        tsw = obj.binary[bop.swap]
        if tsw == tensor_transpose(t):
            rep.add(f"swap-coherence {bop.name}", PASS)
        else:
            rep.add(f"swap-coherence {bop.name}", FAIL)
    for u in obj.signature.unary:
        rep.add(f"unary-additivity {u}", BY_CONSTRUCTION)  # matrix action
        m = obj.unary[u]
        for name in obj.signature.binary_names:
            wit = None
            for i in range(obj.dim):
                for j in range(obj.dim):
                    lhs = la.mat_vec(f, m, obj.basis_product(name, i, j))
                    rhs = obj.mul(name, la.mat_vec(f, m, obj.basis_el(i)),
                                  la.mat_vec(f, m, obj.basis_el(j)))
                    if lhs != rhs:
                        wit = {"basis": [i, j]}
                        break
                if wit:
                    break
            rep.add(f"unary-multiplicativity {u} {name}",
                    PASS if wit is None else FAIL, wit)
    return rep


# ---------------------------------------------------------------------------
# base change and prime-field realization


def base_change_linear(obj: LinearObject, p: int) -> LinearObject:
    if not isinstance(obj.field, Rationals):
        raise UnsupportedCheckError("base change starts from a Q object")
    fp = PrimeField(p)

    def conv_tensor(t):
        return tuple(
            tuple(tuple(fp.from_rational(x) for x in row) for row in plane)
            for plane in t
        )

    def conv_matrix(m):
        return tuple(tuple(fp.from_rational(x) for x in row) for row in m)

    binary = {
        name: conv_tensor(obj.binary[name])
        for name in obj.signature.primary_binary
    }
    unary = {u: conv_matrix(m) for u, m in obj.unary.items()}
    return LinearObject(obj.signature, fp, obj.dim, binary, unary, obj.basis_labels)


REALIZE_MAX = 6561  # largest prime-power carrier the oracle will materialize


def encode_vectors(p: int, dim: int) -> np.ndarray:
    """All of F_p^dim as digit rows; row index is the element id."""
    m = p ** dim
    ids = np.arange(m, dtype=np.int64)
    digits = np.empty((m, dim), dtype=np.int64)
    for i in range(dim):
        digits[:, i] = (ids // p**i) % p
    return digits


def vec_to_id(p: int, v) -> int:
    return int(sum(int(c) % p * p**i for i, c in enumerate(v)))


def id_to_vec(p: int, dim: int, e: int) -> tuple:
    return tuple(int(e // p**i) % p for i in range(dim))


def realize_table(obj: LinearObject) -> tuple:
    """Materialize an F_p linear object as a TableObject on p^dim ids.

    Returns (table_object, validation_report); the report marks everything
    the componentwise construction forces as holds-by-construction.
    """
    from .tables import TableObject, validate_table

    if not isinstance(obj.field, PrimeField):
        raise UnsupportedCheckError("only prime-field objects can be realized as tables")
    p = obj.field.p
    m = p ** obj.dim
    if m > REALIZE_MAX:
        raise UnsupportedCheckError(f"carrier {m} exceeds realization bound {REALIZE_MAX}")
    V = encode_vectors(p, obj.dim)
    powers = np.array([p**i for i in range(obj.dim)], dtype=np.int64)

    def enc_rows(rows):  # rows: (..., dim) digit array
        return (rows % p) @ powers

    add = enc_rows(V[:, None, :] + V[None, :, :]).astype(np.int32)
    neg = enc_rows((-V) % p).astype(np.int32)
    binary = {}
    for name in obj.signature.binary_names:
        c = np.array(
            [[[int(x) for x in row] for row in plane] for plane in obj.binary[name]],
            dtype=np.int64,
        ) if obj.dim else np.zeros((0, 0, 0), dtype=np.int64)
        t1 = np.tensordot(V, c, axes=([1], [0]))          # (m, j, k)
        prod = np.einsum("bj,ajk->abk", V, t1) % p         # (m, m, k)
        binary[name] = enc_rows(prod).astype(np.int32)
    unary = {}
    for u in obj.signature.unary:
        mt = np.array([[int(x) for x in row] for row in obj.unary[u]], dtype=np.int64) \
            if obj.dim else np.zeros((0, 0), dtype=np.int64)
        unary[u] = enc_rows(V @ mt.T).astype(np.int32)
    tobj = TableObject(obj.signature, m, 0, add, neg, binary, unary)
    report = validate_table(
        tobj,
        by_construction=frozenset(
            {"group-axioms", "distributivity", "unary-additivity", "products-central"}
        ),
    )
    return tobj, report


def span_ids(obj: LinearObject, basis_ech) -> frozenset:
    """All realization ids lying in the span of an echelon basis (F_p only)."""
    if not isinstance(obj.field, PrimeField):
        raise UnsupportedCheckError("span enumeration needs a prime field")
    p = obj.field.p
    members = set()

    def walk(acc, rows):
        if not rows:
            members.add(vec_to_id(p, acc))
            return
        head, *rest = rows
        for c in range(p):
            walk(la.vec_add(obj.field, acc, la.vec_scale(obj.field, c, head)), rest)

    walk(la.zero_vec(obj.field, obj.dim), list(basis_ech))
    return frozenset(members)


def ids_to_basis(obj: LinearObject, ids) -> tuple:
    p = obj.field.p
    vectors = [id_to_vec(p, obj.dim, e) for e in sorted(ids)]
    return la.echelon_basis(obj.field, vectors)


# ---------------------------------------------------------------------------
# subspaces: ideals, closures, constructions


def ideal_report_linear(obj: LinearObject, basis_ech) -> Report:
    rep = Report("ideal")
    f = obj.field
    ech, pivots = la.rref(f, basis_ech)
    if tuple(basis_ech) != ech:
        rep.add("echelon-normal-form", FAIL, {"hint": "basis not in canonical echelon form"})
        return rep
    rep.add("echelon-normal-form", PASS)
    rep.add("normality", BY_CONSTRUCTION)  # + abelian
    wit = None
    for name in obj.signature.binary_names:
        for i in range(obj.dim):
            for v in basis_ech:
                img = obj.mul(name, obj.basis_el(i), v)
                if not la.in_row_space(f, ech, pivots, img):
                    wit = {"op": name, "basis": i}
                    break
            if wit:
                break
        if wit:
            break
    rep.add("star-absorbing", PASS if wit is None else FAIL, wit)
    wit = None
    for u in obj.signature.unary:
        for v in basis_ech:
            img = obj.apply_unary(u, v)
            if not la.in_row_space(f, ech, pivots, img):
                wit = {"op": u}
                break
        if wit:
            break
    rep.add("unary-stable", PASS if wit is None else FAIL, wit)
    return rep


def ideal_closure_linear(obj: LinearObject, generators) -> tuple:
    """Echelon basis of the smallest ideal containing the generators.

    Saturates under every left-multiplication operator (swap partners cover
    the right side) and every unary matrix; the dimension strictly increases
    until stable, so at most dim passes run.
    """
    f = obj.field
    current = la.echelon_basis(f, [tuple(g) for g in generators])
    while True:
        images = list(current)
        for v in current:
            for name in obj.signature.binary_names:
                for i in range(obj.dim):
                    images.append(obj.mul(name, obj.basis_el(i), v))
            for u in obj.signature.unary:
                images.append(obj.apply_unary(u, v))
        new = la.echelon_basis(f, images)
        if len(new) == len(current):
            return new
        current = new


def sub_linear(obj: LinearObject, basis_ech) -> tuple:
    """Induced object on a closed subspace; returns (object, inclusion matrix)."""
    f = obj.field
    k = len(basis_ech)

    def coords(v):
        c = la.coords_in_basis(f, basis_ech, v)
        if c is None:
            raise IdealInvalidError("subspace is not operation-closed", None)
        return c

    binary = {}
    for bop in obj.signature.binary:
        if bop.derived_from is not None:
            continue
        t = [[coords(obj.mul(bop.name, basis_ech[i], basis_ech[j])) for j in range(k)]
             for i in range(k)]
        binary[bop.name] = t
    unary = {
        u: la.transpose(tuple(coords(obj.apply_unary(u, basis_ech[i])) for i in range(k)))
        for u in obj.signature.unary
    }
    sub = LinearObject(obj.signature, f, k, binary, unary)
    inclusion = la.transpose(basis_ech)  # columns are the basis vectors
    return sub, inclusion


def quotient_linear(obj: LinearObject, ideal_ech) -> tuple:
    """Quotient by an ideal subspace; returns (object, projection matrix)."""
    f = obj.field
    idl = ideal_report_linear(obj, ideal_ech)
    if idl.failed:
        e = idl.first_failure()
        raise IdealInvalidError(f"not an ideal: {e.name}", e.witness)
    pivots = la.pivots_of(f, ideal_ech)
    pivset = set(pivots)
    free = [c for c in range(obj.dim) if c not in pivset]
    k = len(free)

    def project(v):
        red = la.reduce_against(f, ideal_ech, pivots, v)
        return tuple(red[c] for c in free)

    proj = tuple(
        tuple(project(obj.basis_el(j))[i] for j in range(obj.dim)) for i in range(k)
    )
    reps = [obj.basis_el(c) for c in free]
    binary = {}
    for bop in obj.signature.binary:
        if bop.derived_from is not None:
            continue
        binary[bop.name] = [
            [project(obj.mul(bop.name, reps[i], reps[j])) for j in range(k)]
            for i in range(k)
        ]
    unary = {
        u: la.transpose(tuple(project(obj.apply_unary(u, reps[i])) for i in range(k)))
        for u in obj.signature.unary
    }
    q = LinearObject(obj.signature, f, k, binary, unary)
    return q, proj


def product_linear(a: LinearObject, c: LinearObject) -> LinearObject:
    """Direct sum with blockwise operations (cross products vanish)."""
    if a.signature != c.signature or a.field != c.field:
        raise SignatureMismatchError("direct product needs common signature and field")
    f = a.field
    n, m = a.dim, c.dim
    dim = n + m

    def embed_a(v):
        return tuple(v) + la.zero_vec(f, m)

    def embed_c(v):
        return la.zero_vec(f, n) + tuple(v)

    binary = {}
    for bop in a.signature.binary:
        if bop.derived_from is not None:
            continue
        t = [[la.zero_vec(f, dim) for _ in range(dim)] for _ in range(dim)]
        for i in range(n):
            for j in range(n):
                t[i][j] = embed_a(a.basis_product(bop.name, i, j))
        for i in range(m):
            for j in range(m):
                t[n + i][n + j] = embed_c(c.basis_product(bop.name, i, j))
        binary[bop.name] = t
    unary = {}
    for u in a.signature.unary:
        rows = []
        for i in range(dim):
            ra = a.unary[u][i] if i < n else la.zero_vec(f, n)
            rc = c.unary[u][i - n] if i >= n else la.zero_vec(f, m)
            rows.append(tuple(ra) + tuple(rc))
        unary[u] = tuple(rows)
    return LinearObject(a.signature, f, dim, binary, unary)


def linear_morphism_report(src: LinearObject, dst: LinearObject, matrix) -> Report:
    rep = Report("linear-morphism")
    f = src.field
    m = tuple(tuple(f.coerce(x) for x in row) for row in matrix)
    if len(m) != dst.dim or any(len(r) != src.dim for r in m):
        rep.add("matrix-shape", FAIL, {"rows": len(m)})
        return rep
    rep.add("matrix-shape", PASS)
    rep.add("preserves-zero", BY_CONSTRUCTION)
    rep.add("additive", BY_CONSTRUCTION)

    def apply(v):
        return la.mat_vec(f, m, v)

    for name in src.signature.binary_names:
        wit = None
        for i in range(src.dim):
            for j in range(src.dim):
                lhs = apply(src.basis_product(name, i, j))
                rhs = dst.mul(name, apply(src.basis_el(i)), apply(src.basis_el(j)))
                if lhs != rhs:
                    wit = {"basis": [i, j]}
                    break
            if wit:
                break
        rep.add(f"multiplicative {name}", PASS if wit is None else FAIL, wit)
    for u in src.signature.unary:
        lhs = la.mat_mul(f, m, src.unary[u])
        rhs = la.mat_mul(f, dst.unary[u], m)
        rep.add(f"commutes-with {u}", PASS if lhs == rhs else FAIL)
    return rep
