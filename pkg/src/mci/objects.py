"""Objects, morphisms, subobjects/ideals, and the operations joining them.

An MciObject is a finite presentation of an object of a category of groups
with operations: a Cayley-table backend for desk-scale (possibly non-abelian)
carriers, or a structure-constant backend over an exact field.  Everything is
immutable after construction; operations are pure functions.
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
from .fields import PrimeField, Rationals
from .linear import (
    LinearObject,
    base_change_linear,
    ideal_closure_linear,
    ideal_report_linear,
    linear_morphism_report,
    product_linear,
    quotient_linear,
    realize_table,
    sub_linear,
    validate_linear,
)
from .reports import FAIL, NOT_CHECKED, PASS, Report, enum_cap
from .signature import Signature
from .tables import (
    TableObject,
    ideal_closure_table,
    ideal_report,
    product_table,
    quotient_table,
    sub_table,
    subobject_violation,
    table_morphism_report,
    validate_table,
)
from .terms import Add, Binary, Identity, Neg, Term, Unary, Var, Zero


class MciObject:
    """A backend plus the variety tag naming its intended identity set."""

    def __init__(self, backend, variety: str):
        self.backend = backend
        self.variety = variety

    @property
    def is_table(self) -> bool:
        return isinstance(self.backend, TableObject)

    @property
    def is_linear(self) -> bool:
        return isinstance(self.backend, LinearObject)

    @property
    def signature(self) -> Signature:
        return self.backend.signature

    @property
    def size(self) -> int:
        """Carrier size (table) or dimension (linear)."""
        return self.backend.n if self.is_table else self.backend.dim

    def zero_el(self):
        return self.backend.zero if self.is_table else self.backend.zero_el()

    def add_el(self, x, y):
        return self.backend.add_el(x, y)

    def neg_el(self, x):
        return self.backend.neg_el(x)

    def sub_el(self, x, y):
        return self.add_el(x, self.neg_el(y))

    def apply_binary(self, op, x, y):
        if self.is_table:
            return self.backend.apply_binary(op, x, y)
        return self.backend.mul(op, x, y)

    def apply_unary(self, op, x):
        return self.backend.apply_unary(op, x)

    def elements(self):
        return self.backend.elements()

    def element_to_json(self, el):
        if self.is_table:
            return int(el)
        f = self.backend.field
        return [f.to_json(c) for c in el]

    def __eq__(self, other):
        return (
            isinstance(other, MciObject)
            and self.variety == other.variety
            and self.backend == other.backend
        )

    def __repr__(self):
        return f"MciObject({self.variety}, {self.backend!r})"


def validate_object(obj: MciObject) -> Report:
    """Backend-structural validation (variety identities live in varieties)."""
    if obj.is_table:
        return validate_table(obj.backend)
    return validate_linear(obj.backend)


# ---------------------------------------------------------------------------
# term evaluation and identity checking


def evaluate_term(t: Term, assignment: dict, obj: MciObject):
    if isinstance(t, Var):
        if t.name not in assignment:
            raise InvalidInputError(f"unassigned variable {t.name!r}")
        return assignment[t.name]
    if isinstance(t, Zero):
        return obj.zero_el()
    if isinstance(t, Neg):
        return obj.neg_el(evaluate_term(t.arg, assignment, obj))
    if isinstance(t, Add):
        return obj.add_el(
            evaluate_term(t.left, assignment, obj),
            evaluate_term(t.right, assignment, obj),
        )
    if isinstance(t, Unary):
        if not obj.signature.has_unary(t.op):
            raise SignatureMismatchError(f"unary op {t.op!r} not in signature")
        return obj.apply_unary(t.op, evaluate_term(t.arg, assignment, obj))
    if isinstance(t, Binary):
        if not obj.signature.has_binary(t.op):
            raise SignatureMismatchError(f"binary op {t.op!r} not in signature")
        return obj.apply_binary(
            t.op,
            evaluate_term(t.left, assignment, obj),
            evaluate_term(t.right, assignment, obj),
        )
    raise TypeError(f"not a term: {t!r}")


def _is_alternating_shape(ident: Identity):
    """Recognize t = binary(op, x, x) with rhs 0; returns op name or None."""
    if not isinstance(ident.rhs, Zero):
        return None
    t = ident.lhs
    if (
        isinstance(t, Binary)
        and isinstance(t.left, Var)
        and isinstance(t.right, Var)
        and t.left.name == t.right.name
    ):
        return t.op
    return None


def check_identity(obj: MciObject, ident: Identity, cap: int | None = None):
    """(status, witness) of an identity on an object.

    Table backend: exhaustive (capped).  Linear backend: basis assignments
    for multilinear identities; square identities x*x = 0 by polarization
    (diagonal entries vanish and the tensor plus its transpose vanishes,
    exact over every field); anything else needs a prime field small enough
    to realize as a table, otherwise the check is unsupported over Q.
    """
    cap = enum_cap() if cap is None else cap
    if obj.is_table:
        return obj.backend.check_equation(ident.lhs, ident.rhs, ident.variables, cap)
    lin = obj.backend
    f = lin.field
    if ident.multilinear:
        k = len(ident.variables)
        count = lin.dim ** k
        if count > cap:
            return NOT_CHECKED, {"tuples": count, "cap": cap}

        def rec(i, assign):
            if i == k:
                lv = evaluate_term(ident.lhs, assign, obj)
                rv = evaluate_term(ident.rhs, assign, obj)
                if lv != rv:
                    return {
                        "vars": list(ident.variables),
                        "basis": [int(np.argmax([x == f.one for x in assign[v]]))
                                  for v in ident.variables],
                    }
                return None
            for bi in range(lin.dim):
                assign[ident.variables[i]] = lin.basis_el(bi)
                wit = rec(i + 1, assign)
                if wit is not None:
                    return wit
            return None

        wit = rec(0, {})
        return (PASS, None) if wit is None else (FAIL, wit)
    alt_op = _is_alternating_shape(ident) if ident.alternating else None
    if ident.alternating and alt_op is not None:
        t = lin.binary[alt_op]
        for i in range(lin.dim):
            if not la.is_zero_vec(f, t[i][i]):
                return FAIL, {"vars": [ident.variables[0]], "basis": [i]}
            for j in range(i + 1, lin.dim):
                s = la.vec_add(f, t[i][j], t[j][i])
                if not la.is_zero_vec(f, s):
                    return FAIL, {"vars": [ident.variables[0]], "basis": [i, j],
                                  "hint": "polarized pair"}
        return PASS, None
    if isinstance(f, PrimeField):
        tobj, _ = realize_table(obj.backend)
        return tobj.check_equation(ident.lhs, ident.rhs, ident.variables, cap)
    raise UnsupportedCheckError(
        f"identity {ident.name!r} is not multilinear; base-change to a prime field to check it"
    )


# ---------------------------------------------------------------------------
# morphisms


class Morphism:
    """Structure-preserving map; data is an id map (table) or matrix (linear)."""

    def __init__(self, source: MciObject, target: MciObject, data):
        if source.signature != target.signature:
            raise SignatureMismatchError("morphism endpoints have different signatures")
        if source.is_table != target.is_table:
            raise SignatureMismatchError("morphism endpoints have different backends")
        self.source = source
        self.target = target
        if source.is_table:
            self.map = np.ascontiguousarray(data, dtype=np.int32)
            self.map.flags.writeable = False
            self.matrix = None
        else:
            fld = source.backend.field
            if target.backend.field != fld:
                raise SignatureMismatchError("morphism endpoints over different fields")
            self.matrix = tuple(tuple(fld.coerce(x) for x in row) for row in data)
            self.map = None

    def __call__(self, el):
        if self.map is not None:
            return int(self.map[el])
        return la.mat_vec(self.source.backend.field, self.matrix, el)

    def validate(self) -> Report:
        if self.map is not None:
            return table_morphism_report(self.source.backend, self.target.backend, self.map)
        return linear_morphism_report(self.source.backend, self.target.backend, self.matrix)

    def is_valid(self) -> bool:
        return not self.validate().failed

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return False
        if self.map is not None:
            return other.map is not None and np.array_equal(self.map, other.map)
        return self.matrix == other.matrix

    def __repr__(self):
        kind = "map" if self.map is not None else "matrix"
        return f"Morphism({kind}, {self.source.size}->{self.target.size})"


def identity_morphism(obj: MciObject) -> Morphism:
    if obj.is_table:
        return Morphism(obj, obj, np.arange(obj.backend.n, dtype=np.int32))
    return Morphism(obj, obj, la.identity_mat(obj.backend.field, obj.backend.dim))


def zero_morphism(source: MciObject, target: MciObject) -> Morphism:
    if source.is_table:
        return Morphism(source, target,
                        np.full(source.backend.n, target.backend.zero, dtype=np.int32))
    return Morphism(source, target,
                    la.zero_mat(source.backend.field, target.backend.dim, source.backend.dim))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    if f.target.backend is not g.source.backend and f.target.backend != g.source.backend:
        raise SignatureMismatchError("composition endpoints do not match")
    if f.map is not None:
        return Morphism(f.source, g.target, g.map[f.map])
    fld = f.source.backend.field
    return Morphism(f.source, g.target,
                    la.mat_mul(fld, g.matrix, f.matrix, cols=f.source.backend.dim))


def is_injective(f: Morphism) -> bool:
    if f.map is not None:
        return len(set(f.map.tolist())) == f.source.backend.n
    return la.rank(f.source.backend.field, la.transpose(f.matrix)) == f.source.backend.dim


def is_surjective(f: Morphism) -> bool:
    if f.map is not None:
        return len(set(f.map.tolist())) == f.target.backend.n
    return la.rank(f.source.backend.field, f.matrix) == f.target.backend.dim


def is_isomorphism(f: Morphism) -> bool:
    if f.map is not None:
        return f.source.backend.n == f.target.backend.n and is_injective(f)
    return (
        f.source.backend.dim == f.target.backend.dim
        and la.rank(f.source.backend.field, f.matrix) == f.source.backend.dim
    )


def inverse_morphism(f: Morphism) -> Morphism:
    if not is_isomorphism(f):
        raise InvalidInputError("not an isomorphism")
    if f.map is not None:
        inv = np.empty_like(f.map)
        inv[f.map] = np.arange(len(f.map), dtype=np.int32)
        return Morphism(f.target, f.source, inv)
    m = la.mat_inverse(f.source.backend.field, f.matrix)
    return Morphism(f.target, f.source, m)


# ---------------------------------------------------------------------------
# subobjects and ideals


class Subobject:
    """Operation-closed subset (table: id set) or subspace (echelon basis)."""

    def __init__(self, parent: MciObject, ids=None, basis=None):
        self.parent = parent
        if parent.is_table:
            if ids is None:
                raise InvalidInputError("table subobject needs an id set")
            self.ids = frozenset(int(i) for i in ids)
            self.basis = None
        else:
            if basis is None:
                raise InvalidInputError("linear subobject needs a basis")
            f = parent.backend.field
            rows = [tuple(f.coerce(x) for x in row) for row in basis]
            self.basis = la.echelon_basis(f, rows)
            self.ids = None

    @property
    def size(self) -> int:
        return len(self.ids) if self.ids is not None else len(self.basis)

    def contains(self, el) -> bool:
        if self.ids is not None:
            return int(el) in self.ids
        f = self.parent.backend.field
        piv = la.pivots_of(f, self.basis)
        return la.in_row_space(f, self.basis, piv, el)

    def is_whole(self) -> bool:
        if self.ids is not None:
            return len(self.ids) == self.parent.backend.n
        return len(self.basis) == self.parent.backend.dim

    def is_zero(self) -> bool:
        if self.ids is not None:
            return self.ids == frozenset({self.parent.backend.zero})
        return len(self.basis) == 0

    def closure_report(self) -> Report:
        rep = Report("subobject")
        if self.ids is not None:
            wit = subobject_violation(self.parent.backend, self.ids)
            rep.add("subobject-closure", PASS if wit is None else FAIL, wit)
        else:
            try:
                sub_linear(self.parent.backend, self.basis)
                rep.add("subobject-closure", PASS)
            except IdealInvalidError as exc:
                rep.add("subobject-closure", FAIL, exc.witness)
        return rep

    def contains_subobject(self, other: "Subobject") -> bool:
        if self.ids is not None:
            return other.ids <= self.ids
        f = self.parent.backend.field
        return la.is_subspace(f, other.basis, self.basis)

    def to_json(self):
        if self.ids is not None:
            return {"elements": sorted(self.ids)}
        f = self.parent.backend.field
        return {"basis": [[f.to_json(x) for x in row] for row in self.basis]}

    def __eq__(self, other):
        return (
            isinstance(other, Subobject)
            and self.parent.backend == other.parent.backend
            and self.ids == other.ids
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subobject(size={self.size} of {self.parent.size})"


class Ideal(Subobject):
    def validate(self) -> Report:
        if self.ids is not None:
            return ideal_report(self.parent.backend, self.ids)
        return ideal_report_linear(self.parent.backend, self.basis)


def whole_ideal(obj: MciObject) -> Ideal:
    if obj.is_table:
        return Ideal(obj, ids=range(obj.backend.n))
    return Ideal(obj, basis=la.identity_mat(obj.backend.field, obj.backend.dim))


def zero_ideal(obj: MciObject) -> Ideal:
    if obj.is_table:
        return Ideal(obj, ids=[obj.backend.zero])
    return Ideal(obj, basis=())


def kernel(f: Morphism) -> Ideal:
    if f.map is not None:
        z = f.target.backend.zero
        ids = [int(x) for x in np.nonzero(f.map == z)[0]]
        return Ideal(f.source, ids=ids)
    ns = la.nullspace(f.source.backend.field, f.matrix)
    return Ideal(f.source, basis=ns)


def image(f: Morphism) -> Subobject:
    if f.map is not None:
        return Subobject(f.target, ids=set(int(x) for x in f.map))
    cs = la.column_space(f.source.backend.field, f.matrix)
    return Subobject(f.target, basis=cs)


def quotient(obj: MciObject, ideal: Ideal) -> tuple[MciObject, Morphism]:
    if ideal.parent.backend != obj.backend:
        raise InvalidInputError("ideal does not belong to the object")
    if obj.is_table:
        qt, proj = quotient_table(obj.backend, ideal.ids)
        qobj = MciObject(qt, obj.variety)
        return qobj, Morphism(obj, qobj, proj)
    ql, proj = quotient_linear(obj.backend, ideal.basis)
    qobj = MciObject(ql, obj.variety)
    return qobj, Morphism(obj, qobj, proj)


def induced_object(sub: Subobject) -> tuple[MciObject, Morphism]:
    """The subobject as an object in its own right, with its inclusion."""
    parent = sub.parent
    if parent.is_table:
        t, members = sub_table(parent.backend, sub.ids)
        sobj = MciObject(t, parent.variety)
        return sobj, Morphism(sobj, parent, members)
    lin, incl = sub_linear(parent.backend, sub.basis)
    sobj = MciObject(lin, parent.variety)
    return sobj, Morphism(sobj, parent, incl)


def ideal_generated(obj: MciObject, generators) -> Ideal:
    """Least ideal containing the generators (worklist / subspace saturation)."""
    if obj.is_table:
        ids = ideal_closure_table(obj.backend, generators)
        return Ideal(obj, ids=ids)
    f = obj.backend.field
    gens = [tuple(f.coerce(x) for x in g) for g in generators]
    return Ideal(obj, basis=ideal_closure_linear(obj.backend, gens))


# ---------------------------------------------------------------------------
# products and pullbacks


def direct_product(a: MciObject, c: MciObject) -> MciObject:
    if a.variety != c.variety:
        raise SignatureMismatchError("direct product needs a common variety")
    if a.is_table and c.is_table:
        return MciObject(product_table(a.backend, c.backend), a.variety)
    if a.is_linear and c.is_linear:
        return MciObject(product_linear(a.backend, c.backend), a.variety)
    raise SignatureMismatchError("direct product needs a common backend")


def product_with_maps(a: MciObject, c: MciObject):
    """(product, inj_a, inj_c, proj_a, proj_c)."""
    p = direct_product(a, c)
    if a.is_table:
        nb = c.backend.n
        ia = np.arange(a.backend.n, dtype=np.int32) * nb + c.backend.zero
        ic = a.backend.zero * nb + np.arange(c.backend.n, dtype=np.int32)
        pa = np.arange(p.backend.n, dtype=np.int32) // nb
        pc = np.arange(p.backend.n, dtype=np.int32) % nb
        return (
            p,
            Morphism(a, p, ia),
            Morphism(c, p, ic),
            Morphism(p, a, pa),
            Morphism(p, c, pc),
        )
    f = a.backend.field
    n, m = a.backend.dim, c.backend.dim
    inj_a = tuple(tuple(f.one if (i == j and i < n) else f.zero for j in range(n))
                  for i in range(n + m))
    inj_c = tuple(tuple(f.one if (i - n == j and i >= n) else f.zero for j in range(m))
                  for i in range(n + m))
    proj_a = tuple(tuple(f.one if i == j else f.zero for j in range(n + m))
                   for i in range(n))
    proj_c = tuple(tuple(f.one if j == n + i else f.zero for j in range(n + m))
                   for i in range(m))
    return (
        p,
        Morphism(a, p, inj_a),
        Morphism(c, p, inj_c),
        Morphism(p, a, proj_a),
        Morphism(p, c, proj_c),
    )


class Pullback:
    """Pullback of f: B -> C against g: E -> C on pairs (e, b) with g(e) = f(b)."""

    def __init__(self, f: Morphism, g: Morphism):
        if f.target.backend != g.target.backend:
            raise SignatureMismatchError("pullback legs must share a target")
        self.f = f
        self.g = g
        e_obj, b_obj = g.source, f.source
        if e_obj.is_table:
            prod = product_table(e_obj.backend, b_obj.backend)
            nb = b_obj.backend.n
            pairs = [
                e * nb + bv
                for e in range(e_obj.backend.n)
                for bv in range(b_obj.backend.n)
                if g(e) == f(bv)
            ]
            t, members = sub_table(prod, pairs)
            self.obj = MciObject(t, e_obj.variety)
            self.members = members
            self._index = {int(m): i for i, m in enumerate(members)}
            self.p1 = Morphism(self.obj, e_obj,
                               np.asarray([int(m) // nb for m in members], dtype=np.int32))
            self.p2 = Morphism(self.obj, b_obj,
                               np.asarray([int(m) % nb for m in members], dtype=np.int32))
        else:
            fld = e_obj.backend.field
            ne, nb = e_obj.backend.dim, b_obj.backend.dim
            rows = []
            for r in range(f.target.backend.dim):
                row = [g.matrix[r][j] for j in range(ne)]
                row += [fld.neg(f.matrix[r][j]) for j in range(nb)]
                rows.append(tuple(row))
            basis = la.nullspace(fld, tuple(rows)) if rows else la.identity_mat(fld, ne + nb)
            prod = product_linear(e_obj.backend, b_obj.backend)
            lin, incl = sub_linear(prod, basis)
            self.obj = MciObject(lin, e_obj.variety)
            self.basis = basis
            k = len(basis)
            self.p1 = Morphism(self.obj, e_obj,
                               tuple(tuple(basis[j][i] for j in range(k)) for i in range(ne)))
            self.p2 = Morphism(self.obj, b_obj,
                               tuple(tuple(basis[j][ne + i] for j in range(k)) for i in range(nb)))

    def mediate(self, h_e: Morphism, h_b: Morphism) -> Morphism:
        """The universal map A -> P for a cone (h_e: A -> E, h_b: A -> B)."""
        a_obj = h_e.source
        if a_obj.is_table:
            nb = self.f.source.backend.n
            out = []
            for x in range(a_obj.backend.n):
                pair = h_e(x) * nb + h_b(x)
                if pair not in self._index:
                    raise InvalidInputError("cone does not commute: value misses the pullback")
                out.append(self._index[pair])
            return Morphism(a_obj, self.obj, np.asarray(out, dtype=np.int32))
        fld = a_obj.backend.field
        cols = []
        for x in range(a_obj.backend.dim):
            ex = a_obj.backend.basis_el(x)
            vec = tuple(h_e(ex)) + tuple(h_b(ex))
            coords = la.coords_in_basis(fld, self.basis, vec)
            if coords is None:
                raise InvalidInputError("cone does not commute: value misses the pullback")
            cols.append(coords)
        k = len(self.basis)
        return Morphism(a_obj, self.obj,
                        tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(k)))


def pullback(f: Morphism, g: Morphism):
    """Convenience tuple form: (object, projection to g's source, projection to f's source)."""
    pb = Pullback(f, g)
    return pb.obj, pb.p1, pb.p2


def base_change(obj: MciObject, p: int) -> MciObject:
    if not obj.is_linear or not isinstance(obj.backend.field, Rationals):
        raise UnsupportedCheckError("base change applies to linear objects over Q")
    return MciObject(base_change_linear(obj.backend, p), obj.variety)
