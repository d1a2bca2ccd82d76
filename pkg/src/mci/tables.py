"""Finite-carrier backend: Cayley tables over element ids 0..n-1.

The additive group may be non-abelian.  Every structural requirement of a
group with operations is checked exhaustively (up to the enumeration cap):
group axioms, left distributivity of each star over +, unary additivity and
multiplicativity, the products-are-additively-central axiom, and coherence of
each swap-partner table with the transpose of its primary table.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import IdealInvalidError, InvalidInputError, SignatureMismatchError
from .reports import BY_CONSTRUCTION, FAIL, NOT_CHECKED, PASS, Report, enum_cap
from .signature import Signature
from .terms import TableDialect, Term


def _arr2(t, n) -> np.ndarray:
    a = np.ascontiguousarray(t, dtype=np.int32)
    if a.shape != (n, n):
        raise InvalidInputError(f"table shape {a.shape} != ({n},{n})")
    return a


def _arr1(t, n) -> np.ndarray:
    a = np.ascontiguousarray(t, dtype=np.int32)
    if a.shape != (n,):
        raise InvalidInputError(f"table shape {a.shape} != ({n},)")
    return a


class TableObject:
    def __init__(self, signature: Signature, n: int, zero: int, add, neg,
                 binary: dict | None = None, unary: dict | None = None):
        if n <= 0:
            raise InvalidInputError("empty carrier")
        self.signature = signature
        self.n = int(n)
        self.zero = int(zero)
        self.add = _arr2(add, n)
        self.neg = _arr1(neg, n)
        binary = dict(binary or {})
        # derive swap-partner tables (x *° y = y * x) when absent
        for bop in signature.binary:
            if bop.name not in binary:
                src, transposed = signature.source_of(bop.name)
                if src not in binary:
                    raise InvalidInputError(f"missing table for operation {bop.name!r}")
                binary[bop.name] = binary[src].T if transposed else binary[src]
        self.binary = {name: _arr2(binary[name], n) for name in signature.binary_names}
        unary = dict(unary or {})
        self.unary = {}
        for u in signature.unary:
            if u not in unary:
                raise InvalidInputError(f"missing table for unary operation {u!r}")
            self.unary[u] = _arr1(unary[u], n)
        for extra in set(unary) - set(signature.unary):
            raise InvalidInputError(f"unary table {extra!r} not in signature")
        self._packed = None
        for a in [self.add, self.neg, *self.binary.values(), *self.unary.values()]:
            a.flags.writeable = False

    # -- element operations -------------------------------------------------
    def add_el(self, x: int, y: int) -> int:
        return int(self.add[x, y])

    def neg_el(self, x: int) -> int:
        return int(self.neg[x])

    def sub_el(self, x: int, y: int) -> int:
        return int(self.add[x, self.neg[y]])

    def conj(self, g: int, a: int) -> int:
        return int(self.add[self.add[g, a], self.neg[g]])

    def apply_binary(self, op: str, x: int, y: int) -> int:
        if op == "+":
            return int(self.add[x, y])
        if op not in self.binary:
            raise SignatureMismatchError(f"no binary operation {op!r}")
        return int(self.binary[op][x, y])

    def apply_unary(self, op: str, x: int) -> int:
        if op == "-":
            return int(self.neg[x])
        if op not in self.unary:
            raise SignatureMismatchError(f"no unary operation {op!r}")
        return int(self.unary[op][x])

    def elements(self):
        return range(self.n)

    # -- kernel plumbing -----------------------------------------------------
    def packed(self):
        """Packed tables in TableDialect slot order (add, binaries; neg, unaries)."""
        if self._packed is None:
            bins = [self.add] + [self.binary[b] for b in self.signature.binary_names]
            uns = [self.neg] + [self.unary[u] for u in self.signature.unary]
            bf, bo, bn = _kernels.pack_binary_tables(bins)
            uf, uo = _kernels.pack_unary_tables(uns)
            self._packed = (bf, bo, bn, uf, uo)
        return self._packed

    def check_equation(self, lhs: Term, rhs: Term, variables, cap: int | None = None):
        """(status, witness) of lhs = rhs over all assignments of the carrier."""
        cap = enum_cap() if cap is None else cap
        count = self.n ** len(variables)
        if count > cap:
            return NOT_CHECKED, {"tuples": count, "cap": cap}
        dialect = TableDialect(self.signature)
        pl = np.asarray(dialect.compile(lhs, tuple(variables), self.zero), dtype=np.int32)
        pr = np.asarray(dialect.compile(rhs, tuple(variables), self.zero), dtype=np.int32)
        domains = np.full(len(variables), self.n, dtype=np.int32)
        bf, bo, bn, uf, uo = self.packed()
        hit = _kernels.find_counterexample(pl, pr, domains, bf, bo, bn, uf, uo)
        if hit is None:
            return PASS, None
        return FAIL, {"vars": list(variables), "ids": list(hit)}

    def __eq__(self, other):
        return (
            isinstance(other, TableObject)
            and self.signature == other.signature
            and self.n == other.n
            and self.zero == other.zero
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.neg, other.neg)
            and all(np.array_equal(self.binary[k], other.binary[k]) for k in self.binary)
            and all(np.array_equal(self.unary[k], other.unary[k]) for k in self.unary)
        )

    def __repr__(self):
        return f"TableObject(n={self.n}, ops={list(self.binary)}, unary={list(self.unary)})"


def validate_table(obj: TableObject, by_construction: frozenset = frozenset()) -> Report:
    """Exhaustive structural validation of a groups-with-operations table.

    by_construction names checks forced by how the object was built (used by
    the prime-field realization of a linear object, where + is componentwise
    and the star tables are bilinear images); they are reported as such
    instead of re-enumerated.
    """
    rep = Report("table-structure")
    n = obj.n
    cap = enum_cap()

    def ranged(name, a):
        if a.min() < 0 or a.max() >= n:
            rep.add(f"table-range {name}", FAIL, {"min": int(a.min()), "max": int(a.max())})
            return False
        return True

    ok = ranged("+", obj.add) and ranged("-", obj.neg)
    for name, a in obj.binary.items():
        ok = ranged(name, a) and ok
    for name, a in obj.unary.items():
        ok = ranged(name, a) and ok
    if not ok:
        return rep
    if not (0 <= obj.zero < n):
        rep.add("zero-in-carrier", FAIL, {"zero": obj.zero})
        return rep

    from .terms import Add, Binary, Var

    x, y, z = Var("x"), Var("y"), Var("z")

    # group axioms
    if "group-axioms" in by_construction:
        rep.add("group-identity", BY_CONSTRUCTION)
        rep.add("group-inverses", BY_CONSTRUCTION)
        rep.add("group-associativity", BY_CONSTRUCTION)
    else:
        ids = np.arange(n, dtype=np.int32)
        bad = np.nonzero(obj.add[ids, obj.zero] != ids)[0]
        if bad.size == 0:
            bad = np.nonzero(obj.add[obj.zero, ids] != ids)[0]
        rep.add("group-identity", PASS if bad.size == 0 else FAIL,
                None if bad.size == 0 else {"ids": [int(bad[0])]})
        bad = np.nonzero(obj.add[ids, obj.neg] != obj.zero)[0]
        if bad.size == 0:
            bad = np.nonzero(obj.add[obj.neg, ids] != obj.zero)[0]
        rep.add("group-inverses", PASS if bad.size == 0 else FAIL,
                None if bad.size == 0 else {"ids": [int(bad[0])]})
        status, wit = obj.check_equation(Add(Add(x, y), z), Add(x, Add(y, z)), ("x", "y", "z"), cap)
        rep.add("group-associativity", status, wit)

    # swap coherence: the table of *° is the transpose of the table of *
    for bop in obj.signature.binary:
        if bop.derived_from is not None:
            continue
        t = obj.binary[bop.name]
        tsw = obj.binary[bop.swap]
        if np.array_equal(tsw, t.T):
            rep.add(f"swap-coherence {bop.name}", PASS)
        else:
            i, j = np.argwhere(tsw != t.T)[0]
            rep.add(f"swap-coherence {bop.name}", FAIL, {"ids": [int(i), int(j)]})

    # condition (c): x * (y + z) = x*y + x*z for every star (swaps included,
    # which is exactly right distributivity of the primary operation)
    for name in obj.signature.binary_names:
        if "distributivity" in by_construction:
            rep.add(f"distributivity {name}", BY_CONSTRUCTION)
            continue
        status, wit = obj.check_equation(
            Binary(name, x, Add(y, z)),
            Add(Binary(name, x, y), Binary(name, x, z)),
            ("x", "y", "z"), cap,
        )
        rep.add(f"distributivity {name}", status, wit)

    # condition (d): unaries are additive and multiplicative
    for u in obj.signature.unary:
        t = obj.unary[u]
        if "unary-additivity" in by_construction:
            rep.add(f"unary-additivity {u}", BY_CONSTRUCTION)
        else:
            lhs = t[obj.add]
            rhs = obj.add[t[:, None], t[None, :]]
            if np.array_equal(lhs, rhs):
                rep.add(f"unary-additivity {u}", PASS)
            else:
                i, j = np.argwhere(lhs != rhs)[0]
                rep.add(f"unary-additivity {u}", FAIL, {"ids": [int(i), int(j)]})
        for name in obj.signature.binary_names:
            lhs = t[obj.binary[name]]
            rhs = obj.binary[name][t[:, None], t[None, :]]
            if np.array_equal(lhs, rhs):
                rep.add(f"unary-multiplicativity {u} {name}", PASS)
            else:
                i, j = np.argwhere(lhs != rhs)[0]
                rep.add(f"unary-multiplicativity {u} {name}", FAIL, {"ids": [int(i), int(j)]})

    # products commute additively with everything; quantifying over the value
    # of x2 * x3 is exact, so the check is |products| * n instead of n^3
    if "products-central" in by_construction:
        rep.add("products-central", BY_CONSTRUCTION)
    else:
        prods = set()
        for name in obj.signature.binary_names:
            prods.update(np.unique(obj.binary[name]).tolist())
        ok_entry = True
        for p in sorted(prods):
            lhs = obj.add[:, p]
            rhs = obj.add[p, :]
            if not np.array_equal(lhs, rhs):
                i = int(np.nonzero(lhs != rhs)[0][0])
                rep.add("products-central", FAIL, {"product": int(p), "element": i})
                ok_entry = False
                break
        if ok_entry:
            rep.add("products-central", PASS)

    return rep


# ---------------------------------------------------------------------------
# subsets: subobjects and ideals


def subobject_violation(obj: TableObject, ids: frozenset):
    """None if ids is operation-closed and contains 0, else a witness dict."""
    if obj.zero not in ids:
        return {"missing": "zero"}
    members = sorted(ids)
    for a in members:
        if int(obj.neg[a]) not in ids:
            return {"op": "-", "ids": [a]}
        for u, t in obj.unary.items():
            if int(t[a]) not in ids:
                return {"op": u, "ids": [a]}
        for b in members:
            if int(obj.add[a, b]) not in ids:
                return {"op": "+", "ids": [a, b]}
            for name, t in obj.binary.items():
                if int(t[a, b]) not in ids:
                    return {"op": name, "ids": [a, b]}
    return None


def ideal_report(obj: TableObject, ids: frozenset) -> Report:
    """Ideal invariants: additive subgroup + normal + star-absorbing +
    unary-stable.

    Unary stability gets its own entry: a subset satisfying the classical
    ideal conditions (normal subgroup absorbing the stars) but escaping a
    unary operation is flagged distinctly rather than lumped in with the
    closure failures, since such a set cannot be the kernel of a morphism.
    """
    rep = Report("ideal")
    wit = None
    if obj.zero not in ids:
        wit = {"missing": "zero"}
    else:
        for a in sorted(ids):
            if int(obj.neg[a]) not in ids:
                wit = {"op": "-", "ids": [a]}
                break
            for bb in sorted(ids):
                if int(obj.add[a, bb]) not in ids:
                    wit = {"op": "+", "ids": [a, bb]}
                    break
            if wit:
                break
    rep.add("subgroup-closure", PASS if wit is None else FAIL, wit)
    if wit is not None:
        return rep
    members = sorted(ids)
    wit = None
    for a in members:
        for g in obj.elements():
            if obj.conj(g, a) not in ids:
                wit = {"conjugator": g, "ids": [a]}
                break
        if wit:
            break
    rep.add("normality", PASS if wit is None else FAIL, wit)
    wit = None
    member_arr = np.asarray(members, dtype=np.int32)
    for a in members:
        for name, t in obj.binary.items():
            row = t[a, :]
            outside = np.nonzero(~np.isin(row, member_arr))[0]
            if outside.size:
                wit = {"op": name, "ids": [a, int(outside[0])]}
                break
        if wit:
            break
    rep.add("star-absorbing", PASS if wit is None else FAIL, wit)
    wit = None
    for a in members:
        for u, t in obj.unary.items():
            if int(t[a]) not in ids:
                wit = {"op": u, "ids": [a]}
                break
        if wit:
            break
    # distinct diagnostic: star-absorbing but not unary-stable
    rep.add("unary-stable", PASS if wit is None else FAIL, wit)
    return rep


def ideal_closure_table(obj: TableObject, seeds) -> frozenset:
    """Smallest ideal of the table object containing the seed ids."""
    bins = [obj.binary[b] for b in obj.signature.binary_names]
    bf, bo, _ = _kernels.pack_binary_tables(bins)
    uns = [obj.unary[u] for u in obj.signature.unary]
    uf, uo = _kernels.pack_unary_tables(uns)
    mask = _kernels.ideal_closure(
        obj.n,
        np.asarray(sorted(set(int(s) for s in seeds)), dtype=np.int32),
        obj.add.reshape(-1), obj.neg, bf, bo, uf, uo,
    )
    return frozenset(int(i) for i in np.nonzero(mask)[0])


def subobject_closure_table(obj: TableObject, seeds) -> frozenset:
    """Smallest operation-closed subset containing the seeds (worklist)."""
    members = {obj.zero}
    queue = [int(s) for s in seeds]
    while queue:
        a = queue.pop()
        if a in members:
            continue
        for m in list(members):
            for xx in (obj.add_el(a, m), obj.add_el(m, a)):
                if xx not in members:
                    queue.append(xx)
            for name in obj.signature.binary_names:
                for xx in (obj.apply_binary(name, a, m), obj.apply_binary(name, m, a)):
                    if xx not in members:
                        queue.append(xx)
        members.add(a)
        for xx in (obj.neg_el(a), obj.add_el(a, a)):
            if xx not in members:
                queue.append(xx)
        for name in obj.signature.binary_names:
            xx = obj.apply_binary(name, a, a)
            if xx not in members:
                queue.append(xx)
        for u in obj.signature.unary:
            xx = obj.apply_unary(u, a)
            if xx not in members:
                queue.append(xx)
    return frozenset(members)


def all_subobjects(obj: TableObject) -> list[frozenset]:
    """Every operation-closed subset, by one-generator extension BFS."""
    bottom = subobject_closure_table(obj, [])
    found = {bottom}
    frontier = [bottom]
    while frontier:
        s = frontier.pop()
        for g in obj.elements():
            if g in s:
                continue
            bigger = subobject_closure_table(obj, set(s) | {g})
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def all_ideals(obj: TableObject) -> list[frozenset]:
    return [s for s in all_subobjects(obj) if not ideal_report(obj, s).failed]


# ---------------------------------------------------------------------------
# constructions


def sub_table(obj: TableObject, ids) -> tuple[TableObject, np.ndarray]:
    """Induced object on a closed subset; returns (object, embedding old-ids)."""
    wit = subobject_violation(obj, frozenset(ids))
    if wit is not None:
        raise IdealInvalidError("subset is not operation-closed", wit)
    members = np.asarray(sorted(ids), dtype=np.int32)
    index = {int(m): i for i, m in enumerate(members)}
    k = len(members)
    add = np.array([[index[int(obj.add[a, c])] for c in members] for a in members], dtype=np.int32)
    neg = np.array([index[int(obj.neg[a])] for a in members], dtype=np.int32)
    binary = {
        name: np.array([[index[int(t[a, c])] for c in members] for a in members], dtype=np.int32)
        for name, t in obj.binary.items()
    }
    unary = {
        u: np.array([index[int(t[a])] for a in members], dtype=np.int32)
        for u, t in obj.unary.items()
    }
    sub = TableObject(obj.signature, k, index[obj.zero], add, neg, binary, unary)
    return sub, members


def quotient_table(obj: TableObject, ideal_ids) -> tuple[TableObject, np.ndarray]:
    """Quotient by an ideal; returns (object, projection id-map).

    Representative independence of every induced table is verified on all
    pairs; a violation raises IdealInvalidError with the witness, which is
    also how ill-formed input ideals surface.
    """
    ids = frozenset(int(i) for i in ideal_ids)
    rep_check = ideal_report(obj, ids)
    if rep_check.failed:
        e = rep_check.first_failure()
        raise IdealInvalidError(f"not an ideal: {e.name}", e.witness)
    coset_of = np.full(obj.n, -1, dtype=np.int32)
    reps = []
    for x in obj.elements():
        if coset_of[x] >= 0:
            continue
        c = len(reps)
        for i in ids:
            coset_of[obj.add_el(x, i)] = c
        reps.append(x)
    if coset_of.min() < 0:
        raise IdealInvalidError("cosets do not partition the carrier", None)
    reps = np.asarray(reps, dtype=np.int32)
    k = len(reps)

    def induce2(t):
        q = coset_of[t[reps[:, None], reps[None, :]]]
        # well-definedness on all pairs, not just representatives
        if not np.array_equal(coset_of[t], q[coset_of[:, None], coset_of[None, :]]):
            bad = np.argwhere(coset_of[t] != q[coset_of[:, None], coset_of[None, :]])[0]
            raise IdealInvalidError("quotient operation not well defined",
                                    {"ids": [int(bad[0]), int(bad[1])]})
        return q.astype(np.int32)

    def induce1(t):
        q = coset_of[t[reps]]
        if not np.array_equal(coset_of[t], q[coset_of]):
            bad = int(np.nonzero(coset_of[t] != q[coset_of])[0][0])
            raise IdealInvalidError("quotient operation not well defined", {"ids": [bad]})
        return q.astype(np.int32)

    qobj = TableObject(
        obj.signature, k, int(coset_of[obj.zero]),
        induce2(obj.add), induce1(obj.neg),
        {name: induce2(t) for name, t in obj.binary.items()},
        {u: induce1(t) for u, t in obj.unary.items()},
    )
    return qobj, coset_of


def product_table(a: TableObject, b: TableObject) -> TableObject:
    """Direct product on pairs (x, y) |-> x * b.n + y."""
    if a.signature != b.signature:
        raise SignatureMismatchError("direct product needs a common signature")
    na, nb = a.n, b.n
    ia = np.repeat(np.arange(na, dtype=np.int32), nb)
    ib = np.tile(np.arange(nb, dtype=np.int32), na)

    def pair2(ta, tb):
        return (ta[ia[:, None], ia[None, :]] * nb + tb[ib[:, None], ib[None, :]]).astype(np.int32)

    def pair1(ta, tb):
        return (ta[ia] * nb + tb[ib]).astype(np.int32)

    return TableObject(
        a.signature, na * nb, a.zero * nb + b.zero,
        pair2(a.add, b.add), pair1(a.neg, b.neg),
        {name: pair2(a.binary[name], b.binary[name]) for name in a.binary},
        {u: pair1(a.unary[u], b.unary[u]) for u in a.unary},
    )


# ---------------------------------------------------------------------------
# maps between table objects


def table_morphism_report(src: TableObject, dst: TableObject, fmap: np.ndarray) -> Report:
    rep = Report("table-morphism")
    f = np.ascontiguousarray(fmap, dtype=np.int32)
    if f.shape != (src.n,) or f.min() < 0 or f.max() >= dst.n:
        rep.add("map-shape", FAIL, {"shape": list(f.shape)})
        return rep
    rep.add("map-shape", PASS)
    rep.add("preserves-zero", PASS if int(f[src.zero]) == dst.zero else FAIL,
            None if int(f[src.zero]) == dst.zero else {"ids": [src.zero]})
    lhs = f[src.add]
    rhs = dst.add[f[:, None], f[None, :]]
    if np.array_equal(lhs, rhs):
        rep.add("additive", PASS)
    else:
        i, j = np.argwhere(lhs != rhs)[0]
        rep.add("additive", FAIL, {"ids": [int(i), int(j)]})
    for name in src.signature.binary_names:
        lhs = f[src.binary[name]]
        rhs = dst.binary[name][f[:, None], f[None, :]]
        if np.array_equal(lhs, rhs):
            rep.add(f"multiplicative {name}", PASS)
        else:
            i, j = np.argwhere(lhs != rhs)[0]
            rep.add(f"multiplicative {name}", FAIL, {"ids": [int(i), int(j)]})
    for u in src.signature.unary:
        lhs = f[src.unary[u]]
        rhs = dst.unary[u][f]
        if np.array_equal(lhs, rhs):
            rep.add(f"commutes-with {u}", PASS)
        else:
            i = int(np.nonzero(lhs != rhs)[0][0])
            rep.add(f"commutes-with {u}", FAIL, {"ids": [i]})
    return rep


# ---------------------------------------------------------------------------
# brute-force isomorphism search (desk scale)

SEARCH_MAX = 24


def _generating_set(obj: TableObject) -> list[int]:
    gens: list[int] = []
    span = subobject_closure_table(obj, gens)
    while len(span) < obj.n:
        for x in obj.elements():
            if x not in span:
                gens.append(x)
                break
        span = subobject_closure_table(obj, gens)
    return gens


def _extend_hom(src: TableObject, dst: TableObject, genmap: dict):
    """Close a generator assignment into a full homomorphism, or None."""
    fmap = {src.zero: dst.zero}
    fmap.update(genmap)
    frontier = list(fmap)
    while frontier:
        new = []
        known = list(fmap.items())
        for x, fx in known:
            pairs = [(src.neg_el(x), dst.neg_el(fx))]
            for u in src.signature.unary:
                pairs.append((src.apply_unary(u, x), dst.apply_unary(u, fx)))
            for y, fy in known:
                pairs.append((src.add_el(x, y), dst.add_el(fx, fy)))
                for name in src.signature.binary_names:
                    pairs.append((src.apply_binary(name, x, y),
                                  dst.apply_binary(name, fx, fy)))
            for val, fval in pairs:
                if val in fmap:
                    if fmap[val] != fval:
                        return None
                else:
                    fmap[val] = fval
                    new.append(val)
        if not new:
            break
        frontier = new
    if len(fmap) != src.n:
        return None
    return np.asarray([fmap[x] for x in range(src.n)], dtype=np.int32)


def find_table_isomorphism(src: TableObject, dst: TableObject):
    """Exponential search for an isomorphism between small table objects.

    Backtracks over generator images; each candidate is closed into a
    homomorphism and validated.  Returns the id map or None.
    """
    if src.signature != dst.signature or src.n != dst.n:
        return None
    if src.n > SEARCH_MAX:
        raise InvalidInputError(
            f"isomorphism search is limited to {SEARCH_MAX} elements")
    gens = _generating_set(src)
    if not gens:
        return np.asarray([dst.zero], dtype=np.int32)

    def backtrack(i, genmap):
        if i == len(gens):
            fmap = _extend_hom(src, dst, genmap)
            if fmap is None or len(set(fmap.tolist())) != dst.n:
                return None
            if table_morphism_report(src, dst, fmap).failed:
                return None
            return fmap
        for image in dst.elements():
            genmap[gens[i]] = image
            found = backtrack(i + 1, genmap)
            if found is not None:
                return found
        del genmap[gens[i]]
        return None

    return backtrack(0, {})
