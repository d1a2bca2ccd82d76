"""Bundled example corpus: desk-scale objects, crossed modules, cat1 objects
and extensions, each shipped as a JSON file and rebuildable in code.

Every linear Q object has a companion F3 base change (suffix -f3); the table
objects are small groups and cat1-groups.  Names:

  objects:  ab2 sol2 heis3 leib2 dial1 dual2 dual2-comm tri2 s3 z4
            (+ -f3 twins of the linear ones)
  cat1:     s3-cat1 s3-cat1-ret z4-cat1
  xmods:    xm-inc xm-id (+ -f3 twins)
  exts:     ext-heis3-central ext-sol2-noncentral xext-id-central
"""

from __future__ import annotations

import itertools
from importlib import resources

import numpy as np

from ..actions import ActionData
from ..errors import InvalidInputError
from ..extensions import Extension
from ..fields import QQ
from ..linear import LinearObject
from ..objects import Ideal, MciObject, Morphism, base_change, quotient
from ..signature import GROUP_SIGNATURE
from ..tables import TableObject
from ..varieties import get_variety
from ..xmodcat1 import Cat1Object, CrossedModule, XmodMorphism, quotient_xmod
from ..xmodinv import XmodExtension


def _lie(dim, entries, variety="lie"):
    sig = get_variety(variety).signature
    t = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, v in entries:
        t[i][j][k] = v
    return MciObject(LinearObject(sig, QQ, dim, {"bracket": t}, {}), variety)


def ab2():
    return _lie(2, [])


def sol2():
    return _lie(2, [(0, 1, 1, 1), (1, 0, 1, -1)])


def heis3():
    return _lie(3, [(0, 1, 2, 1), (1, 0, 2, -1)])


def span_e3():
    """The center of heis3 as an abstract one-dimensional abelian Lie object."""
    return _lie(1, [])


def leib2():
    return _lie(2, [(0, 0, 1, 1)], variety="leibniz")


def dial1():
    """Two-dimensional dialgebra on t, t^2 with t3 = 0 and both products
    equal to the associative one."""
    sig = get_variety("dialgebra").signature
    t = [[[0, 1], [0, 0]], [[0, 0], [0, 0]]]
    return MciObject(
        LinearObject(sig, QQ, 2, {"lprod": t, "rprod": t}, {}, ["t", "t2"]),
        "dialgebra",
    )


def dual2():
    """Dual numbers as a (noncommutatively-signatured) associative algebra."""
    sig = get_variety("assoc").signature
    t = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return MciObject(LinearObject(sig, QQ, 2, {"mul": t}, {}, ["one", "eps"]), "assoc")


def dual2_comm():
    sig = get_variety("comm_assoc").signature
    t = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return MciObject(LinearObject(sig, QQ, 2, {"mul": t}, {}, ["one", "eps"]), "comm_assoc")


def tri2():
    """Upper-triangular 2x2 matrices: a noncommutative associative algebra."""
    sig = get_variety("assoc").signature
    dim = 3  # basis E11, E12, E22
    t = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    t[0][0][0] = 1   # E11 E11 = E11
    t[0][1][1] = 1   # E11 E12 = E12
    t[1][2][1] = 1   # E12 E22 = E12
    t[2][2][2] = 1   # E22 E22 = E22
    return MciObject(LinearObject(sig, QQ, dim, {"mul": t}, {}, ["E11", "E12", "E22"]),
                     "assoc")


# ---------------------------------------------------------------------------
# table groups


def _perm_table(n):
    perms = list(itertools.permutations(range(n)))
    idx = {p: i for i, p in enumerate(perms)}

    def comp(p, q):  # apply q first
        return tuple(p[q[i]] for i in range(n))

    add = np.array([[idx[comp(p, q)] for q in perms] for p in perms], dtype=np.int32)
    neg = np.array([idx[tuple(int(v) for v in np.argsort(p))] for p in perms],
                   dtype=np.int32)
    return perms, idx, add, neg


def s3():
    _, _, add, neg = _perm_table(3)
    return MciObject(TableObject(GROUP_SIGNATURE, 6, 0, add, neg, {}, {}), "group")


def z4():
    n = 4
    add = np.array([[(i + j) % n for j in range(n)] for i in range(n)], dtype=np.int32)
    neg = np.array([(-i) % n for i in range(n)], dtype=np.int32)
    return MciObject(TableObject(GROUP_SIGNATURE, n, 0, add, neg, {}, {}), "group")


def _parity(p):
    s = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s += 1
    return s % 2


def s3_cat1():
    g = s3()
    ident = np.arange(6, dtype=np.int32)
    m = Morphism(g, g, ident)
    return Cat1Object(g, m, m)


def s3_cat1_ret():
    """S3 with both structural maps the sign retraction onto {e, (12)}."""
    perms, idx, _, _ = _perm_table(3)
    g = s3()
    swap = idx[(0, 2, 1)]
    ret = np.array([0 if _parity(p) == 0 else swap for p in perms], dtype=np.int32)
    m = Morphism(g, g, ret)
    return Cat1Object(g, m, m)


def z4_cat1():
    g = z4()
    ident = np.arange(4, dtype=np.int32)
    m = Morphism(g, g, ident)
    return Cat1Object(g, m, m)


# ---------------------------------------------------------------------------
# crossed modules


def xm_inc():
    """span(e3) -> heis3 by inclusion; the bracket action is zero because e3
    is central."""
    c1 = span_e3()
    c0 = heis3()
    boundary = Morphism(c1, c0, ((0,), (0,), (1,)))
    act = ActionData(c0, c1, None,
                     {"bracket": [[[0]] for _ in range(3)]},
                     {"bracket": [[[0], [0], [0]]]})
    return CrossedModule(c1, c0, boundary, act)


def xm_id():
    """heis3 -> heis3 by the identity with the adjoint action."""
    c = heis3()
    c2 = heis3()
    br = c.backend.binary["bracket"]
    boundary = Morphism(c, c2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    act = ActionData(c2, c, None, {"bracket": br}, {"bracket": br})
    return CrossedModule(c, c2, boundary, act)


def xmod_base_change(x, p):
    c1 = base_change(x.c1, p)
    c0 = base_change(x.c0, p)
    f = c1.backend.field
    boundary = Morphism(c1, c0, [[f.from_rational(v) for v in row]
                                 for row in x.boundary.matrix])

    def conv(t):
        return [[[f.from_rational(v) for v in row] for row in plane] for plane in t]

    act = ActionData(c0, c1, None,
                     {op: conv(x.action.star_ba[op])
                      for op in c1.signature.primary_binary},
                     {op: conv(x.action.star_ab[op])
                      for op in c1.signature.primary_binary})
    cls = type(x)
    return cls(c1, c0, boundary, act)


# ---------------------------------------------------------------------------
# extensions


def ext_heis3_central():
    h = heis3()
    a = span_e3()
    q, proj = quotient(h, Ideal(h, basis=[(0, 0, 1)]))
    iota = Morphism(a, h, ((0,), (0,), (1,)))
    return Extension(a, h, q, iota, proj)


def ext_sol2_noncentral():
    s = sol2()
    a = _lie(1, [])
    q, proj = quotient(s, Ideal(s, basis=[(0, 1)]))
    iota = Morphism(a, s, ((0,), (1,)))
    return Extension(a, s, q, iota, proj)


def xext_id_central():
    """(span e3, span e3, id) >--> xm-id -->> its quotient."""
    b = xm_id()
    a1 = span_e3()
    a0 = span_e3()
    act = ActionData(a0, a1, None, {"bracket": [[[0]]]}, {"bracket": [[[0]]]})
    a = CrossedModule(a1, a0, Morphism(a1, a0, ((1,),)), act)
    i1 = Ideal(b.c1, basis=[(0, 0, 1)])
    i0 = Ideal(b.c0, basis=[(0, 0, 1)])
    c, proj = quotient_xmod(b, i1, i0)
    inc = ((0,), (0,), (1,))
    iota = XmodMorphism(a, b, Morphism(a1, b.c1, inc), Morphism(a0, b.c0, inc))
    return XmodExtension(a, b, c, iota, proj)


# ---------------------------------------------------------------------------
# the registry


OBJECT_BUILDERS = {
    "ab2": ab2,
    "sol2": sol2,
    "heis3": heis3,
    "leib2": leib2,
    "dial1": dial1,
    "dual2": dual2,
    "dual2-comm": dual2_comm,
    "tri2": tri2,
    "s3": s3,
    "z4": z4,
}
LINEAR_F3 = ("ab2", "sol2", "heis3", "leib2", "dial1", "dual2", "dual2-comm", "tri2")
CAT1_BUILDERS = {
    "s3-cat1": s3_cat1,
    "s3-cat1-ret": s3_cat1_ret,
    "z4-cat1": z4_cat1,
}
XMOD_BUILDERS = {
    "xm-inc": xm_inc,
    "xm-id": xm_id,
}
EXTENSION_BUILDERS = {
    "ext-heis3-central": ext_heis3_central,
    "ext-sol2-noncentral": ext_sol2_noncentral,
}
XMOD_EXTENSION_BUILDERS = {
    "xext-id-central": xext_id_central,
}


def names() -> list[str]:
    out = list(OBJECT_BUILDERS)
    out += [f"{n}-f3" for n in LINEAR_F3]
    out += list(CAT1_BUILDERS)
    out += list(XMOD_BUILDERS)
    out += [f"{n}-f3" for n in XMOD_BUILDERS]
    out += list(EXTENSION_BUILDERS)
    out += list(XMOD_EXTENSION_BUILDERS)
    return out


def build(name: str):
    """The in-memory corpus entry (object, cat1, xmod, or extension)."""
    if name in OBJECT_BUILDERS:
        return OBJECT_BUILDERS[name]()
    if name in CAT1_BUILDERS:
        return CAT1_BUILDERS[name]()
    if name in XMOD_BUILDERS:
        return XMOD_BUILDERS[name]()
    if name in EXTENSION_BUILDERS:
        return EXTENSION_BUILDERS[name]()
    if name in XMOD_EXTENSION_BUILDERS:
        return XMOD_EXTENSION_BUILDERS[name]()
    if name.endswith("-f3"):
        stem = name[:-3]
        if stem in OBJECT_BUILDERS and stem in LINEAR_F3:
            return base_change(OBJECT_BUILDERS[stem](), 3)
        if stem in XMOD_BUILDERS:
            return xmod_base_change(XMOD_BUILDERS[stem](), 3)
    raise InvalidInputError(f"unknown corpus entry {name!r}")


def to_json(name: str):
    from .. import io

    entry = build(name)
    if isinstance(entry, MciObject):
        return io.object_to_json(entry)
    if isinstance(entry, Cat1Object):
        return io.cat1_to_json(entry)
    if isinstance(entry, Extension):
        return io.extension_to_json(entry)
    if isinstance(entry, XmodExtension):
        return io.xmod_extension_to_json(entry)
    return io.xmod_to_json(entry)


def path(name: str) -> str:
    """Filesystem path of a bundled corpus JSON."""
    if name not in names():
        raise InvalidInputError(f"unknown corpus entry {name!r}")
    ref = resources.files(__name__) / "data" / f"{name}.json"
    return str(ref)


def write_all(directory) -> list[str]:
    """Regenerate every corpus JSON into a directory; returns the names."""
    import os

    from .. import io

    os.makedirs(directory, exist_ok=True)
    out = []
    for name in names():
        io.dump_json(os.path.join(directory, f"{name}.json"), to_json(name))
        out.append(name)
    return out
