"""Object-level invariants: center, centralizer, generated ideals,
commutator objects, the commutator, singularity and singularization.

The unary quantifier in the center and commutator definitions ranges over
the identity operation together with the declared unary operations, so the
plain conditions (a * z = 0 etc.) are the identity instances.  Swap-closure
of the binary operations makes every one-sided condition two-sided.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la
from .errors import InternalCrossCheckError
from .objects import (
    Ideal,
    MciObject,
    Morphism,
    ideal_generated,
    quotient,
    whole_ideal,
)
from .reports import Report


def _unary_maps_table(back):
    """id plus each declared unary, as index arrays."""
    maps = [np.arange(back.n, dtype=np.int32)]
    maps += [back.unary[u] for u in back.signature.unary]
    return maps


def _unary_mats_linear(back):
    mats = [la.identity_mat(back.field, back.dim)]
    mats += [back.unary[u] for u in back.signature.unary]
    return mats


def _action_rows_linear(back, against_vectors):
    """Rows expressing  v * w = 0 for every v in against_vectors, every op."""
    rows = []
    for v in against_vectors:
        for op in back.signature.binary_names:
            m = back.left_mult_matrix(op, v)
            rows.extend(m)
    return rows


def center(obj: MciObject) -> Ideal:
    """{z : a+z = z+a, a+w(z) = w(z)+a, a*w(z) = 0, for all a, w, *}."""
    return centralizer(obj, whole_ideal(obj))


def centralizer(obj: MciObject, against: Ideal) -> Ideal:
    """Elements additively commuting with the ideal and star-annihilated by
    it, also after every unary operation."""
    if obj.is_table:
        back = obj.backend
        members = np.asarray(sorted(against.ids), dtype=np.int32)
        commute = np.all(back.add[members, :] == back.add[:, members].T, axis=0)
        star_ok = np.ones(back.n, dtype=bool)
        for op in back.signature.binary_names:
            star_ok &= np.all(back.binary[op][members, :] == back.zero, axis=0)
        good = commute & star_ok
        keep = np.ones(back.n, dtype=bool)
        for m in _unary_maps_table(back):
            keep &= good[m]
        return Ideal(obj, ids=[int(i) for i in np.nonzero(keep)[0]])
    back = obj.backend
    f = back.field
    rows = _action_rows_linear(back, list(against.basis))
    if not rows:
        return whole_ideal(obj)
    blocks = []
    for m in _unary_mats_linear(back):
        blocks.extend(la.mat_mul(f, tuple(rows), m))
    basis = la.nullspace(f, tuple(blocks))
    return Ideal(obj, basis=basis)


def commutator_object(obj: MciObject, left: Ideal, right: Ideal) -> Ideal:
    """Ideal generated by additive commutators and star products between two
    ideals, with unary twists on either argument."""
    if obj.is_table:
        back = obj.backend
        bs = np.asarray(sorted(left.ids), dtype=np.int32)
        cs = np.asarray(sorted(right.ids), dtype=np.int32)
        gens: set[int] = set()
        for m in _unary_maps_table(back):
            for xs, ys in ((bs, m[cs]), (cs, m[bs])):
                s1 = back.add[xs[:, None], ys[None, :]]
                s2 = back.add[s1, back.neg[xs][:, None]]
                s3 = back.add[s2, back.neg[ys][None, :]]
                gens.update(int(v) for v in np.unique(s3))
                for op in back.signature.binary_names:
                    gens.update(int(v) for v in np.unique(back.binary[op][np.ix_(xs, ys)]))
        return ideal_generated(obj, gens)
    back = obj.backend
    f = back.field
    gens = []
    for m in _unary_mats_linear(back):
        for xs, ys in ((left.basis, right.basis), (right.basis, left.basis)):
            for x in xs:
                for y in ys:
                    wy = la.mat_vec(f, m, y)
                    for op in back.signature.binary_names:
                        gens.append(back.mul(op, x, wy))
    return ideal_generated(obj, gens)


def commutator(obj: MciObject) -> Ideal:
    """[A, A]: the ideal generated by x+y-x-y, x+w(y)-x-w(y), x*y, x*w(y)."""
    return commutator_object(obj, whole_ideal(obj), whole_ideal(obj))


def is_singular(obj: MciObject) -> bool:
    """center(A) = A, cross-checked against [A, A] = 0.

    The two characterizations are provably equivalent; computing both turns
    the equivalence into a permanent self-test, and disagreement raises.
    """
    by_center = center(obj).is_whole()
    by_commutator = commutator(obj).is_zero()
    if by_center != by_commutator:
        raise InternalCrossCheckError(
            f"center says singular={by_center} but commutator says {by_commutator}"
        )
    return by_center


def singularization(obj: MciObject) -> tuple[MciObject, Morphism]:
    """A / [A, A] with the quotient projection (the reflection unit)."""
    q, unit = quotient(obj, commutator(obj))
    if not is_singular(q):
        raise InternalCrossCheckError("singularization failed to be singular")
    return q, unit


def subobject_report(obj: MciObject, ideal: Ideal) -> Report:
    return ideal.validate()
