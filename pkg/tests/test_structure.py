"""Centers, centralizers, generated ideals, commutators, singularization."""

import random

from hypothesis import given, settings, strategies as st

from mci import corpus
from mci import linalg as la
from mci.fields import QQ
from mci.linear import ids_to_basis, realize_table, span_ids
from mci.objects import (
    Ideal,
    MciObject,
    ideal_generated,
    quotient,
    whole_ideal,
    zero_ideal,
)
from mci.structure import (
    center,
    centralizer,
    commutator,
    commutator_object,
    is_singular,
    singularization,
)
from mci.tables import all_ideals


def test_center_examples(heis3, sol2, ab2, s3_cat1):
    assert center(ab2).is_whole()
    assert center(heis3).basis == ((QQ.zero, QQ.zero, QQ.one),)
    assert center(sol2).basis == ()
    # (S3, id, id) in the precat1:group signature has trivial center
    obj = s3_cat1.as_mci("cat1")
    z = center(obj)
    assert z.ids == frozenset({obj.backend.zero})


def test_centralizer_examples(heis3):
    assert centralizer(heis3, whole_ideal(heis3)) == center(heis3)
    z = centralizer(heis3, Ideal(heis3, basis=[(0, 0, 1)]))
    assert z.is_whole()
    z2 = centralizer(heis3, Ideal(heis3, basis=[(0, 1, 0), (0, 0, 1)]))
    assert z2.basis == la.echelon_basis(QQ, [(0, 1, 0), (0, 0, 1)])


def test_ideal_generated_examples(heis3, sol2):
    assert ideal_generated(heis3, []).is_zero()
    idl = ideal_generated(heis3, [(1, 0, 0)])
    assert idl.basis == la.echelon_basis(QQ, [(1, 0, 0), (0, 0, 1)])
    idl2 = ideal_generated(sol2, [(0, 1)])
    assert idl2.basis == ((QQ.zero, QQ.one),)


def test_ideal_generated_table(s3):
    assert ideal_generated(s3, [3]).ids == frozenset({0, 3, 4})
    assert ideal_generated(s3, [1]).ids == frozenset(range(6))  # a transposition


def test_commutator_object_examples(heis3):
    assert commutator_object(heis3, zero_ideal(heis3), whole_ideal(heis3)).is_zero()
    assert commutator_object(heis3, whole_ideal(heis3), whole_ideal(heis3)).basis \
        == ((QQ.zero, QQ.zero, QQ.one),)
    abelian = Ideal(heis3, basis=[(0, 1, 0), (0, 0, 1)])
    assert commutator_object(heis3, abelian, abelian).is_zero()


def test_commutator_examples(heis3, sol2, ab2, s3_cat1):
    assert commutator(ab2).is_zero()
    assert commutator(heis3).basis == ((QQ.zero, QQ.zero, QQ.one),)
    assert commutator(sol2).basis == ((QQ.zero, QQ.one),)
    obj = s3_cat1.as_mci("cat1")
    assert commutator(obj).ids == frozenset({0, 3, 4})  # A3


def test_singularization_examples(heis3, dial1):
    s, unit = singularization(heis3)
    assert s.backend.dim == 2
    assert all(
        la.is_zero_vec(QQ, s.backend.basis_product("bracket", i, j))
        for i in range(2) for j in range(2)
    )
    sd, _ = singularization(dial1)
    assert sd.backend.dim == 1
    assert all(
        la.is_zero_vec(sd.backend.field, sd.backend.basis_product(op, 0, 0))
        for op in ("lprod", "rprod")
    )
    # singular input: the unit is an isomorphism
    ab = corpus.ab2()
    s2, unit2 = singularization(ab)
    from mci.objects import is_isomorphism

    assert is_isomorphism(unit2)


def test_is_singular_examples(heis3, ab2, z4_cat1):
    assert is_singular(ab2)
    assert not is_singular(heis3)
    assert is_singular(z4_cat1.as_mci("cat1"))


def test_center_is_valid_ideal_everywhere():
    for name in ("ab2", "sol2", "heis3", "leib2", "dial1", "s3", "z4"):
        obj = corpus.build(name)
        z = center(obj)
        assert not z.validate().failed, name
        k = commutator(obj)
        assert not k.validate().failed, name


def test_monotonicity_and_idempotence(heis3, s3):
    small = ideal_generated(heis3, [(1, 0, 0)])
    bigger = ideal_generated(heis3, [(1, 0, 0), (0, 1, 0)])
    assert bigger.contains_subobject(small)
    again = ideal_generated(heis3, small.basis)
    assert again == small
    tsmall = ideal_generated(s3, [3])
    assert ideal_generated(s3, sorted(tsmall.ids)) == tsmall


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 26), min_size=0, max_size=3),
       st.integers(0, 26))
def test_monotonicity_random_f3(seed_ids, extra):
    obj = corpus.build("heis3-f3")
    tob, _ = realize_table(obj.backend)
    tobj = MciObject(tob, "lie")
    small = ideal_generated(tobj, seed_ids)
    big = ideal_generated(tobj, seed_ids + [extra])
    assert big.contains_subobject(small)


def test_smallest_ideal_theorem_on_tables(s3, z4):
    """Every ideal with singular quotient contains the commutator."""
    for obj in (s3, z4):
        k = commutator(obj)
        for ids in all_ideals(obj.backend):
            idl = Ideal(obj, ids=ids)
            q, _ = quotient(obj, idl)
            if is_singular(q):
                assert idl.contains_subobject(k)
        q, _ = quotient(obj, k)
        assert is_singular(q)


def test_oracle_equivalence_center_commutator_ideal():
    """Linear-algebra results equal exhaustive table filtering/closure on the
    induced F3 realization."""
    for name in ("ab2", "sol2", "heis3", "leib2", "dial1"):
        lin = corpus.build(f"{name}-f3")
        tob, rep = realize_table(lin.backend)
        assert not rep.failed
        tobj = MciObject(tob, lin.variety)
        assert span_ids(lin.backend, center(lin).basis) == center(tobj).ids, name
        assert span_ids(lin.backend, commutator(lin).basis) == commutator(tobj).ids, name
        rng = random.Random(hash(name) % 4096)
        for _ in range(3):
            gen_ids = [rng.randrange(tob.n) for _ in range(2)]
            gens = [ids_to_basis(lin.backend, {g})[0] if g else
                    la.zero_vec(lin.backend.field, lin.backend.dim) for g in gen_ids]
            gens = [tuple(v) for v in gens]
            lin_ideal = ideal_generated(lin, [g for g in gens])
            tab_ideal = ideal_generated(tobj, gen_ids)
            assert span_ids(lin.backend, lin_ideal.basis) == tab_ideal.ids, name
