"""Semidirect products, the two derived-action criteria, their agreement."""

import random

import numpy as np
import pytest

from mci.actions import (
    ActionData,
    build_semidirect,
    check_action_conditions,
    is_derived_action,
    recovered_action,
    trivial_action,
)
from mci.errors import UnsupportedCheckError
from mci.fields import QQ
from mci.linear import LinearObject
from mci.objects import MciObject, base_change, direct_product
from mci.reports import FAIL
from mci.varieties import get_variety
from mci.tables import sub_table


def _heis3_decomposition():
    """A = span(e2, e3) abelian, B = span(e1), bracket action."""
    sig = get_variety("lie").signature
    a = MciObject(LinearObject(sig, QQ, 2, {"bracket": [[[0, 0]] * 2] * 2}, {}), "lie")
    b = MciObject(LinearObject(sig, QQ, 1, {"bracket": [[[0]]]}, {}), "lie")
    ba = [[[0, 1], [0, 0]]]          # [e1, f1] = f2, [e1, f2] = 0
    ab = [[[0, -1]], [[0, 0]]]       # [f1, e1] = -f2
    act = ActionData(b, a, None, {"bracket": ba}, {"bracket": ab})
    return a, b, act


def test_trivial_action_gives_direct_product(heis3, ab2):
    act = trivial_action(heis3, ab2)
    semi, inj_a, sect_b, proj_b = build_semidirect(ab2, heis3, act)
    prod = direct_product(ab2, heis3)
    assert semi.backend == prod.backend
    rep = is_derived_action(ab2, heis3, act)
    assert rep.ok


def test_heis3_decomposition_semidirect_is_heis3():
    a, b, act = _heis3_decomposition()
    semi, _, _, _ = build_semidirect(a, b, act)
    # identify (f1, f2, g) with (e2, e3, e1): brackets must match heis3
    back = semi.backend
    g = back.basis_el(2)
    f1 = back.basis_el(0)
    f2 = back.basis_el(1)
    assert back.mul("bracket", g, f1) == f2
    assert back.mul("bracket", f1, g) == tuple(QQ.neg(x) for x in f2)
    assert back.mul("bracket", f1, f2) == back.zero_el()
    assert is_derived_action(a, b, act).ok


def test_dialgebra_semidirect_matches_quoted_formula(dial1):
    """(a,b) |* (a',b') = (a *_A a' + cross-terms, b *_B b') for both products."""
    act = trivial_action(dial1, dial1)
    # nontrivial cross maps: use the regular action of dial1 on itself
    t = dial1.backend.binary["lprod"]
    r = dial1.backend.binary["rprod"]
    act = ActionData(dial1, dial1, None, {"lprod": t, "rprod": r},
                     {"lprod": t, "rprod": r})
    semi, inj_a, sect_b, _ = build_semidirect(dial1, dial1, act)
    back = semi.backend
    f = back.field
    for av in ((1, 0), (0, 1), (1, 2)):
        for bv in ((1, 0), (2, 1)):
            for a2 in ((1, 1), (0, 2)):
                for b2 in ((1, 0), (0, 0)):
                    left = back.mul(
                        "lprod",
                        tuple(map(f.coerce, av)) + tuple(map(f.coerce, bv)),
                        tuple(map(f.coerce, a2)) + tuple(map(f.coerce, b2)),
                    )
                    aa = dial1.backend.mul("lprod", av, a2)
                    b_on_a = act.apply_ba("lprod", bv, a2)
                    a_on_b = act.apply_ab("lprod", av, b2)
                    apart = dial1.backend.add_el(dial1.backend.add_el(aa, a_on_b), b_on_a)
                    bpart = dial1.backend.mul("lprod", bv, b2)
                    assert left == tuple(apart) + tuple(bpart)
    assert is_derived_action(dial1, dial1, act).ok


def test_sign_flip_is_not_derived():
    a, b, act = _heis3_decomposition()
    bad = ActionData(b, a, None, {"bracket": [[[0, 1], [0, 0]]]},
                     {"bracket": [[[0, 1]], [[0, 0]]]})  # wrong sign on a*b
    rep = is_derived_action(a, b, bad)
    assert rep.failed
    assert any("identity" in e.name for e in rep.failures())


def test_zero_action_of_lie_objects_is_derived(heis3, sol2):
    act = trivial_action(sol2, heis3)
    assert is_derived_action(heis3, sol2, act).ok


def test_conditions_need_enumerable_carrier():
    a, b, act = _heis3_decomposition()
    with pytest.raises(UnsupportedCheckError):
        check_action_conditions(a, b, act)


def _f3(x):
    return base_change(x, 3)


def _f3_decomposition():
    a, b, act = _heis3_decomposition()
    a3, b3 = _f3(a), _f3(b)
    act3 = ActionData(b3, a3, None, {"bracket": [[[0, 1], [0, 0]]]},
                      {"bracket": [[[0, 2]], [[0, 0]]]})
    return a3, b3, act3


def test_twelve_conditions_on_f3_instance():
    a3, b3, act3 = _f3_decomposition()
    rep = check_action_conditions(a3, b3, act3)
    assert rep.ok
    assert is_derived_action(a3, b3, act3).ok


def test_conjugation_action_on_table_normal_subgroup(s3):
    """Conjugation of S3 on its 3-element normal subgroup is derived."""
    sub, members = sub_table(s3.backend, {0, 3, 4})
    a_obj = MciObject(sub, "group")
    idx = {int(m): i for i, m in enumerate(members)}
    dot = np.array(
        [[idx[s3.backend.conj(g, int(m))] for m in members] for g in range(6)],
        dtype=np.int32,
    )
    act = ActionData(s3, a_obj, dot, {}, {})
    rep_cond = check_action_conditions(a_obj, s3, act)
    rep_thm = is_derived_action(a_obj, s3, act)
    assert rep_cond.ok and rep_thm.ok
    # the semidirect of the conjugation action has 18 elements
    semi, _, _, _ = build_semidirect(a_obj, s3, act)
    assert semi.backend.n == 18


def test_bad_dot_fails_condition_3(s3, z4):
    """A non-homomorphic dot map trips (b1+b2).a = b1.(b2.a)."""
    sub, members = sub_table(s3.backend, {0, 3, 4})
    a_obj = MciObject(sub, "group")
    dot = np.array([[ (g + int(m)) % 3 for m in range(3)] for g in range(6)],
                   dtype=np.int32)
    act = ActionData(s3, a_obj, dot, {}, {})
    rep = check_action_conditions(a_obj, s3, act)
    entry = [e for e in rep.entries if e.name.startswith("3 ")]
    assert entry and entry[0].status == FAIL
    assert is_derived_action(a_obj, s3, act).failed


def test_split_extension_recovery():
    a, b, act = _heis3_decomposition()
    rec = recovered_action(a, b, act)
    assert rec.star_ba == act.star_ba and rec.star_ab == act.star_ab
    a3, b3, act3 = _f3_decomposition()
    rec3 = recovered_action(a3, b3, act3)
    assert rec3.star_ba == act3.star_ba and rec3.star_ab == act3.star_ab


def _perturb_action_f3(act, rng):
    """Flip one structure constant of the action tensors (mod 3)."""
    which = rng.choice(("ba", "ab"))
    src = act.star_ba if which == "ba" else act.star_ab
    name = rng.choice(list(act.acting.signature.primary_binary))
    t = [[list(row) for row in plane] for plane in src[name]]
    i = rng.randrange(len(t))
    j = rng.randrange(len(t[0]))
    k = rng.randrange(len(t[0][0]))
    t[i][j][k] = (t[i][j][k] + rng.choice((1, 2))) % 3
    star_ba = {name: act.star_ba[name] for name in act.acting.signature.primary_binary}
    star_ab = {name: act.star_ab[name] for name in act.acting.signature.primary_binary}
    (star_ba if which == "ba" else star_ab)[name] = t
    return ActionData(act.acting, act.acted, None, star_ba, star_ab)


def test_agreement_under_random_perturbations():
    """The iff between the twelve conditions and the semidirect criterion
    holds in the groups-with-operations ambient: the conditions pass exactly
    when the semidirect is structurally valid.  Membership in the variety is
    a strictly stronger verdict (a bilinear perturbation can keep all twelve
    conditions and still break Jacobi), so derived-in-variety must imply the
    conditions but not conversely."""
    from mci.actions import is_derived_action_ambient

    rng = random.Random(91)
    a3, b3, act3 = _f3_decomposition()
    in_variety = 0
    conditions_only = 0
    for _ in range(100):
        mutant = _perturb_action_f3(act3, rng)
        ambient = is_derived_action_ambient(a3, b3, mutant).ok
        by_conditions = check_action_conditions(a3, b3, mutant).ok
        assert ambient == by_conditions
        by_theorem = is_derived_action(a3, b3, mutant).ok
        if by_theorem:
            assert by_conditions
            in_variety += 1
        elif by_conditions:
            conditions_only += 1
    print(f"perturbed actions: {in_variety} derived in the variety, "
          f"{conditions_only} valid only as groups with operations")
