"""Crossed modules, cat1 objects, the functors, round trips, crossed ideals."""

from mci import corpus
from mci.actions import ActionData, trivial_action
from mci.fields import QQ
from mci.objects import Ideal, Morphism, identity_morphism, kernel, image, zero_morphism
from mci.varieties import check_variety
from mci.xmodcat1 import (
    CrossedIdeal,
    CrossedModule,
    PreCrossedModule,
    XmodMorphism,
    check_cat1,
    check_crossed,
    check_precrossed,
    functor_c,
    functor_x,
    product_xmod,
    quotient_xmod,
    roundtrip_check,
    roundtrip_check_cat1,
    sub_xmod,
)


def _xm_zero_boundary(heis3):
    c = corpus.heis3()
    br = c.backend.binary["bracket"]
    boundary = zero_morphism(c, heis3)
    act = ActionData(heis3, c, None, {"bracket": br}, {"bracket": br})
    return PreCrossedModule(c, heis3, boundary, act)


def test_xm_inc_is_crossed(xm_inc):
    rep = check_crossed(xm_inc)
    assert rep.ok


def test_xm_id_is_crossed(xm_id):
    assert check_crossed(xm_id).ok


def test_zero_boundary_is_precrossed_only(heis3):
    x = _xm_zero_boundary(heis3)
    assert check_precrossed(x).ok
    rep = check_crossed(x)
    assert rep.failed
    peiffer = [e for e in rep.failures() if e.name.startswith("peiffer-d")]
    assert peiffer and peiffer[0].witness == {"basis": [0, 1]}


def test_functor_c_on_zero_kernel(heis3):
    """(0, B, 0) maps to (B, id, id) up to the zero-coordinate identification."""
    zero_obj = corpus._lie(0, [])
    boundary = Morphism(zero_obj, heis3, ((), (), ()))
    act = trivial_action(heis3, zero_obj)
    x = CrossedModule(zero_obj, heis3, boundary, act)
    assert check_crossed(x).ok
    t = functor_c(x)
    assert t.obj.backend.dim == 3
    assert t.omega0.matrix == identity_morphism(heis3).matrix
    assert t.omega1.matrix == t.omega0.matrix
    assert check_cat1(t, "cat1").ok


def test_functor_c_on_xm_inc(xm_inc):
    t = functor_c(xm_inc)
    assert t.obj.backend.dim == 4
    assert check_cat1(t, "cat1").ok
    k0 = kernel(t.omega0)
    k1 = kernel(t.omega1)
    assert k0.size == 1
    # ker omega1 = {(c1, -boundary c1)}
    assert k1.size == 1
    f = QQ
    v = k1.basis[0]
    assert v[0] != f.zero and v[3] == f.neg(v[0])


def test_functor_c_of_precrossed_fails_cat1_kernel(heis3):
    x = _xm_zero_boundary(heis3)
    t = functor_c(x)
    assert check_cat1(t, "precat1").ok
    rep = check_cat1(t, "cat1")
    assert rep.failed
    assert any(e.name.startswith("cat1 kernel-star") for e in rep.failures())


def test_functor_x_identity_cat1(s3_cat1):
    x = functor_x(s3_cat1)
    assert x.c1.backend.n == 1
    assert x.c0.backend.n == 6
    assert check_crossed(x).ok


def test_functor_x_retraction(s3_cat1_ret):
    """ker = A3 ~ Z3, image ~ Z2, boundary trivial, conjugation dot action."""
    x = functor_x(s3_cat1_ret)
    assert x.c1.backend.n == 3
    assert x.c0.backend.n == 2
    assert check_crossed(x).ok
    assert all(x.boundary(v) == x.c0.backend.zero for v in range(3))
    # the nontrivial element of C0 inverts the 3-cycles
    nz = 1 if x.c0.backend.zero == 0 else 0
    moved = [x.dot(nz, a) for a in range(3)]
    assert moved != list(range(3))
    assert sorted(moved) == [0, 1, 2]


def test_functor_x_on_c_of_xm_inc(xm_inc):
    back = functor_x(functor_c(xm_inc))
    assert back.c1.backend.dim == 1
    assert back.c0.backend.dim == 3
    assert check_crossed(back).ok


def test_roundtrips_linear(xm_inc, xm_id, heis3):
    assert roundtrip_check(xm_inc).ok
    assert roundtrip_check(xm_id).ok
    pre = _xm_zero_boundary(heis3)
    assert roundtrip_check(pre, crossed=False).ok


def test_roundtrips_table(s3_cat1, s3_cat1_ret, z4_cat1):
    for t in (s3_cat1, s3_cat1_ret, z4_cat1):
        assert roundtrip_check_cat1(t).ok
    x = functor_x(s3_cat1_ret)
    assert roundtrip_check(x).ok


def test_roundtrip_cat1_of_xm_id(xm_id):
    t = functor_c(xm_id)
    assert roundtrip_check_cat1(t).ok


def test_omega_laws_verified_per_instance(xm_id):
    t = functor_c(xm_id)
    obj = t.as_mci("cat1")
    rep = check_variety(obj)
    names = [e.name for e in rep.entries]
    assert "identity omega0-omega1" in names and "identity omega1-omega0" in names
    assert rep.ok


def test_kernel_elements_star_to_zero(xm_id):
    """For crossed input, ker omega0 and ker omega1 star to zero and commute."""
    t = functor_c(xm_id)
    k0 = kernel(t.omega0)
    k1 = kernel(t.omega1)
    semi = t.obj
    for u in k0.basis:
        for w in k1.basis:
            for op in semi.signature.binary_names:
                assert semi.backend.mul(op, u, w) == semi.backend.zero_el()


def test_xmod_morphism_validation(xm_id, xm_inc):
    incl = XmodMorphism(
        xm_inc, xm_id,
        Morphism(xm_inc.c1, xm_id.c1, ((0,), (0,), (1,))),
        identity_morphism(xm_id.c0),
    )
    assert not incl.validate().failed
    bad = XmodMorphism(
        xm_inc, xm_id,
        Morphism(xm_inc.c1, xm_id.c1, ((1,), (0,), (0,))),  # e3 -> e1
        identity_morphism(xm_id.c0),
    )
    assert bad.validate().failed


def test_crossed_ideal_validation(xm_id):
    good = CrossedIdeal(xm_id,
                        Ideal(xm_id.c1, basis=[(0, 0, 1)]),
                        Ideal(xm_id.c0, basis=[(0, 0, 1)]))
    assert not good.validate().failed
    bad = CrossedIdeal(xm_id,
                       Ideal(xm_id.c1, basis=[(0, 0, 1)]),
                       Ideal(xm_id.c0, basis=()))  # boundary escapes
    rep = bad.validate()
    assert rep.failed
    assert any(e.name == "boundary-into-i0" for e in rep.failures())


def test_sub_product_quotient_xmod(xm_id):
    i1 = Ideal(xm_id.c1, basis=[(0, 0, 1)])
    i0 = Ideal(xm_id.c0, basis=[(0, 0, 1)])
    sub, incl = sub_xmod(xm_id, i1, i0)
    assert check_crossed(sub).ok
    assert not incl.validate().failed
    q, proj = quotient_xmod(xm_id, i1, i0)
    assert q.c1.backend.dim == 2 and q.c0.backend.dim == 2
    assert check_crossed(q).ok
    assert not proj.validate().failed
    prod, (jx, jy), (px, py) = product_xmod(xm_id, sub)
    assert check_crossed(prod).ok
    assert not jx.validate().failed and not py.validate().failed


def test_table_xmod_roundtrip_with_action(s3_cat1_ret):
    """The full table path: X(T), its crossed checks, both roundtrips, and a
    quotient by the whole kernel."""
    x = functor_x(s3_cat1_ret)
    whole1 = Ideal(x.c1, ids=range(x.c1.backend.n))
    zero0 = Ideal(x.c0, ids=[x.c0.backend.zero])
    # (C1, {0}) is not a crossed ideal: boundary lands in zero but the
    # quotient needs c0 * i1 stability, which holds; the dot displacement
    # condition i0.c1 - c1 uses the zero ideal and passes as well
    ci = CrossedIdeal(x, whole1, zero0)
    assert not ci.validate().failed
    q, proj = quotient_xmod(x, whole1, zero0)
    assert q.c1.backend.n == 1 and q.c0.backend.n == 2


def test_isomorphism_search(s3, z4, s3_cat1_ret):
    import numpy as np

    from mci.errors import InvalidInputError
    from mci.tables import TableObject, find_table_isomorphism
    from mci.signature import GROUP_SIGNATURE

    hit = find_table_isomorphism(s3.backend, s3.backend)
    assert hit is not None
    # Z6 has the same order as S3 but is abelian: no isomorphism exists
    n = 6
    add = np.array([[(i + j) % n for j in range(n)] for i in range(n)], dtype=np.int32)
    neg = np.array([(-i) % n for i in range(n)], dtype=np.int32)
    z6 = TableObject(GROUP_SIGNATURE, n, 0, add, neg, {}, {})
    assert find_table_isomorphism(s3.backend, z6) is None
    assert find_table_isomorphism(z6, z6) is not None
    # the roundtrip search flag
    rep = roundtrip_check_cat1(s3_cat1_ret, search=True)
    assert rep.ok
    assert any(e.name == "search-isomorphism" for e in rep.entries)
    x = functor_x(s3_cat1_ret)
    rep2 = roundtrip_check(x, search=True)
    assert rep2.ok
    assert any(e.name.startswith("search-isomorphism") for e in rep2.entries)


def test_naturality_square_on_corpus_morphism(xm_inc, xm_id):
    """The equivalence is natural on the corpus inclusion xm-inc -> xm-id:
    applying the semidirect functor to the morphism commutes with the
    structural endomorphisms, and the round-trip comparison maps form a
    commuting square with the transported morphism."""
    import numpy as np

    from mci import linalg as la
    from mci.objects import compose, kernel, image
    from mci.fields import QQ

    mu1 = Morphism(xm_inc.c1, xm_id.c1, ((0,), (0,), (1,)))
    mu0 = identity_morphism(xm_id.c0)
    mu = XmodMorphism(xm_inc, xm_id, mu1, mu0)
    assert not mu.validate().failed
    t_src = functor_c(xm_inc)
    t_tgt = functor_c(xm_id)
    # the functor on morphisms: the block map (c1, c0) -> (mu1 c1, mu0 c0)
    na_s, nb_s = xm_inc.c1.backend.dim, xm_inc.c0.backend.dim
    na_t, nb_t = xm_id.c1.backend.dim, xm_id.c0.backend.dim
    rows = []
    for i in range(na_t + nb_t):
        row = []
        for j in range(na_s + nb_s):
            if i < na_t and j < na_s:
                row.append(mu1.matrix[i][j])
            elif i >= na_t and j >= na_s:
                row.append(mu0.matrix[i - na_t][j - na_s])
            else:
                row.append(QQ.zero)
        rows.append(tuple(row))
    cmu = Morphism(t_src.obj, t_tgt.obj, tuple(rows))
    assert not cmu.validate().failed
    f = QQ
    for om_s, om_t in ((t_src.omega0, t_tgt.omega0), (t_src.omega1, t_tgt.omega1)):
        assert la.mat_mul(f, cmu.matrix, om_s.matrix) == \
            la.mat_mul(f, om_t.matrix, cmu.matrix)
    # naturality of the round-trip comparison: comp_tgt . mu = X(C(mu)) . comp_src
    back_s = functor_x(t_src)
    back_t = functor_x(t_tgt)
    kb_s, kb_t = kernel(t_src.omega0).basis, kernel(t_tgt.omega0).basis
    cols_s = [la.coords_in_basis(f, kb_s, tuple(xm_inc.c1.backend.basis_el(i))
                                 + la.zero_vec(f, nb_s))
              for i in range(na_s)]
    comp_s = Morphism(xm_inc.c1, back_s.c1, tuple(
        tuple(cols_s[j][i] for j in range(na_s)) for i in range(len(kb_s))))
    cols_t = [la.coords_in_basis(f, kb_t, tuple(xm_id.c1.backend.basis_el(i))
                                 + la.zero_vec(f, nb_t))
              for i in range(na_t)]
    comp_t = Morphism(xm_id.c1, back_t.c1, tuple(
        tuple(cols_t[j][i] for j in range(na_t)) for i in range(len(kb_t))))
    # X(C(mu)) on the kernel objects: coordinates of cmu restricted to kernels
    xmu_cols = [la.coords_in_basis(f, kb_t, cmu(v)) for v in kb_s]
    xmu = Morphism(back_s.c1, back_t.c1, tuple(
        tuple(xmu_cols[j][i] for j in range(len(kb_s))) for i in range(len(kb_t))))
    lhs = la.mat_mul(f, comp_t.matrix, mu1.matrix)
    rhs = la.mat_mul(f, xmu.matrix, comp_s.matrix)
    assert lhs == rhs
