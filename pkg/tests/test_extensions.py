"""Extensions: validation, centrality in both senses, triviality, units."""

from mci import corpus
from mci import linalg as la
from mci.extensions import (
    Extension,
    central_agreement_report,
    is_central,
    is_jk_central,
    is_trivial_extension,
    sing_on_morphism,
)
from mci.fields import QQ
from mci.objects import (
    Ideal,
    Morphism,
    identity_morphism,
    is_isomorphism,
    product_with_maps,
    quotient,
    zero_morphism,
)


def test_extension_validation(heis3):
    ext = corpus.ext_heis3_central()
    rep = ext.validate()
    assert rep.ok
    # breaking exactness: project onto the wrong quotient
    bad = Extension(ext.a, ext.b, ext.b, ext.iota, identity_morphism(ext.b))
    rep = bad.validate()
    assert rep.failed
    assert any(e.name == "image-equals-kernel" for e in rep.failures())


def test_central_extension_examples():
    assert is_central(corpus.ext_heis3_central()).ok
    rep = is_central(corpus.ext_sol2_noncentral())
    assert rep.failed
    assert any(e.name == "image-inside-center" for e in rep.failures())


def test_zero_kernel_extension_is_central(heis3):
    zero_obj = corpus._lie(0, [])
    iota = Morphism(zero_obj, heis3, ((), (), ()))
    ext = Extension(zero_obj, heis3, heis3, iota, identity_morphism(heis3))
    assert ext.validate().ok
    assert is_central(ext).ok
    assert is_jk_central(ext)


def test_noncentral_kernel_must_be_singular(heis3, sol2):
    """A non-singular kernel is a precondition violation, not a crash."""
    q, proj = quotient(sol2, Ideal(sol2, basis=la.identity_mat(QQ, 2)))
    ext = Extension(sol2, sol2, q, identity_morphism(sol2), proj)
    rep = is_central(ext)
    assert rep.failed
    assert rep.entries[0].name == "kernel-singular"


def test_sing_on_morphism_examples(heis3):
    sq = sing_on_morphism(identity_morphism(heis3))
    assert sq.induced.matrix == identity_morphism(sq.source_sing).matrix
    q, proj = quotient(heis3, Ideal(heis3, basis=[(0, 0, 1)]))
    sq2 = sing_on_morphism(proj)
    assert is_isomorphism(sq2.induced)  # both singularizations are 2-dim
    sq3 = sing_on_morphism(zero_morphism(heis3, heis3))
    assert sq3.induced.matrix == zero_morphism(sq3.source_sing, sq3.target_sing).matrix


def test_trivial_extension_examples(heis3, ab2):
    assert is_trivial_extension(identity_morphism(heis3))
    q, proj = quotient(heis3, Ideal(heis3, basis=[(0, 0, 1)]))
    assert not is_trivial_extension(proj)
    # direct-product projection with singular complement is trivial
    p, inj_a, inj_c, proj_a, proj_c = product_with_maps(ab2, heis3)
    assert is_trivial_extension(proj_c)


def test_jk_centrality_examples():
    assert is_jk_central(corpus.ext_heis3_central())
    assert not is_jk_central(corpus.ext_sol2_noncentral())


def test_agreement_report():
    rep = central_agreement_report(corpus.ext_heis3_central())
    assert rep.ok
    rep2 = central_agreement_report(corpus.ext_sol2_noncentral())
    assert rep2.ok  # both notions say "not central": they agree
    values = {e.name: e.witness for e in rep2.entries if e.witness}
    assert values["definition-central"]["value"] is False
    assert values["jk-central"]["value"] is False


def _table_extension(s3):
    """A3 >--> S3 -->> Z2 (table backend)."""
    from mci.objects import MciObject
    from mci.tables import sub_table

    sub, members = sub_table(s3.backend, {0, 3, 4})
    a_obj = MciObject(sub, "group")
    import numpy as np

    q, proj = quotient(s3, Ideal(s3, ids={0, 3, 4}))
    iota = Morphism(a_obj, s3, np.asarray(members, dtype=np.int32))
    return Extension(a_obj, s3, q, iota, proj)


def test_table_extension_not_central(s3):
    ext = _table_extension(s3)
    assert ext.validate().ok
    rep = is_central(ext)   # A3 is abelian hence singular, but not central in S3
    assert rep.failed
    assert not is_jk_central(ext)
    assert central_agreement_report(ext).ok


def test_table_central_extension(z4):
    """Z2 >--> Z4 -->> Z2 is central (Z4 abelian)."""
    import numpy as np
    from mci.objects import MciObject
    from mci.tables import sub_table

    sub, members = sub_table(z4.backend, {0, 2})
    a_obj = MciObject(sub, "group")
    q, proj = quotient(z4, Ideal(z4, ids={0, 2}))
    iota = Morphism(a_obj, z4, np.asarray(members, dtype=np.int32))
    ext = Extension(a_obj, z4, q, iota, proj)
    assert ext.validate().ok
    assert is_central(ext).ok
    assert is_jk_central(ext)
    assert central_agreement_report(ext).ok
