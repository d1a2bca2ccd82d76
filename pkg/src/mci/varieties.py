"""Built-in varieties: signatures, identity sets, and membership verdicts.

A variety tag names the identity set an object is supposed to satisfy (the
group identities are implicit and checked structurally by the backends).
precat1:<base> adjoins unary operations omega0, omega1 with the composition
laws; cat1:<base> adds the kernel-orthogonality condition, which quantifies
over kernels and therefore runs as a check pass, not as an identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .errors import InvalidInputError, UnsupportedCheckError
from .fields import PrimeField, Rationals
from .objects import MciObject, check_identity
from .reports import BY_CONSTRUCTION, FAIL, NOT_CHECKED, PASS, Report, enum_cap
from .signature import Signature, self_swapped, swapped_pair
from .terms import ZERO, Identity, add, b, make_identity, neg, un, v

BASE_VARIETIES = ("lie", "leibniz", "assoc", "comm_assoc", "dialgebra", "group")


@dataclass(frozen=True)
class VarietyDef:
    name: str
    signature: Signature
    identities: tuple[Identity, ...]
    backends: tuple[str, ...]
    base: str | None = None        # set for precat1:/cat1: tags
    level: str | None = None       # None, "precat1" or "cat1"


def _lie_identities():
    x, y, z = v("x"), v("y"), v("z")
    alt = Identity("alternating", b("bracket", x, x), ZERO, ("x",),
                   multilinear=False, alternating=True)
    jac = make_identity(
        "jacobi",
        add(b("bracket", b("bracket", x, y), z),
            b("bracket", b("bracket", y, z), x),
            b("bracket", b("bracket", z, x), y)),
        ZERO,
    )
    return (alt, jac)


def _leibniz_identities(convention: str):
    x, y, z = v("x"), v("y"), v("z")
    if convention == "right":
        # right multiplications are derivations
        ident = make_identity(
            "leibniz-right",
            b("bracket", x, b("bracket", y, z)),
            add(b("bracket", b("bracket", x, y), z),
                neg(b("bracket", b("bracket", x, z), y))),
        )
    elif convention == "left":
        # left multiplications are derivations
        ident = make_identity(
            "leibniz-left",
            b("bracket", x, b("bracket", y, z)),
            add(b("bracket", b("bracket", x, y), z),
                b("bracket", y, b("bracket", x, z))),
        )
    else:
        raise InvalidInputError(f"unknown Leibniz convention {convention!r}")
    return (ident,)


def _assoc_identities(commutative: bool):
    x, y, z = v("x"), v("y"), v("z")
    out = [make_identity("associativity",
                         b("mul", b("mul", x, y), z), b("mul", x, b("mul", y, z)))]
    if commutative:
        out.append(make_identity("commutativity", b("mul", x, y), b("mul", y, x)))
    return tuple(out)


def _dialgebra_identities():
    x, y, z = v("x"), v("y"), v("z")
    L, R = "lprod", "rprod"
    return (
        make_identity("d1", b(L, b(L, x, y), z), b(L, x, b(L, y, z))),
        make_identity("d2", b(L, b(L, x, y), z), b(L, x, b(R, y, z))),
        make_identity("d3", b(L, b(R, x, y), z), b(R, x, b(L, y, z))),
        make_identity("d4", b(R, b(L, x, y), z), b(R, x, b(R, y, z))),
        make_identity("d5", b(R, b(R, x, y), z), b(R, x, b(R, y, z))),
    )


def _omega_identities():
    x = v("x")
    return (
        make_identity("omega0-omega1", un("omega0", un("omega1", x)), un("omega1", x)),
        make_identity("omega1-omega0", un("omega1", un("omega0", x)), un("omega0", x)),
    )


def _base_def(name: str, convention: str) -> VarietyDef:
    if name == "lie":
        return VarietyDef("lie", Signature(swapped_pair("bracket")),
                          _lie_identities(), ("linear", "table"))
    if name == "leibniz":
        return VarietyDef("leibniz", Signature(swapped_pair("bracket")),
                          _leibniz_identities(convention), ("linear", "table"))
    if name == "assoc":
        return VarietyDef("assoc", Signature(swapped_pair("mul")),
                          _assoc_identities(False), ("linear", "table"))
    if name == "comm_assoc":
        return VarietyDef("comm_assoc", Signature(self_swapped("mul")),
                          _assoc_identities(True), ("linear", "table"))
    if name == "dialgebra":
        return VarietyDef("dialgebra",
                          Signature(swapped_pair("lprod") + swapped_pair("rprod")),
                          _dialgebra_identities(), ("linear", "table"))
    if name == "group":
        return VarietyDef("group", Signature(), (), ("table",))
    raise InvalidInputError(f"unknown variety {name!r}")


def get_variety(tag: str, leibniz_convention: str = "right") -> VarietyDef:
    if tag.startswith("precat1:") or tag.startswith("cat1:"):
        level, base_name = tag.split(":", 1)
        if base_name not in BASE_VARIETIES:
            raise InvalidInputError(f"unknown base variety {base_name!r} in {tag!r}")
        base = _base_def(base_name, leibniz_convention)
        sig = base.signature.with_unary("omega0", "omega1")
        idents = base.identities + _omega_identities()
        return VarietyDef(tag, sig, idents, base.backends, base=base_name, level=level)
    if tag in BASE_VARIETIES:
        return _base_def(tag, leibniz_convention)
    raise InvalidInputError(f"unknown variety {tag!r}")


def signature_for_variety(tag: str) -> Signature:
    return get_variety(tag).signature


# ---------------------------------------------------------------------------
# membership


def check_variety(obj: MciObject, leibniz_convention: str = "right",
                  cap: int | None = None) -> Report:
    """Identity-set membership for the object's own variety tag.

    The verdict is member iff every identity (and, for cat1 tags, the kernel
    condition) holds.  Identities are reported in declaration order.
    """
    rep = Report("variety")
    vd = get_variety(obj.variety, leibniz_convention)
    if obj.signature != vd.signature:
        rep.add("signature-matches-variety", FAIL,
                {"expected": vd.signature.to_json(), "got": obj.signature.to_json()})
        return rep
    rep.add("signature-matches-variety", PASS)
    for ident in vd.identities:
        status, wit = check_identity(obj, ident, cap)
        rep.add(f"identity {ident.name}", status, wit)
    if vd.level == "cat1":
        rep.extend(cat1_kernel_check(obj, cap), prefix="cat1 ")
    return rep


def kernel_of_unary(obj: MciObject, name: str):
    """Kernel of an omega unary as a raw subset / echelon basis."""
    if obj.is_table:
        t = obj.backend.unary[name]
        return frozenset(int(x) for x in range(obj.backend.n) if int(t[x]) == obj.backend.zero)
    return la.nullspace(obj.backend.field, obj.backend.unary[name])


def cat1_kernel_check(obj: MciObject, cap: int | None = None) -> Report:
    """x * y = 0 and x + y - x - y = 0 for x in ker omega0, y in ker omega1.

    Bilinear, so basis products decide the star conditions in the linear
    backend (where the commutator condition is vacuous); exhaustive over the
    two kernels in the table backend.
    """
    rep = Report("cat1-kernel")
    if not obj.signature.has_unary("omega0") or not obj.signature.has_unary("omega1"):
        rep.add("kernel-condition", FAIL, {"hint": "omega0/omega1 missing from signature"})
        return rep
    cap = enum_cap() if cap is None else cap
    if obj.is_table:
        k0 = sorted(kernel_of_unary(obj, "omega0"))
        k1 = sorted(kernel_of_unary(obj, "omega1"))
        count = len(k0) * len(k1)
        if count > cap:
            rep.add("kernel-condition", NOT_CHECKED, {"tuples": count, "cap": cap})
            return rep
        back = obj.backend
        for x in k0:
            for y in k1:
                for name in obj.signature.binary_names:
                    if back.apply_binary(name, x, y) != back.zero:
                        rep.add(f"kernel-star {name}", FAIL, {"ids": [x, y]})
                        return rep
                c = back.add_el(back.add_el(back.add_el(x, y), back.neg_el(x)), back.neg_el(y))
                if c != back.zero:
                    rep.add("kernel-commutator", FAIL, {"ids": [x, y]})
                    return rep
        for name in obj.signature.binary_names:
            rep.add(f"kernel-star {name}", PASS)
        rep.add("kernel-commutator", PASS)
        return rep
    f = obj.backend.field
    b0 = kernel_of_unary(obj, "omega0")
    b1 = kernel_of_unary(obj, "omega1")
    for name in obj.signature.binary_names:
        wit = None
        for u in b0:
            for w in b1:
                prod = obj.backend.mul(name, u, w)
                if not la.is_zero_vec(f, prod):
                    wit = {"op": name,
                           "elements": [[f.to_json(c) for c in u], [f.to_json(c) for c in w]]}
                    break
            if wit:
                break
        rep.add(f"kernel-star {name}", PASS if wit is None else FAIL, wit)
    rep.add("kernel-commutator", BY_CONSTRUCTION)  # + is abelian
    return rep


def check_variety_oracle(obj: MciObject, p: int = 3,
                         leibniz_convention: str = "right") -> Report:
    """Brute-force cross-verification of membership on the F_p realization.

    Base-changes a Q object to F_p (identity checks there are exhaustive via
    the induced Cayley tables), re-runs every identity, and reports both
    verdicts; they must agree for p-admissible constants.
    """
    from .linear import realize_table
    from .objects import base_change

    rep = Report("variety-oracle")
    if obj.is_table:
        rep.extend(check_variety(obj, leibniz_convention), prefix="exhaustive ")
        return rep
    if isinstance(obj.backend.field, Rationals):
        target = base_change(obj, p)
    elif isinstance(obj.backend.field, PrimeField):
        target = obj
    else:
        raise UnsupportedCheckError("oracle needs Q or F_p input")
    tobj, _ = realize_table(target.backend)
    vd = get_variety(obj.variety, leibniz_convention)
    for ident in vd.identities:
        status, wit = tobj.check_equation(ident.lhs, ident.rhs, ident.variables)
        rep.add(f"exhaustive identity {ident.name}", status, wit)
    if vd.level == "cat1":
        rep.extend(cat1_kernel_check(MciObject(tobj, obj.variety)), prefix="exhaustive cat1 ")
    return rep
