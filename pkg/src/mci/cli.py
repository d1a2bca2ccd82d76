"""Command-line front end.

Exit codes: 0 = checked and passed, 1 = checked and failed (non-member,
non-singular, axiom violated, or an exhaustive check hit the enumeration
cap and could not certify), 2 = invalid input or unsupported check.
All numeric output is exact; --json renders the report verbatim.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import corpus, io
from .actions import check_action_conditions, is_derived_action, build_semidirect
from .errors import MciError
from .extensions import (
    central_agreement_report,
    is_central,
    is_jk_central,
    is_trivial_extension,
)
from .objects import Ideal, MciObject, validate_object
from .reports import FAIL, PASS, Report
from .structure import center, centralizer, commutator, is_singular, singularization
from .objects import ideal_generated
from .varieties import check_variety, check_variety_oracle
from .xmodcat1 import (
    PreCrossedModule,
    XmodMorphism,
    check_cat1,
    check_crossed,
    check_precrossed,
    functor_c,
    functor_x,
    roundtrip_check,
    roundtrip_check_cat1,
)
from .xmodinv import (
    huq_center_check,
    is_singular_xmod,
    xmod_center,
    xmod_commutator,
    xmod_central_extension_check,
)


def _load_object(path) -> MciObject:
    return io.object_from_json(io.load_json(path))


def _load_checked_object(path) -> tuple[MciObject, Report]:
    obj = _load_object(path)
    structural = validate_object(obj)
    return obj, structural


def _load_xmod(path) -> PreCrossedModule:
    return io.xmod_from_json(io.load_json(path))


def _load_ideal(path, obj: MciObject) -> Ideal:
    data = io.load_json(path)
    if obj.is_table:
        if "elements" not in data:
            raise MciError("ideal file for a table object needs 'elements'")
        return Ideal(obj, ids=[int(x) for x in data["elements"]])
    if "basis" not in data:
        raise MciError("ideal file for a linear object needs 'basis'")
    f = obj.backend.field
    return Ideal(obj, basis=[[f.parse(x) for x in row] for row in data["basis"]])


def _subobject_payload(sub) -> dict:
    return sub.to_json()



def _oracle_entry(rep: Report, obj: MciObject, result, args, compute, gens=None):
    """Cross-verify a subobject computation on the F_p table realization.

    Pointless for table inputs (already exhaustive); over Q the object is
    base-changed to the oracle prime first.
    """
    from .fields import Rationals
    from .linear import realize_table, span_ids, vec_to_id
    from .objects import base_change

    if obj.is_table:
        rep.add("oracle", PASS, {"note": "table computation is already exhaustive"})
        return
    if isinstance(obj.backend.field, Rationals):
        target = base_change(obj, args.p)
        f = target.backend.field
        basis = [tuple(f.from_rational(x) for x in row) for row in result.basis]
    else:
        target = obj
        basis = list(result.basis)
    tob, _ = realize_table(target.backend)
    tobj = MciObject(tob, target.variety)
    if gens is None:
        table_result = compute(tobj)
    else:
        p_ = target.backend.field.p
        if isinstance(obj.backend.field, Rationals):
            f = target.backend.field
            gens = [tuple(f.from_rational(x) for x in g) for g in gens]
        gen_ids = [vec_to_id(p_, g) for g in gens]
        table_result = compute(tobj, gen_ids)
    ok = span_ids(target.backend, basis) == table_result.ids
    rep.add("oracle", PASS if ok else FAIL,
            None if ok else {"hint": "linear result disagrees with the "
                                     "exhaustive table computation"})


class Outcome:
    def __init__(self, report: Report, payload: dict | None = None,
                 plain: str | None = None):
        self.report = report
        self.payload = payload or {}
        self.plain = plain  # overrides the rendered report in human mode

    @property
    def exit_code(self) -> int:
        return 0 if self.report.verdict == PASS else 1


# ---------------------------------------------------------------------------
# handlers (each returns an Outcome)


def cmd_validate(args) -> Outcome:
    obj, structural = _load_checked_object(args.object)
    rep = Report("validate")
    rep.extend(structural, prefix="structure ")
    rep.extend(check_variety(obj, args.leibniz_convention), prefix="")
    if args.oracle:
        rep.extend(check_variety_oracle(obj, args.p, args.leibniz_convention),
                   prefix="oracle ")
    return Outcome(rep, {"variety": obj.variety})


def cmd_semidirect(args) -> Outcome:
    a = _load_object(args.a)
    b = _load_object(args.b)
    act = io.action_from_json(io.load_json(args.action), b, a)
    semi, _, _, _ = build_semidirect(a, b, act)
    rep = Report("semidirect")
    rep.extend(validate_object(semi), prefix="structure ")
    if args.output:
        io.dump_json(args.output, io.object_to_json(semi))
        rep.add("written", PASS, {"path": args.output})
    return Outcome(rep, {"size": semi.size})


def cmd_action_check(args) -> Outcome:
    a = _load_object(args.a)
    b = _load_object(args.b)
    act = io.action_from_json(io.load_json(args.action), b, a)
    rep = Report("action-check")
    derived = None
    conditions = None
    if args.mode in ("theorem", "both"):
        r = is_derived_action(a, b, act, args.leibniz_convention)
        derived = r.ok
        rep.extend(r, prefix="theorem ")
    if args.mode in ("conditions", "both"):
        r = check_action_conditions(a, b, act)
        conditions = r.ok
        rep.extend(r, prefix="conditions ")
    if args.mode == "both":
        rep.add("criteria-agree", PASS if derived == conditions else FAIL,
                {"theorem": derived, "conditions": conditions})
    return Outcome(rep)


def cmd_xmod_check(args) -> Outcome:
    x = _load_xmod(args.xmod)
    pre = check_precrossed(x, args.leibniz_convention)
    rep = Report("xmod-check")
    rep.extend(pre, prefix="precrossed ")
    crossed = check_crossed(x, args.leibniz_convention)
    peiffer = [e for e in crossed.entries if e.name.startswith("peiffer")]
    for e in peiffer:
        rep.add("crossed " + e.name, e.status, e.witness)
    return Outcome(rep, {"precrossed": pre.ok, "crossed": not crossed.failed})


def cmd_cat1_check(args) -> Outcome:
    t = io.cat1_from_json(io.load_json(args.cat1))
    rep = check_cat1(t, args.level, args.leibniz_convention)
    return Outcome(rep)


def cmd_to_cat1(args) -> Outcome:
    x = _load_xmod(args.xmod)
    crossed = not check_crossed(x).failed
    t = functor_c(x)
    level = "cat1" if crossed else "precat1"
    rep = Report("to-cat1")
    rep.extend(check_cat1(t, level, args.leibniz_convention), prefix="")
    if args.output:
        io.dump_json(args.output, io.cat1_to_json(t, level))
        rep.add("written", PASS, {"path": args.output})
    return Outcome(rep, {"level": level, "size": t.obj.size})


def cmd_to_xmod(args) -> Outcome:
    t = io.cat1_from_json(io.load_json(args.cat1))
    crossed = check_cat1(t, "cat1", args.leibniz_convention).ok
    x = functor_x(t, crossed)
    checker = check_crossed if crossed else check_precrossed
    rep = Report("to-xmod")
    rep.extend(checker(x, args.leibniz_convention), prefix="")
    if args.output:
        io.dump_json(args.output, io.xmod_to_json(x))
        rep.add("written", PASS, {"path": args.output})
    return Outcome(rep, {"crossed": crossed,
                         "c1-size": x.c1.size, "c0-size": x.c0.size})


def cmd_roundtrip(args) -> Outcome:
    data = io.load_json(args.input)
    if "c1" in data:
        x = io.xmod_from_json(data)
        crossed = not check_crossed(x, args.leibniz_convention).failed
        rep = roundtrip_check(x, crossed, args.leibniz_convention,
                              search=args.search_iso)
    else:
        t = io.cat1_from_json(data)
        crossed = check_cat1(t, "cat1", args.leibniz_convention).ok
        rep = roundtrip_check_cat1(t, crossed, args.leibniz_convention,
                                   search=args.search_iso)
    return Outcome(rep)


def cmd_center(args) -> Outcome:
    obj, structural = _load_checked_object(args.object)
    rep = Report("center")
    rep.extend(structural, prefix="structure ")
    z = center(obj)
    rep.extend(z.validate(), prefix="ideal ")
    if args.oracle:
        _oracle_entry(rep, obj, z, args, center)
    return Outcome(rep, {"center": _subobject_payload(z), "size": z.size})


def cmd_centralizer(args) -> Outcome:
    obj, structural = _load_checked_object(args.object)
    ideal = _load_ideal(args.ideal, obj)
    bad = ideal.validate()
    if bad.failed:
        raise MciError(f"input is not an ideal: {bad.first_failure().name}")
    rep = Report("centralizer")
    rep.extend(structural, prefix="structure ")
    z = centralizer(obj, ideal)
    rep.extend(z.validate(), prefix="ideal ")
    return Outcome(rep, {"centralizer": _subobject_payload(z), "size": z.size})


def cmd_ideal_gen(args) -> Outcome:
    obj, structural = _load_checked_object(args.object)
    gens = io.generators_from_json(io.load_json(args.generators), obj)
    rep = Report("ideal-gen")
    rep.extend(structural, prefix="structure ")
    idl = ideal_generated(obj, gens)
    rep.extend(idl.validate(), prefix="ideal ")
    if args.oracle and obj.is_linear:
        _oracle_entry(rep, obj, idl, args, ideal_generated, gens=gens)
    return Outcome(rep, {"ideal": _subobject_payload(idl), "size": idl.size})


def cmd_commutator(args) -> Outcome:
    obj, structural = _load_checked_object(args.object)
    rep = Report("commutator")
    rep.extend(structural, prefix="structure ")
    k = commutator(obj)
    rep.extend(k.validate(), prefix="ideal ")
    if args.oracle:
        _oracle_entry(rep, obj, k, args, commutator)
    return Outcome(rep, {"commutator": _subobject_payload(k), "size": k.size})


def cmd_singularize(args) -> Outcome:
    obj, structural = _load_checked_object(args.object)
    rep = Report("singularize")
    rep.extend(structural, prefix="structure ")
    q, unit = singularization(obj)
    rep.add("quotient-singular", PASS)
    if args.output:
        io.dump_json(args.output, io.object_to_json(q))
        rep.add("written", PASS, {"path": args.output})
    return Outcome(rep, {"size": q.size, "unit": io.morphism_to_json(unit)})


def cmd_is_singular(args) -> Outcome:
    obj, structural = _load_checked_object(args.object)
    rep = Report("is-singular")
    rep.extend(structural, prefix="structure ")
    verdict = is_singular(obj)
    rep.add("singular", PASS if verdict else FAIL)
    if args.oracle and obj.is_linear:
        from .fields import Rationals
        from .linear import realize_table
        from .objects import base_change as _bc

        target = _bc(obj, args.p) if isinstance(obj.backend.field, Rationals) else obj
        tob, _ = realize_table(target.backend)
        agree = is_singular(MciObject(tob, target.variety)) == verdict
        rep.add("oracle", PASS if agree else FAIL)
    return Outcome(rep, {"singular": verdict})


def cmd_ext_check(args) -> Outcome:
    ext = io.extension_from_json(io.load_json(args.extension))
    return Outcome(ext.validate())


def cmd_ext_central(args) -> Outcome:
    ext = io.extension_from_json(io.load_json(args.extension))
    bad = ext.validate()
    if bad.failed:
        raise MciError(f"not an extension: {bad.first_failure().name}")
    if args.mode == "def":
        rep = is_central(ext)
    elif args.mode == "jk":
        rep = Report("jk-central")
        verdict = is_jk_central(ext)
        rep.add("jk-central", PASS if verdict else FAIL)
    else:
        rep = central_agreement_report(ext)
    return Outcome(rep)


def cmd_ext_trivial(args) -> Outcome:
    data = io.load_json(args.extension)
    ext = io.extension_from_json(data)
    bad = ext.validate()
    if bad.failed:
        raise MciError(f"not an extension: {bad.first_failure().name}")
    rep = Report("trivial-extension")
    verdict = is_trivial_extension(ext.pi)
    rep.add("trivial", PASS if verdict else FAIL)
    return Outcome(rep, {"trivial": verdict})


def cmd_xmod_center(args) -> Outcome:
    x = _load_xmod(args.xmod)
    crossed = not check_crossed(x, args.leibniz_convention).failed
    zc = xmod_center(x, crossed, printed_action_order=args.printed_action_order)
    return Outcome(zc.report, {
        "z1": _subobject_payload(zc.z1),
        "z0": _subobject_payload(zc.z0),
        "crossed": crossed,
    })


def cmd_xmod_commutator(args) -> Outcome:
    x = _load_xmod(args.xmod)
    crossed = not check_crossed(x, args.leibniz_convention).failed
    kc = xmod_commutator(x, crossed)
    return Outcome(kc.report, {
        "k1": _subobject_payload(kc.k1),
        "k0": _subobject_payload(kc.k0),
        "crossed": crossed,
    })


def cmd_xmod_singular(args) -> Outcome:
    x = _load_xmod(args.xmod)
    crossed = not check_crossed(x, args.leibniz_convention).failed
    rep = Report("xmod-singular")
    verdict = is_singular_xmod(x, crossed)
    rep.add("singular", PASS if verdict else FAIL)
    return Outcome(rep, {"singular": verdict})


def cmd_huq_check(args) -> Outcome:
    x = _load_xmod(args.xmod)
    h = mu = None
    if args.candidate:
        if not args.morphism:
            raise MciError("a candidate crossed module needs its morphism file")
        h = _load_xmod(args.candidate)
        mdata = io.load_json(args.morphism)
        mu = XmodMorphism(h, x,
                          io.morphism_from_json(mdata["m1"], h.c1, x.c1),
                          io.morphism_from_json(mdata["m0"], h.c0, x.c0))
    rep = huq_center_check(x, h, mu)
    return Outcome(rep)


def cmd_xmod_ext_central(args) -> Outcome:
    e = io.xmod_extension_from_json(io.load_json(args.extension))
    return Outcome(xmod_central_extension_check(e))


def cmd_corpus(args) -> Outcome:
    rep = Report("corpus")
    if args.action == "list":
        rep.add("list", PASS, {"names": corpus.names()})
        return Outcome(rep, {"names": corpus.names()},
                       plain="\n".join(corpus.names()))
    if args.action == "path":
        p = corpus.path(args.name)
        rep.add("path", PASS, {"path": p})
        return Outcome(rep, {"path": p}, plain=p)
    if args.action == "dump":
        data = corpus.to_json(args.name)
        if args.output:
            io.dump_json(args.output, data)
            rep.add("written", PASS, {"path": args.output})
        return Outcome(rep, {"entry": data})
    raise MciError(f"unknown corpus action {args.action!r}")


# ---------------------------------------------------------------------------
# argument plumbing


def _add_common(p):
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--oracle", action="store_true",
                   help="force base-change brute-force cross-verification where admissible")
    p.add_argument("--p", type=int, default=3, metavar="PRIME",
                   help="prime for the oracle field (default 3)")
    p.add_argument("--leibniz-convention", choices=("left", "right"), default="right",
                   help="which Leibniz identity the leibniz variety uses")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mci",
        description="Validation and invariants for finite presentations of "
                    "groups with operations, crossed modules and cat1 objects.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, configure):
        p = sub.add_parser(name)
        configure(p)
        _add_common(p)
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, lambda p: p.add_argument("object"))
    add("semidirect", cmd_semidirect, lambda p: (
        p.add_argument("a"), p.add_argument("b"), p.add_argument("action"),
        p.add_argument("-o", "--output")))
    add("action-check", cmd_action_check, lambda p: (
        p.add_argument("a"), p.add_argument("b"), p.add_argument("action"),
        p.add_argument("--mode", choices=("theorem", "conditions", "both"),
                       default="both")))
    add("xmod-check", cmd_xmod_check, lambda p: p.add_argument("xmod"))
    add("cat1-check", cmd_cat1_check, lambda p: (
        p.add_argument("cat1"),
        p.add_argument("--level", choices=("precat1", "cat1"), default="cat1")))
    add("to-cat1", cmd_to_cat1, lambda p: (
        p.add_argument("xmod"), p.add_argument("-o", "--output")))
    add("to-xmod", cmd_to_xmod, lambda p: (
        p.add_argument("cat1"), p.add_argument("-o", "--output")))
    add("roundtrip", cmd_roundtrip, lambda p: (
        p.add_argument("input"),
        p.add_argument("--search-iso", action="store_true",
                       help="also run the exponential isomorphism search "
                            "(table objects up to 24 elements)")))
    add("center", cmd_center, lambda p: p.add_argument("object"))
    add("centralizer", cmd_centralizer, lambda p: (
        p.add_argument("object"), p.add_argument("ideal")))
    add("ideal-gen", cmd_ideal_gen, lambda p: (
        p.add_argument("object"), p.add_argument("generators")))
    add("commutator", cmd_commutator, lambda p: p.add_argument("object"))
    add("singularize", cmd_singularize, lambda p: (
        p.add_argument("object"), p.add_argument("-o", "--output")))
    add("is-singular", cmd_is_singular, lambda p: p.add_argument("object"))
    add("ext-check", cmd_ext_check, lambda p: p.add_argument("extension"))
    add("ext-central", cmd_ext_central, lambda p: (
        p.add_argument("extension"),
        p.add_argument("--mode", choices=("def", "jk", "both"), default="both")))
    add("ext-trivial", cmd_ext_trivial, lambda p: p.add_argument("extension"))
    add("xmod-center", cmd_xmod_center, lambda p: (
        p.add_argument("xmod"),
        p.add_argument("--printed-action-order", action="store_true",
                       help="take the ambiguous precrossed clause literally")))
    add("xmod-commutator", cmd_xmod_commutator, lambda p: p.add_argument("xmod"))
    add("xmod-singular", cmd_xmod_singular, lambda p: p.add_argument("xmod"))
    add("huq-check", cmd_huq_check, lambda p: (
        p.add_argument("xmod"),
        p.add_argument("candidate", nargs="?"),
        p.add_argument("morphism", nargs="?")))
    add("xmod-ext-central", cmd_xmod_ext_central, lambda p: p.add_argument("extension"))
    add("corpus", cmd_corpus, lambda p: (
        p.add_argument("action", choices=("list", "path", "dump")),
        p.add_argument("name", nargs="?"),
        p.add_argument("-o", "--output")))
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    started = time.perf_counter()
    try:
        outcome = args.fn(args)
    except MciError as exc:
        msg = f"{type(exc).__name__}: {exc}"
        if getattr(args, "json", False):
            print(json.dumps({"error": msg}, sort_keys=True))
        else:
            print(msg, file=sys.stderr)
        return 2
    outcome.report.elapsed_ms = round((time.perf_counter() - started) * 1000.0, 3)
    if getattr(args, "json", False):
        payload = outcome.report.to_json()
        payload.update(outcome.payload)
        print(json.dumps(payload, sort_keys=True))
    elif outcome.plain is not None:
        print(outcome.plain)
    else:
        print(outcome.report.render())
        for key, value in outcome.payload.items():
            print(f"{key}: {json.dumps(value, sort_keys=True)}")
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
