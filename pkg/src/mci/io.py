"""JSON file formats for objects, morphisms, actions, crossed modules,
cat1 objects, extensions and generator sets.

Scalars are exact: rationals travel as "a/b" strings (bare integers are
accepted), prime-field residues as integers.  Object files carry only the
tensors/tables of primary operations; swap partners are reconstructed as
transposes on load and their coherence is re-verified by validation.
"""

from __future__ import annotations

import json

from .actions import ActionData
from .errors import InvalidInputError
from .extensions import Extension
from .fields import field_from_json, field_to_json
from .linear import LinearObject
from .objects import MciObject, Morphism
from .signature import Signature
from .tables import TableObject
from .varieties import get_variety
from .xmodcat1 import Cat1Object, CrossedModule, PreCrossedModule, XmodMorphism
from .xmodinv import XmodExtension


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def dump_json(path, data):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# objects


def object_from_json(data) -> MciObject:
    if not isinstance(data, dict):
        raise InvalidInputError("object file must hold a JSON object")
    for key in ("backend", "variety"):
        if key not in data:
            raise InvalidInputError(f"object file misses the {key!r} field")
    variety = data["variety"]
    vd = get_variety(variety)
    sig = vd.signature
    if "signature" in data and Signature.from_json(data["signature"]) != sig:
        raise InvalidInputError("explicit signature disagrees with the variety tag")
    if data["backend"] == "linear":
        field = field_from_json(data.get("field", "Q"))
        dim = data.get("dim")
        if dim is None:
            raise InvalidInputError("linear object file misses 'dim'")

        def parse_tensor(t):
            return [[[field.parse(x) for x in row] for row in plane] for plane in t]

        def parse_matrix(m):
            return [[field.parse(x) for x in row] for row in m]

        ops = {name: parse_tensor(t) for name, t in data.get("ops", {}).items()}
        unary = {name: parse_matrix(m) for name, m in data.get("unary", {}).items()}
        backend = LinearObject(sig, field, dim, ops, unary, data.get("basis"))
        return MciObject(backend, variety)
    if data["backend"] == "table":
        for key in ("size", "add", "neg"):
            if key not in data:
                raise InvalidInputError(f"table object file misses {key!r}")
        backend = TableObject(
            sig, data["size"], data.get("zero", 0), data["add"], data["neg"],
            {name: t for name, t in data.get("ops", {}).items()},
            {name: t for name, t in data.get("unary", {}).items()},
        )
        return MciObject(backend, variety)
    raise InvalidInputError(f"unknown backend {data['backend']!r}")


def object_to_json(obj: MciObject):
    sig = obj.signature
    if obj.is_linear:
        back = obj.backend
        f = back.field

        def tensor_json(t):
            return [[[f.to_json(x) for x in row] for row in plane] for plane in t]

        def matrix_json(m):
            return [[f.to_json(x) for x in row] for row in m]

        return {
            "backend": "linear",
            "variety": obj.variety,
            "field": field_to_json(f),
            "dim": back.dim,
            "basis": list(back.basis_labels),
            "signature": sig.to_json(),
            "ops": {name: tensor_json(back.binary[name]) for name in sig.primary_binary},
            "unary": {u: matrix_json(back.unary[u]) for u in sig.unary},
        }
    back = obj.backend
    return {
        "backend": "table",
        "variety": obj.variety,
        "size": back.n,
        "zero": back.zero,
        "signature": sig.to_json(),
        "add": back.add.tolist(),
        "neg": back.neg.tolist(),
        "ops": {name: back.binary[name].tolist() for name in sig.primary_binary},
        "unary": {u: back.unary[u].tolist() for u in sig.unary},
    }


# ---------------------------------------------------------------------------
# morphisms


def morphism_from_json(data, source: MciObject, target: MciObject) -> Morphism:
    if not isinstance(data, dict) or not ({"matrix", "map"} & set(data)):
        raise InvalidInputError("morphism file needs a 'matrix' or a 'map'")
    if source.is_table:
        if "map" not in data:
            raise InvalidInputError("table-backend morphism needs a 'map'")
        return Morphism(source, target, data["map"])
    if "matrix" not in data:
        raise InvalidInputError("linear-backend morphism needs a 'matrix'")
    f = source.backend.field
    rows = [[f.parse(x) for x in row] for row in data["matrix"]]
    return Morphism(source, target, rows)


def morphism_to_json(m: Morphism):
    if m.map is not None:
        return {"map": m.map.tolist()}
    f = m.source.backend.field
    return {"matrix": [[f.to_json(x) for x in row] for row in m.matrix]}


# ---------------------------------------------------------------------------
# actions and crossed modules


def action_from_json(data, acting: MciObject, acted: MciObject) -> ActionData:
    star = data.get("star", {})
    star_ba = {}
    star_ab = {}
    if acting.is_table:
        for name, maps in star.items():
            if "ba" in maps:
                star_ba[name] = maps["ba"]
            if "ab" in maps:
                star_ab[name] = maps["ab"]
        return ActionData(acting, acted, data.get("dot"), star_ba, star_ab)
    f = acting.backend.field

    def parse_tensor(t):
        return [[[f.parse(x) for x in row] for row in plane] for plane in t]

    for name, maps in star.items():
        if "ba" in maps:
            star_ba[name] = parse_tensor(maps["ba"])
        if "ab" in maps:
            star_ab[name] = parse_tensor(maps["ab"])
    if "dot" in data and data["dot"] is not None:
        raise InvalidInputError("linear actions carry no dot data")
    return ActionData(acting, acted, None, star_ba, star_ab)


def action_to_json(act: ActionData):
    sig = act.acting.signature
    if act.acting.is_table:
        out = {"dot": act.dot.tolist(), "star": {}}
        for name in sig.primary_binary:
            out["star"][name] = {
                "ba": act.star_ba[name].tolist(),
                "ab": act.star_ab[name].tolist(),
            }
        return out
    f = act.acting.backend.field

    def tensor_json(t):
        return [[[f.to_json(x) for x in row] for row in plane] for plane in t]

    return {
        "star": {
            name: {
                "ba": tensor_json(act.star_ba[name]),
                "ab": tensor_json(act.star_ab[name]),
            }
            for name in sig.primary_binary
        }
    }


def xmod_from_json(data) -> PreCrossedModule:
    for key in ("c1", "c0", "boundary", "action"):
        if key not in data:
            raise InvalidInputError(f"crossed-module file misses {key!r}")
    c1 = object_from_json(data["c1"])
    c0 = object_from_json(data["c0"])
    boundary = morphism_from_json(data["boundary"], c1, c0)
    action = action_from_json(data["action"], c0, c1)
    return PreCrossedModule(c1, c0, boundary, action)


def xmod_to_json(x: PreCrossedModule):
    return {
        "c1": object_to_json(x.c1),
        "c0": object_to_json(x.c0),
        "boundary": morphism_to_json(x.boundary),
        "action": action_to_json(x.action),
    }


# ---------------------------------------------------------------------------
# cat1 objects


def cat1_from_json(data) -> Cat1Object:
    if "backend" in data:          # a (pre)cat1-tagged object file
        return Cat1Object.from_mci(object_from_json(data))
    for key in ("object", "omega0", "omega1"):
        if key not in data:
            raise InvalidInputError(f"cat1 file misses {key!r}")
    obj = object_from_json(data["object"])
    vd = get_variety(obj.variety)
    if vd.level is not None:
        raise InvalidInputError(
            "cat1 file with separate omegas must carry a base-variety object"
        )
    om0 = morphism_from_json(data["omega0"], obj, obj)
    om1 = morphism_from_json(data["omega1"], obj, obj)
    return Cat1Object(obj, om0, om1)


def cat1_to_json(t: Cat1Object, level: str = "cat1"):
    return object_to_json(t.as_mci(level))


# ---------------------------------------------------------------------------
# extensions


def extension_from_json(data) -> Extension:
    for key in ("a", "b", "c", "iota", "pi"):
        if key not in data:
            raise InvalidInputError(f"extension file misses {key!r}")
    a = object_from_json(data["a"])
    b = object_from_json(data["b"])
    c = object_from_json(data["c"])
    iota = morphism_from_json(data["iota"], a, b)
    pi = morphism_from_json(data["pi"], b, c)
    return Extension(a, b, c, iota, pi)


def extension_to_json(ext: Extension):
    return {
        "a": object_to_json(ext.a),
        "b": object_to_json(ext.b),
        "c": object_to_json(ext.c),
        "iota": morphism_to_json(ext.iota),
        "pi": morphism_to_json(ext.pi),
    }


def xmod_extension_from_json(data) -> XmodExtension:
    for key in ("a", "b", "c", "iota", "pi"):
        if key not in data:
            raise InvalidInputError(f"crossed-module extension file misses {key!r}")
    a = xmod_from_json(data["a"])
    b = xmod_from_json(data["b"])
    c = xmod_from_json(data["c"])
    iota = XmodMorphism(a, b,
                        morphism_from_json(data["iota"]["m1"], a.c1, b.c1),
                        morphism_from_json(data["iota"]["m0"], a.c0, b.c0))
    pi = XmodMorphism(b, c,
                      morphism_from_json(data["pi"]["m1"], b.c1, c.c1),
                      morphism_from_json(data["pi"]["m0"], b.c0, c.c0))
    return XmodExtension(a, b, c, iota, pi)


def xmod_extension_to_json(e: XmodExtension):
    return {
        "a": xmod_to_json(e.a),
        "b": xmod_to_json(e.b),
        "c": xmod_to_json(e.c),
        "iota": {"m1": morphism_to_json(e.iota.m1), "m0": morphism_to_json(e.iota.m0)},
        "pi": {"m1": morphism_to_json(e.pi.m1), "m0": morphism_to_json(e.pi.m0)},
    }


# ---------------------------------------------------------------------------
# generator / ideal files


def generators_from_json(data, obj: MciObject):
    """Either {"elements": [...ids...]} (table) or {"basis": [[...]]} (linear
    vectors, not required to be closed)."""
    if obj.is_table:
        if "elements" not in data:
            raise InvalidInputError("table generators need an 'elements' list")
        return [int(x) for x in data["elements"]]
    if "basis" not in data:
        raise InvalidInputError("linear generators need a 'basis' list of vectors")
    f = obj.backend.field
    return [tuple(f.parse(x) for x in row) for row in data["basis"]]
