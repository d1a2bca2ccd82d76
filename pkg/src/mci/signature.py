"""Operation signatures for groups with operations.

A signature lists the extra binary operations (with the swap partner of each,
x *° y = y * x) and the extra unary operations, on top of the implicit group
structure (0, -, +).  The swap-closure demanded of the binary set is recorded
explicitly: derived partners carry the name of the operation they transpose,
so object files only need to store tensors/tables for primary operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError, SignatureMismatchError


@dataclass(frozen=True)
class BinaryOp:
    name: str
    swap: str            # name of the partner with x swap y = y op x
    derived_from: str | None = None  # set when the data is the partner's transpose


@dataclass(frozen=True)
class Signature:
    binary: tuple[BinaryOp, ...] = ()
    unary: tuple[str, ...] = ()

    def __post_init__(self):
        names = [b.name for b in self.binary] + list(self.unary)
        if len(set(names)) != len(names):
            raise InvalidInputError(f"duplicate operation names in signature: {names}")
        by_name = {b.name: b for b in self.binary}
        for b in self.binary:
            partner = by_name.get(b.swap)
            if partner is None:
                raise InvalidInputError(f"swap partner {b.swap!r} of {b.name!r} missing")
            if partner.swap != b.name:
                raise InvalidInputError(f"swap pairing of {b.name!r} is not an involution")

    @property
    def binary_names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.binary)

    @property
    def primary_binary(self) -> tuple[str, ...]:
        """Operations whose data is stored (not derived by transposition)."""
        return tuple(b.name for b in self.binary if b.derived_from is None)

    def swap_of(self, name: str) -> str:
        for b in self.binary:
            if b.name == name:
                return b.swap
        raise SignatureMismatchError(f"unknown binary operation {name!r}")

    def has_binary(self, name: str) -> bool:
        return any(b.name == name for b in self.binary)

    def has_unary(self, name: str) -> bool:
        return name in self.unary

    def source_of(self, name: str) -> tuple[str, bool]:
        """(primary op providing the data, needs_transpose)."""
        for b in self.binary:
            if b.name == name:
                if b.derived_from is None:
                    return name, False
                return b.derived_from, True
        raise SignatureMismatchError(f"unknown binary operation {name!r}")

    def with_unary(self, *names: str) -> "Signature":
        return Signature(self.binary, self.unary + tuple(names))

    def without_unary(self, *names: str) -> "Signature":
        drop = set(names)
        return Signature(self.binary, tuple(u for u in self.unary if u not in drop))

    def to_json(self):
        return {
            "binary": [
                {"name": b.name, "swap": b.swap}
                | ({"derived_from": b.derived_from} if b.derived_from else {})
                for b in self.binary
            ],
            "unary": list(self.unary),
        }

    @staticmethod
    def from_json(data) -> "Signature":
        try:
            binary = tuple(
                BinaryOp(b["name"], b["swap"], b.get("derived_from"))
                for b in data.get("binary", ())
            )
            unary = tuple(data.get("unary", ()))
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"bad signature block: {exc}") from exc
        return Signature(binary, unary)


def swapped_pair(name: str) -> tuple[BinaryOp, BinaryOp]:
    """A primary op together with its derived transpose, named <op>_opp."""
    opp = name + "_opp"
    return BinaryOp(name, opp), BinaryOp(opp, name, derived_from=name)


def self_swapped(name: str) -> tuple[BinaryOp, ...]:
    """A commutative op is its own swap partner."""
    return (BinaryOp(name, name),)


GROUP_SIGNATURE = Signature()
