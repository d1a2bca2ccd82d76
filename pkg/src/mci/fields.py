"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Scalars are plain values (``fractions.Fraction`` over Q, ``int`` residues in
``[0, p)`` over F_p); a ``Field`` object supplies the operations.  No floating
point appears anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadPrimeError, InvalidInputError

MAX_PRIME = 97

_SMALL_PRIMES = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
    47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
}


def is_supported_prime(p) -> bool:
    return p in _SMALL_PRIMES


class Field:
    """Common interface; concrete fields are Rationals and PrimeField."""

    name: str

    def coerce(self, x):
        raise NotImplementedError

    def parse(self, x):
        raise NotImplementedError

    def to_json(self, x):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise InvalidInputError(f"cannot coerce {x!r} into Q")

    def parse(self, x):
        # file format stores rationals as "a/b" strings; bare ints accepted
        if isinstance(x, str):
            try:
                return Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidInputError(f"bad rational literal {x!r}") from exc
        if isinstance(x, int):
            return Fraction(x)
        raise InvalidInputError(f"bad rational literal {x!r}")

    def to_json(self, x):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """Residues mod p, p prime, p <= 97."""

    def __init__(self, p: int):
        if not is_supported_prime(p):
            raise InvalidInputError(f"unsupported prime {p} (need a prime <= {MAX_PRIME})")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.from_rational(x)
        raise InvalidInputError(f"cannot coerce {x!r} into {self.name}")

    def from_rational(self, x: Fraction):
        if x.denominator % self.p == 0:
            raise BadPrimeError(f"denominator of {x} is divisible by {self.p}")
        return (x.numerator * pow(x.denominator, -1, self.p)) % self.p

    def parse(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):  # tolerate the rational spelling
            return self.from_rational(Fraction(x))
        raise InvalidInputError(f"bad {self.name} literal {x!r}")

    def to_json(self, x):
        return int(x)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = Rationals()


def field_from_json(spec) -> Field:
    if spec == "Q":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"Fp"}:
        return PrimeField(int(spec["Fp"]))
    raise InvalidInputError(f"bad field descriptor {spec!r}")


def field_to_json(field: Field):
    if isinstance(field, Rationals):
        return "Q"
    return {"Fp": field.p}
