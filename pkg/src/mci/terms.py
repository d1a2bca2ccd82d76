"""Terms over a signature, identities, and compilation to table programs.

Terms are the carrier for identity sets: variables combined with 0, -, +, the
unary operations and the binary operations of a signature.  For exhaustive
checking on finite carriers a term compiles to a tiny stack program whose
opcodes index into packed operation tables; the enumeration kernels run these
programs over all assignments.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SignatureMismatchError
from .signature import Signature

# ---------------------------------------------------------------------------
# term AST


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Unary:
    op: str
    arg: "Term"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Term"
    right: "Term"


Term = Var | Zero | Neg | Add | Unary | Binary

ZERO = Zero()


def v(name: str) -> Var:
    return Var(name)


def add(*terms: Term) -> Term:
    """Left-associated sum; empty sum is 0."""
    if not terms:
        return ZERO
    out = terms[0]
    for t in terms[1:]:
        out = Add(out, t)
    return out


def neg(t: Term) -> Neg:
    return Neg(t)


def un(op: str, t: Term) -> Unary:
    return Unary(op, t)


def b(op: str, left: Term, right: Term) -> Binary:
    return Binary(op, left, right)


def commutator_term(x: Term, y: Term) -> Term:
    return add(x, y, neg(x), neg(y))


def term_vars(t: Term) -> tuple[str, ...]:
    """Variable names in first-occurrence order."""
    seen: list[str] = []

    def walk(s: Term):
        if isinstance(s, Var):
            if s.name not in seen:
                seen.append(s.name)
        elif isinstance(s, Neg):
            walk(s.arg)
        elif isinstance(s, Add):
            walk(s.left)
            walk(s.right)
        elif isinstance(s, Unary):
            walk(s.arg)
        elif isinstance(s, Binary):
            walk(s.left)
            walk(s.right)

    walk(t)
    return tuple(seen)


def term_degree(t: Term, var: str) -> int | None:
    """Degree of t in var if every additive branch is homogeneous, else None."""
    if isinstance(t, Var):
        return 1 if t.name == var else 0
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Neg) or isinstance(t, Unary):
        return term_degree(t.arg, var)
    if isinstance(t, Add):
        dl = term_degree(t.left, var)
        dr = term_degree(t.right, var)
        if dl is None or dr is None:
            return None
        if isinstance(t.left, Zero):
            return dr
        if isinstance(t.right, Zero):
            return dl
        return dl if dl == dr else None
    dl = term_degree(t.left, var)
    dr = term_degree(t.right, var)
    if dl is None or dr is None:
        return None
    return dl + dr


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Neg):
        return f"-({format_term(t.arg)})"
    if isinstance(t, Add):
        return f"({format_term(t.left)} + {format_term(t.right)})"
    if isinstance(t, Unary):
        return f"{t.op}({format_term(t.arg)})"
    return f"({format_term(t.left)} {t.op} {format_term(t.right)})"


@dataclass(frozen=True)
class Identity:
    """lhs = rhs for all assignments of the listed variables.

    multilinear: every variable occurs homogeneously of degree <= 1 on both
    sides, so over a field it suffices to check basis assignments.
    alternating: the identity is of shape t(x, x) = 0 whose polarization
    (diagonal + symmetrized off-diagonal) is exact over every field; only
    square-style identities like [x, x] = 0 use this.
    """

    name: str
    lhs: Term
    rhs: Term
    variables: tuple[str, ...]
    multilinear: bool
    alternating: bool = False

    def __str__(self):
        return f"{self.name}: {format_term(self.lhs)} = {format_term(self.rhs)}"


def make_identity(name: str, lhs: Term, rhs: Term, variables=None) -> Identity:
    if variables is None:
        merged = list(term_vars(lhs))
        for w in term_vars(rhs):
            if w not in merged:
                merged.append(w)
        variables = tuple(merged)
    multilinear = all(
        term_degree(lhs, x) in (0, 1) and term_degree(rhs, x) in (0, 1) for x in variables
    )
    return Identity(name, lhs, rhs, tuple(variables), multilinear)


# ---------------------------------------------------------------------------
# compilation to table programs (see mci._kernels)

OP_PUSH_VAR = 0
OP_PUSH_CONST = 1
OP_UNARY = 2
OP_BINARY = 3


class TableDialect:
    """Resolves op names to packed table slots for one finite carrier.

    Binary slots: 0 is always the addition table, then signature binaries in
    declaration order.  Unary slots: 0 is negation, then signature unaries.
    """

    def __init__(self, signature: Signature):
        self.signature = signature
        self.binary_slot = {"+": 0}
        for i, bop in enumerate(signature.binary):
            self.binary_slot[bop.name] = i + 1
        self.unary_slot = {"-": 0}
        for i, u in enumerate(signature.unary):
            self.unary_slot[u] = i + 1

    def compile(self, t: Term, variables: tuple[str, ...], zero_id: int) -> list[int]:
        prog: list[int] = []
        var_index = {name: i for i, name in enumerate(variables)}

        def emit(s: Term):
            if isinstance(s, Var):
                prog.extend((OP_PUSH_VAR, var_index[s.name]))
            elif isinstance(s, Zero):
                prog.extend((OP_PUSH_CONST, zero_id))
            elif isinstance(s, Neg):
                emit(s.arg)
                prog.extend((OP_UNARY, 0))
            elif isinstance(s, Add):
                emit(s.left)
                emit(s.right)
                prog.extend((OP_BINARY, 0))
            elif isinstance(s, Unary):
                if s.op not in self.unary_slot:
                    raise SignatureMismatchError(f"unary op {s.op!r} not in signature")
                emit(s.arg)
                prog.extend((OP_UNARY, self.unary_slot[s.op]))
            elif isinstance(s, Binary):
                if s.op not in self.binary_slot:
                    raise SignatureMismatchError(f"binary op {s.op!r} not in signature")
                emit(s.left)
                emit(s.right)
                prog.extend((OP_BINARY, self.binary_slot[s.op]))
            else:
                raise TypeError(f"not a term: {s!r}")

        emit(t)
        return prog
