"""Concept expressions, roles and axioms for the negation-free target fragment.

The fragment supports atomic concepts, nominals, intersection, union,
existential restriction, role inversion, role hierarchy, temporally
qualified roles and the Integer datatype. Concept negation is deliberately
unrepresentable: no AST node exists for it.

Text grammar (normative, one axiom per line):

    Concept := NAME | "{" NAME "}"
             | "(" Concept ("and" Concept)+ ")"
             | "(" Concept ("or" Concept)+ ")"
             | "(" "some" Role "." Concept ")"
             | "Integer" | "Count" | "Thing"
    Role    := NAME | "inv(" NAME ")" | ("sometimes:" | "always:") NAME
    Axiom   := Concept "SubClassOf" Concept
             | NAME "EquivalentTo" ["max(" | "min("] Concept [")"]
             | Concept "DisjointWith" Concept
             | NAME "SubRoleOf" NAME

The max(...)/min(...) wrapper on a definition is an optimality annotation,
not a logical constructor; the wrapped expression must itself stay inside
the fragment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union as TUnion

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

_RESERVED = {
    "and", "or", "some", "inv", "sometimes", "always",
    "SubClassOf", "EquivalentTo", "DisjointWith", "SubRoleOf",
    "max", "min",
}


class DLSyntaxError(ValueError):
    """Raised by parse_dl; carries the character offset of the failure."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


# --- roles ---------------------------------------------------------------

@dataclass(frozen=True)
class AtomicRole:
    name: str


@dataclass(frozen=True)
class TemporalRole:
    mode: str  # "sometimes" | "always"
    name: str


@dataclass(frozen=True)
class Inverse:
    inner: TUnion[AtomicRole, TemporalRole]


Role = TUnion[AtomicRole, TemporalRole, Inverse]


# --- concepts ------------------------------------------------------------

@dataclass(frozen=True)
class Atomic:
    name: str


@dataclass(frozen=True)
class Nominal:
    individual: str


@dataclass(frozen=True)
class Intersection:
    parts: tuple


@dataclass(frozen=True)
class Union:
    parts: tuple


@dataclass(frozen=True)
class Exists:
    role: Role
    filler: "Concept"


@dataclass(frozen=True)
class IntegerType:
    pass


@dataclass(frozen=True)
class CountConcept:
    pass


@dataclass(frozen=True)
class Thing:
    pass


Concept = TUnion[Atomic, Nominal, Intersection, Union, Exists,
                 IntegerType, CountConcept, Thing]


# --- axioms --------------------------------------------------------------

@dataclass(frozen=True)
class Subsumption:
    lhs: Concept
    rhs: Concept


@dataclass(frozen=True)
class Definition:
    name: str
    rhs: Concept
    optimize: str | None = None  # None | "max" | "min"


@dataclass(frozen=True)
class Disjointness:
    lhs: Concept
    rhs: Concept


@dataclass(frozen=True)
class RoleSubsumption:
    lhs: str
    rhs: str


Axiom = TUnion[Subsumption, Definition, Disjointness, RoleSubsumption]


# --- serialization -------------------------------------------------------

def serialize_role(role: Role) -> str:
    if isinstance(role, AtomicRole):
        return role.name
    if isinstance(role, TemporalRole):
        return f"{role.mode}:{role.name}"
    if isinstance(role, Inverse):
        return f"inv({serialize_role(role.inner)})"
    raise TypeError(f"not a role: {role!r}")


def serialize(expr: TUnion[Concept, Axiom]) -> str:
    """Render an expression or axiom in the text grammar.

    Deterministic: children are emitted in the order they carry; use
    normalize() first for a canonical rendering.
    """
    if isinstance(expr, Atomic):
        return expr.name
    if isinstance(expr, Nominal):
        return "{" + expr.individual + "}"
    if isinstance(expr, Intersection):
        return "(" + " and ".join(serialize(p) for p in expr.parts) + ")"
    if isinstance(expr, Union):
        return "(" + " or ".join(serialize(p) for p in expr.parts) + ")"
    if isinstance(expr, Exists):
        return f"(some {serialize_role(expr.role)} . {serialize(expr.filler)})"
    if isinstance(expr, IntegerType):
        return "Integer"
    if isinstance(expr, CountConcept):
        return "Count"
    if isinstance(expr, Thing):
        return "Thing"
    if isinstance(expr, Subsumption):
        return f"{serialize(expr.lhs)} SubClassOf {serialize(expr.rhs)}"
    if isinstance(expr, Definition):
        rhs = serialize(expr.rhs)
        if expr.optimize:
            rhs = f"{expr.optimize}({rhs})"
        return f"{expr.name} EquivalentTo {rhs}"
    if isinstance(expr, Disjointness):
        return f"{serialize(expr.lhs)} DisjointWith {serialize(expr.rhs)}"
    if isinstance(expr, RoleSubsumption):
        return f"{expr.lhs} SubRoleOf {expr.rhs}"
    raise TypeError(f"not serializable: {expr!r}")


# --- parsing -------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise DLSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            self.fail(f"expected {literal!r}")
        self.pos += len(literal)

    def name(self) -> str:
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            self.fail("expected a name")
        self.pos = m.end()
        return m.group(0)

    def word(self) -> str:
        """Like name() but does not consume; used to look ahead at keywords."""
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        return m.group(0) if m else ""

    def role(self) -> Role:
        w = self.word()
        if w == "inv":
            self.name()
            self.expect("(")
            inner = self.role()
            if isinstance(inner, Inverse):
                self.fail("double role inversion")
            self.expect(")")
            return Inverse(inner)
        if w in ("sometimes", "always"):
            save = self.pos
            self.name()
            if self.peek() == ":":
                self.expect(":")
                return TemporalRole(w, self.name())
            self.pos = save  # plain role named "sometimes"/"always"
        n = self.name()
        if n in _RESERVED:
            self.fail(f"reserved word {n!r} is not a role name")
        return AtomicRole(n)

    def concept(self) -> Concept:
        ch = self.peek()
        if ch == "{":
            self.expect("{")
            individual = self.name()
            self.expect("}")
            return Nominal(individual)
        if ch == "(":
            self.expect("(")
            if self.word() == "some":
                self.name()
                role = self.role()
                self.expect(".")
                filler = self.concept()
                self.expect(")")
                return Exists(role, filler)
            first = self.concept()
            op = self.word()
            if op not in ("and", "or"):
                self.fail("expected 'and' or 'or'")
            parts = [first]
            while self.word() == op:
                self.name()
                parts.append(self.concept())
            self.expect(")")
            if len(parts) < 2:
                self.fail("intersection/union needs at least two members")
            return Intersection(tuple(parts)) if op == "and" else Union(tuple(parts))
        n = self.name()
        if n == "Integer":
            return IntegerType()
        if n == "Count":
            return CountConcept()
        if n == "Thing":
            return Thing()
        if n in _RESERVED:
            self.fail(f"reserved word {n!r} is not a concept name")
        return Atomic(n)

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail("trailing input")


def parse_dl(text: str) -> TUnion[Concept, Axiom]:
    """Parse one concept expression or axiom; inverse of serialize."""
    p = _Parser(text)
    lhs = p.concept()
    kw = p.word()
    if kw == "":
        p.end()
        return lhs
    if kw == "SubClassOf":
        p.name()
        rhs = p.concept()
        p.end()
        return Subsumption(lhs, rhs)
    if kw == "DisjointWith":
        p.name()
        rhs = p.concept()
        p.end()
        return Disjointness(lhs, rhs)
    if kw == "EquivalentTo":
        if not isinstance(lhs, Atomic):
            p.fail("definition left side must be a plain name")
        p.name()
        optimize = None
        if p.word() in ("max", "min"):
            optimize = p.name()
            p.expect("(")
            rhs = p.concept()
            p.expect(")")
        else:
            rhs = p.concept()
        p.end()
        return Definition(lhs.name, rhs, optimize)
    if kw == "SubRoleOf":
        if not isinstance(lhs, Atomic):
            p.fail("role inclusion left side must be a plain name")
        p.name()
        rhs_name = p.name()
        p.end()
        return RoleSubsumption(lhs.name, rhs_name)
    p.fail(f"unexpected {kw!r}")


# --- normalization -------------------------------------------------------

def normalize(expr):
    """Canonical form: flattened, deduplicated, children sorted by text.

    Works on concepts and axioms; idempotent. Singleton intersections and
    unions collapse to their only member; inv(inv(R)) collapses to R.
    """
    if isinstance(expr, (Atomic, Nominal, IntegerType, CountConcept, Thing)):
        return expr
    if isinstance(expr, (Intersection, Union)):
        kind = type(expr)
        flat = []
        for part in expr.parts:
            np = normalize(part)
            if isinstance(np, kind):
                flat.extend(np.parts)
            else:
                flat.append(np)
        unique = {serialize(p): p for p in flat}
        parts = tuple(unique[k] for k in sorted(unique))
        if len(parts) == 1:
            return parts[0]
        return kind(parts)
    if isinstance(expr, Exists):
        return Exists(_normalize_role(expr.role), normalize(expr.filler))
    if isinstance(expr, Subsumption):
        return Subsumption(normalize(expr.lhs), normalize(expr.rhs))
    if isinstance(expr, Definition):
        return Definition(expr.name, normalize(expr.rhs), expr.optimize)
    if isinstance(expr, Disjointness):
        return Disjointness(normalize(expr.lhs), normalize(expr.rhs))
    if isinstance(expr, RoleSubsumption):
        return expr
    raise TypeError(f"cannot normalize: {expr!r}")


def _normalize_role(role: Role) -> Role:
    if isinstance(role, Inverse):
        inner = _normalize_role(role.inner)
        if isinstance(inner, Inverse):
            return inner.inner
        return Inverse(inner)
    return role


def structurally_equal(a, b) -> bool:
    """True when the two expressions have the same normal form."""
    return normalize(a) == normalize(b)


# --- fragment check ------------------------------------------------------

def _valid_name(name: str) -> bool:
    return bool(_NAME_RE.fullmatch(name)) and name not in _RESERVED


def check_fragment(expr) -> bool:
    """True iff every constructor and name is inside the fragment.

    Negation has no representation, so the check mostly guards names,
    arities and role shapes of hand-built expressions.
    """
    if isinstance(expr, Atomic):
        return _valid_name(expr.name)
    if isinstance(expr, Nominal):
        return _valid_name(expr.individual)
    if isinstance(expr, (Intersection, Union)):
        return len(expr.parts) >= 2 and all(check_fragment(p) for p in expr.parts)
    if isinstance(expr, Exists):
        return _check_role(expr.role) and check_fragment(expr.filler)
    if isinstance(expr, (IntegerType, CountConcept, Thing)):
        return True
    if isinstance(expr, (Subsumption, Disjointness)):
        return check_fragment(expr.lhs) and check_fragment(expr.rhs)
    if isinstance(expr, Definition):
        return _valid_name(expr.name) and expr.optimize in (None, "max", "min") \
            and check_fragment(expr.rhs)
    if isinstance(expr, RoleSubsumption):
        return _valid_name(expr.lhs) and _valid_name(expr.rhs)
    return False


def _check_role(role: Role) -> bool:
    if isinstance(role, AtomicRole):
        return _valid_name(role.name)
    if isinstance(role, TemporalRole):
        return role.mode in ("sometimes", "always") and _valid_name(role.name)
    if isinstance(role, Inverse):
        return isinstance(role.inner, (AtomicRole, TemporalRole)) and _check_role(role.inner)
    return False
