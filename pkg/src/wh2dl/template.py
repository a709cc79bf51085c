"""Slot template for characterized queries.

A characterization is the fixed desire/relation/input structure a query is
fitted into: a form (simple, complex, compound), one or more subqueries,
each holding an auxiliary, desire slots and clause structures. The JSON
rendering is the stable interchange format used by the CLI and the
evaluation harness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SIMPLE = "simple"
COMPLEX = "complex"
COMPOUND = "compound"

KINDS = ("what", "which", "who", "when", "where",
         "how-quantitative", "how-state", "how-computational")

EXPLICIT = "explicit"
IMPLICIT_DEFINITION = "implicit-definition"
IMPLICIT_TIME = "implicit-time"
IMPLICIT_LOCATION = "implicit-location"
IMPLICIT_COUNT = "implicit-count"
IMPLICIT_ACTIVITY = "implicit-activity"

DESIRE_MODES = (EXPLICIT, IMPLICIT_DEFINITION, IMPLICIT_TIME,
                IMPLICIT_LOCATION, IMPLICIT_COUNT, IMPLICIT_ACTIVITY)

SUBJECT_DESIRE = "desire"
SUBJECT_INPUT = "input"
SUBJECT_NONE = "none"


@dataclass(frozen=True)
class DesireSlot:
    mode: str
    head: tuple = ()
    modifiers: tuple = ()
    quantifiers: tuple = ()

    def to_json(self) -> dict:
        return {"mode": self.mode, "head": list(self.head),
                "modifiers": list(self.modifiers),
                "quantifiers": list(self.quantifiers)}

    @staticmethod
    def from_json(doc: dict) -> "DesireSlot":
        return DesireSlot(doc["mode"], tuple(doc.get("head", ())),
                          tuple(doc.get("modifiers", ())),
                          tuple(doc.get("quantifiers", ())))


@dataclass(frozen=True)
class InputSlot:
    head: tuple
    proper: bool = False
    modifiers: tuple = ()
    quantifiers: tuple = ()

    def to_json(self) -> dict:
        return {"head": list(self.head), "proper": self.proper,
                "modifiers": list(self.modifiers),
                "quantifiers": list(self.quantifiers)}

    @staticmethod
    def from_json(doc: dict) -> "InputSlot":
        return InputSlot(tuple(doc["head"]), bool(doc.get("proper", False)),
                         tuple(doc.get("modifiers", ())),
                         tuple(doc.get("quantifiers", ())))


@dataclass(frozen=True)
class ClauseStructure:
    """One relation/input group, optionally introduced by a clause lexicon.

    `relation` holds the lowercased relation tokens as parsed (auxiliaries
    included, e.g. does_have is stored as ("does", "have")); role naming in
    the translator normalizes them. `inputs` may be empty only for verbal
    relations (the empty-input case). `verbal` and `zone` (index of the
    desire the structure was parsed under, -1 when before any desire) are
    carried in memory for the translator and compound splitting; they are
    not part of the JSON schema.
    """
    cl: str | None
    relation: tuple
    inputs: tuple
    connectives: tuple = ()
    temporal: str | None = None
    verbal: bool = field(default=False, compare=False)
    zone: int = field(default=-1, compare=False)

    def relation_text(self) -> str | None:
        return "_".join(self.relation) if self.relation else None

    def to_json(self) -> dict:
        doc = {"cl": self.cl, "rel": self.relation_text(),
               "inputs": [s.to_json() for s in self.inputs],
               "cc": list(self.connectives)}
        if self.temporal:
            doc["temporal"] = self.temporal
        return doc

    @staticmethod
    def from_json(doc: dict) -> "ClauseStructure":
        rel = tuple(doc["rel"].split("_")) if doc.get("rel") else ()
        return ClauseStructure(
            doc.get("cl"), rel,
            tuple(InputSlot.from_json(s) for s in doc.get("inputs", ())),
            tuple(doc.get("cc", ())), doc.get("temporal"),
            verbal=bool(rel and not _prepositional(rel)))


def _prepositional(rel: tuple) -> bool:
    from .characterize import PREPOSITIONS
    return all(tok in PREPOSITIONS for tok in rel)


@dataclass(frozen=True)
class SubQuery:
    kind: str
    r1: str | None
    desires: tuple
    desire_connectives: tuple
    clauses: tuple
    subject: str
    inclusion: bool = field(default=False, compare=False)

    def to_json(self) -> dict:
        return {"kind": self.kind, "r1": self.r1,
                "desires": [d.to_json() for d in self.desires],
                "desire_cc": list(self.desire_connectives),
                "clauses": [c.to_json() for c in self.clauses],
                "subject": self.subject}

    @staticmethod
    def from_json(doc: dict) -> "SubQuery":
        return SubQuery(
            doc["kind"], doc.get("r1"),
            tuple(DesireSlot.from_json(d) for d in doc.get("desires", ())),
            tuple(doc.get("desire_cc", ())),
            tuple(ClauseStructure.from_json(c) for c in doc.get("clauses", ())),
            doc.get("subject", SUBJECT_NONE))

    def input_count(self) -> int:
        return sum(len(c.inputs) for c in self.clauses)


@dataclass(frozen=True)
class Characterization:
    form: str
    subqueries: tuple
    connectives: tuple = ()

    def to_json(self) -> dict:
        return {"form": self.form,
                "subqueries": [s.to_json() for s in self.subqueries],
                "cc": list(self.connectives)}

    @staticmethod
    def from_json(doc: dict) -> "Characterization":
        return Characterization(
            doc["form"],
            tuple(SubQuery.from_json(s) for s in doc.get("subqueries", ())),
            tuple(doc.get("cc", ())))
