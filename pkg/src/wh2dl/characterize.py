"""Fit token sequences into the simple/complex/compound query template.

The scanner works in one pass over the tagged tokens: wh span, optional
noun phrase bound to the wh determiner, auxiliary, then alternating noun
phrase and relation chunks grouped into clause structures. Desire/input
placement follows the positional rules of the template: the span between
the auxiliary and the first relation is the explicit desire, a missing
auxiliary or relation makes the desire implicit, and where/when queries
always take an implicit desire.
"""

from __future__ import annotations

from .template import (
    COMPLEX, COMPOUND, SIMPLE,
    EXPLICIT, IMPLICIT_ACTIVITY, IMPLICIT_COUNT, IMPLICIT_DEFINITION,
    IMPLICIT_LOCATION, IMPLICIT_TIME,
    SUBJECT_DESIRE, SUBJECT_INPUT, SUBJECT_NONE,
    Characterization, ClauseStructure, DesireSlot, InputSlot, SubQuery,
)
from .tokens import TokenSequence

WH_LEMMAS = {"what", "which", "who", "whom", "whose", "when", "where", "how", "why"}
CLAUSE_LEMMAS = {"which", "who", "that", "when", "where", "whose"}

BE_FORMS = {"is", "are", "was", "were", "am", "be", "been", "being"}
DO_FORMS = {"do", "does", "did"}
HAVE_FORMS = {"has", "have", "had"}
MODALS = {"will", "would", "can", "could", "shall", "should", "may",
          "might", "must"}
AUX_LEMMAS = BE_FORMS | DO_FORMS | HAVE_FORMS | MODALS

MEASURE_QUANTITATIVE = {"much", "many"}
MEASURE_COMPUTATIONAL = {"far", "long", "fast", "high", "deep", "old",
                         "wide", "tall", "big", "heavy", "short", "slow",
                         "young", "large", "small"}

TEMPORAL_ADVERBS = {"sometimes", "always", "often", "never"}
DEFINITE_DETERMINERS = {"the", "this", "that", "these", "those"}
SKIP_ADVERBS = {"also", "well", "too", "there", "as", "not", "only",
                "respectively", "currently", "usually", "very", "ever"}
PARTITIVES = {"one", "some", "all", "each", "both", "any", "none"}
POSSESSIVE_PRONOUNS = {"their", "its", "his", "her", "my", "your", "our"}
PREPOSITIONS = {"of", "in", "on", "at", "to", "from", "by", "with", "for",
                "between", "into", "during", "over", "under", "about",
                "after", "before", "through", "within", "without", "across",
                "against", "along", "around", "behind", "below", "beneath",
                "beside", "near", "off", "onto", "toward", "towards", "upon",
                "out", "up", "down", "than"}

_NOUNISH = {"NN", "NNS", "NNP", "NNPS"}
_NP_CONTENT = _NOUNISH | {"JJ", "JJS"}
_REL_POS = {"VB", "VBZ", "VBD", "VBN", "MD", "IN"}
_VERB_POS = {"VB", "VBZ", "VBD", "VBN", "VBG"}

_KIND_OF = {"kind", "sort", "type"}


class CharacterizationError(ValueError):
    pass


class NoWhToken(CharacterizationError):
    pass


class UnsupportedKind(CharacterizationError):
    pass


class CharacterizationFailure(CharacterizationError):
    pass


# --- query kind ----------------------------------------------------------

def classify_query_kind(seq: TokenSequence) -> str:
    """Classify by wh token; rejects why and procedural how."""
    toks = list(seq.tokens)
    wh_at = next((i for i, t in enumerate(toks) if t.lemma in WH_LEMMAS), None)
    if wh_at is None:
        raise NoWhToken("no wh token in query")
    wh = toks[wh_at].lemma
    if wh == "why":
        raise UnsupportedKind("why queries are causal and unsupported")
    if wh in ("who", "whom", "whose"):
        return "who"
    if wh in ("what", "which", "when", "where"):
        return wh
    # how: the token right after decides quantitative vs computational;
    # a later main verb marks the procedural (recipe) reading instead.
    follower = toks[wh_at + 1].lemma if wh_at + 1 < len(toks) else ""
    if follower in MEASURE_QUANTITATIVE:
        return "how-quantitative"
    if follower in MEASURE_COMPUTATIONAL:
        return "how-computational"
    rest = toks[wh_at + 1:]
    if rest and rest[0].lemma in (BE_FORMS | DO_FORMS):
        rest = rest[1:]
    if any(t.pos in ("VB", "VBD", "VBN") or
           (t.pos == "VBZ" and t.lemma not in BE_FORMS)
           for t in rest):
        raise UnsupportedKind("procedural how queries are unsupported")
    return "how-state"


# --- subquery scanner ----------------------------------------------------

class _Scan:
    """Cursor over the tokens of one subquery segment."""

    def __init__(self, toks: list, kind: str):
        self.toks = toks
        self.kind = kind
        self.i = 0
        self.r1: str | None = None
        self.inclusion = False
        self.desires: list[dict] = []      # {"slot": InputSlot, "wdt": bool}
        self.desire_cc: list[str] = []
        self.structures: list[dict] = []   # cl, rel(tokens), inputs, ccs,
                                           # temporal, zone, rel_after_inputs
        self.count_slot: InputSlot | None = None
        self.pending_temporal: str | None = None
        self.fronted_prep: str | None = None

    # -- low-level helpers ---------------------------------------------

    def peek(self, offset: int = 0):
        j = self.i + offset
        return self.toks[j] if 0 <= j < len(self.toks) else None

    def fail(self, message: str):
        raise CharacterizationFailure(message)

    def open_structure(self, cl=None) -> dict:
        struct = {"cl": cl, "rel": [], "inputs": [], "ccs": [],
                  "temporal": None, "zone": len(self.desires) - 1,
                  "rel_after_inputs": False}
        self.structures.append(struct)
        return struct

    def current_structure(self) -> dict | None:
        return self.structures[-1] if self.structures else None

    def _skippable(self, t) -> bool:
        return t is not None and (
            t.pos == "OTHER" or (t.pos == "RB" and t.lemma in SKIP_ADVERBS))

    def next_content(self, j: int):
        """First non-skippable token at position >= j."""
        while j < len(self.toks) and self._skippable(self.toks[j]):
            j += 1
        return self.toks[j] if j < len(self.toks) else None

    def np_starts_at(self, j: int) -> bool:
        t = self.next_content(j)
        if t is None:
            return False
        j = self.toks.index(t)
        if t.pos == "DT" or t.pos in _NP_CONTENT:
            return True
        nxt = self.toks[j + 1] if j + 1 < len(self.toks) else None
        if t.pos == "VBG":
            return nxt is not None and nxt.pos in _NP_CONTENT
        if t.pos == "RB" and t.lemma not in SKIP_ADVERBS \
                and t.lemma not in TEMPORAL_ADVERBS:
            return nxt is not None and nxt.pos in ("JJ", "JJS", "DT")
        return False

    # -- chunk collectors ------------------------------------------------

    def _partitive_clause_ahead(self) -> bool:
        t = self.peek()
        return (t is not None and t.lemma in PARTITIVES
                and self.peek(1) is not None and self.peek(1).lemma == "of"
                and self.peek(2) is not None
                and self.peek(2).lemma in CLAUSE_LEMMAS)

    def collect_np(self) -> InputSlot:
        quantifiers: list[str] = []
        modifiers: list[str] = []
        words: list = []
        while self.i < len(self.toks):
            if self._partitive_clause_ahead():
                break  # "one of which" belongs to the following clause
            t = self.toks[self.i]
            if self._skippable(t):
                self.i += 1
                continue
            if t.pos == "DT":
                if words:
                    break  # a fresh determiner opens the next phrase
                quantifiers.append(t.lemma)
                self.i += 1
                continue
            nxt = self.peek(1)
            if t.lemma in ("most", "least") and t.pos in ("RB", "JJ", "JJS") \
                    and nxt is not None and nxt.pos == "JJ":
                modifiers.append(f"{t.lemma}_{nxt.lemma}")
                self.i += 2
                continue
            if t.pos == "RB" and t.lemma not in TEMPORAL_ADVERBS \
                    and nxt is not None and nxt.pos in ("JJ", "JJS", "DT"):
                modifiers.append(t.lemma)
                self.i += 1
                continue
            if t.pos in _NP_CONTENT:
                words.append(t)
                self.i += 1
                continue
            if t.pos == "VBG" and nxt is not None and nxt.pos in _NP_CONTENT:
                words.append(t)
                self.i += 1
                continue
            break
        if not words:
            self.fail("expected a noun phrase")
        head = words[-1]
        modifiers.extend(w.lemma for w in words[:-1])
        return InputSlot(head=(head.lemma,),
                         proper=head.pos in ("NNP", "NNPS"),
                         modifiers=tuple(modifiers),
                         quantifiers=tuple(quantifiers))

    def collect_relation_run(self) -> list:
        run: list = []
        while self.i < len(self.toks):
            t = self.toks[self.i]
            if t.lemma in CLAUSE_LEMMAS and t.pos in ("WDT", "WP", "WRB"):
                break
            if t.pos in _REL_POS:
                run.append(t)
                self.i += 1
                continue
            if t.pos == "VBG" and ((run and run[-1].pos == "IN")
                                   or not self.np_starts_at(self.i)):
                run.append(t)  # gerund completing a preposition
                self.i += 1
                continue
            break
        return run

    # -- scan phases -------------------------------------------------------

    def scan_wh(self):
        t = self.peek()
        if t is not None and t.pos == "IN" and self.peek(1) is not None \
                and self.peek(1).lemma in WH_LEMMAS:
            self.fronted_prep = t.lemma
            self.i += 1
        t = self.peek()
        if t is None or t.lemma not in WH_LEMMAS:
            self.fail("segment does not start with a wh token")
        self.i += 1
        if t.lemma == "how":
            follower = self.peek()
            if follower is not None and follower.lemma in (
                    MEASURE_QUANTITATIVE | MEASURE_COMPUTATIONAL):
                self.i += 1
                if follower.lemma in MEASURE_COMPUTATIONAL:
                    self.count_slot = InputSlot(head=(follower.lemma,))

    def scan_kind_of_before_aux(self):
        t = self.peek()
        if t is not None and t.lemma in _KIND_OF and self.peek(1) is not None \
                and self.peek(1).lemma == "of":
            self.inclusion = True
            self.i += 2

    def scan_wh_bound_np(self):
        """A noun phrase glued to the wh token fills the desire slot
        (the counted phrase, for quantitative how)."""
        if self.kind in ("when", "where"):
            return
        t = self.peek()
        if t is None:
            return
        openers = _NP_CONTENT | {"VBG"}
        if t.pos not in openers and not (self.inclusion and t.pos == "DT"):
            return
        if t.pos == "VBG" and not self.np_starts_at(self.i):
            return
        slot = self.collect_np()
        if self.kind in ("how-quantitative", "how-computational"):
            self.count_slot = slot
        else:
            self.desires.append({"slot": slot, "wdt": True})

    def scan_r1(self):
        t = self.peek()
        if t is None or not (t.lemma in BE_FORMS or t.lemma in MODALS):
            return
        parts = [t.lemma]
        self.i += 1
        nxt = self.peek()
        if t.lemma in MODALS and nxt is not None and nxt.lemma == "be":
            parts.append("be")
            self.i += 1
        self.r1 = "_".join(parts)
        self.scan_kind_of_after_aux()

    def scan_kind_of_after_aux(self):
        t = self.peek()
        skip = 0
        if t is not None and t.pos == "DT":
            t = self.peek(1)
            skip = 1
        if t is None or t.lemma not in _KIND_OF:
            return
        after = self.peek(skip + 1)
        if after is None or after.lemma != "of":
            return
        self.inclusion = True
        self.i += skip + 2

    # -- placement ---------------------------------------------------------

    def desire_zone_open(self) -> bool:
        # count queries have no explicit desire span: their desire is the
        # counted phrase already bound to the wh span
        if self.kind in ("how-quantitative", "how-computational"):
            return False
        return (not self.structures and self.r1 is not None
                and not self.desires)

    def place_np(self, slot: InputSlot):
        if self.desire_zone_open():
            self.desires.append({"slot": slot, "wdt": False})
            return
        struct = self.current_structure()
        if struct is None:
            struct = self.open_structure()
        elif struct["rel"] and struct["inputs"]:
            self.fail(f"unattached noun phrase {'_'.join(slot.head)!r}")
        struct["inputs"].append(slot)

    def in_desire_span(self) -> bool:
        return not self.structures and self.r1 is not None \
            and bool(self.desires) and not any(d["wdt"] for d in self.desires)

    def handle_cc(self, t):
        self.i += 1
        conn = "or" if t.lemma == "or" else "and"
        nxt = self.next_content(self.i)
        if nxt is not None and nxt.pos == "CC":
            return  # ", and/or": keep only the worded connective
        possessive = self._possessive_ahead()
        if not self.np_starts_at(self.i):
            self.fail("connective not followed by a phrase")
        in_desire_span = self.in_desire_span()
        slot = self.collect_np()
        follower = self.next_content(self.i)
        if in_desire_span:
            self.desires.append({"slot": slot, "wdt": False})
            self.desire_cc.append(conn)
            return
        struct = self.current_structure()
        complete = struct is not None and struct["rel"] and struct["inputs"]
        follower_opens_relation = (
            follower is not None and follower.pos in _REL_POS
            and follower.lemma not in CLAUSE_LEMMAS)
        if self.desires and (possessive or (complete and follower_opens_relation)):
            # a second desire: own constraint ("… and rent in X") or a
            # cross reference back to the first ("… and their prices")
            self.desires.append({"slot": slot, "wdt": False})
            self.desire_cc.append(conn)
            return
        if struct is None or not struct["inputs"]:
            self.fail("connective with no preceding input")
        struct["ccs"].append(conn)
        struct["inputs"].append(slot)

    def _possessive_ahead(self) -> bool:
        j = self.i
        while j < len(self.toks) and self._skippable(self.toks[j]):
            if self.toks[j].lemma in POSSESSIVE_PRONOUNS:
                return True
            j += 1
        return False

    def handle_relation_run(self, run: list):
        struct = self.current_structure()
        if struct is not None and struct["inputs"] and struct["rel"] \
                and struct["rel"][-1].lemma in AUX_LEMMAS:
            # split relation: "does a millipede have" -> does_have
            verb = run[0]
            if verb.pos in _VERB_POS:
                struct["rel"].append(verb)
                struct["rel_after_inputs"] = True
                if self.pending_temporal:
                    struct["temporal"] = self.pending_temporal
                    self.pending_temporal = None
                rest = run[1:]
                if rest:
                    new = self.open_structure()
                    new["rel"] = rest
                return
        if not self.np_starts_at(self.i):
            # trailing relation: back-fill the earliest structure without one
            target = next((s for s in self.structures if not s["rel"]), None)
            if target is None:
                target = self.current_structure()
            if target is None:
                target = self.open_structure()
            if target["rel"]:
                target["rel"].extend(run)
            else:
                target["rel"] = run
                if target["inputs"]:
                    target["rel_after_inputs"] = True
            if self.pending_temporal:
                target["temporal"] = self.pending_temporal
                self.pending_temporal = None
            return
        struct = self.current_structure()
        if struct is not None and not struct["rel"] and not struct["inputs"] \
                and struct["cl"] is not None:
            struct["rel"] = run
        else:
            new = self.open_structure()
            new["rel"] = run
        if self.pending_temporal:
            self.current_structure()["temporal"] = self.pending_temporal
            self.pending_temporal = None

    def scan_body(self):
        while self.i < len(self.toks):
            t = self.toks[self.i]
            if t.pos == "CC":
                self.handle_cc(t)
                continue
            if self._partitive_clause_ahead():
                self.i += 2  # partitive lead-in: "one of which"
                continue
            clause_like = (
                (t.lemma in CLAUSE_LEMMAS and t.pos in ("WDT", "WP", "WRB"))
                or (t.lemma == "that"
                    and self.peek(1) is not None
                    and self.peek(1).pos in _REL_POS))
            if clause_like and (self.structures or self.desires):
                self.i += 1
                self.open_structure(cl=t.lemma)
                continue
            if t.pos == "RB":
                if t.lemma in TEMPORAL_ADVERBS:
                    self.pending_temporal = t.lemma
                    self.i += 1
                    continue
                if self.np_starts_at(self.i):
                    self.place_np(self.collect_np())
                    continue
                self.i += 1
                continue
            if t.pos in _REL_POS or (t.pos == "VBG"
                                     and not self.np_starts_at(self.i)):
                run = self.collect_relation_run()
                if not run:
                    run = [t]
                    self.i += 1
                self.handle_relation_run(run)
                continue
            if self.np_starts_at(self.i):
                self.place_np(self.collect_np())
                continue
            if t.pos in ("OTHER", "DT"):
                self.i += 1  # pronouns and dangling determiners
                continue
            self.fail(f"cannot place token {t.surface!r}/{t.pos}")

    # -- post-scan fixups ----------------------------------------------------

    def apply_fronted_prep(self):
        if not self.fronted_prep:
            return
        target = next((s for s in self.structures
                       if s["rel"] and s["rel_after_inputs"]), None)
        if target is None:
            target = next((s for s in self.structures if s["rel"]), None)
        if target is None:
            self.fail("fronted preposition with no relation")
        target["rel"] = target["rel"] + [_Pseudo(self.fronted_prep)]

    def merge_inverted_relation(self):
        """A relation-only structure right after an input-only one is the
        split inverted pattern ("When will [John] [arrive]?")."""
        k = 1
        while k < len(self.structures):
            cur, prev = self.structures[k], self.structures[k - 1]
            if cur["cl"] is None and prev["cl"] is None and cur["rel"] \
                    and not cur["inputs"] and prev["inputs"] and not prev["rel"]:
                prev["rel"] = cur["rel"]
                prev["rel_after_inputs"] = True
                prev["temporal"] = prev["temporal"] or cur["temporal"]
                del self.structures[k]
                continue
            k += 1

    def displace_desires(self):
        """Move desire-span phrases into the input side when the template
        says the desire is actually empty: where/when queries, inclusion
        queries whose head noun was absorbed into the auxiliary span, and
        queries with no relation at all."""
        if not self.desires:
            return
        if self.kind in ("when", "where"):
            moved = self.desires
        elif self.inclusion:
            moved = [d for d in self.desires if not d["wdt"]]
        elif not any(s["rel"] for s in self.structures):
            moved = [d for d in self.desires if not d["wdt"]]
        else:
            return
        if not moved:
            return
        struct = {"cl": None, "rel": [], "inputs": [d["slot"] for d in moved],
                  "ccs": list(self.desire_cc[:len(moved) - 1]),
                  "temporal": None, "zone": -1, "rel_after_inputs": False}
        self.structures.insert(0, struct)
        self.desires = [d for d in self.desires if d not in moved]
        self.desire_cc = self.desire_cc[:max(len(self.desires) - 1, 0)]

    def absorb_activity(self) -> DesireSlot | None:
        """A desire-less verbal structure with no input is an implicit
        activity: the verb itself fills the desire slot."""
        if self.desires or self.count_slot is not None:
            return None
        first = self.structures[0] if self.structures else None
        if first is None or first["cl"] is not None or first["inputs"] \
                or not first["rel"] or not _is_verbal(first["rel"]):
            return None
        verb = next((t for t in first["rel"]
                     if t.pos in _VERB_POS and t.lemma not in AUX_LEMMAS),
                    None)
        if verb is None:
            return None
        self.structures.pop(0)
        return DesireSlot(IMPLICIT_ACTIVITY, head=(verb.lemma,))

    def finish_desires(self) -> tuple:
        if self.kind == "when":
            return (DesireSlot(IMPLICIT_TIME),)
        if self.kind == "where":
            return (DesireSlot(IMPLICIT_LOCATION),)
        if self.kind in ("how-quantitative", "how-computational"):
            slot = self.count_slot or InputSlot(head=())
            return (DesireSlot(IMPLICIT_COUNT, head=slot.head,
                               modifiers=slot.modifiers,
                               quantifiers=slot.quantifiers),)
        activity = self.absorb_activity()
        if activity is not None:
            return (activity,)
        if not self.desires:
            return (DesireSlot(IMPLICIT_DEFINITION),)
        return tuple(
            DesireSlot(EXPLICIT, head=d["slot"].head,
                       modifiers=d["slot"].modifiers,
                       quantifiers=d["slot"].quantifiers)
            for d in self.desires)

    def subject_binding(self) -> str:
        main = next((s for s in self.structures
                     if s["cl"] is None and s["rel"] and s["inputs"]), None)
        if main is None:
            return SUBJECT_NONE
        return SUBJECT_INPUT if main["rel_after_inputs"] else SUBJECT_DESIRE

    def build(self) -> SubQuery:
        self.scan_wh()
        self.scan_kind_of_before_aux()
        self.scan_wh_bound_np()
        self.scan_r1()
        self.scan_body()
        self.apply_fronted_prep()
        self.displace_desires()
        self.merge_inverted_relation()
        desires = self.finish_desires()
        subject = self.subject_binding()
        clauses = tuple(
            ClauseStructure(
                cl=s["cl"],
                relation=tuple(t.lemma for t in s["rel"]),
                inputs=tuple(s["inputs"]),
                connectives=tuple(s["ccs"]),
                temporal=s["temporal"],
                verbal=_is_verbal(s["rel"]),
                zone=s["zone"],
            )
            for s in self.structures)
        sub = SubQuery(kind=self.kind, r1=self.r1, desires=desires,
                       desire_connectives=tuple(self.desire_cc),
                       clauses=clauses, subject=subject,
                       inclusion=self.inclusion)
        _validate_subquery(sub)
        return sub


class _Pseudo:
    """Stand-in token for a relocated lemma (fronted preposition)."""

    def __init__(self, lemma: str):
        self.lemma = lemma
        self.pos = "IN"
        self.surface = lemma
        self.index = -1


def _is_verbal(rel) -> bool:
    return any(getattr(t, "pos", "IN") in _VERB_POS for t in rel)


def _validate_subquery(sub: SubQuery):
    if not sub.desires:
        raise CharacterizationFailure("subquery without a desire slot")
    for d in sub.desires:
        if d.mode == EXPLICIT and not d.head:
            raise CharacterizationFailure("explicit desire with empty head")
    contentless = sub.desires[0].mode in (IMPLICIT_DEFINITION,
                                          IMPLICIT_LOCATION, IMPLICIT_TIME)
    if contentless and sub.input_count() == 0:
        raise CharacterizationFailure("no input for an implicit desire")
    if len(sub.desire_connectives) != max(len(sub.desires) - 1, 0):
        raise CharacterizationFailure("desire connective count mismatch")
    for c in sub.clauses:
        if c.inputs and len(c.connectives) != len(c.inputs) - 1:
            raise CharacterizationFailure("input connective count mismatch")
        if not c.inputs and not c.verbal:
            raise CharacterizationFailure(
                "clause without inputs requires a verbal relation")


# --- top-level dispatch ---------------------------------------------------

def _segment(toks: list) -> tuple[list, list]:
    """Split at and/or connectives that introduce a new wh subquery."""
    segments, connectives = [], []
    current: list = []
    i = 0
    while i < len(toks):
        t = toks[i]
        if t.pos == "CC" and t.lemma in ("and", "or") and current \
                and i + 1 < len(toks) and toks[i + 1].lemma in WH_LEMMAS:
            segments.append(current)
            connectives.append(t.lemma)
            current = []
            i += 1
            continue
        current.append(t)
        i += 1
    if current:
        segments.append(current)
    return segments, connectives


def _parse_segment(toks: list, prior: SubQuery | None) -> SubQuery:
    seq = TokenSequence(tuple(toks), terminal=False)
    kind = classify_query_kind(seq)
    sub = _Scan(list(toks), kind).build()
    # literal copy rule: a pro-form desire repeats the previous desire
    if prior is not None and sub.desires and sub.desires[0].mode == EXPLICIT \
            and sub.desires[0].head == ("one",):
        sub = SubQuery(sub.kind, sub.r1, prior.desires,
                       sub.desire_connectives, sub.clauses, sub.subject,
                       inclusion=sub.inclusion)
    return sub


def characterize(seq: TokenSequence) -> Characterization:
    """Fit a query into the template, most specific form first.

    Either returns a fully populated characterization or raises
    CharacterizationFailure; partial structures never escape.
    """
    classify_query_kind(seq)  # reject unsupported kinds up front
    segments, connectives = _segment(list(seq.tokens))
    subs: list[SubQuery] = []
    for seg in segments:
        subs.append(_parse_segment(seg, subs[0] if subs else None))
    if len(subs) > 1 or len(subs[0].desires) > 1:
        form = COMPOUND
    else:
        sub = subs[0]
        clausal = any(c.cl for c in sub.clauses)
        form = COMPLEX if (sub.input_count() >= 2 or clausal
                           or len(sub.clauses) >= 2) else SIMPLE
    qct = Characterization(form, tuple(subs), tuple(connectives))
    _validate(qct)
    return qct


def characterize_simple(seq: TokenSequence) -> Characterization:
    qct = characterize(seq)
    if qct.form != SIMPLE:
        raise CharacterizationFailure(f"query is {qct.form}, not simple")
    return qct


def characterize_complex(seq: TokenSequence) -> Characterization:
    qct = characterize(seq)
    if qct.form != COMPLEX:
        raise CharacterizationFailure(f"query is {qct.form}, not complex")
    return qct


def characterize_compound(seq: TokenSequence) -> Characterization:
    qct = characterize(seq)
    if qct.form != COMPOUND:
        raise CharacterizationFailure(f"query is {qct.form}, not compound")
    return qct


def _validate(qct: Characterization):
    if len(qct.connectives) != max(len(qct.subqueries) - 1, 0):
        raise CharacterizationFailure("subquery connective count mismatch")
    if qct.form == SIMPLE and qct.subqueries[0].input_count() > 1:
        raise CharacterizationFailure("simple form with several inputs")
    if qct.form == COMPOUND:
        many = len(qct.subqueries) > 1 or any(
            len(s.desires) > 1 for s in qct.subqueries)
        if not many:
            raise CharacterizationFailure("compound form needs conjunction")
    for sub in qct.subqueries:
        if sub.kind == "where" and sub.desires[0].mode != IMPLICIT_LOCATION:
            raise CharacterizationFailure("where query without location desire")
        if sub.kind == "when" and sub.desires[0].mode != IMPLICIT_TIME:
            raise CharacterizationFailure("when query without time desire")


# --- standalone slot operations ------------------------------------------

def detect_implicit_desire(sub: SubQuery) -> DesireSlot:
    """Desire slot of a fitted subquery; Explicit comes back unchanged,
    everything else reports its implicit mode."""
    return sub.desires[0]


def extract_explicit_desire(seq: TokenSequence, r1_span: tuple,
                            r2_span: tuple) -> DesireSlot:
    """Desire = content strictly between the auxiliary and relation spans.

    Spans are (start, end) token-index pairs, end exclusive. Determiners
    between the spans become quantifiers, non-final content tokens become
    modifiers; an empty span yields an Explicit slot with an empty head
    for the caller to convert to an implicit desire.
    """
    lo, hi = r1_span[1], r2_span[0]
    between = [t for t in seq.tokens if lo <= t.index < hi]
    quants = tuple(t.lemma for t in between if t.pos == "DT")
    content = [t for t in between if t.pos in _NP_CONTENT | {"VBG", "RB"}]
    mods = tuple(t.lemma for t in content[:-1])
    head = (content[-1].lemma,) if content else ()
    return DesireSlot(EXPLICIT, head=head, modifiers=mods, quantifiers=quants)


def resolve_r2_subject(qct: Characterization) -> str:
    """Subject binding of the main relation of the first subquery."""
    return qct.subqueries[0].subject


def clause_anchor(sub: SubQuery, index: int):
    """Anchor of clause `index`: None when it constrains the desire, else
    (structure, input) indices of the constrained input.

    Nearest preceding noun phrase wins; a proper-noun input is skipped in
    favor of the desire, and when/where clauses always bind the desire.
    """
    clause = sub.clauses[index]
    if clause.cl in ("when", "where"):
        return None
    for j in range(index - 1, -1, -1):
        prev = sub.clauses[j]
        if prev.inputs:
            last = len(prev.inputs) - 1
            if prev.inputs[last].proper:
                return None  # named individuals do not take these clauses
            return (j, last)
    return None


def detect_clause_dependency(qct: Characterization) -> str | None:
    """Dependency of the first clausal structure: desire, input, or None
    when the query has no clause lexicon at all."""
    sub = qct.subqueries[0]
    clausal_at = next((k for k, c in enumerate(sub.clauses) if c.cl), None)
    if clausal_at is None:
        return None
    anchor = clause_anchor(sub, clausal_at)
    return SUBJECT_DESIRE if anchor is None else SUBJECT_INPUT
