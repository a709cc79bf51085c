"""Translation of characterized queries into concept expressions and axioms.

Per-subquery rule order: compound splitting first, then the non-trivial
rules (empty-input reification, desire inclusion, quantitative how,
temporal adverbial, superlative), then clause-structure extension rules,
then the base rules. Proper-noun inputs resolve through the hypernym
lexicon in paper-literal mode and become nominals in nominal-strict mode
or when the lexicon misses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from importlib import resources

from . import dl
from .characterize import BE_FORMS, DEFINITE_DETERMINERS, clause_anchor
from .hypernyms import Lexicon, bundled_lexicon
from .template import (
    COMPOUND, EXPLICIT, IMPLICIT_ACTIVITY, IMPLICIT_COUNT, SUBJECT_INPUT,
    Characterization, DesireSlot, InputSlot, SubQuery,
)
from .tokens import _strip_plural

PAPER_LITERAL = "paper-literal"
NOMINAL_STRICT = "nominal-strict"

TBOX_STRONG = "tbox-strong"
TBOX_WEAK = "tbox-weak"
ABOX = "abox-retrieval"

RETRIEVAL_VARIABLE = "?x"

STRONG_DESIRE = "Desire_Strong"
WEAK_DESIRE = "Desire_Weak"
DESIRE = "Desire"

BASE_11 = "base-1.1"
BASE_12 = "base-1.2"
BASE_21 = "base-2.1"
BASE_22 = "base-2.2"
BASE_31 = "base-3.1"
BASE_32 = "base-3.2"
MODIFIER_CHAIN = "modifier-chain"
EXT_1 = "ext-1"
EXT_2 = "ext-2"
EXT_31 = "ext-3.1"
EXT_32 = "ext-3.2"
COMPOUND_SPLIT = "compound-split"
REIFY = "reify-empty-input"
DESIRE_INCLUSION = "desire-inclusion"
QUANTITATIVE_HOW = "quantitative-how"
TEMPORAL_ADVERBIAL = "temporal-adverbial"
SUPERLATIVE = "superlative"
AMBIGUOUS = "ambiguous"
QUANTIFIED_ABOX = "quantified-input-abox"
NOMINAL_FALLBACK = "nominal-fallback"
NOT_SPLIT = "not-split"
PLAIN_MODIFIER_FALLBACK = "plain-modifier-fallback"
INPUT_CONJUNCTION = "input-conjunction"


class TranslationFailure(ValueError):
    pass


class UnsupportedAdverbial(TranslationFailure):
    pass


class UnknownMeasurableModifier(TranslationFailure):
    pass


@dataclass(frozen=True)
class MeasurableModifier:
    lemma: str
    attribute: str
    polarity: str  # "positive" | "negative"


def _parse_measurables(text: str) -> dict:
    table = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lemma, attribute, polarity = line.split("\t")
        table[lemma] = MeasurableModifier(lemma, attribute, polarity)
    return table


def load_measurable_lexicon(path) -> dict:
    with open(path, encoding="utf-8") as handle:
        return _parse_measurables(handle.read())


_MEASURABLES: dict | None = None


def bundled_measurables() -> dict:
    global _MEASURABLES
    if _MEASURABLES is None:
        text = resources.files("wh2dl.data") \
            .joinpath("measurable_modifiers.tsv").read_text(encoding="utf-8")
        _MEASURABLES = _parse_measurables(text)
    return _MEASURABLES


@dataclass(frozen=True)
class TranslationResult:
    mode: str
    desire: dl.Concept
    form_axioms: tuple = ()
    support_axioms: tuple = ()
    rules: tuple = ()
    optimize: str | None = None
    sub: tuple = ()
    combinator: str | None = None

    @property
    def axioms(self) -> tuple:
        return self.form_axioms + self.support_axioms

    def desire_text(self) -> str:
        text = dl.serialize(self.desire)
        if self.optimize:
            text = f"{self.optimize}({text})"
        return text

    def to_json(self) -> dict:
        doc = {
            "mode": self.mode,
            "desire": self.desire_text(),
            "axioms": [dl.serialize(a) for a in self.axioms],
            "rules": list(self.rules),
            "sub": [r.to_json() for r in self.sub],
            "combinator": self.combinator,
        }
        if self.mode == ABOX:
            doc["variable"] = RETRIEVAL_VARIABLE
        if self.optimize:
            doc["optimize"] = self.optimize
        return doc


# --- naming ----------------------------------------------------------------

def _cap(lemma: str) -> str:
    clean = re.sub(r"[^0-9A-Za-z_]", "_", lemma)
    return "_".join(p[:1].upper() + p[1:] if p else p
                    for p in clean.split("_"))


def concept_name(modifiers: tuple, head: tuple) -> str:
    parts = [_cap(m) for m in modifiers] + [_cap(h) for h in head]
    parts = [p for p in parts if p]
    name = "_".join(parts)
    if name and name[0].isdigit():
        # identifiers cannot open with a digit: rotate the head to front
        head_part = "_".join(_cap(h) for h in head)
        name = "_".join([head_part] + [_cap(m) for m in modifiers])
    return name


def role_name(relation: tuple) -> str:
    """Join relation tokens; leading be-auxiliaries drop when a main verb
    follows (was dropped in -> dropped_in) while do-forms stay (does_have)."""
    parts = list(relation)
    while len(parts) > 1 and parts[0] in BE_FORMS:
        parts.pop(0)
    return "_".join(parts)


def gerund(verb: str) -> str:
    """Verb to its activity form: bark->barking, make->making, run->running."""
    v = verb.lower()
    if v.endswith("ing"):
        return v
    if v.endswith("s") and not v.endswith("ss"):
        v = _strip_plural(v)
    if v.endswith("ie"):
        return v[:-2] + "ying"
    if v.endswith("e") and not v.endswith("ee") and len(v) > 2:
        return v[:-1] + "ing"
    if (3 <= len(v) <= 4 and v[-1] not in "aeiouwxy"
            and v[-2] in "aeiou" and v[-3] not in "aeiou"):
        return v + v[-1] + "ing"
    return v + "ing"


# --- modifier chains ---------------------------------------------------------

def apply_modifier_rule(modifiers: tuple, head: str) -> list:
    """Nested-modifier subsumption chain, one axiom per modifier:
    (tall,), Student -> [Tall_Student SubClassOf Student]; each further
    modifier level subsumes the previous one."""
    axioms = []
    previous = concept_name((), (head,))
    for i in range(1, len(modifiers) + 1):
        level = concept_name(tuple(modifiers[:i]), (head,))
        axioms.append(dl.Subsumption(dl.Atomic(level), dl.Atomic(previous)))
        previous = level
    return axioms


# --- shared context ----------------------------------------------------------

@dataclass
class _Ctx:
    lexicon: Lexicon
    measurables: dict
    nominal_mode: str
    rules: list = field(default_factory=list)
    supports: list = field(default_factory=list)
    ext3_id: str = EXT_31  # desire-dependency id; ext-3.2 when the auxiliary is absent

    def rule(self, rule_id: str):
        if rule_id not in self.rules:
            self.rules.append(rule_id)

    def support(self, axiom):
        if axiom not in self.supports:
            self.supports.append(axiom)


def _chained_concept(ctx: _Ctx, modifiers: tuple, head: tuple) -> dl.Concept | None:
    name = concept_name(modifiers, head)
    if not name:
        return None
    if modifiers and head:
        for modifier in modifiers:
            parsed = _superlative_base(modifier)
            if parsed is not None and not any(
                    c in ctx.measurables
                    for c in _superlative_candidates(parsed[0])):
                ctx.rule(PLAIN_MODIFIER_FALLBACK)
        for axiom in apply_modifier_rule(modifiers, "_".join(head)):
            ctx.support(axiom)
        ctx.rule(MODIFIER_CHAIN)
    return dl.Atomic(name)


def _input_concept(ctx: _Ctx, slot: InputSlot) -> dl.Concept:
    if slot.proper:
        individual = concept_name(slot.modifiers, slot.head)
        if ctx.nominal_mode == PAPER_LITERAL:
            msp = ctx.lexicon.get_msp("_".join(slot.head))
            if msp is not None:
                return dl.Atomic(msp)
            ctx.rule(NOMINAL_FALLBACK)
        return dl.Nominal(individual)
    return _chained_concept(ctx, slot.modifiers, slot.head) or dl.Thing()


def _combine(parts: list, connectives: tuple) -> dl.Concept:
    if len(parts) == 1:
        return parts[0]
    if all(c == "and" for c in connectives):
        return dl.Intersection(tuple(parts))
    if all(c == "or" for c in connectives):
        return dl.Union(tuple(parts))
    acc = parts[0]
    for conn, part in zip(connectives, parts[1:]):
        node = dl.Intersection if conn == "and" else dl.Union
        acc = node((acc, part))
    return acc


def _conjoin(parts: list) -> dl.Concept:
    parts = [p for p in parts if p is not None]
    if not parts:
        return dl.Thing()
    if len(parts) == 1:
        return parts[0]
    flat: list = []
    for p in parts:
        if isinstance(p, dl.Intersection):
            flat.extend(p.parts)
        else:
            flat.append(p)
    return dl.Intersection(tuple(flat))


def _is_copula(relation: tuple) -> bool:
    return bool(relation) and all(tok in BE_FORMS for tok in relation)


# --- clause-structure assembly ------------------------------------------------

def _main_structure_index(sub: SubQuery) -> int | None:
    for i, c in enumerate(sub.clauses):
        if c.cl is None and c.relation:
            return i
    return None


def _structure_existential(ctx: _Ctx, sub: SubQuery, index: int,
                           filler: dl.Concept) -> dl.Concept:
    clause = sub.clauses[index]
    name = role_name(clause.relation)
    role: dl.Role = dl.AtomicRole(name)
    if clause.temporal:
        if clause.temporal == "never":
            raise UnsupportedAdverbial(
                "'never' needs concept negation, which is outside the fragment")
        mode = "always" if clause.temporal == "always" else "sometimes"
        role = dl.TemporalRole(mode, name)
        ctx.rule(TEMPORAL_ADVERBIAL)
        plain = dl.Exists(dl.AtomicRole(name), filler)
        sometimes = dl.Exists(dl.TemporalRole("sometimes", name), filler)
        always = dl.Exists(dl.TemporalRole("always", name), filler)
        ctx.support(dl.Disjointness(sometimes, always))
        ctx.support(dl.Subsumption(sometimes, plain))
        ctx.support(dl.Subsumption(always, plain))
    if index == _main_structure_index(sub) and sub.subject == SUBJECT_INPUT:
        role = dl.Inverse(role)
    return dl.Exists(role, filler)


def _assemble_structures(ctx: _Ctx, sub: SubQuery,
                         inclusion_flat: bool = False) -> list:
    """Turn clause structures into desire-level conjuncts.

    Structures anchored to an earlier input nest inside that input's
    concept (processed right to left, so anchors see final fillers); the
    rest attach flat to the desire. Under the inclusion reading, bare and
    copula structures contribute their input concept directly.
    """
    concepts: dict[int, dl.Concept | None] = {}
    for i, clause in enumerate(sub.clauses):
        concepts[i] = _combine(
            [_input_concept(ctx, s) for s in clause.inputs],
            clause.connectives) if clause.inputs else None
        if len(clause.inputs) > 1:
            ctx.rule(INPUT_CONJUNCTION)

    main = _main_structure_index(sub)
    placed: list[tuple[int, dl.Concept]] = []
    for i in range(len(sub.clauses) - 1, -1, -1):
        clause = sub.clauses[i]
        filler = concepts[i]
        if filler is None:
            if clause.verbal and clause.relation:
                # empty input: reify the verb into its activity sense
                verb = next((tok for tok in clause.relation
                             if tok not in BE_FORMS), clause.relation[-1])
                ctx.rule(REIFY)
                placed.append((i, dl.Exists(dl.AtomicRole("does"),
                                            dl.Atomic(_cap(gerund(verb))))))
            continue
        if not clause.relation or (inclusion_flat and _is_copula(clause.relation)):
            conjunct = filler
        else:
            conjunct = _structure_existential(ctx, sub, i, filler)
        if i == main or not clause.relation or inclusion_flat:
            anchor = None
        else:
            anchor = clause_anchor(sub, i)
        if anchor is None:
            if clause.cl and clause.relation and not inclusion_flat:
                ctx.rule(ctx.ext3_id)
            placed.append((i, conjunct))
            continue
        j, _k = anchor
        target = concepts[j]
        if target is None:
            placed.append((i, conjunct))
            continue
        if isinstance(target, dl.Intersection):
            concepts[j] = dl.Intersection(target.parts + (conjunct,))
        else:
            concepts[j] = dl.Intersection((target, conjunct))
        ctx.rule(EXT_2)
    placed.sort(key=lambda pair: pair[0])
    return [c for _, c in placed]


# --- superlatives --------------------------------------------------------------

def _superlative_base(modifier: str) -> tuple[str, str | None] | None:
    """(base lemma, polarity override) when the modifier looks superlative."""
    if modifier.startswith("most_"):
        return modifier[5:], "max"
    if modifier.startswith("least_"):
        return modifier[6:], "min"
    if modifier.endswith("est") and len(modifier) > 4:
        return modifier[:-3], None
    return None


def _superlative_candidates(stem: str) -> list:
    forms = [stem]
    if len(stem) >= 2 and stem[-1] == stem[-2]:
        forms.append(stem[:-1])  # bigg -> big
    forms.append(stem + "e")     # larg -> large
    return forms


def _find_superlative(ctx: _Ctx, desire: DesireSlot):
    """(modifier index, MeasurableModifier, polarity) of the first
    superlative desire modifier found in the measurable lexicon; a
    superlative-looking modifier that is absent falls back to plain
    modifier treatment."""
    for idx, modifier in enumerate(desire.modifiers):
        parsed = _superlative_base(modifier)
        if parsed is None:
            continue
        stem, override = parsed
        found = next((ctx.measurables[c] for c in _superlative_candidates(stem)
                      if c in ctx.measurables), None)
        if found is None:
            ctx.rule(PLAIN_MODIFIER_FALLBACK)
            continue
        polarity = override or ("max" if found.polarity == "positive" else "min")
        return idx, found, polarity
    return None


# --- per-subquery translation ----------------------------------------------

def _abox(ctx: _Ctx, concept: dl.Concept, optimize=None, form_axioms=()):
    return TranslationResult(ABOX, concept, tuple(form_axioms),
                             tuple(ctx.supports), tuple(ctx.rules), optimize)


def _tbox(ctx: _Ctx, concept: dl.Concept, weak: bool = True):
    axioms = [dl.Subsumption(dl.Atomic(STRONG_DESIRE), concept)]
    if weak:
        axioms.append(dl.Subsumption(concept, dl.Atomic(WEAK_DESIRE)))
    return TranslationResult(TBOX_STRONG, concept, tuple(axioms),
                             tuple(ctx.supports), tuple(ctx.rules))


def _quantitative(ctx: _Ctx, sub: SubQuery) -> TranslationResult:
    ctx.rule(QUANTITATIVE_HOW)
    slot = sub.desires[0]
    core = None
    if slot.head:
        measure = ctx.measurables.get(slot.head[0])
        if measure is not None and len(slot.head) == 1 and not slot.modifiers:
            core = dl.Atomic(measure.attribute)
        else:
            core = _chained_concept(ctx, slot.modifiers, slot.head)
    conjuncts = _assemble_structures(ctx, sub)
    inner = _conjoin(([core] if core is not None else []) + conjuncts)
    if isinstance(core, dl.Atomic):
        ctx.support(dl.Subsumption(
            core, dl.Exists(dl.AtomicRole("hasCount"), dl.CountConcept())))
    concept = dl.Intersection((
        dl.CountConcept(),
        dl.Exists(dl.Inverse(dl.AtomicRole("hasCount")), inner)))
    return _abox(ctx, concept)


def _translate_subquery(ctx: _Ctx, sub: SubQuery) -> TranslationResult:
    desire0 = sub.desires[0]

    if desire0.mode == IMPLICIT_COUNT:
        return _quantitative(ctx, sub)

    if desire0.mode == IMPLICIT_ACTIVITY:
        ctx.rule(REIFY)
        ctx.ext3_id = EXT_31
        core = dl.Exists(dl.AtomicRole("does"),
                         dl.Atomic(_cap(gerund(desire0.head[0]))))
        conjuncts = _assemble_structures(ctx, sub)
        return _abox(ctx, _conjoin([core] + conjuncts))

    superlative = None
    desire_concept = None
    if desire0.mode == EXPLICIT or (len(sub.desires) > 1):
        if len(sub.desires) > 1:
            ctx.rule(NOT_SPLIT)
            parts = [_chained_concept(ctx, d.modifiers, d.head)
                     for d in sub.desires]
            desire_concept = _combine([p for p in parts if p is not None],
                                      sub.desire_connectives)
        else:
            superlative = _find_superlative(ctx, desire0)
            modifiers = desire0.modifiers
            if superlative is not None:
                idx = superlative[0]
                modifiers = modifiers[:idx] + modifiers[idx + 1:]
            desire_concept = _chained_concept(ctx, modifiers, desire0.head)

    ctx.ext3_id = EXT_32 if (sub.r1 is None and desire_concept is not None) \
        else EXT_31

    has_relation = any(c.relation for c in sub.clauses)
    inclusion_reading = sub.inclusion and desire_concept is None \
        and sub.input_count() >= 2

    conjuncts = _assemble_structures(ctx, sub, inclusion_flat=inclusion_reading
                                     or (desire_concept is not None
                                         and not has_relation))

    # inclusion T-Box readings
    if inclusion_reading:
        ctx.rule(EXT_1)
        return _tbox(ctx, _conjoin(conjuncts), weak=False)
    if desire_concept is not None and not has_relation and conjuncts:
        ctx.rule(DESIRE_INCLUSION)
        return _tbox(ctx, _conjoin([desire_concept] + conjuncts), weak=False)

    concept = _conjoin(([desire_concept] if desire_concept is not None else [])
                       + conjuncts)

    # base-rule bookkeeping and T-Box/A-Box mode selection
    if not has_relation:
        slot = _single_input(sub)
        if slot is not None:
            if slot.proper:
                ctx.rule(BASE_12)
                return _tbox(ctx, concept)
            if set(slot.quantifiers) & DEFINITE_DETERMINERS:
                ctx.rule(QUANTIFIED_ABOX)
                return _abox(ctx, concept)
            if sub.kind == "who":
                ctx.rule(AMBIGUOUS)
                return _abox(ctx, concept)
            ctx.rule(BASE_11)
            return _tbox(ctx, concept)
        return _superlative_wrap(ctx, superlative, concept)
    else:
        structured = [c for c in sub.clauses if c.relation or c.inputs]
        clausal = any(c.cl for c in sub.clauses)
        if len(structured) == 1 and not clausal and structured[0].inputs:
            slot = structured[0].inputs[0]
            inverse = sub.subject == SUBJECT_INPUT
            if slot.proper:
                ctx.rule(BASE_32 if inverse else BASE_31)
            else:
                ctx.rule(BASE_22 if inverse else BASE_21)
        elif len(structured) >= 2 and EXT_2 not in ctx.rules \
                and not any(r in ctx.rules for r in (EXT_31, EXT_32)):
            ctx.rule(ctx.ext3_id)
        return _superlative_wrap(ctx, superlative, concept)


def _single_input(sub: SubQuery) -> InputSlot | None:
    slots = [s for c in sub.clauses for s in c.inputs]
    return slots[0] if len(slots) == 1 else None


def _superlative_wrap(ctx: _Ctx, superlative,
                      concept: dl.Concept) -> TranslationResult:
    if superlative is None:
        return _abox(ctx, concept)
    _idx, measure, polarity = superlative
    ctx.rule(SUPERLATIVE)
    attribute = dl.Atomic(measure.attribute)
    has_attr = dl.AtomicRole("has" + measure.attribute)
    inner = dl.Intersection((
        dl.IntegerType(),
        dl.Exists(dl.Inverse(dl.AtomicRole("hasValue")),
                  dl.Intersection((
                      attribute,
                      dl.Exists(dl.Inverse(has_attr), concept))))))
    definition = dl.Definition(DESIRE, inner, optimize=polarity)
    return _abox(ctx, inner, optimize=polarity, form_axioms=(definition,))


# --- compound splitting -------------------------------------------------------

def split_compound(qct: Characterization) -> tuple[list, str | None]:
    """Separate a compound into translatable subqueries.

    Desire conjunctions with shared clause structures copy the structures
    into one subquery per desire; per-desire structures split likewise; a
    desire left with no structure while a sibling kept one marks the
    compound non-splittable (cross-referencing desires).
    """
    if qct.form != COMPOUND:
        return [qct.subqueries[0]], None
    parts: list[SubQuery] = []
    for sub in qct.subqueries:
        if len(sub.desires) == 1:
            parts.append(sub)
            continue
        last = len(sub.desires) - 1
        zones = [c.zone for c in sub.clauses]
        shared = all(z in (-1, last) for z in zones)
        if shared:
            for d in sub.desires:
                parts.append(replace(sub, desires=(d,), desire_connectives=()))
            continue
        per = {k: tuple(c for c in sub.clauses if c.zone in (k, -1))
               for k in range(len(sub.desires))}
        if sub.clauses and any(not per[k] for k in per):
            return [sub], "intersection"  # cross-referential: do not split
        for k, d in enumerate(sub.desires):
            parts.append(replace(sub, desires=(d,), desire_connectives=(),
                                 clauses=per[k]))
    return parts, "union"


# --- public entry points --------------------------------------------------------

def _context(lexicon, measurables, nominal_mode) -> _Ctx:
    return _Ctx(lexicon if lexicon is not None else bundled_lexicon(),
                measurables if measurables is not None else bundled_measurables(),
                nominal_mode)


def translate(qct: Characterization, lexicon: Lexicon | None = None,
              measurables: dict | None = None,
              nominal_mode: str = PAPER_LITERAL) -> TranslationResult:
    """Translate a characterization; deterministic for fixed inputs."""
    if qct.form == COMPOUND:
        parts, combinator = split_compound(qct)
        if combinator == "union" and len(parts) > 1:
            results = tuple(
                _translate_subquery(_context(lexicon, measurables, nominal_mode), p)
                for p in parts)
            desire = dl.Union(tuple(r.desire for r in results))
            mode = results[0].mode if len({r.mode for r in results}) == 1 else ABOX
            return TranslationResult(mode, desire, rules=(COMPOUND_SPLIT,),
                                     sub=results, combinator="union")
        ctx = _context(lexicon, measurables, nominal_mode)
        result = _translate_subquery(ctx, parts[0])
        return replace(result, combinator="intersection")
    ctx = _context(lexicon, measurables, nominal_mode)
    return _translate_subquery(ctx, qct.subqueries[0])


def apply_base_rules(sub: SubQuery, lexicon: Lexicon | None = None,
                     measurables: dict | None = None,
                     nominal_mode: str = PAPER_LITERAL) -> TranslationResult:
    """Base rules 1.1-3.2 for a simple-form subquery."""
    if sub.input_count() > 1 or any(c.cl for c in sub.clauses):
        raise TranslationFailure("base rules need a simple-form subquery")
    return _translate_subquery(_context(lexicon, measurables, nominal_mode), sub)


def translate_complex(sub: SubQuery, lexicon: Lexicon | None = None,
                      measurables: dict | None = None,
                      nominal_mode: str = PAPER_LITERAL) -> TranslationResult:
    """Extension rules for a complex-form subquery."""
    if sub.input_count() < 2 and not any(c.cl for c in sub.clauses):
        raise TranslationFailure("extension rules need a complex subquery")
    return _translate_subquery(_context(lexicon, measurables, nominal_mode), sub)


def reify_empty_input(sub: SubQuery) -> SubQuery:
    """Rewrite an empty-input verbal subquery to its activity form.

    The relation verb moves into the desire slot as a gerund under the
    'does' auxiliary; subqueries with input stay unchanged.
    """
    if sub.desires and sub.desires[0].mode == IMPLICIT_ACTIVITY:
        head = (gerund(sub.desires[0].head[0]),)
        return replace(sub, r1="does",
                       desires=(DesireSlot(IMPLICIT_ACTIVITY, head=head),))
    first = sub.clauses[0] if sub.clauses else None
    if first is not None and first.cl is None and first.verbal \
            and not first.inputs and sub.desires \
            and sub.desires[0].mode != EXPLICIT:
        verb = next((tok for tok in first.relation if tok not in BE_FORMS),
                    first.relation[-1])
        return replace(
            sub, r1="does",
            desires=(DesireSlot(IMPLICIT_ACTIVITY, head=(gerund(verb),)),),
            clauses=sub.clauses[1:])
    return sub


def apply_desire_inclusion(sub: SubQuery, lexicon: Lexicon | None = None,
                           measurables: dict | None = None,
                           nominal_mode: str = PAPER_LITERAL) -> TranslationResult:
    """Inclusion rule; single-noun-phrase queries fall through to base 1.x."""
    return _translate_subquery(_context(lexicon, measurables, nominal_mode), sub)


def apply_quantitative_how(sub: SubQuery, lexicon: Lexicon | None = None,
                           measurables: dict | None = None,
                           nominal_mode: str = PAPER_LITERAL) -> TranslationResult:
    """Count rule for quantitative how; other kinds fall through."""
    return _translate_subquery(_context(lexicon, measurables, nominal_mode), sub)


def apply_temporal_adverbial(sub: SubQuery, lexicon: Lexicon | None = None,
                             measurables: dict | None = None,
                             nominal_mode: str = PAPER_LITERAL) -> TranslationResult:
    """Temporally qualified role rule; raises on 'never' (needs negation)."""
    return _translate_subquery(_context(lexicon, measurables, nominal_mode), sub)


def apply_superlative(sub: SubQuery, measurables: dict | None = None,
                      lexicon: Lexicon | None = None,
                      nominal_mode: str = PAPER_LITERAL) -> TranslationResult:
    """Optimality rule for superlative desire modifiers; unknown measurable
    modifiers degrade to plain modifier treatment."""
    return _translate_subquery(_context(lexicon, measurables, nominal_mode), sub)
