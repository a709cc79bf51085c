"""Characterization-coverage evaluation over JSON-lines corpora.

A query counts as identified when characterization succeeds and as
correctly identified when its JSON rendering equals the gold structure
field for field (or, for desire-only gold, when the first desire head
matches after lemma normalization). Precision is correct/identified,
recall is correct/total, and the report groups rows by gold form and by
gold kind plus a Total row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .characterize import CharacterizationError, characterize
from .template import KINDS
from .tokens import EmptyInput, MalformedLine, parse_tagged_input, tag_tokens

FORMS = ("simple", "complex", "compound")


class SchemaError(ValueError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    query: str
    form: str
    kind: str
    gold: dict | None = None
    gold_desire: tuple = ()
    tagged: bool = False

    def token_sequence(self):
        if self.tagged:
            return parse_tagged_input(self.query)
        return tag_tokens(self.query)


def _entry_from_json(doc: dict, line_no: int) -> CorpusEntry:
    for key in ("id", "query", "form", "kind"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}", line_no)
    if doc["form"] not in FORMS:
        raise SchemaError(f"unknown form {doc['form']!r}", line_no)
    if doc["kind"] not in KINDS:
        raise SchemaError(f"unknown kind {doc['kind']!r}", line_no)
    gold = doc.get("gold")
    gold_desire = tuple(doc.get("goldDesire", ()))
    if gold is None and not gold_desire:
        raise SchemaError("entry needs gold or goldDesire", line_no)
    return CorpusEntry(doc["id"], doc["query"], doc["form"], doc["kind"],
                       gold, gold_desire, bool(doc.get("tagged", False)))


def load_corpus(path) -> list:
    entries: list[CorpusEntry] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc.msg}", line_no) from exc
        entry = _entry_from_json(doc, line_no)
        if entry.id in seen:
            raise SchemaError(f"duplicate id {entry.id!r}", line_no)
        seen.add(entry.id)
        entries.append(entry)
    return entries


def bundled_corpus(name: str = "golden_corpus.jsonl") -> list:
    text = resources.files("wh2dl.data").joinpath(name) \
        .read_text(encoding="utf-8")
    entries = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append(_entry_from_json(json.loads(line), line_no))
    return entries


# --- metrics ----------------------------------------------------------------

def _trunc2(value: float) -> float:
    """Two-decimal truncation, the rounding the published tables use
    (140/147 = 95.238 prints as 95.23)."""
    return int(value * 100) / 100.0


@dataclass(frozen=True)
class ReportRow:
    category: str
    n: int
    n_identified: int
    n_correct: int

    @property
    def precision(self) -> float | None:
        if self.n_identified == 0:
            return None
        return 100.0 * self.n_correct / self.n_identified

    @property
    def recall(self) -> float:
        if self.n == 0:
            return 0.0
        return 100.0 * self.n_correct / self.n

    @property
    def f1(self) -> float | None:
        """Harmonic mean of the truncated precision and recall; the
        published F1 column is derived from the displayed two-decimal
        figures, not the exact ratios."""
        if self.precision is None:
            return None
        p, r = _trunc2(self.precision), _trunc2(self.recall)
        if p + r == 0:
            return None
        return 2.0 * p * r / (p + r)


@dataclass(frozen=True)
class CCReport:
    rows: tuple

    def row(self, category: str) -> ReportRow | None:
        return next((r for r in self.rows if r.category == category), None)

    def to_json(self) -> dict:
        return {"rows": [
            {"category": r.category, "n": r.n, "n_identified": r.n_identified,
             "n_correct": r.n_correct,
             "recall": None if r.n == 0 else _trunc2(r.recall),
             "precision": None if r.precision is None else _trunc2(r.precision),
             "f1": None if r.f1 is None else _trunc2(r.f1)}
            for r in self.rows]}


def metrics_row(category: str, n: int, n_identified: int,
                n_correct: int) -> ReportRow:
    """Build a row from raw counts (for checking published figures)."""
    return ReportRow(category, n, n_identified, n_correct)


def _matches_gold(entry: CorpusEntry, qct) -> bool:
    if entry.gold is not None:
        return qct.to_json() == entry.gold
    desires = qct.subqueries[0].desires
    head = tuple(desires[0].head) if desires else ()
    return head == entry.gold_desire


def evaluate(corpus: list) -> CCReport:
    """Run the characterizer over a corpus and tally coverage."""
    if not corpus:
        raise ValueError("empty corpus")
    counts: dict[str, list] = {}

    def bump(category: str, identified: bool, correct: bool):
        n, n_i, n_ci = counts.get(category, (0, 0, 0))
        counts[category] = [n + 1, n_i + identified, n_ci + correct]

    for entry in sorted(corpus, key=lambda e: e.id):
        identified = correct = False
        try:
            qct = characterize(entry.token_sequence())
            identified = True
            correct = _matches_gold(entry, qct)
        except (CharacterizationError, EmptyInput, MalformedLine):
            pass
        for category in (entry.form, entry.kind, "Total"):
            bump(category, identified, correct)

    rows = []
    for category in FORMS + KINDS + ("Total",):
        if category in counts:
            rows.append(ReportRow(category, *counts[category]))
    return CCReport(tuple(rows))


# --- rendering ----------------------------------------------------------------

_COLUMNS = ("N", "N_I", "N_CI", "CC-Re.", "CC-Pr.", "CC-F1")


def _fmt(value: float | None) -> str:
    return "—" if value is None else f"{_trunc2(value):.2f}"


def render_report(report: CCReport, fmt: str = "table") -> str:
    """Render a report; the table mirrors the published column order."""
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2, ensure_ascii=False)
    if fmt == "csv":
        lines = ["category,n,n_identified,n_correct,recall,precision,f1"]
        for r in report.rows:
            lines.append(",".join([
                r.category, str(r.n), str(r.n_identified), str(r.n_correct),
                _fmt(r.recall), _fmt(r.precision), _fmt(r.f1)]))
        return "\n".join(lines) + "\n"
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")
    width = max([len("Category")] + [len(r.category) for r in report.rows])
    header = "Category".ljust(width) + "".join(c.rjust(9) for c in _COLUMNS)
    lines = [header, "-" * len(header)]
    for r in report.rows:
        cells = [str(r.n), str(r.n_identified), str(r.n_correct),
                 _fmt(r.recall), _fmt(r.precision), _fmt(r.f1)]
        lines.append(r.category.ljust(width) + "".join(c.rjust(9) for c in cells))
    return "\n".join(lines) + "\n"
