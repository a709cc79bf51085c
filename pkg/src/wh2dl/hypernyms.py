"""Most-specific-parent lookup for named entities.

A small bundled lexicon stands in for a full thesaurus; any provider with
a get_msp(lemma) method can replace it. Lookups are exact and
case-sensitive on proper-noun lemmas; a miss returns None, which makes
the translator fall back to a nominal.
"""

from __future__ import annotations

from importlib import resources


class DuplicateLemma(ValueError):
    pass


class Lexicon:
    def __init__(self, entries: dict, source: str = "external"):
        self.entries = dict(entries)
        self.source = source

    def get_msp(self, lemma: str) -> str | None:
        if not lemma:
            raise ValueError("empty lemma")
        return self.entries.get(lemma)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.entries


def _parse(text: str, source: str) -> Lexicon:
    entries: dict = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" not in line:
            raise ValueError(f"line {line_no}: expected lemma<TAB>parent")
        lemma, msp = (part.strip() for part in line.split("\t", 1))
        if lemma in entries:
            raise DuplicateLemma(f"line {line_no}: duplicate lemma {lemma!r}")
        entries[lemma] = msp
    return Lexicon(entries, source)


def load_lexicon(path) -> Lexicon:
    with open(path, encoding="utf-8") as handle:
        return _parse(handle.read(), source="external")


_BUNDLED: Lexicon | None = None


def bundled_lexicon() -> Lexicon:
    global _BUNDLED
    if _BUNDLED is None:
        text = resources.files("wh2dl.data").joinpath("hypernyms.tsv") \
            .read_text(encoding="utf-8")
        _BUNDLED = _parse(text, source="bundled")
    return _BUNDLED
