"""Tokenization, fallback POS tagging and lemma normalization.

Pre-tagged input (TSV or JSON) is the canonical path. The fallback tagger
covers plain text with a closed-class lexicon (data/tagger_lexicon.tsv)
plus suffix heuristics; it is deterministic and intentionally small.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from importlib import resources

# Closed tag set. PP in the source convention equals Penn IN and is
# accepted as an input alias.
TAGSET = frozenset({
    "NN", "NNS", "NNP", "NNPS", "JJ", "JJS", "RB",
    "VB", "VBZ", "VBD", "VBG", "VBN",
    "IN", "DT", "WDT", "WP", "WRB", "CC", "MD", "OTHER",
})

_TAG_ALIASES = {"PP": "IN", "PRP": "OTHER", "PRP$": "OTHER", "WP$": "WP",
                "CD": "JJ", "TO": "IN", "RP": "IN", "VBP": "VBZ",
                "RBS": "RB", "RBR": "RB", "JJR": "JJ", "EX": "RB",
                "POS": "OTHER", "X": "OTHER"}

_PUNCT_TAGS = {".", ",", "PUNCT"}

_WORD_RE = re.compile(r"[A-Za-z0-9](?:[A-Za-z0-9_.\-/]*[A-Za-z0-9_/])?|'s|\?|[,;!.]")


class EmptyInput(ValueError):
    pass


class MalformedLine(ValueError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str
    index: int


@dataclass(frozen=True)
class TokenSequence:
    tokens: tuple
    terminal: bool  # trailing '?' present

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self):
        return len(self.tokens)


# --- lemmatization -------------------------------------------------------

def _strip_plural(word: str) -> str:
    if len(word) > 3 and word.endswith("ies"):
        return word[:-3] + "y"
    if len(word) > 3 and word.endswith(("sses", "shes", "ches", "xes", "oes", "zes")):
        return word[:-2]
    if len(word) > 2 and word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


def lemma_of(surface: str, pos: str) -> str:
    if pos in ("NNP", "NNPS"):
        lemma = surface.replace(" ", "_")
        return _strip_plural(lemma) if pos == "NNPS" else lemma
    lemma = surface.lower()
    if pos in ("NN", "NNS"):
        lemma = _strip_plural(lemma)
    return lemma


def normalize(token: Token) -> Token:
    """Recompute the lemma from surface and tag; idempotent."""
    return replace(token, lemma=lemma_of(token.surface, token.pos))


# --- tagger lexicon ------------------------------------------------------

def _load_tagger_lexicon() -> dict:
    table = {}
    path = resources.files("wh2dl.data").joinpath("tagger_lexicon.tsv")
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        word, tag = line.split("\t")
        table[word] = tag
    return table


_LEXICON: dict | None = None


def tagger_lexicon() -> dict:
    global _LEXICON
    if _LEXICON is None:
        _LEXICON = _load_tagger_lexicon()
    return _LEXICON


def _verb_stems() -> frozenset:
    return frozenset(w for w, t in tagger_lexicon().items() if t == "VB")


# --- fallback tagger -----------------------------------------------------

_JJ_SUFFIXES = ("ous", "ic", "ive", "able", "ible", "ful", "less", "ish")

_AUX_SURFACES = frozenset({
    "is", "are", "was", "were", "am", "be", "do", "does", "did", "has",
    "have", "had", "will", "would", "can", "could", "shall", "should",
    "may", "might", "must",
})


def _suffix_tag(word: str, prev_tag: str | None, next_word: str | None) -> str:
    lower = word.lower()
    if lower.endswith("ing") and len(lower) > 4:
        return "VBG"
    if lower.endswith("ed") and len(lower) > 3:
        return "VBN"
    if lower.endswith("est") and len(lower) > 4:
        return "JJS"
    if lower.endswith("ly") and len(lower) > 3:
        return "RB"
    if lower.endswith(_JJ_SUFFIXES) and len(lower) > 4:
        return "JJ"
    if any(c.isdigit() for c in lower):
        return "JJ"
    if lower.endswith("s") and not lower.endswith("ss") and len(lower) > 2:
        stem = _strip_plural(lower)
        if stem in _verb_stems():
            return "VBZ"
        # after a wh-pronoun an -s word is a verb ("Who barks?") unless an
        # auxiliary follows it ("What animals are mammals?")
        if prev_tag in ("WP", "OTHER") and next_word not in _AUX_SURFACES:
            return "VBZ"
        return "NNS"
    if lower in _verb_stems():
        return "VB"
    return "NN"


def tag_tokens(raw: str) -> TokenSequence:
    """Tag whitespace-tokenizable English text; deterministic.

    Closed-class lexicon first, then capitalization (non-initial word with
    an upper-case start is a proper noun; adjacent proper nouns merge),
    then suffix heuristics, default NN. Possessive 's is dropped.
    """
    words = _WORD_RE.findall(raw)
    if not words:
        raise EmptyInput("no tokens in input")

    terminal = False
    tagged: list[tuple[str, str]] = []
    lex = tagger_lexicon()
    for i, word in enumerate(words):
        if word in ("?", ".", "!", ";"):
            if word == "?":
                terminal = True
            continue
        if word == "'s":
            continue
        if word == ",":
            tagged.append((word, "CC"))
            continue
        prev_tag = tagged[-1][1] if tagged else None
        next_word = words[i + 1].lower() if i + 1 < len(words) else None
        # a capitalized non-initial word is a proper noun even when its
        # lowercase form is a closed-class word ("New York")
        tag = "NNP" if (i > 0 and word[0].isupper()) else None
        if tag is None:
            tag = lex.get(word.lower())
        if tag is None:
            tag = _suffix_tag(word, prev_tag, next_word)
        tagged.append((word, tag))

    merged: list[tuple[str, str]] = []
    for word, tag in tagged:
        if tag == "NNP" and merged and merged[-1][1] == "NNP":
            merged[-1] = (merged[-1][0] + " " + word, "NNP")
        else:
            merged.append((word, tag))

    tokens = tuple(
        Token(surface, lemma_of(surface, tag), tag, i)
        for i, (surface, tag) in enumerate(merged)
    )
    if not tokens:
        raise EmptyInput("only punctuation in input")
    return TokenSequence(tokens, terminal)


# --- pre-tagged input ----------------------------------------------------

def _canon_tag(tag: str, line_no: int) -> str:
    tag = _TAG_ALIASES.get(tag, tag)
    if tag not in TAGSET:
        raise MalformedLine(f"unknown POS tag {tag!r}", line_no)
    return tag


def parse_tagged_input(text: str) -> TokenSequence:
    """Parse `surface<TAB>POS` lines; a '?' line tagged '.' sets terminal."""
    if not text.strip():
        raise EmptyInput("empty tagged input")
    tokens = []
    terminal = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        if "\t" not in raw:
            raise MalformedLine("missing tab separator", line_no)
        surface, tag = raw.split("\t", 1)
        surface, tag = surface.strip(), tag.strip()
        if not surface:
            raise MalformedLine("empty surface", line_no)
        if tag in _PUNCT_TAGS:
            if surface == "?":
                terminal = True
            continue
        tag = _canon_tag(tag, line_no)
        tokens.append(Token(surface, lemma_of(surface, tag), tag, len(tokens)))
    if not tokens:
        raise EmptyInput("no tokens in tagged input")
    return TokenSequence(tuple(tokens), terminal)


def parse_tagged_json(text: str) -> TokenSequence:
    """Parse {"tokens":[{"surface":..., "pos":...}]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedLine(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    items = doc.get("tokens") if isinstance(doc, dict) else None
    if not items:
        raise EmptyInput("no tokens in JSON input")
    tokens = []
    terminal = False
    for line_no, item in enumerate(items, start=1):
        surface = item.get("surface", "")
        tag = item.get("pos", "")
        if not surface:
            raise MalformedLine("empty surface", line_no)
        if tag in _PUNCT_TAGS:
            if surface == "?":
                terminal = True
            continue
        tag = _canon_tag(tag, line_no)
        tokens.append(Token(surface, lemma_of(surface, tag), tag, len(tokens)))
    if not tokens:
        raise EmptyInput("only punctuation in JSON input")
    return TokenSequence(tuple(tokens), terminal)


def serialize_tsv(seq: TokenSequence) -> str:
    lines = [f"{t.surface}\t{t.pos}" for t in seq.tokens]
    if seq.terminal:
        lines.append("?\t.")
    return "\n".join(lines) + "\n"
