"""wh2dl: characterize English wh-queries and translate them to
description-logic axioms, with an evaluation harness for characterization
coverage."""

from .tokens import (
    Token, TokenSequence, EmptyInput, MalformedLine,
    tag_tokens, parse_tagged_input, parse_tagged_json, serialize_tsv,
    normalize as normalize_token,
)
from .template import (
    Characterization, SubQuery, DesireSlot, InputSlot, ClauseStructure,
)
from .characterize import (
    CharacterizationFailure, NoWhToken, UnsupportedKind,
    classify_query_kind, characterize,
)
from .hypernyms import Lexicon, load_lexicon, bundled_lexicon
from .translate import TranslationResult, TranslationFailure, translate
from .evaluate import CorpusEntry, CCReport, load_corpus, evaluate, render_report

__version__ = "0.1.0"

__all__ = [
    "Token", "TokenSequence", "EmptyInput", "MalformedLine",
    "tag_tokens", "parse_tagged_input", "parse_tagged_json", "serialize_tsv",
    "normalize_token",
    "Characterization", "SubQuery", "DesireSlot", "InputSlot",
    "ClauseStructure",
    "CharacterizationFailure", "NoWhToken", "UnsupportedKind",
    "classify_query_kind", "characterize",
    "Lexicon", "load_lexicon", "bundled_lexicon",
    "TranslationResult", "TranslationFailure", "translate",
    "CorpusEntry", "CCReport", "load_corpus", "evaluate", "render_report",
    "__version__",
]
