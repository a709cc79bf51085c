"""Command-line interface: tag, characterize, translate, eval.

Exit codes: 0 success, 1 at least one query failed (error records are
emitted, batches keep going), 2 usage or I/O errors. Queries come from
the positional argument or, when absent, one per line on stdin
(--tagged switches stdin to a single TSV-tagged document).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dl
from .characterize import CharacterizationError, characterize
from .evaluate import SchemaError, evaluate, load_corpus, render_report
from .hypernyms import load_lexicon
from .tokens import (
    EmptyInput, MalformedLine, parse_tagged_input, serialize_tsv, tag_tokens,
)
from .translate import (
    NOMINAL_STRICT, PAPER_LITERAL, TranslationFailure,
    load_measurable_lexicon, translate,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wh2dl",
        description="Characterize wh-queries and translate them to "
                    "description-logic expressions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_query_command(name: str, help_text: str):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("query", nargs="?", default=None,
                         help="inline query; stdin when omitted")
        cmd.add_argument("--tagged", action="store_true",
                         help="input is TSV pre-tagged (surface<TAB>POS)")
        return cmd

    tag = add_query_command("tag", "tokenize and POS-tag a query")
    tag.add_argument("--format", choices=("tsv", "json"), default="tsv")

    char = add_query_command("characterize", "fit a query into the template")
    char.add_argument("--format", choices=("json",), default="json")

    tr = add_query_command("translate", "characterize and translate a query")
    tr.add_argument("--format", choices=("json", "dl"), default="json")
    tr.add_argument("--lexicon", default=None,
                    help="hypernym lexicon TSV overriding the bundled file")
    tr.add_argument("--mod-lexicon", default=None,
                    help="measurable-modifier lexicon TSV")
    tr.add_argument("--nominal-mode",
                    choices=(PAPER_LITERAL, NOMINAL_STRICT),
                    default=PAPER_LITERAL)

    ev = sub.add_parser("eval", help="evaluate characterization coverage")
    ev.add_argument("--corpus", required=True, help="JSON-lines corpus path")
    ev.add_argument("--format", choices=("table", "json", "csv"),
                    default="table")
    return parser


def _read_queries(args) -> list[str]:
    if args.query is not None:
        return [args.query]
    data = sys.stdin.read()
    if args.tagged:
        return [data]
    return [line for line in data.splitlines() if line.strip()]


def _sequence(args, text: str):
    return parse_tagged_input(text) if args.tagged else tag_tokens(text)


def _emit_error(exc: Exception, out):
    print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}),
          file=out)


def _run_tag(args) -> int:
    status = 0
    for text in _read_queries(args):
        try:
            seq = _sequence(args, text)
        except (EmptyInput, MalformedLine) as exc:
            _emit_error(exc, sys.stdout)
            status = 1
            continue
        if args.format == "json":
            doc = {"tokens": [{"surface": t.surface, "lemma": t.lemma,
                               "pos": t.pos} for t in seq.tokens],
                   "terminal": seq.terminal}
            print(json.dumps(doc, ensure_ascii=False))
        else:
            sys.stdout.write(serialize_tsv(seq))
    return status


def _run_characterize(args) -> int:
    status = 0
    for text in _read_queries(args):
        try:
            qct = characterize(_sequence(args, text))
        except (CharacterizationError, EmptyInput, MalformedLine) as exc:
            _emit_error(exc, sys.stdout)
            status = 1
            continue
        print(json.dumps(qct.to_json(), ensure_ascii=False))
    return status


def _run_translate(args) -> int:
    lexicon = load_lexicon(args.lexicon) if args.lexicon else None
    measurables = load_measurable_lexicon(args.mod_lexicon) \
        if args.mod_lexicon else None
    status = 0
    for text in _read_queries(args):
        try:
            qct = characterize(_sequence(args, text))
            result = translate(qct, lexicon=lexicon, measurables=measurables,
                               nominal_mode=args.nominal_mode)
        except (CharacterizationError, TranslationFailure, EmptyInput,
                MalformedLine) as exc:
            _emit_error(exc, sys.stdout)
            status = 1
            continue
        if args.format == "dl":
            print(result.desire_text())
            for axiom in result.axioms:
                print(dl.serialize(axiom))
            for part in result.sub:
                print(f"-- {part.desire_text()}")
                for axiom in part.axioms:
                    print(dl.serialize(axiom))
        else:
            print(json.dumps(result.to_json(), ensure_ascii=False))
    return status


def _run_eval(args) -> int:
    corpus = load_corpus(args.corpus)
    report = evaluate(corpus)
    sys.stdout.write(render_report(report, args.format))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "tag":
            return _run_tag(args)
        if args.command == "characterize":
            return _run_characterize(args)
        if args.command == "translate":
            return _run_translate(args)
        return _run_eval(args)
    except (OSError, SchemaError, ValueError) as exc:
        print(f"wh2dl: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
