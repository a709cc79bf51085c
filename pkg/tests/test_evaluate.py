import json

import pytest

from wh2dl.evaluate import (
    CCReport, CorpusEntry, ReportRow, SchemaError, bundled_corpus, evaluate,
    load_corpus, metrics_row, render_report,
)

# published coverage figures: (category, N, N_I, N_CI, recall, precision, f1);
# the four form rows plus the two self-consistent kind rows
PUBLISHED_ROWS = [
    ("Simple", 676, 642, 642, 94.97, 100.0, 97.42),
    ("Complex", 147, 140, 140, 95.23, 100.0, 97.55),
    ("Compound", 69, 64, 64, 92.75, 100.0, 96.23),
    ("Total", 892, 843, 843, 94.50, 100.0, 97.17),
    ("Who", 143, 143, 143, 100.0, 100.0, 100.0),
    ("Kind-Total", 843, 815, 815, 96.68, 100.0, 98.31),
]


class TestMetricArithmetic:
    @pytest.mark.parametrize("row", PUBLISHED_ROWS, ids=lambda r: r[0])
    def test_reproduces_published_values(self, row):
        category, n, n_i, n_ci, recall, precision, f1 = row
        computed = metrics_row(category, n, n_i, n_ci)
        assert computed.recall == pytest.approx(recall, abs=0.01)
        assert computed.precision == pytest.approx(precision, abs=0.01)
        assert computed.f1 == pytest.approx(f1, abs=0.01)

    def test_perfect_identification(self):
        row = metrics_row("x", 10, 10, 10)
        assert (row.recall, row.precision, row.f1) == (100.0, 100.0, 100.0)

    def test_undefined_precision(self):
        row = metrics_row("x", 5, 0, 0)
        assert row.precision is None
        assert row.f1 is None

    def test_counts_ordering_allowed(self):
        # recall <= precision is not assumed; only the formulas hold
        row = metrics_row("x", 10, 8, 4)
        assert row.precision == pytest.approx(50.0)
        assert row.recall == pytest.approx(40.0)


class TestLoadCorpus:
    def test_bundled_golden_has_all_rows(self):
        corpus = bundled_corpus("golden_corpus.jsonl")
        assert len(corpus) == 13
        forms = [e.form for e in corpus]
        assert forms.count("simple") == 5
        assert forms.count("complex") == 4
        assert forms.count("compound") == 4

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        path.write_text("", encoding="utf-8")
        assert load_corpus(path) == []

    def test_missing_gold_rejected(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text(json.dumps(
            {"id": "a", "query": "What is a cat?", "form": "simple",
             "kind": "what"}) + "\n", encoding="utf-8")
        with pytest.raises(SchemaError):
            load_corpus(path)

    def test_duplicate_id_rejected(self, tmp_path):
        doc = json.dumps({"id": "a", "query": "What is a cat?",
                          "form": "simple", "kind": "what",
                          "goldDesire": []})
        path = tmp_path / "dup.jsonl"
        path.write_text(doc + "\n" + doc + "\n", encoding="utf-8")
        with pytest.raises(SchemaError):
            load_corpus(path)

    def test_unknown_form_rejected(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text(json.dumps(
            {"id": "a", "query": "q", "form": "odd", "kind": "what",
             "goldDesire": ["x"]}) + "\n", encoding="utf-8")
        with pytest.raises(SchemaError):
            load_corpus(path)


class TestEvaluate:
    def test_golden_corpus_perfect(self):
        report = evaluate(bundled_corpus("golden_corpus.jsonl"))
        total = report.row("Total")
        assert (total.n, total.n_identified, total.n_correct) == (13, 13, 13)
        assert total.precision == 100.0

    def test_counting_soundness(self):
        corpus = bundled_corpus("extended_corpus.jsonl")
        report = evaluate(corpus)
        total = report.row("Total")
        assert total.n == len(corpus)
        assert total.n_correct <= total.n_identified <= total.n

    def test_unidentified_counts_against_recall(self):
        entries = [
            CorpusEntry("a", "What is a cat?", "simple", "what",
                        gold_desire=()),
            CorpusEntry("b", "Why is the grass green?", "simple", "what",
                        gold_desire=("x",)),
        ]
        report = evaluate(entries)
        total = report.row("Total")
        assert total.n == 2 and total.n_identified == 1

    def test_gold_desire_matching(self):
        entries = [CorpusEntry("a", "What is the capital of Spain?",
                               "simple", "what", gold_desire=("capital",))]
        report = evaluate(entries)
        assert report.row("Total").n_correct == 1

    def test_wrong_gold_hits_precision(self):
        entries = [CorpusEntry("a", "What is the capital of Spain?",
                               "simple", "what", gold_desire=("city",))]
        total = evaluate(entries).row("Total")
        assert total.n_identified == 1 and total.n_correct == 0
        assert total.precision == 0.0

    def test_empty_corpus_rejected(self):
        with pytest.raises(ValueError):
            evaluate([])

    def test_determinism(self):
        corpus = bundled_corpus("extended_corpus.jsonl")
        first = render_report(evaluate(corpus))
        second = render_report(evaluate(corpus))
        assert first == second


class TestRender:
    REPORT = CCReport((ReportRow("Total", 892, 843, 843),))

    def test_table_mirrors_published_total(self):
        table = render_report(self.REPORT, "table")
        line = next(l for l in table.splitlines() if l.startswith("Total"))
        cells = line.split()
        assert cells == ["Total", "892", "843", "843", "94.50", "100.00", "97.17"]

    def test_json_round_trips(self):
        doc = json.loads(render_report(self.REPORT, "json"))
        assert doc["rows"][0]["recall"] == 94.50

    def test_csv(self):
        csv = render_report(self.REPORT, "csv")
        assert csv.splitlines()[1] == "Total,892,843,843,94.50,100.00,97.17"

    def test_undefined_precision_renders_dash(self):
        report = CCReport((ReportRow("x", 5, 0, 0),))
        assert "—" in render_report(report, "table")

    def test_empty_report_is_header_only(self):
        table = render_report(CCReport(()), "table")
        lines = table.splitlines()
        assert len(lines) == 2 and lines[0].startswith("Category")

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            render_report(self.REPORT, "xml")
