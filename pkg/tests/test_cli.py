import json
from importlib import resources

import pytest

from wh2dl.cli import main


@pytest.fixture
def corpus_path(tmp_path):
    text = resources.files("wh2dl.data").joinpath("golden_corpus.jsonl") \
        .read_text(encoding="utf-8")
    path = tmp_path / "golden.jsonl"
    path.write_text(text, encoding="utf-8")
    return path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTag:
    def test_tsv_output(self, capsys):
        code, out, _ = run_cli(capsys, "tag", "Who barks ?")
        assert code == 0
        assert out.splitlines()[:2] == ["Who\tWP", "barks\tVBZ"]
        assert out.splitlines()[-1] == "?\t."

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "tag", "Who barks ?", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["tokens"][0] == {"surface": "Who", "lemma": "who", "pos": "WP"}

    def test_empty_input_fails(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO("  \n"))
        code, out, _ = run_cli(capsys, "tag")
        assert code == 0  # no queries, nothing to fail on
        assert out == ""


class TestCharacterize:
    def test_json_matches_gold(self, capsys):
        code, out, _ = run_cli(
            capsys, "characterize", "What is the capital of Gujarat?",
            "--format", "json")
        assert code == 0
        doc = json.loads(out)
        sub = doc["subqueries"][0]
        assert doc["form"] == "simple"
        assert sub["r1"] == "is"
        assert sub["desires"][0]["head"] == ["capital"]

    def test_failure_emits_error_record(self, capsys):
        code, out, _ = run_cli(capsys, "characterize", "Why is the grass green?")
        assert code == 1
        doc = json.loads(out)
        assert doc["error"] == "UnsupportedKind"

    def test_batch_keeps_going(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(
            "What is a cat?\nWhy is the grass green?\nWho barks?\n"))
        code, out, _ = run_cli(capsys, "characterize")
        lines = out.splitlines()
        assert code == 1
        assert len(lines) == 3
        assert json.loads(lines[0])["form"] == "simple"
        assert json.loads(lines[1])["error"] == "UnsupportedKind"
        assert json.loads(lines[2])["form"] == "simple"

    def test_tagged_input(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(
            "What\tWP\nis\tVBZ\na\tDT\ncat\tNN\n?\t.\n"))
        code, out, _ = run_cli(capsys, "characterize", "--tagged")
        assert code == 0
        assert json.loads(out)["form"] == "simple"


class TestTranslate:
    def test_nominal_strict_dl_text(self, capsys):
        code, out, _ = run_cli(
            capsys, "translate", "--nominal-mode", "nominal-strict",
            "What is the capital of USA?", "--format", "dl")
        assert code == 0
        assert out.splitlines()[0] == "(Capital and (some of . {USA}))"

    def test_json_result(self, capsys):
        code, out, _ = run_cli(
            capsys, "translate", "What is a cat?", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["mode"] == "tbox-strong"
        assert "Desire_Strong SubClassOf Cat" in doc["axioms"]
        assert doc["rules"] == ["base-1.1"]

    def test_custom_lexicon(self, capsys, tmp_path):
        lexicon = tmp_path / "lex.tsv"
        lexicon.write_text("USA\tNation\n", encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "translate", "What is the capital of USA?",
            "--lexicon", str(lexicon), "--format", "dl")
        assert code == 0
        assert out.splitlines()[0] == "(Capital and (some of . Nation))"

    def test_translation_failure_exit_code(self, capsys):
        code, out, _ = run_cli(
            capsys, "translate", "What can never be seen at night?")
        assert code == 1
        assert json.loads(out)["error"] == "UnsupportedAdverbial"


class TestEval:
    def test_table(self, capsys, corpus_path):
        code, out, _ = run_cli(capsys, "eval", "--corpus", str(corpus_path))
        assert code == 0
        total = next(l for l in out.splitlines() if l.startswith("Total"))
        assert total.split() == ["Total", "13", "13", "13",
                                 "100.00", "100.00", "100.00"]

    def test_json_format(self, capsys, corpus_path):
        code, out, _ = run_cli(capsys, "eval", "--corpus", str(corpus_path),
                               "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert any(r["category"] == "Total" for r in doc["rows"])

    def test_missing_corpus_is_usage_error(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "eval", "--corpus",
                               str(tmp_path / "nope.jsonl"))
        assert code == 2
        assert "wh2dl:" in err
