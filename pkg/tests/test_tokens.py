import json

import pytest
from hypothesis import given, strategies as st

from wh2dl.tokens import (
    EmptyInput, MalformedLine, Token, normalize, parse_tagged_input,
    parse_tagged_json, serialize_tsv, tag_tokens,
)


class TestParseTagged:
    def test_basic_tsv(self):
        seq = parse_tagged_input("What\tWP\nis\tVBZ\na\tDT\ncat\tNN\n?\t.")
        assert [t.surface for t in seq.tokens] == ["What", "is", "a", "cat"]
        assert seq.terminal

    def test_identity_lemma(self):
        seq = parse_tagged_input("capital\tNN")
        tok = seq.tokens[0]
        assert (tok.surface, tok.lemma, tok.pos) == ("capital", "capital", "NN")

    def test_unknown_tag(self):
        with pytest.raises(MalformedLine):
            parse_tagged_input("Gujarat\tXX")

    def test_missing_tab(self):
        with pytest.raises(MalformedLine):
            parse_tagged_input("no tag here")

    def test_empty(self):
        with pytest.raises(EmptyInput):
            parse_tagged_input("")

    def test_pp_alias_for_preposition(self):
        seq = parse_tagged_input("of\tPP")
        assert seq.tokens[0].pos == "IN"

    def test_json_format(self):
        doc = json.dumps({"tokens": [
            {"surface": "Who", "pos": "WP"},
            {"surface": "barks", "pos": "VBZ"},
            {"surface": "?", "pos": "."}]})
        seq = parse_tagged_json(doc)
        assert [t.pos for t in seq.tokens] == ["WP", "VBZ"]
        assert seq.terminal


class TestTagger:
    def test_who_barks(self):
        seq = tag_tokens("Who barks ?")
        assert [(t.surface, t.pos) for t in seq.tokens] == \
            [("Who", "WP"), ("barks", "VBZ")]
        assert seq.terminal

    def test_where_is_california(self):
        seq = tag_tokens("Where is California ?")
        assert [(t.surface, t.pos) for t in seq.tokens] == \
            [("Where", "WRB"), ("is", "VBZ"), ("California", "NNP")]

    def test_empty(self):
        with pytest.raises(EmptyInput):
            tag_tokens("")

    def test_suffix_rules(self):
        seq = tag_tokens("What is the travelling charge quickly")
        tags = {t.surface: t.pos for t in seq.tokens}
        assert tags["travelling"] == "VBG"
        assert tags["quickly"] == "RB"

    def test_superlative_and_participle(self):
        tags = {t.surface: t.pos for t in tag_tokens("the tallest converted one")}
        assert tags["tallest"] == "JJS"
        assert tags["converted"] == "VBN"

    def test_multiword_proper_noun_merges(self):
        seq = tag_tokens("How many people live in New York ?")
        merged = [t for t in seq.tokens if t.pos == "NNP"]
        assert len(merged) == 1
        assert merged[0].lemma == "New_York"

    def test_plural_noun_vs_verb_after_wh(self):
        barks = tag_tokens("Who barks ?").tokens[1]
        animals = tag_tokens("What animals are mammals ?").tokens[1]
        assert barks.pos == "VBZ"
        assert animals.pos == "NNS"

    def test_possessive_dropped(self):
        seq = tag_tokens("What is Orlando's location ?")
        surfaces = [t.surface for t in seq.tokens]
        assert "Orlando" in surfaces and "'s" not in surfaces

    def test_deterministic(self):
        raw = "Which volcanoes are active and which ones are dormant?"
        assert tag_tokens(raw) == tag_tokens(raw)


class TestNormalize:
    def test_plural_strip(self):
        tok = Token("legs", "", "NNS", 0)
        assert normalize(tok).lemma == "leg"

    def test_proper_noun_keeps_case(self):
        tok = Token("USA", "", "NNP", 0)
        assert normalize(tok).lemma == "USA"

    def test_ies_plural(self):
        tok = Token("authorities", "", "NNS", 0)
        assert normalize(tok).lemma == "authority"

    def test_oes_plural(self):
        tok = Token("volcanoes", "", "NNS", 0)
        assert normalize(tok).lemma == "volcano"

    @given(st.sampled_from(["legs", "cats", "boxes", "stories", "volcanoes",
                            "people", "bus", "glass", "Paris"]),
           st.sampled_from(["NN", "NNS", "NNP", "JJ", "VBZ"]))
    def test_idempotent(self, surface, pos):
        tok = normalize(Token(surface, "", pos, 0))
        assert normalize(tok) == tok


class TestRoundTrip:
    @pytest.mark.parametrize("raw", [
        "What is the capital of Gujarat?",
        "Which volcanoes are active and which ones are dormant?",
        "How many legs does a millipede have?",
    ])
    def test_tsv_round_trip(self, raw):
        seq = tag_tokens(raw)
        assert parse_tagged_input(serialize_tsv(seq)) == seq
