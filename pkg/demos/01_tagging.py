"""Tokenizing and tagging queries.

Pre-tagged TSV is the canonical input; the bundled fallback tagger covers
plain text with a closed-class lexicon plus suffix heuristics.
"""

from wh2dl import parse_tagged_input, serialize_tsv, tag_tokens

# Plain text in, tagged tokens out. Lemmas are lowercased and plural
# nouns are stripped; proper nouns keep their casing.
seq = tag_tokens("How many legs does a millipede have?")
for token in seq:
    print(f"{token.surface:12} {token.pos:5} lemma={token.lemma}")
print("terminal question mark:", seq.terminal)
print()

# Adjacent capitalized words merge into one proper-noun token.
seq = tag_tokens("How many people live in New York?")
print([t.lemma for t in seq if t.pos == "NNP"])
print()

# The TSV round trip: serialize, then parse back.
tsv = serialize_tsv(seq)
print(tsv)
assert parse_tagged_input(tsv) == seq
print("round trip ok")
