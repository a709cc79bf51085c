"""Fitting queries into the desire/input slot template.

Every query lands in one of three forms: simple (one desire, one input),
complex (several inputs or a clausal constraint), compound (conjoined
desires or whole subqueries).
"""

import json

from wh2dl import characterize, tag_tokens

EXAMPLES = [
    "What is the capital of Gujarat?",            # simple, explicit desire
    "Where is California?",                       # implicit location desire
    "How many legs does a millipede have?",       # implicit count desire
    "Who barks?",                                 # implicit activity desire
    "What is the distance between Missouri and Texas?",   # input conjunction
    "What is the price of SLR camera which has 3.2 megapixel resolution?",
    "Which volcanoes are active and which ones are dormant?",  # compound
]

for raw in EXAMPLES:
    qct = characterize(tag_tokens(raw))
    sub = qct.subqueries[0]
    desire = sub.desires[0]
    print(raw)
    print(f"  form={qct.form}  kind={sub.kind}  r1={sub.r1}  "
          f"desire=({desire.mode}: {' '.join(desire.head) or '-'})  "
          f"subject={sub.subject}")
    for clause in sub.clauses:
        inputs = ", ".join("_".join(s.head) for s in clause.inputs) or "-"
        print(f"  clause cl={clause.cl} rel={clause.relation_text()} "
              f"inputs=[{inputs}]")
    print()

# The JSON rendering is the interchange format used by the CLI and the
# evaluation harness.
qct = characterize(tag_tokens("What is shape and size of baloon when air comes out?"))
print(json.dumps(qct.to_json(), indent=2))
