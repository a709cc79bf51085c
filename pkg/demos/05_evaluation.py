"""Characterization-coverage metrics over the bundled corpora.

Precision is correct/identified, recall correct/total; queries that fail
to characterize count against recall only.
"""

from wh2dl.evaluate import bundled_corpus, evaluate, metrics_row, render_report

# The golden corpus holds the published worked characterizations.
report = evaluate(bundled_corpus("golden_corpus.jsonl"))
print(render_report(report))

# The extended corpus covers every translation-rule guard.
report = evaluate(bundled_corpus("extended_corpus.jsonl"))
print(render_report(report, "table"))

# Raw counts can be fed in directly to check published figures.
row = metrics_row("Total", 892, 843, 843)
print(f"N=892 N_I=843 N_CI=843 -> recall {row.recall:.2f} "
      f"precision {row.precision:.2f} f1 {row.f1:.2f}")
