"""Translating characterized queries into axioms, rule group by rule group.

Proper nouns resolve to their most specific parent class in paper-literal
mode and to nominals in nominal-strict mode.
"""

from wh2dl import characterize, dl, tag_tokens, translate


def show(raw, nominal_mode="paper-literal"):
    result = translate(characterize(tag_tokens(raw)),
                       nominal_mode=nominal_mode)
    print(raw, f"[{nominal_mode}]")
    print(f"  {result.mode}: {result.desire_text()}")
    for axiom in result.axioms:
        print("  axiom:", dl.serialize(axiom))
    for part in result.sub:
        print("  part:", part.desire_text())
    print("  rules:", ", ".join(result.rules))
    print()


# Base rules: the desire is defined in terms of the input.
show("What is a cat?")                         # T-Box pair, strong and weak
show("What is the capital of USA?")            # class via hypernym lookup
show("What is the capital of USA?", "nominal-strict")
show("Which country is California located in?")  # inverse role

# Modifiers become subsumption chains.
show("Who are the tall students?")

# Extension rules for complex queries.
show("What are the kinds of animals which are vegetarians?")
show("What is the price of SLR camera which has 3.2 megapixel resolution?",
     "nominal-strict")

# Non-trivial rules.
show("Who barks?")                                          # reification
show("What kind of a water vehicle is also an air vehicle?")  # inclusion
show("How many people live in New York?", "nominal-strict")  # count
show("What can be sometimes observed in the morning sky?")   # temporal
show("What is the tallest mountain in Europe?", "nominal-strict")  # optimality

# Compounds split into a union of parts.
show("What is the travelling charge to Bombay and hotel_rent in Bombay?",
     "nominal-strict")
