"""Building, serializing and normalizing concept expressions.

The fragment covers atomic concepts, nominals, intersection, union,
existential restrictions, inverse and temporally qualified roles, and the
Integer datatype. Negation is deliberately unrepresentable.
"""

from wh2dl import dl

capital_of_usa = dl.Intersection((
    dl.Atomic("Capital"),
    dl.Exists(dl.AtomicRole("of"), dl.Nominal("USA")),
))
print(dl.serialize(capital_of_usa))

inverse = dl.Exists(dl.Inverse(dl.AtomicRole("located_in")),
                    dl.Nominal("California"))
print(dl.serialize(inverse))

temporal = dl.Exists(dl.TemporalRole("sometimes", "observed_in"),
                     dl.Atomic("Morning_Sky"))
print(dl.serialize(temporal))
print()

# Parsing inverts serialization.
parsed = dl.parse_dl("(Count and (some inv(hasCount) . Leg))")
print(parsed)
print()

# Normalization flattens, deduplicates and sorts, giving a canonical form
# for structural comparison.
messy = dl.parse_dl("(B and (A and B))")
print(dl.serialize(messy), "->", dl.serialize(dl.normalize(messy)))
print("equal up to structure:",
      dl.structurally_equal(dl.parse_dl("(A and B)"), dl.parse_dl("(B and A)")))
print()

# Axioms are line-oriented.
axiom = dl.Subsumption(dl.Atomic("Tall_Student"), dl.Atomic("Student"))
print(dl.serialize(axiom))
print(dl.serialize(dl.Definition("Desire", dl.IntegerType(), optimize="max")))
print("inside fragment:", dl.check_fragment(capital_of_usa))
