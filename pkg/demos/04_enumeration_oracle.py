"""
Exhaustive enumeration against the formulas
===========================================

Generate every maximal form of genus 1 and 2 up to isomorphism and compare
the weighted counts with the closed formulas.
"""

from wicksforms import enumerate_nonoriented_maximal, enumerate_oriented_maximal

for g in (1, 2):
    census = enumerate_oriented_maximal(g)
    print("genus %d: %d classes, mass %s, orders %s" % (g, len(census), census.mass(), census.order_histogram()))
    for entry in census.entries:
        print("  ", entry.canonical_form, entry.class_labels.labels())
    for check in census.mass_report:
        print("   %-10s %6s vs %6s %s" % (check.family, check.observed, check.expected,
                                          "PASS" if check.passed else "FAIL"))

# Nonoriented maximal forms, counted by the same engine.
for g in (2, 3):
    census = enumerate_nonoriented_maximal(g)
    print("nonoriented genus %d: %d classes" % (g, len(census)))
