"""
Words, validation and gluing
============================

Parse a few cyclic words, check the Wicks conditions and glue the polygon.
"""

from wicksforms import glue, parse_word, validate
from wicksforms.words import NONORIENTED

# The hexagon word of the torus: three edges, two trivalent vertices.
torus = parse_word("a b c a' b' c'")
print(torus, validate(torus).ok)
g = glue(torus)
print("v=%d e=%d chi=%d genus=%d" % (g.vertex_count, g.edge_count, g.euler_characteristic, g.genus))
for v in g.vertices:
    print("  vertex", v.id, "corners", v.corners, v.sign)

# Words that fail: a cancellation, and a pair that could be merged into one letter.
for text in ["a a' b c b' c'", "a b c b' a' c'"]:
    report = validate(parse_word(text))
    print(text, "->", [(v.condition, v.positions) for v in report.violations])

# The classical genus-2 word has a single vertex of degree 8; it is far from maximal.
octagon = parse_word("a b a' b' c d c' d'")
print(octagon, glue(octagon).degrees)

# Nonoriented words glue into nonorientable surfaces.
for text in ["a a", "a a b c c b'"]:
    w = parse_word(text, NONORIENTED)
    gg = glue(w)
    print(text, "-> genus", gg.genus, "degrees", gg.degrees)
