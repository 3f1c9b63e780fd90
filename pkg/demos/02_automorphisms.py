"""
Rotation symmetries
===================

Compute the automorphism group of a word as a group of rotations, with the
fixed-edge and fixed-vertex statistics that sort maximal forms into families.
"""

from wicksforms import aut_group, canonicalize, classify, parse_word

torus = parse_word("a b c a' b' c'")
aut = aut_group(torus)
print("order", aut.order, "rotations", aut.shifts)
print(aut.to_json())
print(classify(torus).labels())

# Rotating and renaming letters does not change the canonical form.
shuffled = parse_word("q' r' p q r p'")
print(canonicalize(shuffled), "==", canonicalize(torus), canonicalize(shuffled) == canonicalize(torus))
