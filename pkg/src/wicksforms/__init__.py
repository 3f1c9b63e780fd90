"""Oriented and nonoriented Wicks forms: gluing, automorphisms, exact census and enumeration."""

from .automorphisms import AutDescriptor, ClassMembership, aut_group, classify, fixed_edge_count, fixed_vertex_counts
from .census import CensusRow, counts, disk_radii, m1, m2_term, m3_term, m6_term, masses
from .enumeration import (BudgetExceeded, Census, CensusEntry, enumerate_nonoriented_maximal,
                          enumerate_oriented_maximal, verify_masses)
from .gluing import DualTriangulation, GluedGraph, Vertex, dual_triangulation, glue, vertex_signs
from .words import (NONORIENTED, ORIENTED, CanonicalForm, Letter, ValidationReport, WicksWord, WordError,
                    canonicalize, is_maximal, parse_word, render_word, validate)

__version__ = "0.1.0"
