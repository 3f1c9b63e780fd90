"""
Rotation automorphisms of cyclic words and the fixed-structure statistics
``r`` (edges reversed by the involution) and ``(s, t)`` (positive and
negative vertices fixed by the element of order three).
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .gluing import NEGATIVE, POSITIVE, glue
from .words import ORIENTED, WordError, is_maximal, normalize


def induced_relabeling(word, shift):
    """
    Letter bijection ``phi`` with ``phi(w[i]) == w[i + shift]`` for all ``i``,
    as ``{index: signed index}``, or ``None`` if the rotation is not an
    automorphism.
    """
    w = word.symbols
    n = len(w)
    phi = {}
    for i, x in enumerate(w):
        y = w[(i + shift) % n]
        img = y if x > 0 else -y
        k = abs(x)
        if phi.setdefault(k, img) != img:
            return None
    if len({abs(v) for v in phi.values()}) != len(phi):
        return None
    return phi


def automorphism_shifts(word):
    """All ``k`` in ``0..2e-1`` whose rotation is isomorphic to ``word`` as a linear word."""
    w = word.symbols
    n = len(w)
    base = normalize(w)
    return [k for k in range(n) if normalize(w[k:] + w[:k]) == base]


@dataclass(frozen=True)
class AutDescriptor:
    order: int
    generator_shift: int
    length: int
    fixed_edges_r: Optional[int] = None
    fixed_vertices_s: Optional[int] = None
    fixed_vertices_t: Optional[int] = None

    @property
    def shifts(self):
        step = self.generator_shift or self.length
        return tuple(range(0, self.length, step))

    def to_json(self):
        out = {"order": self.order}
        for key, val in (("r", self.fixed_edges_r), ("s", self.fixed_vertices_s),
                         ("t", self.fixed_vertices_t)):
            if val is not None:
                out[key] = val
        return out


def fixed_edge_count(word, shift):
    n = len(word)
    phi = induced_relabeling(word, shift)
    if shift % n == 0 or (2 * shift) % n or phi is None:
        raise WordError("rotation by %d is not an automorphism of order 2" % shift)
    return sum(1 for k, img in phi.items() if img == -k)


def fixed_vertex_counts(word, shift, graph=None):
    n = len(word)
    if shift % n == 0 or (3 * shift) % n or induced_relabeling(word, shift) is None:
        raise WordError("rotation by %d is not an automorphism of order 3" % shift)
    if graph is None:
        graph = glue(word, check=False)
    s = t = 0
    for v in graph.vertices:
        corners = set(v.corners)
        if {(c + shift) % n for c in corners} == corners:
            if v.sign == POSITIVE:
                s += 1
            elif v.sign == NEGATIVE:
                t += 1
    return s, t


def aut_group(word, graph=None):
    """
    Rotation group of ``word``. For oriented words the fixed-structure
    statistics of its order-2 and order-3 elements are filled in.
    """
    n = len(word)
    shifts = automorphism_shifts(word)
    d = len(shifts)
    step = n // d
    assert gcd(step, n) == step and all(k % step == 0 for k in shifts)
    r = s = t = None
    if word.mode == ORIENTED:
        if d % 2 == 0:
            r = fixed_edge_count(word, n // 2)
        if d % 3 == 0:
            if graph is None:
                graph = glue(word, check=False)
            s, t = fixed_vertex_counts(word, n // 3, graph)
    return AutDescriptor(d, step % n, n, r, s, t)


@dataclass(frozen=True)
class ClassMembership:
    """Membership in the families of maximal forms; ``None`` means not a member."""

    genus: int
    order: int
    w2: Optional[int] = None
    w3: Optional[tuple] = None
    w6: Optional[tuple] = None

    def labels(self):
        out = ["W1"]
        if self.w2 is not None:
            out.append("W2(%d)" % self.w2)
        if self.w3 is not None:
            out.append("W3(%d,%d)" % self.w3)
        if self.w6 is not None:
            out.append("W6(%d;%d,%d)" % self.w6)
        return out

    def to_json(self):
        return {
            "genus": self.genus,
            "order": self.order,
            "W2": self.w2,
            "W3": list(self.w3) if self.w3 else None,
            "W6": list(self.w6) if self.w6 else None,
        }


def classify(word, graph=None, aut=None):
    if graph is None:
        graph = glue(word)
    if word.mode != ORIENTED or not is_maximal(word, graph.genus):
        raise WordError("classification needs an oriented maximal word")
    if aut is None:
        aut = aut_group(word, graph)
    w2 = aut.fixed_edges_r if aut.order % 2 == 0 else None
    w3 = (aut.fixed_vertices_s, aut.fixed_vertices_t) if aut.order % 3 == 0 else None
    w6 = (w2,) + w3 if aut.order % 6 == 0 else None
    return ClassMembership(graph.genus, aut.order, w2, w3, w6)
