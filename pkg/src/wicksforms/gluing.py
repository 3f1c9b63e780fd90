"""
Surface obtained by gluing the sides of a 2e-gon according to a word.

Side ``i`` of the polygon carries letter ``w[i]`` and runs from corner ``i``
to corner ``i + 1``. Edge ``a_k`` has a tail end and a head end; an
occurrence ``+k`` on side ``i`` starts at its tail, ``-k`` starts at its
head. Corner ``c`` touches the end where side ``c - 1`` finishes (its
*arriving* end) and the end where side ``c`` starts (its *departing* end).
Every end touches exactly two corners, so corners sharing ends form cycles;
these cycles are the vertices of the embedded graph.
"""

import json
from dataclasses import dataclass, field

from .words import ORIENTED, WordError, validate

TAIL, HEAD = 0, 1
POSITIVE, NEGATIVE, UNSIGNED = "positive", "negative", "unsigned"


class GluingError(RuntimeError):
    """Internal inconsistency while gluing; valid words always glue."""


def start_end(x):
    return (abs(x), TAIL if x > 0 else HEAD)


def finish_end(x):
    return (abs(x), HEAD if x > 0 else TAIL)


def corner_ends(symbols):
    """``(arriving, departing)`` edge ends for every corner."""
    n = len(symbols)
    return [(finish_end(symbols[c - 1]), start_end(symbols[c])) for c in range(n)]


@dataclass(frozen=True)
class Vertex:
    id: int
    corners: tuple
    sign: str = UNSIGNED

    @property
    def degree(self):
        return len(self.corners)


@dataclass(frozen=True)
class GluedGraph:
    edge_count: int
    vertex_count: int
    euler_characteristic: int
    genus: int
    mode: str
    vertices: tuple
    corner_orbit_map: tuple = field(repr=False)

    @property
    def degrees(self):
        return tuple(v.degree for v in self.vertices)

    def sign_counts(self):
        pos = sum(1 for v in self.vertices if v.sign == POSITIVE)
        neg = sum(1 for v in self.vertices if v.sign == NEGATIVE)
        return pos, neg

    def to_json(self):
        return {
            "mode": self.mode,
            "v": self.vertex_count,
            "e": self.edge_count,
            "chi": self.euler_characteristic,
            "g": self.genus,
            "vertices": [
                {"id": v.id, "degree": v.degree, "corners": list(v.corners), "sign": v.sign}
                for v in self.vertices
            ],
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def corner_cycles(symbols):
    """
    Partition the corners into vertex cycles.

    Each cycle is listed starting from its smallest corner. In oriented mode
    the walk goes from a corner to the corner whose arriving end is its
    departing end, which is the rotation order at the vertex.
    """
    n = len(symbols)
    ends = corner_ends(symbols)
    touching = {}
    for c, (arr, dep) in enumerate(ends):
        touching.setdefault(arr, []).append(c)
        touching.setdefault(dep, []).append(c)
    for end, cs in touching.items():
        if len(cs) != 2:
            raise GluingError("edge end %r touches %d corners" % (end, len(cs)))

    seen = [False] * n
    cycles = []
    for c0 in range(n):
        if seen[c0]:
            continue
        cyc = [c0]
        seen[c0] = True
        c, via = c0, ends[c0][1]
        while True:
            a, b = touching[via]
            nxt = b if a == c else a
            if nxt == c0 or seen[nxt]:
                break
            cyc.append(nxt)
            seen[nxt] = True
            arr, dep = ends[nxt]
            # leave through the end not used to come in
            via = dep if arr == via else arr
            c = nxt
        cycles.append(tuple(cyc))
    return cycles


def vertex_signs(word, cycles=None):
    """
    Sign of every trivalent vertex of an oriented word.

    A vertex is positive when its rotation order agrees with the cyclic order
    in which its corners occur along the word, and negative otherwise.
    """
    if word.mode != ORIENTED:
        raise WordError("vertex signs are only defined for oriented words")
    if cycles is None:
        cycles = corner_cycles(word.symbols)
    out = []
    for cyc in cycles:
        if len(cyc) != 3:
            out.append(UNSIGNED)
            continue
        a, b, c = cyc
        # cyclic order a -> b -> c is increasing along the word iff one of
        # the three rotations is sorted
        increasing = (a < b < c) or (b < c < a) or (c < a < b)
        out.append(POSITIVE if increasing else NEGATIVE)
    return out


def glue(word, check=True):
    if check:
        report = validate(word)
        if not report.ok:
            raise WordError("not a Wicks form: violates %s" % ", ".join(report.conditions()))
    cycles = corner_cycles(word.symbols)
    e = word.edge_count
    v = len(cycles)
    chi = v - e + 1
    if word.mode == ORIENTED:
        if chi % 2:
            raise GluingError("odd Euler characteristic %d for an oriented word" % chi)
        genus = (2 - chi) // 2
        signs = vertex_signs(word, cycles)
    else:
        genus = 2 - chi
        signs = [UNSIGNED] * v
    if genus < 1:
        raise GluingError("non-positive genus %d" % genus)
    orbit = [0] * len(word)
    for i, cyc in enumerate(cycles):
        for c in cyc:
            orbit[c] = i
    vertices = tuple(Vertex(i, cyc, s) for i, (cyc, s) in enumerate(zip(cycles, signs)))
    return GluedGraph(e, v, chi, genus, word.mode, vertices, tuple(orbit))


def genus(word):
    return glue(word).genus


# -- dual one-vertex triangulation ---------------------------------------------


@dataclass(frozen=True)
class DualTriangulation:
    """
    Triangles are indexed by the vertices of the glued graph. Triangle sides
    are edge ends, listed in the rotation order of the vertex; ``gluings``
    pairs the tail side and the head side of every edge.
    """

    triangles: tuple
    gluings: tuple
    vertex_count: int

    @property
    def triangle_count(self):
        return len(self.triangles)

    @property
    def edge_count(self):
        return len(self.gluings)

    @property
    def euler_characteristic(self):
        return self.vertex_count - self.edge_count + self.triangle_count


def dual_triangulation(word):
    from .words import is_maximal

    graph = glue(word)
    if word.mode != ORIENTED or not is_maximal(word, graph.genus):
        raise WordError("dual triangulation needs an oriented maximal word")
    ends = corner_ends(word.symbols)
    triangles = []
    where = {}
    for t, vert in enumerate(graph.vertices):
        sides = tuple(ends[c][1] for c in vert.corners)
        for slot, end in enumerate(sides):
            where[end] = (t, slot)
        triangles.append(sides)
    gluings = tuple((where[(k, TAIL)], where[(k, HEAD)]) for k in range(1, word.edge_count + 1))

    # Triangle corners sit at polygon corners; gluing across an edge
    # identifies the two corners bounding each polygon side.
    n = len(word)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        parent[find(i)] = find((i + 1) % n)
    nverts = len({find(i) for i in range(n)})
    return DualTriangulation(tuple(triangles), gluings, nverts)
