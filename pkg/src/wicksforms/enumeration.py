"""
Isomorph-free generation of maximal Wicks forms.

Words are built position by position in first-appearance normal form: each
position either opens the next letter or closes a letter that is still
open. Three prunings keep the search small:

* corner cycles: gluing is tracked incrementally, and a partial vertex that
  cannot end up trivalent kills the branch (this also rules out
  cancellations and substitution pairs, which make vertices of degree one
  and two);
* canonicity: if some rotation of the placed prefix already reads smaller
  than the prefix itself, no completion can be a canonical form;
* counting: the open letters must fit in the remaining positions.

Only canonical words are emitted, so each isomorphism class appears once.
"""

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import census
from .automorphisms import aut_group, classify
from .gluing import glue
from .words import NONORIENTED, ORIENTED, CanonicalForm, WicksWord, canonicalize, is_maximal, validate

INF = 1 << 30

SUPPORTED = {ORIENTED: (1, 2), NONORIENTED: (2, 3)}

DEFAULT_MAX_NODES = 50_000_000
DEFAULT_MAX_SECONDS = 600.0


class BudgetExceeded(RuntimeError):
    """The search hit its node or time cap. ``partial`` holds what was found so far."""

    def __init__(self, message, nodes, elapsed, partial):
        super().__init__(message)
        self.nodes = nodes
        self.elapsed = elapsed
        self.partial = partial


class UnsupportedGenus(ValueError):
    pass


class _Search:
    def __init__(self, length, mode, max_nodes=None, deadline=None):
        n = length
        self.n = n
        self.e = n // 2
        self.mode = mode
        self.sym = [0] * n
        self.partner = [-1] * n
        # nb[2c + slot] is the atom linked to corner c's arriving (0) or
        # departing (1) slot, or -1
        self.nb = [-1] * (2 * n)
        self.open_pos = []
        self.opened = 0
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.found = []

    # -- corner bookkeeping -------------------------------------------------

    def _link(self, a, b):
        self.nb[a] = b
        self.nb[b] = a

    def _walk(self, atom, start):
        """Follow links from ``atom``; returns (extra corners, free atom or None if closed)."""
        nb = self.nb
        count = 0
        a = atom
        while True:
            b = nb[a]
            if b < 0:
                return count, a
            if b >> 1 == start:
                return count, None
            count += 1
            if count > 6:
                return count, a
            a = b ^ 1

    def _known(self, atom, k):
        c, slot = atom >> 1, atom & 1
        if slot:
            return c <= k
        return c - 1 <= k if c else k == self.n - 1

    def _vertex_ok(self, c, k):
        c1, free1 = self._walk(2 * c + 1, c)
        if free1 is None:
            return c1 + 1 == 3
        c2, free2 = self._walk(2 * c, c)
        size = c1 + c2 + 1
        if size > 3:
            return False
        if size == 3 and self._known(free1, k) and self._known(free2, k):
            return False
        return True

    # -- placement ------------------------------------------------------------

    def _place(self, k, x, p):
        """Put ``x`` at ``k``; ``p`` is the partner position for a close, else -1."""
        self.sym[k] = x
        n = self.n
        if p < 0:
            self.open_pos.append(k)
            self.opened += 1
            return
        self.partner[k] = p
        self.partner[p] = k
        self.open_pos.remove(p)
        k1, p1 = (k + 1) % n, (p + 1) % n
        if (x > 0) == (self.sym[p] > 0):
            self._link(2 * k + 1, 2 * p + 1)
            self._link(2 * k1, 2 * p1)
        else:
            self._link(2 * k + 1, 2 * p1)
            self._link(2 * k1, 2 * p + 1)

    def _unplace(self, k, x, p):
        n = self.n
        if p < 0:
            self.open_pos.pop()
            self.opened -= 1
            return
        k1, p1 = (k + 1) % n, (p + 1) % n
        # these four atoms are the ends of the letter just closed
        for a in (2 * k + 1, 2 * k1, 2 * p + 1, 2 * p1):
            self.nb[a] = -1
        self.partner[k] = -1
        self.partner[p] = -1
        # reinsert keeping positional order
        ops = self.open_pos
        i = 0
        while i < len(ops) and ops[i] < p:
            i += 1
        ops.insert(i, p)

    # -- canonicity -----------------------------------------------------------

    def _key_prefix(self, m):
        q = self.partner[m]
        if 0 <= q < m:
            return q, 0 if (self.sym[q] > 0) == (self.sym[m] > 0) else 1
        return INF, 0

    def _key_window(self, r, k):
        q = self.partner[k]
        if r <= q < k:
            return q - r, 0 if (self.sym[q] > 0) == (self.sym[k] > 0) else 1
        return INF, 0

    def _update_tied(self, tied, k):
        """New tied list, or None if a rotation beats the prefix."""
        out = []
        for r in tied + [k]:
            wk = self._key_window(r, k)
            pk = self._key_prefix(k - r)
            if wk < pk:
                return None
            if wk == pk:
                out.append(r)
        return out

    # -- driver ---------------------------------------------------------------

    def _choices(self, k):
        n = self.n
        remaining = n - k - 1
        out = []
        if self.opened < self.e and len(self.open_pos) + 1 <= remaining:
            out.append((self.opened + 1, -1))
        for p in list(self.open_pos):
            x = self.sym[p]
            if self.mode == ORIENTED:
                out.append((-x, p))
            else:
                out.append((x, p))
                out.append((-x, p))
        return out

    def _budget(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded("node budget of %d exceeded" % self.max_nodes,
                                 self.nodes, None, list(self.found))
        if self.deadline is not None and (self.nodes & 0x3FF) == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exceeded", self.nodes, None, list(self.found))

    def _try(self, k, x, p, tied):
        self._place(k, x, p)
        ok = self._vertex_ok(k, k) and self._vertex_ok((k + 1) % self.n, k)
        if ok and p >= 0:
            ok = self._vertex_ok(p, k) and self._vertex_ok((p + 1) % self.n, k)
        new_tied = self._update_tied(tied, k) if ok else None
        if new_tied is None:
            self._unplace(k, x, p)
        return new_tied

    def replay(self, prefix):
        tied = []
        for k, (x, p) in enumerate(prefix):
            tied = self._try(k, x, p, tied)
            if tied is None:
                raise ValueError("prefix is not a live search node")
        return tied

    def dfs(self, k, tied, stop_depth=None, sink=None):
        self._budget()
        if k == self.n:
            self._leaf()
            return
        if stop_depth is not None and k == stop_depth:
            sink.append(self.moves(k))
            return
        for x, p in self._choices(k):
            new_tied = self._try(k, x, p, tied)
            if new_tied is None:
                continue
            self.dfs(k + 1, new_tied, stop_depth, sink)
            self._unplace(k, x, p)

    def moves(self, k):
        return [(self.sym[i], self.partner[i] if 0 <= self.partner[i] < i else -1) for i in range(k)]

    def _leaf(self):
        w = tuple(self.sym)
        word = WicksWord(w, self.mode)
        if self.mode == NONORIENTED and not any(
                self.sym[i] == self.sym[self.partner[i]] for i in range(self.n)):
            return
        if canonicalize(word, check=False).symbols != w:
            return
        self.found.append(w)


def _run_subtree(args):
    length, mode, prefix, max_nodes, deadline = args
    s = _Search(length, mode, max_nodes, deadline)
    tied = s.replay(prefix)
    s.dfs(len(prefix), tied)
    return s.found, s.nodes


def search_words(length, mode=ORIENTED, max_nodes=DEFAULT_MAX_NODES, max_seconds=DEFAULT_MAX_SECONDS,
                 workers=1, split_depth=6):
    """
    Canonical words of the given length whose glued graph is trivalent.

    With ``workers > 1`` the forest is cut at ``split_depth`` and the
    subtrees run in separate processes; results are merged and sorted.
    """
    start = time.monotonic()
    deadline = None if max_seconds is None else start + max_seconds
    try:
        if workers <= 1:
            s = _Search(length, mode, max_nodes, deadline)
            s.dfs(0, [])
            found, nodes = s.found, s.nodes
        else:
            root = _Search(length, mode, max_nodes, deadline)
            prefixes = []
            root.dfs(0, [], stop_depth=min(split_depth, length), sink=prefixes)
            found, nodes = list(root.found), root.nodes
            tasks = [(length, mode, pre, max_nodes, deadline) for pre in prefixes]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for sub_found, sub_nodes in pool.map(_run_subtree, tasks):
                    found.extend(sub_found)
                    nodes += sub_nodes
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExceeded("node budget of %d exceeded" % max_nodes, nodes, None, found)
    except BudgetExceeded as exc:
        exc.elapsed = time.monotonic() - start
        raise
    return sorted(set(found), key=lambda w: tuple((abs(x), x < 0) for x in w)), nodes


# -- census entries -------------------------------------------------------------


@dataclass(frozen=True)
class CensusEntry:
    canonical_form: CanonicalForm
    aut: object
    glued: object
    class_labels: object = None

    @property
    def word(self):
        return self.canonical_form.word

    def to_json(self):
        g = self.glued
        out = {
            "word": list(self.canonical_form.symbols),
            "text": str(self.canonical_form),
            "mode": self.canonical_form.mode,
            "genus": g.genus,
            "v": g.vertex_count,
            "e": g.edge_count,
            "degrees": sorted(g.degrees),
            "aut": self.aut.to_json(),
        }
        if self.class_labels is not None:
            out["classes"] = self.class_labels.labels()
        return out


@dataclass
class Census:
    genus: int
    mode: str
    entries: list
    nodes: int = 0
    elapsed: float = 0.0
    mass_report: list = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def mass(self):
        return sum((Fraction(1, e.aut.order) for e in self.entries), Fraction(0))

    def order_histogram(self):
        hist = Counter(e.aut.order for e in self.entries)
        keys = (1, 2, 3, 6) if self.mode == ORIENTED else sorted(hist)
        return {d: hist.get(d, 0) for d in keys}

    def jsonl(self):
        return "".join(json.dumps(e.to_json(), sort_keys=True) + "\n" for e in self.entries)

    def summary(self):
        out = {
            "genus": self.genus,
            "mode": self.mode,
            "classes": len(self.entries),
            "mass": "%d/%d" % (self.mass().numerator, self.mass().denominator),
            "aut_orders": {str(k): v for k, v in self.order_histogram().items()},
        }
        if self.mode == NONORIENTED:
            out["provenance"] = "self-generated by exhaustive search; no published reference count"
        if self.mass_report:
            out["mass_checks"] = [c.to_json() for c in self.mass_report]
            out["all_pass"] = all(c.passed for c in self.mass_report)
        return out


def maximal_length(g, mode):
    return 6 * (2 * g - 1) if mode == ORIENTED else 6 * (g - 1)


def _check_supported(g, mode, expensive):
    lo, hi = SUPPORTED[mode]
    if g < lo:
        raise UnsupportedGenus("no maximal %s forms of genus %d" % (mode, g))
    if g > hi and not expensive:
        raise UnsupportedGenus("%s genus %d is beyond the supported range %d..%d; "
                               "pass expensive=True to try anyway" % (mode, g, lo, hi))


def _entries(words, mode, g):
    out = []
    for w in words:
        word = WicksWord(w, mode)
        report = validate(word)
        graph = glue(word, check=False)
        if not report.ok or graph.genus != g or not is_maximal(word, graph.genus):
            raise AssertionError("generator emitted a bad word %r" % (w,))
        aut = aut_group(word, graph)
        labels = classify(word, graph, aut) if mode == ORIENTED else None
        out.append(CensusEntry(canonicalize(word, check=False), aut, graph, labels))
    return out


def enumerate_oriented_maximal(g, expensive=False, **budget):
    _check_supported(g, ORIENTED, expensive)
    start = time.monotonic()
    words, nodes = search_words(maximal_length(g, ORIENTED), ORIENTED, **budget)
    c = Census(g, ORIENTED, _entries(words, ORIENTED, g), nodes)
    c.mass_report = verify_masses(g, c.entries)
    c.elapsed = time.monotonic() - start
    return c


def enumerate_nonoriented_maximal(g, expensive=False, **budget):
    _check_supported(g, NONORIENTED, expensive)
    start = time.monotonic()
    words, nodes = search_words(maximal_length(g, NONORIENTED), NONORIENTED, **budget)
    c = Census(g, NONORIENTED, _entries(words, NONORIENTED, g), nodes)
    c.elapsed = time.monotonic() - start
    return c


# -- mass comparison ------------------------------------------------------------


@dataclass(frozen=True)
class MassCheck:
    family: str
    observed: Fraction
    expected: Fraction

    @property
    def passed(self):
        return self.observed == self.expected

    def to_json(self):
        return {"family": self.family, "observed": _q(self.observed),
                "expected": _q(self.expected), "result": "PASS" if self.passed else "FAIL"}


def _q(x):
    return "%d/%d" % (x.numerator, x.denominator)


def verify_masses(g, entries):
    """Compare the census masses of every family with the closed formulas."""
    def weight(e):
        return Fraction(1, e.aut.order)

    checks = [MassCheck("W1", sum((weight(e) for e in entries), Fraction(0)), census.m1(g))]

    w2 = {}
    w3 = {}
    w6 = {}
    for e in entries:
        lab = e.class_labels
        if lab.w2 is not None:
            w2[lab.w2] = w2.get(lab.w2, Fraction(0)) + weight(e)
        if lab.w3 is not None:
            w3[lab.w3] = w3.get(lab.w3, Fraction(0)) + weight(e)
        if lab.w6 is not None:
            w6[lab.w6] = w6.get(lab.w6, Fraction(0)) + weight(e)

    for r in sorted(set(w2) | set(census.m2_support(g))):
        checks.append(MassCheck("W2(%d)" % r, w2.get(r, Fraction(0)), census.m2_term(g, r)))
    for st in sorted(set(w3) | set(census.m3_support(g))):
        checks.append(MassCheck("W3(%d,%d)" % st, w3.get(st, Fraction(0)), census.m3_term(g, *st)))
    labels6 = set(w6) | {census.m6_label(*p) for p in census.m6_support(g)}
    for lab in sorted(labels6):
        checks.append(MassCheck("W6(%d;%d,%d)" % lab, w6.get(lab, Fraction(0)),
                                census.m6_term(g, *census.m6_params(lab))))
    total6 = sum(w6.values(), Fraction(0))
    checks.append(MassCheck("W6", total6, census.masses(g)[3]))
    return checks
