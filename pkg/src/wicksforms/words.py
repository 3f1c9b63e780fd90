"""
Cyclic words over a signed alphabet, Wicks-form validation and canonical forms.

A word is stored as a tuple of nonzero integers: ``k`` is the letter ``a_k``
and ``-k`` its inverse. Letters are numbered ``1..l`` by first appearance.
The text format is whitespace separated identifiers, a trailing apostrophe
marking the inverse::

    >>> w = parse_word("a b c a' b' c'")
    >>> w.symbols
    (1, 2, 3, -1, -2, -3)
    >>> render_word(w)
    "a b c a' b' c'"
"""

import json
import re
import string
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

ORIENTED = "oriented"
NONORIENTED = "nonoriented"
MODES = (ORIENTED, NONORIENTED)

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)('?)$")


class WordError(ValueError):
    """Raised for input that is not a well-formed cyclic word."""


class Letter(NamedTuple):
    index: int
    sign: int


def default_names(count):
    names = list(string.ascii_lowercase[:count])
    names += ["x%d" % i for i in range(27, count + 1)]
    return tuple(names)


@dataclass(frozen=True)
class WicksWord:
    """
    A cyclic word in which every letter occurs exactly twice.

    ``names`` only affects rendering. Construction checks the structural
    conditions (even length, multiplicities, and opposite exponents in
    oriented mode); the remaining Wicks conditions are checked by
    :func:`validate`.
    """

    symbols: tuple
    mode: str = ORIENTED
    names: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        symbols = tuple(int(x) for x in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if self.mode not in MODES:
            raise WordError("unknown mode %r" % (self.mode,))
        n = len(symbols)
        if n == 0:
            raise WordError("empty word")
        if 0 in symbols:
            raise WordError("letter 0 is not allowed")
        seen = {}
        order = []
        for x in symbols:
            k = abs(x)
            if k not in seen:
                order.append(k)
            seen.setdefault(k, []).append(x)
        if order != list(range(1, len(order) + 1)):
            raise WordError("letters must be numbered 1..l by first appearance")
        for k, occ in seen.items():
            if len(occ) != 2:
                raise WordError("letter count violation: letter %d occurs %d times (length %d)"
                                % (k, len(occ), n))
        for k, occ in seen.items():
            if self.mode == ORIENTED and occ[0] == occ[1]:
                raise WordError("letter %d occurs twice with the same exponent in an oriented word" % k)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != len(order) or len(set(names)) != len(names):
                raise WordError("names do not match the alphabet")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_sequence(cls, seq, mode=ORIENTED, names=None):
        """Build a word from any signed labelling, renumbering letters by first appearance."""
        relabel = {}
        out = []
        for x in seq:
            x = int(x)
            if x == 0:
                raise WordError("letter 0 is not allowed")
            k = relabel.setdefault(abs(x), len(relabel) + 1)
            out.append(k if x > 0 else -k)
        return cls(tuple(out), mode, names)

    def __len__(self):
        return len(self.symbols)

    @property
    def length(self):
        return len(self.symbols)

    @property
    def edge_count(self):
        return len(self.symbols) // 2

    @property
    def alphabet_size(self):
        return len(self.symbols) // 2

    @property
    def letters(self):
        return tuple(Letter(abs(x), 1 if x > 0 else -1) for x in self.symbols)

    def partner(self):
        """``partner()[i]`` is the other position carrying the letter at position ``i``."""
        first = {}
        out = [0] * len(self.symbols)
        for i, x in enumerate(self.symbols):
            k = abs(x)
            if k in first:
                j = first[k]
                out[i], out[j] = j, i
            else:
                first[k] = i
        return out

    def rotate(self, k):
        """Cyclic shift: position ``i`` of the result holds position ``i + k`` of ``self``."""
        n = len(self.symbols)
        k %= n
        seq = self.symbols[k:] + self.symbols[:k]
        names = None
        if self.names is not None:
            order = []
            for x in seq:
                if self.names[abs(x) - 1] not in order:
                    order.append(self.names[abs(x) - 1])
            names = tuple(order)
        return WicksWord.from_sequence(seq, self.mode, names)

    def relabel(self, mapping):
        """Apply a signed bijection of the alphabet, given as ``{index: signed index}``."""
        seq = [mapping[abs(x)] * (1 if x > 0 else -1) for x in self.symbols]
        return WicksWord.from_sequence(seq, self.mode)

    def reverse(self):
        """Read the cycle backwards (the inverse word, up to relabelling)."""
        return WicksWord.from_sequence(self.symbols[::-1], self.mode)

    def __str__(self):
        return render_word(self)


def parse_word(text, mode=ORIENTED):
    """
    Parse whitespace separated tokens into a :class:`WicksWord`.

    >>> parse_word("a a", mode="nonoriented").symbols
    (1, 1)
    """
    tokens = text.split()
    if not tokens:
        raise WordError("empty word")
    index = {}
    names = []
    seq = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise WordError("bad token %r" % tok)
        name, inv = m.groups()
        if name not in index:
            index[name] = len(index) + 1
            names.append(name)
        seq.append(-index[name] if inv else index[name])
    return WicksWord(tuple(seq), mode, tuple(names))


def parse_signed(text, mode=ORIENTED):
    """Parse a signed-integer word, either ``"1 2 -1 -2"`` or a JSON array."""
    text = text.strip()
    try:
        if text.startswith("["):
            seq = json.loads(text)
        else:
            seq = [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise WordError("bad integer word: %s" % exc)
    if not seq:
        raise WordError("empty word")
    return WicksWord.from_sequence(seq, mode)


def read_word(text, mode=ORIENTED):
    """Accept either the apostrophe notation or a signed-integer list."""
    stripped = text.strip()
    if stripped.startswith("[") or re.match(r"^-?\d", stripped):
        return parse_signed(stripped, mode)
    return parse_word(stripped, mode)


def render_word(word):
    names = word.names or default_names(word.alphabet_size)
    return " ".join(names[abs(x) - 1] + ("'" if x < 0 else "") for x in word.symbols)


def word_to_json(word):
    return {"word": list(word.symbols), "mode": word.mode}


def word_from_json(obj):
    return WicksWord.from_sequence(obj["word"], obj.get("mode", ORIENTED))


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    condition: str
    positions: tuple
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def conditions(self):
        return sorted({v.condition for v in self.violations})

    def to_json(self):
        return {
            "ok": self.ok,
            "violations": [
                {"condition": v.condition, "positions": list(v.positions), "message": v.message}
                for v in self.violations
            ],
        }


def validate(word):
    """
    Check the Wicks conditions of ``word``'s mode.

    Positions in the report are 1-based. Condition ``iii`` covers both the
    inverse pair ``x y ... y' x'`` and, in nonoriented mode, a repeated
    factor ``x y ... x y`` whose letters both keep their exponent; either
    one glues two corners into a vertex of degree two.
    """
    w = word.symbols
    n = len(w)
    out = []

    if word.mode == ORIENTED:
        for x in set(abs(v) for v in w):
            if sorted(v for v in w if abs(v) == x) != [-x, x]:
                pos = tuple(i + 1 for i, v in enumerate(w) if abs(v) == x)
                out.append(Violation("i", pos, "letter %d lacks an inverse occurrence" % x))
    else:
        seen = {}
        for v in w:
            seen.setdefault(abs(v), []).append(v)
        if not any(a == b for a, b in seen.values()):
            out.append(Violation("i", (), "no letter appears twice with the same exponent"))

    factors = [(w[i], w[(i + 1) % n]) for i in range(n)] if n > 2 else [(w[0], w[1])]
    for i, (x, y) in enumerate(factors):
        if x == -y:
            out.append(Violation("ii", (i + 1, (i + 1) % n + 1), "cancellation"))

    if n > 2:
        where = {}
        for i, f in enumerate(factors):
            where.setdefault(f, []).append(i)
        for i, (x, y) in enumerate(factors):
            if x == -y:
                continue
            for j in where.get((-y, -x), ()):
                if j > i:
                    out.append(Violation("iii", (i + 1, (i + 1) % n + 1, j + 1, (j + 1) % n + 1),
                                         "substitution pair"))
            if word.mode == NONORIENTED:
                for j in where.get((x, y), ()):
                    if j > i:
                        out.append(Violation("iii", (i + 1, (i + 1) % n + 1, j + 1, (j + 1) % n + 1),
                                             "repeated factor"))
    return ValidationReport(tuple(out))


def is_valid(word):
    return validate(word).ok


# -- canonical form -----------------------------------------------------------


def normalize(seq):
    """
    Relabel by first appearance: the first occurrence of each letter becomes
    ``+k`` and the second keeps its exponent relative to the first.
    """
    first = {}
    out = []
    for x in seq:
        k = abs(x)
        if k in first:
            idx, s = first[k]
            out.append(idx if (x > 0) == (s > 0) else -idx)
        else:
            idx = len(first) + 1
            first[k] = (idx, x)
            out.append(idx)
    return tuple(out)


def sort_key(seq):
    """Total order on words: position-wise ``(index, sign)`` with ``+`` before ``-``."""
    return tuple((abs(x), 0 if x > 0 else 1) for x in seq)


@dataclass(frozen=True)
class CanonicalForm:
    symbols: tuple
    mode: str
    rotation: int = field(default=0, compare=False)
    reflected: bool = field(default=False, compare=False)
    relabeling: dict = field(default=None, compare=False, hash=False)

    @property
    def word(self):
        return WicksWord(self.symbols, self.mode)

    def __str__(self):
        return render_word(self.word)


def canonicalize(word, reflections=False, check=True):
    """
    Minimum over all rotations of the relabelled word.

    ``reflections=True`` also quotients by reading the cycle backwards.
    ``relabeling`` maps each original letter index to its signed image.
    """
    if check:
        report = validate(word)
        if not report.ok:
            raise WordError("not a Wicks form: violates %s" % ", ".join(report.conditions()))
    candidates = [(word.symbols, False)]
    if reflections:
        candidates.append((word.symbols[::-1], True))
    n = len(word.symbols)
    best = None
    for seq, refl in candidates:
        for k in range(n):
            rot = seq[k:] + seq[:k]
            key = sort_key(normalize(rot))
            if best is None or key < best[0]:
                best = (key, k, refl, rot)
    _, k, refl, rot = best
    image = normalize(rot)
    relabeling = {}
    for x, y in zip(rot, image):
        relabeling.setdefault(abs(x), y if x > 0 else -y)
    return CanonicalForm(image, word.mode, k, refl, relabeling)


def are_isomorphic(u, v, reflections=False):
    if u.mode != v.mode or len(u) != len(v):
        return False
    return canonicalize(u, reflections, check=False) == canonicalize(v, reflections, check=False)


def is_maximal(word, genus=None):
    """True iff the word has the largest length allowed by its genus."""
    if genus is None:
        from .gluing import glue
        genus = glue(word).genus
    if word.mode == ORIENTED:
        return len(word) == 6 * (2 * genus - 1)
    return genus > 1 and len(word) == 6 * (genus - 1)
