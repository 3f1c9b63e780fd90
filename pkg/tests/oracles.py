"""
Independent reference implementations used by the tests.

Nothing here imports the package: corner orbits come from a union-find over
explicit side identifications, isomorphism is decided by building the letter
map directly, and the small censuses are plain filters over all words.
"""

import itertools
import random


def corner_orbits(word):
    """Vertices of the glued polygon as sets of corners (union-find)."""
    n = len(word)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    occ = {}
    for i, x in enumerate(word):
        occ.setdefault(abs(x), []).append(i)
    for k, (i, j) in occ.items():
        # side i joins corner i to corner i+1; the edge runs tail -> head
        ti, hi = (i, (i + 1) % n) if word[i] > 0 else ((i + 1) % n, i)
        tj, hj = (j, (j + 1) % n) if word[j] > 0 else ((j + 1) % n, j)
        union(ti, tj)
        union(hi, hj)
    orbits = {}
    for c in range(n):
        orbits.setdefault(find(c), set()).add(c)
    return list(orbits.values())


def euler_genus(word, oriented):
    v = len(corner_orbits(word))
    e = len(word) // 2
    chi = v - e + 1
    return (2 - chi) / 2 if oriented else 2 - chi


def letter_map(u, v):
    """Signed letter bijection sending ``u`` to ``v`` position-wise, or None."""
    phi = {}
    for x, y in zip(u, v):
        img = y if x > 0 else -y
        if phi.setdefault(abs(x), img) != img:
            return None
    images = [abs(t) for t in phi.values()]
    if len(set(images)) != len(images):
        return None
    return phi


def isomorphic(u, v):
    if len(u) != len(v):
        return False
    n = len(u)
    return any(letter_map(u, v[k:] + v[:k]) is not None for k in range(n))


def rotation_order(u):
    n = len(u)
    return sum(1 for k in range(n) if letter_map(u, u[k:] + u[:k]) is not None)


def is_wicks(word, oriented):
    """The defining conditions, written out directly from the definitions."""
    n = len(word)
    letters = {abs(x) for x in word}
    for a in letters:
        pos = [x for x in word if abs(x) == a]
        if len(pos) != 2:
            return False
        if oriented and pos[0] != -pos[1]:
            return False
    if not oriented and not any([x for x in word if abs(x) == a][0] == [x for x in word if abs(x) == a][1]
                                for a in letters):
        return False
    factors = [(word[i], word[(i + 1) % n]) for i in range(n)]
    if any(x == -y for x, y in factors):
        return False
    idx = list(range(n))
    for i in idx:
        x, y = factors[i]
        for j in idx:
            if j == i:
                continue
            if factors[j] == (-y, -x):
                return False
            if not oriented and factors[j] == (x, y) and {i, (i + 1) % n} != {j, (j + 1) % n}:
                return False
    return True


def all_words(length, oriented):
    """Every signed word of the given length with each of ``length // 2`` letters twice."""
    e = length // 2
    positions = list(range(length))

    def matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            for m in matchings(rest[1:i] + rest[i + 1:]):
                yield [(a, b)] + m

    for m in matchings(positions):
        sign_choices = [(1, -1)] if oriented else [(1, 1), (1, -1)]
        for signs in itertools.product(sign_choices, repeat=e):
            w = [0] * length
            for k, ((i, j), (si, sj)) in enumerate(zip(m, signs), start=1):
                w[i] = si * k
                w[j] = sj * k
            yield tuple(w)


def brute_census(length, oriented):
    """Isomorphism classes of trivalent Wicks forms of the given length, by plain filtering."""
    reps = []
    for w in all_words(length, oriented):
        if not is_wicks(w, oriented):
            continue
        if any(len(o) != 3 for o in corner_orbits(w)):
            continue
        if not any(isomorphic(w, r) for r in reps):
            reps.append(w)
    return reps


def random_word(rng, e, oriented):
    """A uniformly random pairing with random exponents (not necessarily a Wicks form)."""
    n = 2 * e
    pos = list(range(n))
    rng.shuffle(pos)
    w = [0] * n
    for k in range(e):
        i, j = pos[2 * k], pos[2 * k + 1]
        s = rng.choice((1, -1))
        w[i] = s * (k + 1)
        if oriented:
            w[j] = -s * (k + 1)
        else:
            w[j] = rng.choice((1, -1)) * (k + 1)
    return tuple(w)


def random_wicks(rng, e, oriented, tries=100000):
    for _ in range(tries):
        w = random_word(rng, e, oriented)
        if is_wicks(w, oriented):
            return w
    raise RuntimeError("no Wicks form found")


def random_relabel(rng, w):
    letters = sorted({abs(x) for x in w})
    images = letters[:]
    rng.shuffle(images)
    phi = {a: b * rng.choice((1, -1)) for a, b in zip(letters, images)}
    return tuple(phi[abs(x)] * (1 if x > 0 else -1) for x in w)


def random_rotation(rng, w):
    k = rng.randrange(len(w))
    return w[k:] + w[:k]


def pattern_signs(word):
    """
    Signs of loop-free trivalent vertices read off the cyclic factors.

    With the three edges reoriented to point at the vertex, the corners give
    factors ``a b'``, ``b c'``, ``c a'``; the vertex is positive when they
    occur in this cyclic order along the word and negative when they occur
    as ``a b'``, ``c a'``, ``b c'``. Returns ``{frozenset(corners): sign}``.
    """
    n = len(word)
    orbits = corner_orbits(word)
    vertex_of = {}
    for i, o in enumerate(orbits):
        for c in o:
            vertex_of[c] = i
    ends = {}
    for i, x in enumerate(word):
        tail, head = (i, (i + 1) % n) if x > 0 else ((i + 1) % n, i)
        ends[abs(x)] = (vertex_of[tail], vertex_of[head])
    out = {}
    for vid, o in enumerate(orbits):
        if len(o) != 3:
            continue
        letters = {abs(word[c - 1]) for c in o} | {abs(word[c]) for c in o}
        if len(letters) != 3 or any(ends[a][0] == ends[a][1] for a in letters):
            continue
        toward = {a: (1 if ends[a][1] == vid else -1) for a in letters}
        pairs = []
        for c in sorted(o):
            x, y = word[c - 1], word[c]
            # rewritten in the reoriented letters, the factor must read A B'
            ex = (1 if x > 0 else -1) * toward[abs(x)]
            ey = (1 if y > 0 else -1) * toward[abs(y)]
            assert ex == 1 and ey == -1
            pairs.append((abs(x), abs(y)))
        p1, p2, p3 = pairs
        if p1[1] == p2[0] and p2[1] == p3[0] and p3[1] == p1[0]:
            out[frozenset(o)] = "positive"
        elif p1[1] == p3[0] and p3[1] == p2[0] and p2[1] == p1[0]:
            out[frozenset(o)] = "negative"
        else:
            raise AssertionError("corners do not form a chain")
    return out
