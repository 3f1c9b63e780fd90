"""
Exact masses and counts of oriented maximal Wicks forms, and the radii of
the maximal embedded disk and the minimal covering disk.

All masses are :class:`fractions.Fraction` and all counts are ``int``.

>>> counts(2).M1
9
"""

import csv
import io
import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

log = logging.getLogger(__name__)

PROVEN, OPEN, NOT_COUNTING = "proven", "open", "not-surface-counting"


def _fact_ratio(top, bottom_a, bottom_b):
    """``top! / (bottom_a! bottom_b!)``, or ``None`` when an argument is negative."""
    if top < 0 or bottom_a < 0 or bottom_b < 0:
        return None
    return Fraction(factorial(top), factorial(bottom_a) * factorial(bottom_b))


def _check_genus(g):
    if g < 1:
        raise ValueError("genus must be >= 1, got %d" % g)


def m1(g):
    _check_genus(g)
    return 2 * Fraction(1, 12) ** g * _fact_ratio(6 * g - 5, g, 3 * g - 3)


def m2_term(g, r):
    """Mass of the forms whose involution reverses exactly ``r`` edges."""
    _check_genus(g)
    if r < 0 or (2 * g + 1 - r) % 4:
        return Fraction(0)
    f = (2 * g + 1 - r) // 4
    if f < 0:
        return Fraction(0)
    ratio = _fact_ratio(6 * f + 2 * r - 5, f, 3 * f + r - 3)
    if ratio is None:
        log.warning("negative factorial in m2 term g=%d r=%d, taken as 0", g, r)
        return Fraction(0)
    return Fraction(2, 2) * Fraction(4, 12) ** f / factorial(r) * ratio


def m3_term(g, s, t):
    """Mass of the forms whose order-3 element fixes ``s`` positive and ``t`` negative vertices."""
    _check_genus(g)
    if s < 0 or t < 0 or (g + 1 - s - t) % 3:
        return Fraction(0)
    f = (g + 1 - s - t) // 3
    if f < 0 or (s - (2 * g + 1)) % 3 or (t - 2 * g) % 3:
        return Fraction(0)
    if g == 1:
        return Fraction(1, 6) if (s, t) == (0, 2) else Fraction(0)
    ratio = _fact_ratio(6 * f + 2 * s + 2 * t - 5, f, 3 * f + s + t - 3)
    if ratio is None:
        log.warning("negative factorial in m3 term g=%d s=%d t=%d, taken as 0", g, s, t)
        return Fraction(0)
    return (Fraction(2, 3) * Fraction(9, 12) ** f
            / (factorial(s) * factorial(t)) * ratio)


def m6_term(g, r, s, t):
    """
    Mass of the order-6 family labelled ``(3r; 2s, 2t)``.

    Takes the unscaled ``r, s, t``; see :func:`m6_label` and :func:`m6_params`.
    """
    _check_genus(g)
    if min(r, s, t) < 0 or (2 * g + 5 - 3 * r - 4 * s - 4 * t) % 12:
        return Fraction(0)
    f = (2 * g + 5 - 3 * r - 4 * s - 4 * t) // 12
    if f < 0 or (2 * s - (2 * g + 1)) % 3 or (2 * t - 2 * g) % 3:
        return Fraction(0)
    if g == 1:
        return Fraction(1, 6) if (r, s, t) == (1, 0, 1) else Fraction(0)
    ratio = _fact_ratio(6 * f + 2 * r + 2 * s + 2 * t - 5, f, 3 * f + r + s + t - 3)
    if ratio is None:
        log.warning("negative factorial in m6 term g=%d r=%d s=%d t=%d, taken as 0", g, r, s, t)
        return Fraction(0)
    return (Fraction(2, 6) * Fraction(36, 12) ** f
            / (factorial(r) * factorial(s) * factorial(t)) * ratio)


def m6_label(r, s, t):
    return (3 * r, 2 * s, 2 * t)


def m6_params(label):
    r3, s2, t2 = label
    if r3 % 3 or s2 % 2 or t2 % 2:
        raise ValueError("%r is not an order-6 class label" % (label,))
    return (r3 // 3, s2 // 2, t2 // 2)


def m2_support(g):
    return [r for r in range(0, 2 * g + 2) if m2_term(g, r)]


def m3_support(g):
    return [(s, t) for s in range(g + 2) for t in range(g + 2 - s) if m3_term(g, s, t)]


def m6_support(g):
    return [(r, s, t)
            for r in range(0, (2 * g + 5) // 3 + 1)
            for s in range(0, (2 * g + 5 - 3 * r) // 4 + 1)
            for t in range(0, (2 * g + 5 - 3 * r - 4 * s) // 4 + 1)
            if m6_term(g, r, s, t)]


def negative_factorial_cases(g):
    """Index tuples inside the stated supports whose general formula hits a negative factorial."""
    hits = []
    for r in range(0, 2 * g + 2):
        if (2 * g + 1 - r) % 4 == 0:
            f = (2 * g + 1 - r) // 4
            if min(6 * f + 2 * r - 5, 3 * f + r - 3) < 0:
                hits.append(("m2", g, r))
    for s in range(g + 2):
        for t in range(g + 2 - s):
            if ((g + 1 - s - t) % 3 == 0 and (s - 2 * g - 1) % 3 == 0 and (t - 2 * g) % 3 == 0):
                f = (g + 1 - s - t) // 3
                if min(6 * f + 2 * s + 2 * t - 5, 3 * f + s + t - 3) < 0:
                    hits.append(("m3", g, s, t))
    for r in range(0, (2 * g + 5) // 3 + 1):
        for s in range(0, (2 * g + 5 - 3 * r) // 4 + 1):
            for t in range(0, (2 * g + 5 - 3 * r - 4 * s) // 4 + 1):
                rest = 2 * g + 5 - 3 * r - 4 * s - 4 * t
                if rest % 12 == 0 and (2 * s - 2 * g - 1) % 3 == 0 and (2 * t - 2 * g) % 3 == 0:
                    f = rest // 12
                    if min(6 * f + 2 * r + 2 * s + 2 * t - 5, 3 * f + r + s + t - 3) < 0:
                        hits.append(("m6", g, r, s, t))
    return hits


def masses(g):
    _check_genus(g)
    return (
        m1(g),
        sum((m2_term(g, r) for r in m2_support(g)), Fraction(0)),
        sum((m3_term(g, s, t) for s, t in m3_support(g)), Fraction(0)),
        sum((m6_term(g, *p) for p in m6_support(g)), Fraction(0)),
    )


def disk_radii(g, dps=None):
    """
    ``(beta_g, R_g, C_g)``: angle ``pi/(12g-6)``, maximal embedded disk radius
    and minimal covering disk radius. Floats by default; with ``dps`` the
    values are ``mpmath.mpf`` at that many decimal digits.
    """
    if g < 2:
        raise ValueError("radii are defined for genus >= 2, got %d" % g)
    if dps is None:
        beta = math.pi / (12 * g - 6)
        return (beta,
                math.acosh(1 / (2 * math.sin(beta))),
                math.acosh(1 / (math.sqrt(3) * math.tan(beta))))
    import mpmath
    with mpmath.workdps(dps + 5):
        beta = mpmath.pi / (12 * g - 6)
        R = mpmath.acosh(1 / (2 * mpmath.sin(beta)))
        C = mpmath.acosh(1 / (mpmath.sqrt(3) * mpmath.tan(beta)))
    return beta, R, C


@dataclass(frozen=True)
class CensusRow:
    genus: int
    m1: Fraction
    m2: Fraction
    m3: Fraction
    m6: Fraction
    M1: int
    M2: int
    M3: int
    M6: int
    n1: int
    n2: int
    n3: int
    n6: int
    bijection_status: str
    R: Optional[float] = None
    C: Optional[float] = None

    def M(self, d):
        return {1: self.M1, 2: self.M2, 3: self.M3, 6: self.M6}.get(d, 0)

    def to_json(self):
        return {
            "genus": self.genus,
            "m1": _frac_str(self.m1), "m2": _frac_str(self.m2),
            "m3": _frac_str(self.m3), "m6": _frac_str(self.m6),
            "M1": str(self.M1), "M2": str(self.M2), "M3": str(self.M3), "M6": str(self.M6),
            "n1": str(self.n1), "n2": str(self.n2), "n3": str(self.n3), "n6": str(self.n6),
            "bijection_status": self.bijection_status,
            "R": None if self.R is None else repr(self.R),
            "C": None if self.C is None else repr(self.C),
        }


FIELDS = ["genus", "m1", "m2", "m3", "m6", "M1", "M2", "M3", "M6",
          "n1", "n2", "n3", "n6", "bijection_status", "R", "C"]


def _frac_str(q):
    return "%d/%d" % (q.numerator, q.denominator)


def _as_count(q, name, g):
    if q.denominator != 1 or q < 0:
        raise ArithmeticError("%s for genus %d is not a nonnegative integer: %s" % (name, g, q))
    return int(q)


def counts(g):
    a, b, c, d = masses(g)
    M1 = _as_count(a + b + 2 * c + 2 * d, "M1", g)
    M2 = _as_count(2 * b + 4 * d, "M2", g)
    M3 = _as_count(3 * c + 3 * d, "M3", g)
    M6 = _as_count(6 * d, "M6", g)
    n6 = M6
    n3 = _as_count(Fraction(M3 - M6), "n3", g)
    n2 = _as_count(Fraction(M2 - M6), "n2", g)
    n1 = _as_count(Fraction(M1 - M2 - M3 + M6), "n1", g)
    if g == 1:
        status = NOT_COUNTING
    elif g == 3:
        status = OPEN
    else:
        status = PROVEN
    R = C = None
    if g >= 2:
        _, R, C = disk_radii(g)
    return CensusRow(g, a, b, c, d, M1, M2, M3, M6, n1, n2, n3, n6, status, R, C)


def census_table(g_min, g_max):
    if g_min > g_max:
        raise ValueError("empty genus range %d..%d" % (g_min, g_max))
    return [counts(g) for g in range(g_min, g_max + 1)]


def table_csv(rows):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        rec = row.to_json()
        writer.writerow({k: "" if rec[k] is None else rec[k] for k in FIELDS})
    return buf.getvalue()


def table_json(rows):
    return json.dumps([row.to_json() for row in rows], indent=2)


PUBLISHED_M1 = {
    2: 9,
    4: 1349005,
    5: 2169056374,
    6: 5849686966988,
    7: 23808202021448662,
    8: 136415042681045401661,
    9: 1047212810636411989605202,
    10: 10378926166167927379808819918,
    11: 129040245485216017874985276329588,
    12: 1966895941808403901421322270340417352,
    13: 36072568973390464496963227953956789552404,
    14: 783676560946907841153290887110277871996495020,
    15: 19903817294929565349602352185144632327980494486370,
}
