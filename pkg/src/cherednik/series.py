"""Graded and bigraded characters: Laurent polynomials / truncated series in q
(and t) with exact rational coefficients.

A GradedCharacter with ``truncation=None`` is an exact Laurent polynomial;
otherwise its coefficients are trusted only for exponents <= truncation, and
every comparison says so.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ZeroPolynomial

DEFAULT_TRUNCATION = 24


class GradedCharacter:
    """Map exponent -> rational coefficient, optionally truncated."""

    __slots__ = ("coeffs", "truncation")

    def __init__(self, coeffs=None, truncation=None):
        cs = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v and (truncation is None or e <= truncation):
                    cs[int(e)] = v
        self.coeffs = cs
        self.truncation = truncation

    # ---- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, truncation=None):
        return cls({}, truncation)

    @classmethod
    def one(cls, truncation=None):
        return cls({0: Fraction(1)}, truncation)

    @classmethod
    def monomial(cls, e, c=1, truncation=None):
        return cls({e: Fraction(c)}, truncation)

    @classmethod
    def geometric(cls, d, truncation):
        """Series of 1/(1 - q^d) to the given truncation order."""
        if d <= 0:
            raise ValueError("geometric factor needs d > 0")
        return cls({e: Fraction(1) for e in range(0, truncation + 1, d)},
                   truncation)

    # ---- basic data -------------------------------------------------------
    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, e):
        return self.coeffs.get(e, Fraction(0))

    def support(self):
        return sorted(self.coeffs)

    def min_exponent(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no lowest exponent")
        return min(self.coeffs)

    def max_exponent(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no highest exponent")
        return max(self.coeffs)

    def is_polynomial(self):
        return self.truncation is None

    def value_at_one(self):
        if self.truncation is not None:
            raise ValueError("value at 1 of a truncated series is undefined")
        return sum(self.coeffs.values(), Fraction(0))

    # ---- arithmetic --------------------------------------------------------
    def _join_trunc(self, other):
        ts = [t for t in (self.truncation, other.truncation) if t is not None]
        return min(ts) if ts else None

    def __add__(self, other):
        t = self._join_trunc(other)
        out = dict(self.coeffs)
        for e, v in other.coeffs.items():
            w = out.get(e, Fraction(0)) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        return GradedCharacter(out, t)

    def __neg__(self):
        return GradedCharacter({e: -v for e, v in self.coeffs.items()},
                               self.truncation)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        t = self._join_trunc(other)
        out = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = e1 + e2
                if t is not None and e > t:
                    continue
                w = out.get(e, Fraction(0)) + v1 * v2
                if w:
                    out[e] = w
                else:
                    out.pop(e, None)
        return GradedCharacter(out, t)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        return GradedCharacter({e: v * c for e, v in self.coeffs.items()},
                               self.truncation)

    def shift(self, k):
        """Multiply by q^k."""
        t = None if self.truncation is None else self.truncation + k
        return GradedCharacter({e + k: v for e, v in self.coeffs.items()}, t)

    def truncate(self, order):
        return GradedCharacter(self.coeffs, order)

    def series_inverse(self, truncation):
        """Inverse of a series with nonzero lowest term q^0 coefficient."""
        c0 = self.coeffs.get(0)
        if not c0:
            raise ZeroDivisionError("series inverse needs a unit constant term")
        inv = {0: 1 / c0}
        for e in range(1, truncation + 1):
            s = Fraction(0)
            for k, v in self.coeffs.items():
                if 0 < k <= e:
                    s += v * inv.get(e - k, Fraction(0))
            val = -s / c0
            if val:
                inv[e] = val
        return GradedCharacter(inv, truncation)

    # ---- comparison ---------------------------------------------------------
    def equals(self, other, up_to=None):
        """Exact equality; for truncated operands, up to the shared order."""
        t = self._join_trunc(other)
        if up_to is not None:
            t = up_to if t is None else min(t, up_to)
        if t is None:
            return self.coeffs == other.coeffs
        for e in set(self.coeffs) | set(other.coeffs):
            if e <= t and self[e] != other[e]:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.truncation == other.truncation and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.truncation, frozenset(self.coeffs.items())))

    # ---- formatting ----------------------------------------------------------
    def __repr__(self):
        t = "" if self.truncation is None else f"; O(q^{self.truncation + 1})"
        return f"GradedCharacter({self}{t})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            v = self.coeffs[e]
            if e == 0:
                parts.append(str(v))
            else:
                q = "q" if e == 1 else f"q^{e}"
                if v == 1:
                    parts.append(q)
                elif v == -1:
                    parts.append(f"-{q}")
                else:
                    parts.append(f"{v}*{q}")
        s = parts[0]
        for p in parts[1:]:
            s += p if p.startswith("-") else "+" + p
        return s

    def to_payload(self):
        """Wire form: {truncation, terms: [[q_exp, t_exp, num, den]]}."""
        terms = [[e, 0, v.numerator, v.denominator]
                 for e, v in sorted(self.coeffs.items())]
        trunc = "exact" if self.truncation is None else self.truncation
        return {"truncation": trunc, "terms": terms}


def product_of_geometric(degrees, truncation):
    """Series of prod_i 1/(1-q^{d_i})."""
    out = GradedCharacter.one(truncation)
    for d in degrees:
        out = out * GradedCharacter.geometric(d, truncation)
    return out


class BigradedCharacter:
    """Map (q exponent, t exponent) -> rational; truncated in q, exact in t."""

    __slots__ = ("coeffs", "truncation")

    def __init__(self, coeffs=None, truncation=None):
        cs = {}
        if coeffs:
            for (qe, te), v in coeffs.items():
                v = Fraction(v)
                if v and (truncation is None or qe <= truncation):
                    cs[(int(qe), int(te))] = v
        self.coeffs = cs
        self.truncation = truncation

    @classmethod
    def one(cls, truncation=None):
        return cls({(0, 0): Fraction(1)}, truncation)

    @classmethod
    def from_graded(cls, g, t_exp=0):
        return cls({(e, t_exp): v for e, v in g.coeffs.items()}, g.truncation)

    def __mul__(self, other):
        ts = [t for t in (self.truncation, other.truncation) if t is not None]
        t = min(ts) if ts else None
        out = {}
        for (q1, t1), v1 in self.coeffs.items():
            for (q2, t2), v2 in other.coeffs.items():
                key = (q1 + q2, t1 + t2)
                if t is not None and key[0] > t:
                    continue
                w = out.get(key, Fraction(0)) + v1 * v2
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return BigradedCharacter(out, t)

    def t_degree(self):
        return max((te for _qe, te in self.coeffs), default=0)

    def t_slice(self, te):
        """Coefficient of t^te, as a GradedCharacter."""
        return GradedCharacter(
            {qe: v for (qe, t2), v in self.coeffs.items() if t2 == te},
            self.truncation)

    def equals(self, other, up_to=None):
        ts = [t for t in (self.truncation, other.truncation) if t is not None]
        if up_to is not None:
            ts.append(up_to)
        t = min(ts) if ts else None
        keys = set(self.coeffs) | set(other.coeffs)
        for key in keys:
            if t is None or key[0] <= t:
                if self.coeffs.get(key, Fraction(0)) != other.coeffs.get(key, Fraction(0)):
                    return False
        return True

    def __repr__(self):
        return f"BigradedCharacter({len(self.coeffs)} terms)"

    def to_payload(self):
        terms = [[qe, te, v.numerator, v.denominator]
                 for (qe, te), v in sorted(self.coeffs.items())]
        trunc = "exact" if self.truncation is None else self.truncation
        return {"truncation": trunc, "terms": terms}


def b_invariant(f):
    """Lowest exponent with nonzero coefficient of a nonzero polynomial."""
    if not isinstance(f, GradedCharacter):
        raise TypeError("b_invariant expects a GradedCharacter")
    if not f.is_polynomial():
        raise ValueError("b-invariant of a truncated series is not defined")
    return f.min_exponent()
