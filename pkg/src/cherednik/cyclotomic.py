"""Exact scalars: arbitrary-precision rationals and cyclotomic numbers.

The coefficient field of every computation is Q(zeta_N) for a conductor N
fixed per reflection group (plain rationals when N <= 2).  A ``Cyc`` is a
sparse polynomial in zeta_N, kept reduced modulo the N-th cyclotomic
polynomial, so representation and arithmetic are canonical and exact.  No
floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

# Exact rational scalar used throughout the package.
Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    """Quotient and remainder of dense Fraction polynomials (ascending)."""
    a = [Fraction(c) for c in a]
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / Fraction(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _poly_trim(q), _poly_trim(a)


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _poly_trim(out)


def cyclotomic_polynomial(n):
    """Coefficients (ascending, Fractions) of the n-th cyclotomic polynomial."""
    p = [-_ONE] + [_ZERO] * (n - 1) + [_ONE]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            p, r = _poly_divmod(p, cyclotomic_polynomial(d))
            if r:
                raise ArithmeticError("cyclotomic division left a remainder")
    return p


_REDUCTION_CACHE = {}


def _reduction(n):
    """Per-conductor data: (phi(n), table mapping exponent -> reduced dict)."""
    if n not in _REDUCTION_CACHE:
        phi = cyclotomic_polynomial(n)
        deg = len(phi) - 1
        table = {}
        if deg < n:
            # zeta^deg = -(phi_0 + phi_1 zeta + ...)
            base = {i: -phi[i] for i in range(deg) if phi[i]}
            table[deg] = base
            for k in range(deg + 1, n):
                prev = table[k - 1]
                nxt = {}
                for e, c in prev.items():
                    if e + 1 == deg:
                        for e2, c2 in table[deg].items():
                            nxt[e2] = nxt.get(e2, _ZERO) + c * c2
                    else:
                        nxt[e + 1] = nxt.get(e + 1, _ZERO) + c
                table[k] = {e: c for e, c in nxt.items() if c}
        _REDUCTION_CACHE[n] = (deg, table)
    return _REDUCTION_CACHE[n]


class Cyc:
    """An element of Q(zeta_N), reduced mod the N-th cyclotomic polynomial."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs=None, _reduced=False):
        self.n = n
        if coeffs is None:
            self.c = {}
        elif _reduced:
            self.c = coeffs
        else:
            deg, table = _reduction(n)
            out = {}
            for e, v in coeffs.items():
                v = Fraction(v)
                if not v:
                    continue
                e %= n
                if e < deg:
                    out[e] = out.get(e, _ZERO) + v
                else:
                    for e2, c2 in table[e].items():
                        out[e2] = out.get(e2, _ZERO) + v * c2
            self.c = {e: v for e, v in out.items() if v}

    # ---- constructors -------------------------------------------------
    @classmethod
    def rational(cls, value, n=1):
        v = Fraction(value)
        return cls(n, {0: v} if v else {}, _reduced=True)

    @classmethod
    def zeta(cls, n, k=1):
        return cls(n, {k % n: _ONE})

    @classmethod
    def of(cls, value, n):
        """Coerce an int/Fraction/Cyc into Q(zeta_n)."""
        if isinstance(value, Cyc):
            if value.n == n:
                return value
            if value.is_rational():
                return cls.rational(value.rational_value(), n)
            if n % value.n == 0:
                k = n // value.n
                return cls(n, {e * k: v for e, v in value.c.items()})
            raise ValueError(f"cannot coerce Q(zeta_{value.n}) into Q(zeta_{n})")
        return cls.rational(value, n)

    # ---- predicates ----------------------------------------------------
    def is_rational(self):
        return not self.c or (len(self.c) == 1 and 0 in self.c)

    def rational_value(self):
        if not self.c:
            return _ZERO
        if len(self.c) == 1 and 0 in self.c:
            return self.c[0]
        raise ValueError(f"{self!r} is not rational")

    def __bool__(self):
        return bool(self.c)

    # ---- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.n == self.n:
                return other
            if other.is_rational():
                return Cyc.rational(other.rational_value(), self.n)
            if self.is_rational():
                return None  # handled by caller re-dispatch
            raise ValueError("mixed conductors")
        if isinstance(other, (int, Fraction)):
            return Cyc.rational(other, self.n)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyc):
                return other + self  # self rational, other's field wins
            return NotImplemented
        out = dict(self.c)
        for e, v in o.c.items():
            w = out.get(e, _ZERO) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        return Cyc(self.n, out, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, {e: -v for e, v in self.c.items()}, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyc):
                return -(other - self)
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyc):
                return other * self
            return NotImplemented
        a, b = self.c, o.c
        if not a or not b:
            return Cyc(self.n, {}, _reduced=True)
        if len(a) == 1 and 0 in a:
            v = a[0]
            return Cyc(self.n, {e: v * w for e, w in b.items()}, _reduced=True)
        if len(b) == 1 and 0 in b:
            v = b[0]
            return Cyc(self.n, {e: v * w for e, w in a.items()}, _reduced=True)
        out = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                out[e] = out.get(e, _ZERO) + v1 * v2
        return Cyc(self.n, out)

    __rmul__ = __mul__

    def inverse(self):
        if not self.c:
            raise ZeroDivisionError("division by zero cyclotomic number")
        if self.is_rational():
            return Cyc.rational(1 / self.c[0], self.n)
        # extended Euclid in Q[x] against the cyclotomic polynomial
        phi = cyclotomic_polynomial(self.n)
        deg = len(phi) - 1
        a = [self.c.get(i, _ZERO) for i in range(deg)]
        _poly_trim(a)
        r0, r1 = phi, a
        s0, s1 = [], [_ONE]
        while True:
            q, r = _poly_divmod(r0, r1)
            if not r:
                break
            s = [x for x in s0]
            qs1 = _poly_mul(q, s1)
            ln = max(len(s), len(qs1))
            s = [(s[i] if i < len(s) else _ZERO) - (qs1[i] if i < len(qs1) else _ZERO)
                 for i in range(ln)]
            r0, r1, s0, s1 = r1, r, s1, _poly_trim(s)
        if len(r1) != 1:
            raise ArithmeticError("element not invertible mod cyclotomic polynomial")
        inv_lead = 1 / r1[0]
        return Cyc(self.n, {i: v * inv_lead for i, v in enumerate(s1) if v})

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyc):
                return Cyc.of(self, other.n) / other
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Cyc.rational(other, self.n) / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyc.rational(1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        """Complex conjugation zeta -> zeta^{-1}."""
        return Cyc(self.n, {(-e) % self.n: v for e, v in self.c.items()})

    # ---- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        if isinstance(other, Cyc):
            if self.n == other.n:
                return self.c == other.c
            if self.is_rational() and other.is_rational():
                return self.rational_value() == other.rational_value()
            if self.n % other.n == 0 or other.n % self.n == 0:
                m = self.n * other.n // gcd(self.n, other.n)
                return Cyc.of(self, m).c == Cyc.of(other, m).c
            return False
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.n, frozenset(self.c.items())))

    # ---- formatting ----------------------------------------------------
    def __repr__(self):
        return f"Cyc({self.n}, {self})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                parts.append(str(v))
            else:
                z = "z" if e == 1 else f"z^{e}"
                if v == 1:
                    parts.append(z)
                elif v == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{v}*{z}")
        s = parts[0]
        for p in parts[1:]:
            s += p if p.startswith("-") else "+" + p
        return s

    # ---- wire format -----------------------------------------------------
    def literals(self):
        """[[k, num, den], ...] triples meaning sum (num/den) * zeta^k."""
        return [[e, v.numerator, v.denominator] for e, v in sorted(self.c.items())]

    @classmethod
    def from_literals(cls, n, triples):
        return cls(n, {int(k): Fraction(int(num), int(den)) for k, num, den in triples})


def euler_phi(n):
    deg, _ = _reduction(n)
    return deg
