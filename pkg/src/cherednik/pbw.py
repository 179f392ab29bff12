"""Normal-form arithmetic in the rational Cherednik algebra at t = 0.

Elements are finite sums of normal-ordered monomials x^a * w * y^b with
exact coefficients.  Multiplication straightens every y leftward past x's
through the defining commutation relation

    [y, x] = sum_s c(s) * x(alpha_s) * alpha_s^vee(y) / alpha_s^vee(alpha_s) * s

and past group elements through w * y * w^{-1} = w(y); each swap strictly
lowers the y-to-the-left disorder, so straightening terminates.  The
commutator of y with a monomial is computed by the recursion
[y, x*f] = [y, x]*f + x*[y, f] and cached.

The x-degree minus y-degree grading is tracked exactly; products beyond the
per-factor degree cap raise instead of truncating.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction

from .errors import DegreeCapExceeded
from .linalg import ONE, ZERO
from .polys import pmul

DEFAULT_DEGREE_CAP = 12


class Parameter:
    """A W-equivariant function on reflections: class label -> scalar."""

    def __init__(self, group, values, claimed_generic=False):
        self.group = group
        labels = set(group.reflection_class_labels if group.reflections
                     else [])
        got = set(values)
        if labels != got:
            raise ValueError(
                f"parameter must assign exactly the reflection classes "
                f"{sorted(labels)}, got {sorted(got)}")
        self.values = dict(values)
        self.claimed_generic = claimed_generic

    @classmethod
    def zero(cls, group):
        return cls(group, {lbl: ZERO for lbl in _labels(group)})

    @classmethod
    def constant(cls, group, value):
        value = Fraction(value)
        return cls(group, {lbl: value for lbl in _labels(group)})

    @classmethod
    def generic(cls, group, seed=0):
        """Seeded random rationals with distinct large numerators."""
        rng = random.Random(seed)
        used = set()
        values = {}
        for lbl in _labels(group):
            while True:
                num = 10007 + rng.randrange(90000)
                if num not in used:
                    used.add(num)
                    break
            values[lbl] = Fraction(num, 1)
        return cls(group, values, claimed_generic=True)

    @classmethod
    def from_map(cls, group, mapping):
        return cls(group, {lbl: mapping[lbl] for lbl in _labels(group)})

    def value(self, class_label):
        return self.values[class_label]

    def is_zero(self):
        return all(not v for v in self.values.values())

    def restrict_to(self, subgroup):
        """The restriction c' to a reflection subgroup of the same group."""
        out = {}
        for r in subgroup.reflections:
            lbl = subgroup.ambient_reflection_class(r)
            v = self.values[lbl]
            prev = out.get(r.class_label)
            if prev is not None and prev != v:
                raise ValueError("parameter is not constant on a subgroup "
                                 "reflection class")
            out[r.class_label] = v
        return Parameter(subgroup, out, claimed_generic=self.claimed_generic)

    def key(self):
        return tuple(sorted((lbl, _scalar_key(v))
                            for lbl, v in self.values.items()))

    def payload(self):
        out = {}
        for lbl, v in sorted(self.values.items()):
            if isinstance(v, Fraction):
                out[lbl] = [v.numerator, v.denominator]
            else:
                out[lbl] = v.literals()
        return out

    def __repr__(self):
        vals = ", ".join(f"{k}={v}" for k, v in sorted(self.values.items()))
        return f"Parameter({vals})"


def _labels(group):
    return group.reflection_class_labels if group.reflections else []


def _scalar_key(v):
    if isinstance(v, Fraction):
        return (0, v.numerator, v.denominator)
    return tuple(sorted((e, c.numerator, c.denominator)
                        for e, c in v.c.items()))


class PBWElement:
    """A finite linear combination of normal-ordered monomials x^a w y^b."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        t = {}
        if terms:
            for key, v in terms.items():
                if v:
                    t[key] = v
        self.terms = t

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements live over different (group, parameter)")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, ZERO) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return PBWElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or not isinstance(other, PBWElement):
            return PBWElement(self.algebra,
                              {k: v * other for k, v in self.terms.items()})
        self._check(other)
        return self.algebra.multiply(self, other)

    def __rmul__(self, scalar):
        return PBWElement(self.algebra,
                          {k: scalar * v for k, v in self.terms.items()})

    def __pow__(self, k):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((k, _scalar_key(v) if not isinstance(v, Fraction)
                               else v) for k, v in self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        """Grading degree |a| - |b| for homogeneous elements, else None."""
        degs = {sum(a) - sum(b) for (a, _w, b) in self.terms}
        if not degs:
            return 0
        if len(degs) > 1:
            return None
        return degs.pop()

    def max_polynomial_degree(self):
        return max((sum(a) + sum(b) for (a, _w, b) in self.terms), default=0)

    def y_symbol(self):
        """Terms of maximal total y-degree (top symbol of the y-filtration)."""
        if not self.terms:
            return PBWElement(self.algebra, {})
        top = max(sum(b) for (_a, _w, b) in self.terms)
        return PBWElement(self.algebra,
                          {k: v for k, v in self.terms.items()
                           if sum(k[2]) == top})

    def __str__(self):
        if not self.terms:
            return "0"
        alg = self.algebra
        parts = []
        for (a, w, b) in sorted(self.terms):
            v = self.terms[(a, w, b)]
            factors = []
            for i, k in enumerate(a):
                if k:
                    factors.append(f"x{i + 1}" + (f"^{k}" if k > 1 else ""))
            if w != alg.group._identity:
                factors.append(f"w{w}")
            for i, k in enumerate(b):
                if k:
                    factors.append(f"y{i + 1}" + (f"^{k}" if k > 1 else ""))
            body = "*".join(factors) if factors else "1"
            if v == 1:
                parts.append(body)
            elif v == -1:
                parts.append(f"-{body}")
            else:
                sv = str(v)
                if not isinstance(v, Fraction) and len(v.c) > 1:
                    sv = f"({sv})"
                parts.append(f"{sv}*{body}")
        s = parts[0]
        for p in parts[1:]:
            s += p if p.startswith("-") else "+" + p
        return s

    def __repr__(self):
        return f"PBW({self})"


class CherednikAlgebra:
    """Normal-form arithmetic over a fixed (group, parameter) pair."""

    def __init__(self, group, param, degree_cap=DEFAULT_DEGREE_CAP):
        if param.group is not group:
            raise ValueError("parameter was built for a different group")
        self.group = group
        self.param = param
        self.n = group.n
        self.degree_cap = degree_cap
        self._zero_exp = (0,) * self.n
        # reflection data with parameter values attached
        self.refl_data = [(r.element, r.alpha, r.alpha_vee, r.pairing(),
                           param.value(r.class_label))
                          for r in group.reflections]
        self._comm_cache = {}
        self._ybxc_cache = {}
        self._xact_cache = {}
        self._yact_cache = {}

    # ---- constructors ------------------------------------------------------
    def zero(self):
        return PBWElement(self, {})

    def scalar(self, c):
        c = Fraction(c) if isinstance(c, int) else c
        return PBWElement(
            self, {(self._zero_exp, self.group._identity, self._zero_exp): c})

    def one(self):
        return self.scalar(ONE)

    def x(self, i, power=1):
        e = [0] * self.n
        e[i] = power
        return PBWElement(
            self, {(tuple(e), self.group._identity, self._zero_exp): ONE})

    def y(self, i, power=1):
        e = [0] * self.n
        e[i] = power
        return PBWElement(
            self, {(self._zero_exp, self.group._identity, tuple(e)): ONE})

    def grp(self, widx):
        return PBWElement(self, {(self._zero_exp, widx, self._zero_exp): ONE})

    def monomial(self, a, widx, b, coeff=ONE):
        return PBWElement(self, {(tuple(a), widx, tuple(b)): coeff})

    def symmetrizer(self):
        """The averaging idempotent e = |W|^{-1} sum_w w."""
        c = Fraction(1, self.group.order)
        return PBWElement(self, {(self._zero_exp, w, self._zero_exp): c
                                 for w in range(self.group.order)})

    def x_vector(self, coeffs):
        out = self.zero()
        for i, c in enumerate(coeffs):
            if c:
                out = out + self.x(i) * c
        return out

    def y_vector(self, coeffs):
        out = self.zero()
        for i, c in enumerate(coeffs):
            if c:
                out = out + self.y(i) * c
        return out

    # ---- group action on monomials ------------------------------------------
    def _act_x(self, widx, mono):
        """w . x^mono as a polynomial in the x variables."""
        key = (widx, mono)
        out = self._xact_cache.get(key)
        if out is None:
            a = self.group.hstar_matrix(widx)
            out = {self._zero_exp: ONE}
            for j, k in enumerate(mono):
                for _ in range(k):
                    img = {}
                    for i in range(self.n):
                        if a[i][j]:
                            e = [0] * self.n
                            e[i] = 1
                            img[tuple(e)] = a[i][j]
                    out = pmul(out, img)
            self._xact_cache[key] = out
        return out

    def _act_y(self, widx, mono):
        """w . y^mono as a polynomial in the y variables."""
        key = (widx, mono)
        out = self._yact_cache.get(key)
        if out is None:
            a = self.group.matrix(widx)
            out = {self._zero_exp: ONE}
            for j, k in enumerate(mono):
                for _ in range(k):
                    img = {}
                    for i in range(self.n):
                        if a[i][j]:
                            e = [0] * self.n
                            e[i] = 1
                            img[tuple(e)] = a[i][j]
                    out = pmul(out, img)
            self._yact_cache[key] = out
        return out

    # ---- the defining commutator -----------------------------------------------
    def commutator_yx(self, yvec, xvec):
        """[y, x] for vectors y in h, x in h*: a group-algebra element."""
        terms = {}
        for (widx, alpha, alpha_vee, pairing, c) in self.refl_data:
            if not c:
                continue
            x_of_alpha = sum((xv * av for xv, av in zip(xvec, alpha) if xv),
                             ZERO)
            avee_of_y = sum((bv * yv for bv, yv in zip(alpha_vee, yvec) if yv),
                            ZERO)
            coeff = c * x_of_alpha * avee_of_y / pairing
            if coeff:
                key = (self._zero_exp, widx, self._zero_exp)
                w = terms.get(key, ZERO) + coeff
                if w:
                    terms[key] = w
                else:
                    terms.pop(key, None)
        return PBWElement(self, terms)

    def _comm_mono(self, j, a):
        """[y_j, x^a] as {(x-monomial, w): coeff}; empty for |a| = 0."""
        key = (j, a)
        out = self._comm_cache.get(key)
        if out is not None:
            return out
        if not any(a):
            out = {}
        else:
            i = next(t for t, k in enumerate(a) if k)
            rest = list(a)
            rest[i] -= 1
            rest = tuple(rest)
            out = {}
            # x_i * [y_j, x^rest]
            for (e, w), c in self._comm_mono(j, rest).items():
                e2 = list(e)
                e2[i] += 1
                out[(tuple(e2), w)] = out.get((tuple(e2), w), ZERO) + c
            # [y_j, x_i] * x^rest = sum_s kappa * (s . x^rest) * s
            for (widx, alpha, alpha_vee, pairing, c) in self.refl_data:
                if not c or not alpha[i]:
                    continue
                kappa = c * alpha[i] * alpha_vee[j] / pairing
                if not kappa:
                    continue
                acted = self._act_x(widx, rest)
                for e, ce in acted.items():
                    k2 = (e, widx)
                    w = out.get(k2, ZERO) + kappa * ce
                    if w:
                        out[k2] = w
                    else:
                        out.pop(k2, None)
            out = {k: v for k, v in out.items() if v}
        self._comm_cache[key] = out
        return out

    def _yb_xc(self, b, c):
        """y^b x^c as {(x-mono, w, y-mono): coeff} in normal order."""
        key = (b, c)
        out = self._ybxc_cache.get(key)
        if out is not None:
            return out
        if not any(b):
            out = {(c, self.group._identity, self._zero_exp): ONE}
        else:
            j = next(t for t, k in enumerate(b) if k)
            rest = list(b)
            rest[j] -= 1
            rest = tuple(rest)
            inner = self._yb_xc(rest, c)
            out = {}
            for (e, w, f), coeff in inner.items():
                # y_j * x^e * w * y^f
                # commutator part: [y_j, x^e] w y^f
                for (e2, s), c2 in self._comm_mono(j, e).items():
                    sw = self.group.mult(s, w)
                    k2 = (e2, sw, f)
                    val = out.get(k2, ZERO) + coeff * c2
                    if val:
                        out[k2] = val
                    else:
                        out.pop(k2, None)
                # straight part: x^e (y_j w) y^f = x^e w (w^{-1}.y_j) y^f
                winv = self.group.inv(w)
                acted = self._act_y(winv, _unit_exp(self.n, j))
                for ym, cy in acted.items():
                    f2 = tuple(fa + fb for fa, fb in zip(f, ym))
                    k2 = (e, w, f2)
                    val = out.get(k2, ZERO) + coeff * cy
                    if val:
                        out[k2] = val
                    else:
                        out.pop(k2, None)
            out = {k: v for k, v in out.items() if v}
        self._ybxc_cache[key] = out
        return out

    # ---- multiplication -----------------------------------------------------------
    def multiply(self, u, v):
        cap = self.degree_cap
        for elt in (u, v):
            d = elt.max_polynomial_degree()
            if d > cap:
                raise DegreeCapExceeded(
                    f"factor of total degree {d} exceeds cap {cap}")
        out = {}
        group = self.group
        for (a, w, b), cu in u.terms.items():
            for (c, w2, d), cv in v.terms.items():
                cuv = cu * cv
                for (e, s, f), t in self._yb_xc(b, c).items():
                    coeff = cuv * t
                    # x^a (w . x^e) [w s w2] ((w2^{-1}) . y^f) y^d
                    xpoly = self._act_x(w, e)
                    g = group.mult(group.mult(w, s), w2)
                    ypoly = self._act_y(group.inv(w2), f)
                    for xm, cx in xpoly.items():
                        am = tuple(p + q for p, q in zip(a, xm))
                        cxx = coeff * cx
                        for ym, cy in ypoly.items():
                            bm = tuple(p + q for p, q in zip(d, ym))
                            key = (am, g, bm)
                            val = out.get(key, ZERO) + cxx * cy
                            if val:
                                out[key] = val
                            else:
                                out.pop(key, None)
        return PBWElement(self, out)

    def skew_multiply(self, u, v):
        """Product in C[h + h*] rtimes W (the c = 0 degeneration), computed
        directly without straightening; independent oracle for c = 0."""
        out = {}
        group = self.group
        for (a, w, b), cu in u.terms.items():
            for (c, w2, d), cv in v.terms.items():
                cuv = cu * cv
                xpoly = self._act_x(w, c)
                g = group.mult(w, w2)
                ypoly = self._act_y(group.inv(w2), b)
                for xm, cx in xpoly.items():
                    am = tuple(p + q for p, q in zip(a, xm))
                    cxx = cuv * cx
                    for ym, cy in ypoly.items():
                        bm = tuple(p + q for p, q in zip(d, ym))
                        key = (am, g, bm)
                        val = out.get(key, ZERO) + cxx * cy
                        if val:
                            out[key] = val
                        else:
                            out.pop(key, None)
        return PBWElement(self, out)

    # ---- parsing / printing ---------------------------------------------------
    def parse(self, text):
        return _parse_element(self, text)

    def __repr__(self):
        return (f"CherednikAlgebra({self.group.name}, "
                f"c={dict(sorted(self.param.values.items()))})")


def _unit_exp(n, j):
    e = [0] * n
    e[j] = 1
    return tuple(e)


def grading_degree(element):
    """Grading degree of a homogeneous element, or None if inhomogeneous."""
    return element.degree()


def commutator_yx(algebra, yvec, xvec):
    return algebra.commutator_yx(yvec, xvec)


def multiply(u, v):
    return u * v


# --------------------------------------------------------------------------
# Element text syntax: e.g. "y1*x1^2 + 2*s12 - 1/2*w3"
# --------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z]\w*)"
                    r"|(?P<op>[-+*^()]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot tokenize element text at {text[pos:]!r}")
        pos = m.end()
        if m.group("num"):
            if "/" in m.group("num"):
                a, b = m.group("num").split("/")
                out.append(("num", Fraction(int(a), int(b))))
            else:
                out.append(("num", Fraction(int(m.group("num")))))
        elif m.group("name"):
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
    return out


def _parse_element(algebra, text):
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else (None, None)

    def advance():
        t = tokens[pos[0]]
        pos[0] += 1
        return t

    def atom():
        kind, val = peek()
        if kind == "num":
            advance()
            return algebra.scalar(val)
        if kind == "name":
            advance()
            return _resolve_name(algebra, val)
        if kind == "op" and val == "(":
            advance()
            e = expression()
            kind, val = advance()
            if val != ")":
                raise ValueError("unbalanced parentheses in element text")
            return e
        raise ValueError(f"unexpected token {val!r} in element text")

    def factor():
        base = atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            advance()
            kind, k = advance()
            if kind != "num" or k.denominator != 1:
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(k)
        return base

    def term():
        out = factor()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                advance()
                out = out * factor()
            else:
                return out

    def expression():
        kind, val = peek()
        sign = ONE
        if kind == "op" and val in "+-":
            advance()
            sign = -ONE if val == "-" else ONE
        out = term() * sign
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                advance()
                nxt = term()
                out = out + (nxt if val == "+" else -nxt)
            else:
                break
        if pos[0] != len(tokens):
            raise ValueError("trailing tokens in element text")
        return out

    return expression()


def _resolve_name(algebra, name):
    group = algebra.group
    m = re.fullmatch(r"([xy])(\d+)", name)
    if m:
        i = int(m.group(2)) - 1
        if not 0 <= i < algebra.n:
            raise ValueError(f"variable index out of range in {name!r}")
        return algebra.x(i) if m.group(1) == "x" else algebra.y(i)
    m = re.fullmatch(r"w(\d+)", name)
    if m:
        idx = int(m.group(1))
        if not 0 <= idx < group.order:
            raise ValueError(f"group element index out of range in {name!r}")
        return algebra.grp(idx)
    if name == "e":
        return algebra.symmetrizer()
    if name in group.generators:
        return algebra.grp(group.generators[name])
    raise ValueError(f"unknown generator {name!r} for group {group.name}")
