"""Sparse multivariate polynomials as {exponent tuple: coefficient} dicts.

Coefficients are Fractions or Cyc values (they interoperate); the zero
polynomial is the empty dict.  These are plain functions rather than a class:
the dict representation is shared with the normal-form engine, where keys are
unpacked constantly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement


def pzero():
    return {}


def pconst(nvars, value):
    if not value:
        return {}
    return {(0,) * nvars: value}


def pvar(i, nvars, coeff=Fraction(1)):
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): coeff}


def padd(a, b):
    out = dict(a)
    for e, v in b.items():
        w = out.get(e, 0) + v
        if w:
            out[e] = w
        else:
            out.pop(e, None)
    return out


def pscale(a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def pmul(a, b):
    out = {}
    for e1, v1 in a.items():
        for e2, v2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            w = out.get(e, 0) + v1 * v2
            if w:
                out[e] = w
            else:
                out.pop(e, None)
    return out


def ppow(a, k, nvars):
    out = pconst(nvars, Fraction(1))
    base = a
    while k:
        if k & 1:
            out = pmul(out, base)
        base = pmul(base, base) if k > 1 else base
        k >>= 1
    return out


def pdeg(a):
    """Total degree (-1 for the zero polynomial)."""
    return max((sum(e) for e in a), default=-1)


def psub_linear(p, images, nvars):
    """Substitute variable i -> images[i] (a polynomial) in p.

    Used for the action of group elements on polynomials; images are linear
    forms there, but any polynomials work.
    """
    pow_cache = [{0: pconst(nvars, Fraction(1))} for _ in range(nvars)]

    def var_pow(i, k):
        cache = pow_cache[i]
        if k not in cache:
            cache[k] = pmul(var_pow(i, k - 1), images[i])
        return cache[k]

    out = {}
    for e, v in p.items():
        term = pconst(nvars, v)
        for i, k in enumerate(e):
            if k:
                term = pmul(term, var_pow(i, k))
        out = padd(out, term)
    return out


def pevaluate(p, point):
    """Evaluate at a point (sequence of scalars)."""
    total = 0
    for e, v in p.items():
        term = v
        for i, k in enumerate(e):
            if k:
                term = term * point[i] ** k
        total = term + total
    return total


def monomials_of_degree(nvars, d):
    """All exponent tuples of total degree d, in a fixed deterministic order."""
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def homogeneous_part(p, d):
    return {e: v for e, v in p.items() if sum(e) == d}
