"""Idempotent decomposition of commutative finite-dimensional algebras.

Pipeline: radical via the trace form (characteristic zero), then splitting of
the semisimple quotient by factoring minimal polynomials of seeded random
elements, CRT idempotents, and Hensel lifting back through the radical.

Factorization happens in the Q-structure of the algebra: for a commutative
ring the primitive idempotents do not depend on the base field, so a
Q(zeta_N)-algebra can be split with rational factorization only.  A simple
factor bigger than the coefficient field raises FieldExtensionNeeded.
"""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from .cyclotomic import Cyc, euler_phi, _poly_divmod, _poly_mul, _poly_trim
from .errors import FieldExtensionNeeded, NotCommutative
from .linalg import ZERO, ONE, kernel_basis, rref, row_space_contains

_T = sympy.Symbol("T")


def _poly_xgcd(a, b):
    """(g, s, t) with s*a + t*b = g over Q, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]
    while r1:
        q, r = _poly_divmod(r0, r1)
        s = _poly_sub(s0, _poly_mul(q, s1))
        t = _poly_sub(t0, _poly_mul(q, t1))
        r0, r1, s0, s1, t0, t1 = r1, r, s1, s, t1, t
    lead = r0[-1]
    inv = 1 / lead
    return ([c * inv for c in r0], [c * inv for c in s0], [c * inv for c in t0])


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else ZERO) - (b[i] if i < len(b) else ZERO)
           for i in range(n)]
    return _poly_trim(out)


def _poly_mod(a, m):
    _, r = _poly_divmod(a, m)
    return r


def _factor_over_q(coeffs):
    """Monic irreducible factors (ascending Fraction lists) with multiplicities."""
    expr = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
        _T, domain="QQ")
    _, factors = expr.factor_list()
    out = []
    for f, mult in factors:
        cs = [Fraction(sympy.Rational(c).p, sympy.Rational(c).q)
              for c in reversed(f.all_coeffs())]
        lead = cs[-1]
        out.append(([c / lead for c in cs], mult))
    return out


def _cyc_components(value, conductor, phi):
    """Decompose a scalar into its phi rational coordinates over Q."""
    if isinstance(value, Cyc):
        return [value.c.get(t, ZERO) for t in range(phi)]
    v = Fraction(value)
    return [v] + [ZERO] * (phi - 1)


class CommutativeAlgebra:
    """A commutative algebra given by basis-pair products.

    ``prods[i][j]`` is the coordinate vector of e_i * e_j; ``unit`` the
    coordinates of 1.  Scalars are Fractions or Cyc of the stated conductor.
    """

    def __init__(self, prods, unit, conductor=1, check=True):
        self.dim = len(prods)
        self.prods = prods
        self.unit = list(unit)
        self.conductor = conductor
        if check:
            for i in range(self.dim):
                for j in range(i):
                    if prods[i][j] != prods[j][i]:
                        raise NotCommutative(
                            f"basis elements {i} and {j} do not commute")

    def mul(self, u, v):
        out = [ZERO] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.prods[i]
            for j, vj in enumerate(v):
                if vj:
                    c = ui * vj
                    pij = row[j]
                    for k, p in enumerate(pij):
                        if p:
                            out[k] = out[k] + c * p
        return out

    def trace_of_mult(self, v):
        """Trace of multiplication by the element with coordinates v."""
        total = ZERO
        for k, vk in enumerate(v):
            if vk:
                t = ZERO
                for j in range(self.dim):
                    t = t + self.prods[k][j][j]
                total = total + vk * t
        return total

    def radical_basis(self):
        """Basis of the nilradical: kernel of the trace form."""
        gram = [[self.trace_of_mult(self.prods[i][j]) for j in range(self.dim)]
                for i in range(self.dim)]
        return kernel_basis(gram, self.dim)


def _minimal_polynomial(mul, unit, u):
    """Monic minimal polynomial (ascending Fractions/Cyc) of u, unit given."""
    dim = len(unit)
    rows, pivots = [], []
    powers = [list(unit)]
    while True:
        vec = powers[-1]
        residual, _ = row_space_contains(rows, pivots, vec)
        if not any(residual):
            break
        red, piv = rref(rows + [vec], dim) if rows else rref([vec], dim)
        rows, pivots = red, piv
        powers.append(mul(vec, u))
    # express the last power over the previous ones
    m = len(powers) - 1
    mat = [[powers[i][k] for i in range(m)] for k in range(dim)]
    rhs = [powers[m][k] for k in range(dim)]
    from .linalg import solve_unique
    coeffs = solve_unique(mat, rhs)
    poly = [-c for c in coeffs] + [ONE]
    return poly


def _conductor_of_quadratic(minpoly):
    """Conductor of the splitting field of a monic rational quadratic."""
    b, c = minpoly[1], minpoly[0]
    disc = b * b - 4 * c
    num = disc.numerator * disc.denominator  # same squarefree class
    if num == 0:
        return None
    s = 1
    n = abs(num)
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
        d += 1
    s = n if num > 0 else -n
    if s % 4 == 1:
        return abs(s)
    return 4 * abs(s)


def idempotents_of_commutative_algebra(prods, unit, conductor=1, seed=0,
                                       max_retries=24):
    """Pairwise-orthogonal primitive idempotents summing to 1.

    ``prods``/``unit`` as in CommutativeAlgebra.  Las Vegas randomness is
    seeded; retried with fresh draws up to ``max_retries`` per split.
    Raises NotCommutative or FieldExtensionNeeded (with the required
    conductor when it can be determined).
    """
    alg = CommutativeAlgebra(prods, unit, conductor)
    if alg.dim == 0:
        return []
    phi = euler_phi(conductor)
    rad = alg.radical_basis()

    # Semisimple quotient: complement coordinates of the radical row space.
    rad_red, rad_piv = rref(rad, alg.dim) if rad else ([], [])
    comp = [c for c in range(alg.dim) if c not in set(rad_piv)]
    k = len(comp)

    def project(vec):
        residual, _ = row_space_contains(rad_red, rad_piv, vec)
        return [residual[c] for c in comp]

    def embed(qvec):
        out = [ZERO] * alg.dim
        for idx, c in enumerate(comp):
            out[c] = qvec[idx]
        return out

    q_prods = [[project(alg.mul(embed(_unit_vec(k, i)), embed(_unit_vec(k, j))))
                for j in range(k)] for i in range(k)]
    q_unit = project(alg.unit)
    quo = CommutativeAlgebra(q_prods, q_unit, conductor, check=False)

    # Q-structure: basis zeta^t * e_c.
    dim_q = phi * k

    def to_q(vec):
        out = []
        for v in vec:
            out.extend(_cyc_components(v, conductor, phi))
        return out

    def from_q(qv):
        out = []
        for c in range(k):
            comps = qv[c * phi:(c + 1) * phi]
            if phi == 1:
                out.append(comps[0])
            else:
                out.append(Cyc(conductor, dict(enumerate(comps))))
        return out

    def q_mul(u, v):
        uu = from_q(u)
        vv = from_q(v)
        return to_q(quo.mul(uu, vv))

    q_unit_vec = to_q(q_unit)

    rng = random.Random(seed)
    results = []  # (idempotent over Q-basis, q-dimension, certifying minpoly)

    def split(basis_rows, unit_vec):
        d = len(basis_rows)
        if d == 1:
            results.append((unit_vec, 1, None))
            return
        for _attempt in range(max_retries):
            coeffs = [Fraction(rng.randrange(-9, 10)) for _ in range(d)]
            u = [ZERO] * dim_q
            for c, row in zip(coeffs, basis_rows):
                if c:
                    u = [a + c * b for a, b in zip(u, row)]
            m = _minimal_polynomial(q_mul, unit_vec, u)
            factors = _factor_over_q(m)
            if any(mult > 1 for _, mult in factors):
                raise ArithmeticError("non-squarefree minimal polynomial in a "
                                      "semisimple quotient")
            if len(factors) == 1:
                f = factors[0][0]
                if len(f) - 1 == d:
                    results.append((unit_vec, d, f))
                    return
                continue  # unlucky element; retry
            mpoly = m
            for f, _mult in factors:
                g, _r = _poly_divmod(mpoly, f)
                _gcd, s, _t = _poly_xgcd(_poly_mod(g, f), f)
                h = _poly_mod(_poly_mul(g, s), mpoly)
                # evaluate h at u inside this factor (Horner with local unit)
                acc = [ZERO] * dim_q
                for c in reversed(h):
                    acc = q_mul(acc, u)
                    if c:
                        acc = [a + c * b for a, b in zip(acc, unit_vec)]
                sub_rows, _piv = rref([q_mul(acc, row) for row in basis_rows],
                                      dim_q)
                split(sub_rows, acc)
            return
        raise ArithmeticError("failed to split commutative algebra after "
                              f"{max_retries} seeded attempts")

    # The Q-span of the quotient: zeta^t e_c for all t, c.
    all_rows = []
    for c in range(k):
        for t in range(phi):
            qv = [ZERO] * dim_q
            qv[c * phi + t] = ONE
            all_rows.append(qv)
    basis_rows, _ = rref(all_rows, dim_q)

    split(basis_rows, q_unit_vec)

    # Check splitting is complete over Q(zeta_N).
    for vec, d, mp in results:
        if d > phi:
            req = None
            if phi == 1 and mp is not None and len(mp) == 3:
                req = _conductor_of_quadratic(mp)
            raise FieldExtensionNeeded(
                "algebra does not split over the coefficient field "
                f"(simple factor of Q-dimension {d} > {phi})",
                required_conductor=req,
                factor=mp)

    # Lift back: Q-quotient -> K-quotient -> ambient, then Hensel.
    idems = []
    for vec, _d, _mp in results:
        amb = embed(from_q(vec))
        e = amb
        for _ in range(64):
            e2 = alg.mul(e, e)
            if e2 == e:
                break
            e3 = alg.mul(e2, e)
            e = [3 * a - 2 * b for a, b in zip(e2, e3)]
        else:
            raise ArithmeticError("idempotent lift did not converge")
        idems.append(e)

    idems.sort(key=_vec_sort_key)
    return idems


def _unit_vec(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


def _vec_sort_key(vec):
    key = []
    for v in vec:
        if isinstance(v, Cyc):
            key.append(tuple((e, c.numerator, c.denominator)
                             for e, c in sorted(v.c.items())))
        else:
            f = Fraction(v)
            key.append(((0, f.numerator, f.denominator),))
    return key
