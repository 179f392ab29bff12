"""Exterior-algebra models over the coordinate Lagrangian in flat symplectic
2n-space, with the degree-lowering differential on the conormal side, the
Schouten-bracket differential on the normal side, the induced odd bracket,
identity checkers, and (virtual and Koszul) homology at a degree truncation.

Conventions, fixed once and validated by the axiom suite rather than chosen
from any source: the Poisson bivector is P = sum_l d/dy_l ^ d/dx_l, the
contraction is i_P = sum_l i_{d/dx_l} o i_{d/dy_l}, so i_P(dx_i ^ dy_j) =
-delta_ij; the Schouten bracket gives [P, f theta_I] =
-sum_l (df/dx_l) theta_{y_l} ^ theta_I for x-only coefficients.

Everything is exact over Q; truncation is by total polynomial degree D and
both differentials lower the coefficient degree, so the truncated complex is
a genuine subcomplex and only the top polynomial degree carries boundary
artifacts (excluded from homology totals).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import NotRegularDetected, SideMismatch
from .linalg import ONE, ZERO, kernel_basis
from .polys import monomials_of_degree

CONORMAL = "conormal"
NORMAL = "normal"


class TruncatedPolyModel:
    """Flat model: variables x_1..x_n, y_1..y_n, truncation degree D."""

    def __init__(self, n, trunc):
        if trunc < 2:
            raise ValueError("truncation degree must be at least 2")
        self.n = n
        self.trunc = trunc

    def zero(self, side):
        return ExteriorElement(self, side, {})

    def element(self, side, terms):
        return ExteriorElement(self, side, terms)

    def function(self, side, poly):
        return ExteriorElement(self, side,
                               {(m, ()): c for m, c in poly.items()})

    def generator(self, side, i):
        """dy_i (conormal) or d/dy_i (normal) with constant coefficient."""
        return ExteriorElement(self, side, {((0,) * self.n, (i,)): ONE})

    def random_element(self, side, rng, exterior_degree=None, max_terms=3,
                       max_poly_degree=None):
        """Seeded random element; homogeneous in exterior degree if given."""
        if max_poly_degree is None:
            max_poly_degree = self.trunc // 3
        terms = {}
        for _ in range(rng.randrange(1, max_terms + 1)):
            j = (exterior_degree if exterior_degree is not None
                 else rng.randrange(0, self.n + 1))
            subset = tuple(sorted(rng.sample(range(self.n), j)))
            d = rng.randrange(0, max_poly_degree + 1)
            monos = monomials_of_degree(self.n, d)
            m = monos[rng.randrange(len(monos))]
            c = Fraction(rng.randrange(-4, 5))
            if c:
                terms[(m, subset)] = terms.get((m, subset), ZERO) + c
        return ExteriorElement(self, side, terms)

    def __repr__(self):
        return f"TruncatedPolyModel(n={self.n}, trunc={self.trunc})"


class ExteriorElement:
    """Sum of terms f(x) * wedge of generators, on one side of the pairing.

    Keys are (x-exponent tuple, strictly increasing index tuple); values are
    rationals.  Terms beyond the truncation degree are dropped by ring
    operations (the quotient by high degrees).
    """

    __slots__ = ("model", "side", "terms")

    def __init__(self, model, side, terms=None):
        if side not in (CONORMAL, NORMAL):
            raise ValueError(f"unknown side {side!r}")
        self.model = model
        self.side = side
        t = {}
        if terms:
            for (m, subset), c in terms.items():
                if c and sum(m) <= model.trunc:
                    t[(tuple(m), tuple(subset))] = c
        self.terms = t

    def _check(self, other):
        if self.model is not other.model or self.side != other.side:
            raise SideMismatch("operands live on different sides or models")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return ExteriorElement(self.model, self.side, out)

    def __neg__(self):
        return ExteriorElement(self.model, self.side,
                               {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return ExteriorElement(self.model, self.side,
                               {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        trunc = self.model.trunc
        for (m1, s1), c1 in self.terms.items():
            for (m2, s2), c2 in other.terms.items():
                if set(s1) & set(s2):
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                if sum(m) > trunc:
                    continue
                sign, merged = _merge_sign(s1, s2)
                key = (m, merged)
                v = out.get(key, ZERO) + sign * c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return ExteriorElement(self.model, self.side, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return (self.model is other.model and self.side == other.side
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def exterior_degree(self):
        """Common exterior degree of all terms; None if mixed, 0 if zero."""
        degs = {len(s) for (_m, s) in self.terms}
        if not degs:
            return 0
        if len(degs) > 1:
            return None
        return degs.pop()

    def poly_degree(self):
        return max((sum(m) for (m, _s) in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        sym = "dy" if self.side == CONORMAL else "Dy"
        parts = []
        for (m, s), c in sorted(self.terms.items()):
            factors = []
            for i, k in enumerate(m):
                if k:
                    factors.append(f"x{i + 1}" + (f"^{k}" if k > 1 else ""))
            for i in s:
                factors.append(f"{sym}{i + 1}")
            body = "*".join(factors) if factors else "1"
            parts.append(f"{c}*{body}" if abs(c) != 1 else
                         (body if c == 1 else f"-{body}"))
        return " + ".join(parts)


def _merge_sign(s1, s2):
    """Sign and sorted merge of two disjoint increasing index tuples."""
    inversions = 0
    for a in s1:
        for b in s2:
            if a > b:
                inversions += 1
    return (ONE if inversions % 2 == 0 else -ONE,
            tuple(sorted(s1 + s2)))


def _diff_mono(m, i):
    """d/dx_i of x^m: (coefficient, exponent) or None."""
    if not m[i]:
        return None
    e = list(m)
    e[i] -= 1
    return Fraction(m[i]), tuple(e)


def bv_delta_conormal(model, elt):
    """i_P o d + d o i_P on forms f(x) dy_I, restricted back to the
    Lagrangian.  Lowers exterior degree and polynomial degree by one."""
    if elt.side != CONORMAL:
        raise SideMismatch("bv_delta_conormal expects a conormal element")
    # i_P(f dy_I) = 0 (no dx factors), so only i_P(d(f dy_I)) contributes:
    # d adds dx_i with sign +1 in front; contracting dy_l then dx_l walks
    # the ordered factor list (dx first, then dy ascending).
    out = {}
    for (m, subset), c in elt.terms.items():
        for i in range(model.n):
            d = _diff_mono(m, i)
            if d is None:
                continue
            cd, m2 = d
            # term: cd * c * dx_i ^ dy_subset ; contract i_{dx_l} i_{dy_l}
            if i not in subset:
                continue
            pos = 1 + subset.index(i)      # position of dy_i after dx_i
            sign_y = -ONE if pos % 2 else ONE
            # after removing dy_i, dx_i sits at position 0: sign +1
            rest = tuple(t for t in subset if t != i)
            v = out.get((m2, rest), ZERO) + sign_y * cd * c
            if v:
                out[(m2, rest)] = v
            else:
                out.pop((m2, rest), None)
    return ExteriorElement(model, CONORMAL, out)


def bv_delta_normal(model, elt):
    """Schouten bracket with the Poisson bivector on polyvectors f(x) Dy_I:
    [P, f Dy_I] = -sum_l (df/dx_l) Dy_l ^ Dy_I.  Raises exterior degree by
    one, lowers polynomial degree by one; a derivation (first order)."""
    if elt.side != NORMAL:
        raise SideMismatch("bv_delta_normal expects a normal element")
    out = {}
    for (m, subset), c in elt.terms.items():
        for l in range(model.n):
            if l in subset:
                continue
            d = _diff_mono(m, l)
            if d is None:
                continue
            cd, m2 = d
            sign, merged = _merge_sign((l,), subset)
            v = out.get((m2, merged), ZERO) - sign * cd * c
            if v:
                out[(m2, merged)] = v
            else:
                out.pop((m2, merged), None)
    return ExteriorElement(model, NORMAL, out)


def bv_delta(model, elt):
    if elt.side == CONORMAL:
        return bv_delta_conormal(model, elt)
    return bv_delta_normal(model, elt)


def gerstenhaber_bracket(model, a, b, delta=None):
    """The odd bracket measuring the second-order deviation of delta:

        [a, b] = (-1)^{deg a} (delta(ab) - delta(a) b - (-1)^{deg a} a delta(b)).

    The global (-1)^{deg a} normalization is the convention that makes the
    shifted antisymmetry / Leibniz / Jacobi identities hold as stated; the
    deviation itself is only graded-symmetric without it.
    """
    if a.side != b.side:
        raise SideMismatch("bracket operands live on different sides")
    da = a.exterior_degree()
    if da is None:
        raise ValueError("bracket needs homogeneous first argument")
    delta = delta or (lambda e: bv_delta(model, e))
    out = delta(a * b) - delta(a) * b
    term = a * delta(b)
    out = (out + term) if da % 2 else (out - term)
    return out.scale(-1) if da % 2 else out


def check_bv_seven_term(model, a, b, c, delta=None):
    """The order-two identity for delta, evaluated exactly on homogeneous
    elements (holds for any sign conventions that make delta order <= 2)."""
    for elt in (a, b, c):
        if elt.exterior_degree() is None:
            raise ValueError("seven-term check needs homogeneous inputs")
    if not (a.side == b.side == c.side):
        raise SideMismatch("seven-term operands live on different sides")
    delta = delta or (lambda e: bv_delta(model, e))
    da, db = a.exterior_degree(), b.exterior_degree()
    s_a = -ONE if da % 2 else ONE
    s_ab = -ONE if (da + db) % 2 else ONE
    s_a1b = -ONE if ((da + 1) * db) % 2 else ONE
    one = model.function(a.side, {(0,) * model.n: ONE})
    lhs = delta(a * b * c)
    rhs = (delta(a * b) * c
           + (a * delta(b * c)).scale(s_a)
           + (b * delta(a * c)).scale(s_a1b)
           - delta(a) * b * c
           - (a * delta(b) * c).scale(s_a)
           - (a * b * delta(c)).scale(s_ab)
           + delta(one) * a * b * c)
    return lhs == rhs


def check_bracket_axioms(model, a, b, c):
    """Graded antisymmetry, Leibniz, Jacobi for the induced bracket."""
    for elt in (a, b, c):
        if elt.exterior_degree() is None:
            raise ValueError("bracket axioms need homogeneous inputs")
    da = a.exterior_degree()
    db = b.exterior_degree()

    def br(u, v):
        return gerstenhaber_bracket(model, u, v)

    # antisymmetry: [a,b] = -(-1)^{(da-1)(db-1)} [b,a]
    sign = ONE if ((da - 1) * (db - 1)) % 2 else -ONE
    ok = br(a, b) == br(b, a).scale(sign)
    # Leibniz: [a, bc] = [a,b] c + (-1)^{(da-1) db} b [a,c]
    s = -ONE if ((da - 1) * db) % 2 else ONE
    ok = ok and (br(a, b * c) == br(a, b) * c + (b * br(a, c)).scale(s))
    # Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{(da-1)(db-1)} [b,[a,c]]
    s = -ONE if ((da - 1) * (db - 1)) % 2 else ONE
    ok = ok and (br(a, br(b, c))
                 == br(br(a, b), c) + br(b, br(a, c)).scale(s))
    return ok


# --------------------------------------------------------------------------
# Homology
# --------------------------------------------------------------------------

def _piece_basis(model, j, d):
    """Basis of the (exterior degree j, polynomial degree d) piece."""
    subsets = list(combinations(range(model.n), j))
    monos = monomials_of_degree(model.n, d)
    return [(m, s) for s in subsets for m in monos]


def _delta_matrix(model, side, j, d):
    """Matrix of delta from piece (j, d) to its target piece."""
    src = _piece_basis(model, j, d)
    if side == CONORMAL:
        tj, td = j - 1, d - 1
    else:
        tj, td = j + 1, d - 1
    if tj < 0 or tj > model.n or td < 0:
        return [], src, []
    tgt = _piece_basis(model, tj, td)
    tindex = {k: i for i, k in enumerate(tgt)}
    cols = []
    for key in src:
        elt = ExteriorElement(model, side, {key: ONE})
        img = bv_delta(model, elt)
        col = [ZERO] * len(tgt)
        for k, c in img.terms.items():
            col[tindex[k]] = c
        cols.append(col)
    rows = [[cols[j2][i] for j2 in range(len(src))] for i in range(len(tgt))]
    return rows, src, tgt


def virtual_homology(model, side):
    """Homology of (exterior model, delta), reported degreewise.

    Polynomial degrees are interior if d <= trunc - 1 (incoming maps from
    degree d + 1 are then complete); the top degree carries truncation
    artifacts and is excluded from totals.
    """
    n, D = model.n, model.trunc
    out_rank = {}
    ker_dim = {}
    for j in range(n + 1):
        for d in range(D + 1):
            rows, src, _tgt = _delta_matrix(model, side, j, d)
            if not src:
                ker_dim[(j, d)] = 0
                out_rank[(j, d)] = 0
                continue
            if not rows:
                ker_dim[(j, d)] = len(src)
                out_rank[(j, d)] = 0
                continue
            kb = kernel_basis(rows, len(src))
            ker_dim[(j, d)] = len(kb)
            out_rank[(j, d)] = len(src) - len(kb)
    by_degree = {}
    for j in range(n + 1):
        total = 0
        for d in range(D):       # interior polynomial degrees only
            if side == CONORMAL:
                incoming = out_rank.get((j + 1, d + 1), 0)
            else:
                incoming = out_rank.get((j - 1, d + 1), 0)
            total += ker_dim[(j, d)] - incoming
        if total:
            by_degree[j] = total
    total = sum(by_degree.values())
    concentration = list(by_degree)[0] if len(by_degree) == 1 else None
    return {
        "side": side,
        "trunc": D,
        "by_degree": sorted(by_degree.items()),
        "total": total,
        "observed_degree": concentration,
    }


def koszul_homology(n, trunc, sequence, vanishing_vars, claimed_regular=False):
    """Koszul homology of a sequence acting on functions of a coordinate
    subspace of 2n-space, computed exactly per total degree <= trunc.

    ``sequence``: polynomials as {exponent tuple over 2n vars: coeff},
    homogeneous.  ``vanishing_vars``: indices (0..2n-1) whose coordinate
    functions vanish on the subspace.  Returns a report with homology
    dimensions by homological degree, the degree-reversed (cohomology)
    reindexing, and a regularity verdict; raises NotRegularDetected when a
    claimed-regular sequence has higher homology.
    """
    nv = 2 * n
    vanish = frozenset(vanishing_vars)
    k = len(sequence)
    seq_deg = []
    for z in sequence:
        degs = {sum(e) for e in z}
        if len(degs) != 1:
            raise ValueError("Koszul sequence entries must be homogeneous")
        seq_deg.append(degs.pop())

    def module_monos(d):
        return [m for m in monomials_of_degree(nv, d)
                if all(m[i] == 0 for i in vanish)]

    def project(poly):
        return {m: c for m, c in poly.items()
                if all(m[i] == 0 for i in vanish)}

    def z_times(zi, mono):
        out = {}
        for e, c in sequence[zi].items():
            m2 = tuple(a + b for a, b in zip(e, mono))
            out[m2] = out.get(m2, ZERO) + c
        return project(out)

    # chain spaces per (homological degree r, total degree t)
    hom_dims = {r: {} for r in range(k + 1)}
    rank = {}
    kerd = {}
    basis_cache = {}

    def basis(r, t):
        key = (r, t)
        if key not in basis_cache:
            out = []
            for subset in combinations(range(k), r):
                shift = sum(seq_deg[i] for i in subset)
                if t - shift < 0:
                    continue
                for m in module_monos(t - shift):
                    out.append((m, subset))
            basis_cache[key] = out
        return basis_cache[key]

    for t in range(trunc + 1):
        for r in range(k + 1):
            src = basis(r, t)
            if not src:
                kerd[(r, t)] = 0
                rank[(r, t)] = 0
                continue
            tgt = basis(r - 1, t) if r >= 1 else []
            if not tgt:
                kerd[(r, t)] = len(src)
                rank[(r, t)] = 0
                continue
            tindex = {b: i for i, b in enumerate(tgt)}
            cols = []
            for (m, subset) in src:
                col = [ZERO] * len(tgt)
                for pos, i in enumerate(subset):
                    rest = tuple(v for v in subset if v != i)
                    sign = ONE if pos % 2 == 0 else -ONE
                    for m2, c in z_times(i, m).items():
                        key2 = (m2, rest)
                        if key2 in tindex:
                            col[tindex[key2]] = col[tindex[key2]] + sign * c
                cols.append(col)
            rows = [[cols[jj][i] for jj in range(len(src))]
                    for i in range(len(tgt))]
            kb = kernel_basis(rows, len(src))
            kerd[(r, t)] = len(kb)
            rank[(r, t)] = len(src) - len(kb)

    chain_dims = {r: sum(len(basis(r, t)) for t in range(trunc + 1))
                  for r in range(k + 1)}
    for t in range(trunc + 1):
        for r in range(k + 1):
            incoming = rank.get((r + 1, t), 0)
            h = kerd[(r, t)] - incoming
            if h:
                hom_dims[r][t] = h
    totals = {r: sum(hom_dims[r].values()) for r in range(k + 1)}
    regular = all(totals[r] == 0 for r in range(1, k + 1))
    if claimed_regular and not regular:
        raise NotRegularDetected(
            f"claimed-regular sequence has higher homology {totals}")
    euler_chain = sum((-1) ** r * chain_dims[r] for r in range(k + 1))
    euler_hom = sum((-1) ** r * totals[r] for r in range(k + 1))
    return {
        "trunc": trunc,
        "homology": totals,
        "by_degree": {r: sorted(hom_dims[r].items()) for r in range(k + 1)
                      if hom_dims[r]},
        "cohomology_reindexed": {k - r: totals[r] for r in range(k + 1)},
        "regular": regular,
        "euler_chain": euler_chain,
        "euler_homology": euler_hom,
        "chain_dims": chain_dims,
    }
