"""Invariant theory of a reflection group: Molien series, invariant degrees,
fake polynomials, fundamental invariants, and coinvariant-ring reductions.

The reduction machinery rests on the freeness of C[h] over C[h]^W: once a
monomial basis of the coinvariant ring is fixed, every homogeneous piece
C[h]_d decomposes as the direct sum of m_i * C[h]^W_{d - deg m_i}, so a
single exact linear solve per degree rewrites any polynomial as
sum_i m_i * g_i(f_1, .., f_n) and evaluating the invariants at a point of
h/W reduces modulo any fiber ideal, graded or not.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc
from .errors import NotFactorizable
from .linalg import ONE, ZERO, rref, row_space_contains
from .polys import (monomials_of_degree, padd, pconst, pmul, pscale,
                    psub_linear)
from .series import GradedCharacter


def _h_series(group, idx, order):
    """Coefficients of 1/det(1 - q * A_w|_h) up to the given order (Newton)."""
    traces = []
    j = idx
    for _ in range(order):
        a = group.matrix(j)
        t = ZERO
        for i in range(group.n):
            t = t + a[i][i]
        traces.append(t)
        j = group.mult(j, idx)
    h = [ONE]
    for k in range(1, order + 1):
        s = ZERO
        for i in range(1, k + 1):
            s = s + traces[i - 1] * h[k - i]
        h.append(s * Fraction(1, k))
    return h


def molien_series(group, order, weights=None):
    """(1/|W|) sum_w chi(w) / det(1 - q w|_h) as a coefficient list.

    ``weights`` maps class index -> scalar weight chi on that class
    (defaults to the trivial character, giving the invariant Hilbert series).
    """
    total = [ZERO] * (order + 1)
    for ci, cls in enumerate(group.conjugacy_classes):
        w = ONE if weights is None else weights[ci]
        if not w:
            continue
        h = _h_series(group, cls[0], order)
        size = len(cls)
        for k in range(order + 1):
            total[k] = total[k] + size * w * h[k]
    inv_order = Fraction(1, group.order)
    return [v * inv_order for v in total]


def molien_degrees(group):
    """Invariant degrees: factor the Molien series as prod 1/(1 - q^{d_i})."""
    order = group.order + 1
    series = list(molien_series(group, order))
    degrees = []
    for _ in range(group.n):
        d = None
        for k in range(1, order + 1):
            if series[k]:
                d = k
                break
        if d is None:
            raise NotFactorizable("Molien series terminated early")
        degrees.append(d)
        # multiply by (1 - q^d)
        for k in range(order, d - 1, -1):
            series[k] = series[k] - series[k - d]
    if any(series[k] for k in range(1, order + 1)) or series[0] != 1:
        raise NotFactorizable(
            "Molien series is not a product of n geometric factors")
    prod = 1
    for d in degrees:
        prod *= d
    if prod != group.order:
        raise NotFactorizable(
            f"degree product {prod} differs from group order {group.order}")
    nrefl = len(group.reflections)
    if sum(d - 1 for d in degrees) != nrefl:
        raise NotFactorizable(
            "degrees are inconsistent with the reflection count")
    return tuple(sorted(degrees))


def fake_polynomial(group, rep):
    """Graded multiplicity of rep in the coinvariant ring, as a polynomial."""
    degrees = group.degrees
    topdeg = sum(d - 1 for d in degrees)
    weights = [rep.char(r) for r in group.class_representatives]
    series = molien_series(group, topdeg, weights=weights)
    # multiply by prod (1 - q^{d_i}) and keep exponents <= topdeg
    poly = {0: ONE}
    for d in degrees:
        new = dict(poly)
        for e, c in poly.items():
            if e + d <= topdeg:
                w = new.get(e + d, ZERO) - c
                if w:
                    new[e + d] = w
                else:
                    new.pop(e + d, None)
        poly = new
    coeffs = {}
    for e in range(topdeg + 1):
        total = ZERO
        for k, c in poly.items():
            if 0 <= e - k <= topdeg and c:
                total = total + c * series[e - k]
        if total:
            coeffs[e] = total
    out = {}
    for e, v in coeffs.items():
        if isinstance(v, Cyc):
            v = v.rational_value()
        v = Fraction(v)
        if v.denominator != 1 or v < 0:
            raise ArithmeticError(
                f"fake polynomial has a bad coefficient {v} at q^{e}")
        out[e] = v
    f = GradedCharacter(out)
    if f.value_at_one() != rep.dim:
        raise ArithmeticError("fake polynomial does not sum to dim(rep)")
    return f


class InvariantTheory:
    """Fundamental invariants and coinvariant reductions for one side.

    side "x": polynomials on h (variables dual to the h-basis, the x_i);
    group acts through the h* matrices.  side "y": polynomials on h*
    (variables y_i); group acts through the h matrices.
    """

    def __init__(self, group, side="x"):
        if side not in ("x", "y"):
            raise ValueError("side must be 'x' or 'y'")
        self.group = group
        self.side = side
        self.n = group.n
        self._act_images = {}
        self._fundamental = None
        self._coinv_basis = None
        self._decomp = {}
        self._reduce_cache = {}

    # ---- group action on polynomials -------------------------------------
    def _images(self, widx):
        imgs = self._act_images.get(widx)
        if imgs is None:
            if self.side == "x":
                a = self.group.hstar_matrix(widx)
            else:
                a = self.group.matrix(widx)
            # variable j maps to sum_i a[i][j] * var_i (column j)
            imgs = []
            for j in range(self.n):
                img = {}
                for i in range(self.n):
                    if a[i][j]:
                        e = [0] * self.n
                        e[i] = 1
                        img[tuple(e)] = a[i][j]
                imgs.append(img)
            self._act_images[widx] = imgs
        return imgs

    def act(self, widx, poly):
        return psub_linear(poly, self._images(widx), self.n)

    def reynolds(self, poly):
        total = {}
        for widx in range(self.group.order):
            total = padd(total, self.act(widx, poly))
        return pscale(total, Fraction(1, self.group.order))

    # ---- fundamental invariants ----------------------------------------------
    @property
    def fundamental_invariants(self):
        if self._fundamental is None:
            self._fundamental = self._build_fundamental()
        return self._fundamental

    def _build_fundamental(self):
        degrees = list(self.group.degrees)
        chosen = []   # list of (poly, degree)
        for d in sorted(set(degrees)):
            mult = degrees.count(d)
            monos = monomials_of_degree(self.n, d)
            mono_index = {m: i for i, m in enumerate(monos)}
            # invariant subspace of degree d via the Reynolds operator
            inv_rows = []
            for m in monos:
                r = self.reynolds({m: ONE})
                if r:
                    inv_rows.append([r.get(mm, ZERO) for mm in monos])
            inv_basis, _ = rref(inv_rows, len(monos))
            # span of degree-d products of already-chosen invariants
            old_rows = []
            for combo in _weighted_exponents([dg for _p, dg in chosen], d):
                prod = pconst(self.n, ONE)
                for (p, _dg), k in zip(chosen, combo):
                    for _ in range(k):
                        prod = pmul(prod, p)
                old_rows.append([prod.get(mm, ZERO) for mm in monos])
            red, piv = rref(old_rows, len(monos)) if old_rows else ([], [])
            new = []
            for row in inv_basis:
                residual, _c = row_space_contains(red, piv, row)
                if any(residual):
                    red, piv = rref(red + [residual], len(monos))
                    poly = {m: row[mono_index[m]] for m in monos
                            if row[mono_index[m]]}
                    new.append(poly)
                if len(new) == mult:
                    break
            if len(new) != mult:
                raise NotFactorizable(
                    f"could not extract {mult} new fundamental invariants "
                    f"in degree {d} for {self.group.name}")
            chosen.extend((p, d) for p in new)
        return [p for p, _d in chosen]

    # ---- coinvariant monomial basis --------------------------------------------
    @property
    def coinvariant_basis(self):
        """Monomial basis of C[vars]/(f_1,..,f_n), grouped by degree."""
        if self._coinv_basis is None:
            self._coinv_basis = self._build_coinv_basis()
        return self._coinv_basis

    def _build_coinv_basis(self):
        funds = self.fundamental_invariants
        degrees = self.group.degrees
        topdeg = sum(d - 1 for d in degrees)
        basis = []
        total = 0
        for d in range(topdeg + 1):
            monos = monomials_of_degree(self.n, d)
            mono_index = {m: i for i, m in enumerate(monos)}
            rows = []
            for f, fd in zip(funds, degrees_of(funds)):
                if fd > d or fd == 0:
                    continue
                for m in monomials_of_degree(self.n, d - fd):
                    prod = pmul(f, {m: ONE})
                    rows.append([prod.get(mm, ZERO) for mm in monos])
            red, piv = rref(rows, len(monos)) if rows else ([], [])
            pivset = set(piv)
            layer = [monos[i] for i in range(len(monos)) if i not in pivset]
            basis.append(layer)
            total += len(layer)
        if total != self.group.order:
            raise NotFactorizable(
                f"coinvariant dimension {total} != |W| = {self.group.order}")
        return basis

    def coinv_monomials(self):
        return [m for layer in self.coinvariant_basis for m in layer]

    # ---- decomposition over invariants --------------------------------------
    def _decomposition(self, d):
        """Inverse solve data for C[h]_d = sum m_i * (monomials in f's)."""
        if d not in self._decomp:
            funds = self.fundamental_invariants
            fdegs = degrees_of(funds)
            monos = monomials_of_degree(self.n, d)
            cols = []
            col_info = []
            for li, layer in enumerate(self.coinvariant_basis):
                if li > d:
                    break
                for m in layer:
                    for combo in _weighted_exponents(fdegs, d - li):
                        prod = {m: ONE}
                        for f, k in zip(funds, combo):
                            for _ in range(k):
                                prod = pmul(prod, f)
                        cols.append([prod.get(mm, ZERO) for mm in monos])
                        col_info.append((m, combo))
            size = len(monos)
            if len(cols) != size:
                raise NotFactorizable(
                    f"freeness decomposition is not square in degree {d}")
            # invert [cols as columns] once; decomposition is then a mat-vec
            aug = []
            for i in range(size):
                row = [cols[j][i] for j in range(size)]
                row.extend(ONE if k == i else ZERO for k in range(size))
                aug.append(row)
            red, piv = rref(aug, size)
            if piv != list(range(size)):
                raise NotFactorizable(
                    f"freeness decomposition is singular in degree {d}")
            inverse = [row[size:] for row in red]
            self._decomp[d] = (inverse, col_info, monos,
                               {m: i for i, m in enumerate(monos)})
        return self._decomp[d]

    def reduce_monomial(self, mono, values):
        """Image of a monomial in C[vars]/(f_i - values_i), over coinv basis."""
        key = (mono, tuple(values))
        out = self._reduce_cache.get(key)
        if out is None:
            d = sum(mono)
            inverse, col_info, monos, mono_index = self._decomposition(d)
            col = mono_index[mono]
            out = {}
            for j, (m, combo) in enumerate(col_info):
                c = inverse[j][col]
                if not c:
                    continue
                v = c
                for val, k in zip(values, combo):
                    if k:
                        if not val:
                            v = ZERO
                            break
                        v = v * val ** k
                if v:
                    out[m] = out.get(m, ZERO) + v
            out = {m: v for m, v in out.items() if v}
            self._reduce_cache[key] = out
        return out

    def reduce(self, poly, values=None):
        """Reduce a polynomial modulo the fiber ideal (f_i - values_i)."""
        if values is None:
            values = (ZERO,) * self.n
        values = tuple(values)
        total = {}
        for mono, c in poly.items():
            for m, v in self.reduce_monomial(mono, values).items():
                w = total.get(m, ZERO) + c * v
                if w:
                    total[m] = w
                else:
                    total.pop(m, None)
        return total

    def invariant_values_at(self, point):
        """Values of the fundamental invariants at a point (of h for side x)."""
        from .polys import pevaluate
        return tuple(pevaluate(f, point) for f in self.fundamental_invariants)

    # ---- coinvariant ring as a graded W-module ---------------------------------
    def coinv_action_matrix(self, widx, degree):
        layer = self.coinvariant_basis[degree]
        cols = []
        for m in layer:
            img = self.act(widx, {m: ONE})
            red = self.reduce(img)
            cols.append([red.get(mm, ZERO) for mm in layer])
        return [[cols[j][i] for j in range(len(layer))]
                for i in range(len(layer))]

    def graded_multiplicity(self, rep):
        """Independent oracle for the fake polynomial: decompose degreewise."""
        out = {}
        for d, layer in enumerate(self.coinvariant_basis):
            if not layer:
                continue
            total = ZERO
            for ci, cls in enumerate(self.group.conjugacy_classes):
                tr = ZERO
                mat = self.coinv_action_matrix(cls[0], d)
                for i in range(len(layer)):
                    tr = tr + mat[i][i]
                inv_cls = self.group.class_of_inverse(ci)
                rep_char = rep.char(self.group.conjugacy_classes[inv_cls][0])
                total = total + len(cls) * tr * rep_char
            total = total * Fraction(1, self.group.order)
            if total:
                if isinstance(total, Cyc):
                    total = total.rational_value()
                out[d] = Fraction(total)
        return GradedCharacter(out)


def degrees_of(polys):
    return [max(sum(e) for e in p) if p else 0 for p in polys]


def _weighted_exponents(weights, target):
    """Exponent vectors a with sum a_i * weights_i = target."""
    out = []

    def rec(i, remaining, prefix):
        if i == len(weights):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        w = weights[i]
        top = remaining // w if w > 0 else 0
        for k in range(top + 1):
            rec(i + 1, remaining - k * w, prefix + [k])

    rec(0, target, [])
    return out
