"""Complex reflection groups on h with reflection data and irreducibles.

Three families are constructible: cyclic Z_m acting on C, symmetric groups
S_n in the permutation (C^n) or reduced (C^{n-1}) representation, and
dihedral I_2(m) on C^2 in coordinates where the rotation is diagonal.
Stabilizer subgroups W_p inherit the ambient space and coefficient field;
their irreducibles are built by structure recognition (full group, Young
products of symmetric groups, abelian) rather than a generic algorithm.

Conventions.  Elements act on h by matrices A_w (columns are images of the
basis y_1..y_n of h); the action on h* is by (A_{w^{-1}})^T.  For each
reflection s, alpha_s spans Im(s-1)|_h and alpha_s^vee spans Im(s-1)|_{h*},
rescaled so that alpha_s^vee(alpha_s) = 2.  The coefficient field is
Q(zeta_N) with N the exponent of the group.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial, gcd

from .cyclotomic import Cyc
from .errors import CapExceeded, CherednikError, UnsupportedGroup
from .linalg import ONE, ZERO, rank, transpose

ORDER_CAP = 720


# --------------------------------------------------------------------------
# Partitions and standard tableaux (Young's seminormal form for S_n)
# --------------------------------------------------------------------------

def partitions_of(n):
    """All partitions of n as decreasing tuples, in lexicographic-descending order."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return out


def standard_tableaux(shape):
    """Standard Young tableaux of the given shape (values 1..n), fixed order."""
    n = sum(shape)
    rows = len(shape)

    def rec(filled, counts, v):
        if v > n:
            yield tuple(tuple(row) for row in filled)
            return
        for r in range(rows):
            c = counts[r]
            if c < shape[r] and (r == 0 or counts[r - 1] > c):
                filled[r].append(v)
                counts[r] += 1
                yield from rec(filled, counts, v + 1)
                counts[r] -= 1
                filled[r].pop()

    return list(rec([[] for _ in range(rows)], [0] * rows, 1))


def _tableau_position(tab, value):
    for r, row in enumerate(tab):
        for c, v in enumerate(row):
            if v == value:
                return r, c
    raise ValueError(f"{value} not in tableau")


def _swap_values(tab, a, b):
    return tuple(tuple(b if v == a else a if v == b else v for v in row)
                 for row in tab)


def seminormal_transposition_matrix(shape, k):
    """Matrix of the adjacent transposition (k, k+1) on standard tableaux."""
    tabs = standard_tableaux(shape)
    index = {t: i for i, t in enumerate(tabs)}
    d = len(tabs)
    mat = [[ZERO] * d for _ in range(d)]
    for j, tab in enumerate(tabs):
        rk, ck = _tableau_position(tab, k)
        rk1, ck1 = _tableau_position(tab, k + 1)
        dist = (ck1 - rk1) - (ck - rk)  # axial distance, never 0
        a = Fraction(1, dist)
        mat[j][j] = a
        swapped = _swap_values(tab, k, k + 1)
        if swapped in index:
            gamma = (1 - a * a) if dist > 0 else ONE
            mat[index[swapped]][j] = gamma
    return mat


def perm_to_adjacent_word(perm):
    """Express a permutation (tuple of images, 0-indexed) as adjacent swaps.

    Returns indices k meaning the transposition (k, k+1) (0-indexed) with
    perm = s_{w[0]} o s_{w[1]} o ... as composition of functions.
    """
    line = list(perm)
    word_right = []
    n = len(line)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if line[i] > line[i + 1]:
                line[i], line[i + 1] = line[i + 1], line[i]
                word_right.append(i)
                changed = True
    # perm o s_{i1} o ... o s_{im} = id, hence perm = s_{im} o ... o s_{i1}
    return list(reversed(word_right))


def compose_perm(p, q):
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert_perm(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def kron(a, b):
    ra, rb = len(a), len(b)
    ca = len(a[0]) if a else 0
    cb = len(b[0]) if b else 0
    out = [[ZERO] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            v = a[i][j]
            if v:
                for k in range(rb):
                    for l in range(cb):
                        if b[k][l]:
                            out[i * rb + k][j * cb + l] = v * b[k][l]
    return out


def mat_mul_generic(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            v = a[i][t]
            if v:
                for j in range(m):
                    if b[t][j]:
                        out[i][j] = out[i][j] + v * b[t][j]
    return out


# --------------------------------------------------------------------------
# Reflection data and irreducibles
# --------------------------------------------------------------------------

class Reflection:
    """A reflection with its root/coroot data, normalized to pairing 2."""

    __slots__ = ("element", "alpha", "alpha_vee", "class_label")

    def __init__(self, element, alpha, alpha_vee, class_label):
        self.element = element
        self.alpha = tuple(alpha)
        self.alpha_vee = tuple(alpha_vee)
        self.class_label = class_label

    def pairing(self):
        s = ZERO
        for a, b in zip(self.alpha_vee, self.alpha):
            s = s + a * b
        return s

    def __repr__(self):
        return f"Reflection(elem={self.element}, class={self.class_label})"


class IrrRep:
    """An irreducible representation with explicit matrices per element."""

    def __init__(self, group, label, dim, matrix_fn):
        self.group = group
        self.label = label
        self.dim = dim
        self._matrix_fn = matrix_fn
        self._mats = {}
        self._char = {}

    def matrix(self, idx):
        m = self._mats.get(idx)
        if m is None:
            m = self._matrix_fn(self.group.metas[idx])
            self._mats[idx] = m
        return m

    def char(self, idx):
        cls = self.group.class_of[idx]
        v = self._char.get(cls)
        if v is None:
            m = self.matrix(self.group.class_representatives[cls])
            v = ZERO
            for i in range(self.dim):
                v = v + m[i][i]
            self._char[cls] = v
        return v

    def character_vector(self):
        """Character values on class representatives, in class order."""
        return tuple(self.char(r) for r in self.group.class_representatives)

    def is_trivial(self):
        return self.dim == 1 and all(self.char(r) == 1
                                     for r in self.group.class_representatives)

    def __repr__(self):
        return f"IrrRep({self.label!r}, dim={self.dim})"


# --------------------------------------------------------------------------
# The group class
# --------------------------------------------------------------------------

class ReflectionGroup:

    def __init__(self, name, n, conductor, metas, kind, mult_fn, inv_fn,
                 matrix_fn, generators, parent=None, parent_indices=None,
                 family=None):
        self.name = name
        self.n = n
        self.conductor = conductor
        self.metas = metas
        self.kind = kind
        self._mult_fn = mult_fn
        self._inv_fn = inv_fn
        self._matrix_fn = matrix_fn
        self.generators = dict(generators)  # label -> element index
        self.parent = parent
        self.parent_indices = parent_indices
        self.family = family
        self.order = len(metas)
        self._meta_index = {m: i for i, m in enumerate(metas)}
        self._mats = {}
        self._hstar_mats = {}
        self._irreps = None
        self._reflections = None
        self._classes = None
        self._inv_theory = {}
        self._fake_cache = {}
        self._degrees = None

    # ---- basic operations -------------------------------------------------
    def mult(self, i, j):
        return self._meta_index[self._mult_fn(self.metas[i], self.metas[j])]

    def inv(self, i):
        return self._meta_index[self._inv_fn(self.metas[i])]

    @property
    def identity(self):
        return self._identity

    def matrix(self, i):
        m = self._mats.get(i)
        if m is None:
            m = tuple(tuple(row) for row in self._matrix_fn(self.metas[i]))
            self._mats[i] = m
        return m

    def hstar_matrix(self, i):
        """Matrix of the action on h* coordinates: (A_{w^{-1}})^T."""
        m = self._hstar_mats.get(i)
        if m is None:
            m = tuple(tuple(row) for row in transpose(
                [list(r) for r in self.matrix(self.inv(i))]))
            self._hstar_mats[i] = m
        return m

    def act_h(self, i, vec):
        a = self.matrix(i)
        return tuple(sum((a[r][c] * vec[c] for c in range(self.n) if vec[c]),
                         ZERO) for r in range(self.n))

    def act_hstar(self, i, vec):
        a = self.hstar_matrix(i)
        return tuple(sum((a[r][c] * vec[c] for c in range(self.n) if vec[c]),
                         ZERO) for r in range(self.n))

    def element_order(self, i):
        k, j = 1, i
        while j != self._identity:
            j = self.mult(j, i)
            k += 1
        return k

    def exponent(self):
        e = 1
        for i in range(self.order):
            o = self.element_order(i)
            e = e * o // gcd(e, o)
        return e

    # ---- conjugacy classes ---------------------------------------------------
    @property
    def conjugacy_classes(self):
        if self._classes is None:
            self._build_classes()
        return self._classes

    @property
    def class_of(self):
        if self._classes is None:
            self._build_classes()
        return self._class_of

    @property
    def class_representatives(self):
        if self._classes is None:
            self._build_classes()
        return self._class_reps

    def _build_classes(self):
        seen = [False] * self.order
        classes = []
        gen_idx = list(self.generators.values())
        for i in range(self.order):
            if seen[i]:
                continue
            orbit = {i}
            frontier = [i]
            while frontier:
                x = frontier.pop()
                for g in gen_idx:
                    y = self.mult(self.mult(g, x), self.inv(g))
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            orbit = tuple(sorted(orbit))
            for x in orbit:
                seen[x] = True
            classes.append(orbit)
        classes.sort(key=lambda c: c[0])
        self._classes = classes
        self._class_of = [0] * self.order
        for ci, cls in enumerate(classes):
            for x in cls:
                self._class_of[x] = ci
        self._class_reps = [cls[0] for cls in classes]
        self._class_of_inverse = [self._class_of[self.inv(r)]
                                  for r in self._class_reps]

    def class_of_inverse(self, class_idx):
        self.conjugacy_classes
        return self._class_of_inverse[class_idx]

    # ---- reflections ----------------------------------------------------------
    @property
    def reflections(self):
        if self._reflections is None:
            self._build_reflections()
        return self._reflections

    def _build_reflections(self):
        refl_elements = []
        for i in range(self.order):
            if i == self._identity:
                continue
            a = self.matrix(i)
            diff = [[a[r][c] - (ONE if r == c else ZERO) for c in range(self.n)]
                    for r in range(self.n)]
            if rank(diff, self.n) == 1:
                refl_elements.append((i, diff))
        # conjugacy class labels among reflections, ordered by least element
        cls_sorted = []
        for i, _ in refl_elements:
            ci = self.class_of[i]
            if ci not in cls_sorted:
                cls_sorted.append(ci)
        labels = {ci: f"c{k}" for k, ci in enumerate(cls_sorted)}
        out = []
        for i, diff in refl_elements:
            alpha = None
            for c in range(self.n):
                col = [diff[r][c] for r in range(self.n)]
                if any(col):
                    alpha = col
                    break
            b = self.hstar_matrix(i)
            diff_star = [[b[r][c] - (ONE if r == c else ZERO)
                          for c in range(self.n)] for r in range(self.n)]
            alpha_vee = None
            for c in range(self.n):
                col = [diff_star[r][c] for r in range(self.n)]
                if any(col):
                    alpha_vee = col
                    break
            pairing = sum((av * al for av, al in zip(alpha_vee, alpha)), ZERO)
            if not pairing:
                raise CherednikError("degenerate root/coroot pairing")
            scale = 2 / pairing
            alpha_vee = [scale * v for v in alpha_vee]
            out.append(Reflection(i, alpha, alpha_vee, labels[self.class_of[i]]))
        self._reflections = out
        self.reflection_class_labels = sorted({r.class_label for r in out},
                                              key=lambda s: int(s[1:]))

    def reflection_by_element(self, idx):
        for r in self.reflections:
            if r.element == idx:
                return r
        raise KeyError(idx)

    # ---- stabilizers ------------------------------------------------------------
    def stabilizer(self, p):
        """Subgroup fixing the point p of h* (coordinates over the field).

        Asserts the Steinberg property: the stabilizer must be generated by
        the reflections it contains; failure is a hard error.
        """
        p = tuple(p)
        fix = [i for i in range(self.order) if self.act_hstar(i, p) == p]
        fix_set = set(fix)
        refl_fix = [r.element for r in self.reflections if r.element in fix_set]
        generated = {self._identity}
        frontier = [self._identity]
        while frontier:
            x = frontier.pop()
            for g in refl_fix:
                y = self.mult(x, g)
                if y not in generated:
                    generated.add(y)
                    frontier.append(y)
        if generated != fix_set:
            raise CherednikError(
                "stabilizer is not generated by the reflections it contains "
                f"(point {p}): got {len(generated)} of {len(fix)} elements")
        return self._subgroup(sorted(fix), f"{self.name}|stab")

    def _subgroup(self, indices, name):
        metas = [self.metas[i] for i in indices]
        # generators: the reflections inside, else every element
        sub_refl = [self.metas[r.element] for r in self.reflections
                    if r.element in set(indices)]
        # the full group keeps its family (so its irreducibles rebuild)
        family = self.family if len(indices) == self.order else None
        sub = ReflectionGroup(
            name, self.n, self.conductor, metas, self.kind,
            self._mult_fn, self._inv_fn, self._matrix_fn, {},
            parent=self, parent_indices=list(indices), family=family)
        sub._identity = metas.index(self.metas[self._identity])
        gen_metas = sub_refl if sub_refl else metas
        sub.generators = {f"g{k}": sub._meta_index[m]
                          for k, m in enumerate(gen_metas)}
        return sub

    def ambient_reflection_class(self, refl):
        """Ambient class label of a subgroup reflection (self if no parent)."""
        if self.parent is None:
            return refl.class_label
        parent_idx = self.parent_indices[refl.element]
        return self.parent.reflection_by_element(parent_idx).class_label

    # ---- irreducibles --------------------------------------------------------------
    @property
    def irreps(self):
        if self._irreps is None:
            self._irreps = self._build_irreps()
        return self._irreps

    def irrep(self, label):
        for rep in self.irreps:
            if rep.label == label:
                return rep
        raise KeyError(f"no irreducible labeled {label!r} in {self.name}")

    def trivial_irrep(self):
        for rep in self.irreps:
            if rep.is_trivial():
                return rep
        raise CherednikError("no trivial representation found")

    def dual_of(self, rep):
        """The dual representation: its character is the inverse-argument one."""
        target = tuple(rep.char(self.inv(r)) for r in self.class_representatives)
        for cand in self.irreps:
            if cand.character_vector() == target:
                return cand
        raise CherednikError(f"dual of {rep.label!r} not found")

    def _build_irreps(self):
        if self.order == 1:
            return [IrrRep(self, "triv", 1, lambda meta: ((ONE,),))]
        if self.kind == "zm" and self.family is not None:
            return self._zm_irreps()
        if self.kind == "perm":
            return self._perm_irreps()
        if self.kind == "i2" and self.family is not None:
            return self._i2_irreps()
        if self._is_abelian():
            return self._abelian_irreps()
        raise UnsupportedGroup(
            f"no exact irreducible construction for group {self.name}")

    def _is_abelian(self):
        gens = list(self.generators.values())
        return all(self.mult(a, b) == self.mult(b, a)
                   for a in gens for b in gens)

    def _zm_irreps(self):
        m = self.order
        N = self.conductor
        step = N // m

        def matrix_fn_for(j):
            # chi_j is the character of the degree-j piece of C[h]
            def fn(meta):
                return ((Cyc.zeta(N, (-j * meta * step) % N),),)
            return fn

        return [IrrRep(self, f"chi{j}", 1, matrix_fn_for(j)) for j in range(m)]

    def _perm_irreps(self):
        pts = len(self.metas[0])
        orbits = self._perm_orbits(pts)
        expected = 1
        for o in orbits:
            expected *= factorial(len(o))
        if expected != self.order:
            if self._is_abelian():
                return self._abelian_irreps()
            raise UnsupportedGroup(
                f"permutation group {self.name} is not a product of full "
                "symmetric groups on its orbits")
        # Young product: outer tensor of seminormal representations per orbit
        blocks = [tuple(o) for o in orbits if len(o) > 1]
        factor_shapes = [partitions_of(len(b)) for b in blocks]
        reps = []
        gens_cache = {}

        def make_matrix_fn(shapes):
            def factor_matrix(block, shape, meta):
                local = {v: k for k, v in enumerate(block)}
                perm = tuple(local[meta[v]] for v in block)
                word = perm_to_adjacent_word(perm)
                key = (block, shape)
                if key not in gens_cache:
                    d = len(standard_tableaux(shape))
                    gens_cache[key] = {
                        "dim": d,
                        "s": [seminormal_transposition_matrix(shape, k + 1)
                              for k in range(len(block) - 1)],
                    }
                data = gens_cache[key]
                mat = [[ONE if i == j else ZERO for j in range(data["dim"])]
                       for i in range(data["dim"])]
                for k in word:
                    mat = mat_mul_generic(mat, data["s"][k])
                return mat

            def fn(meta):
                mat = [[ONE]]
                for block, shape in zip(blocks, shapes):
                    mat = kron(mat, factor_matrix(block, shape, meta))
                return mat
            return fn

        for shapes in itertools.product(*factor_shapes):
            dim = 1
            for shape in shapes:
                dim *= len(standard_tableaux(shape))
            label = shapes[0] if len(blocks) == 1 else tuple(shapes)
            reps.append(IrrRep(self, label, dim, make_matrix_fn(shapes)))
        if not blocks:
            reps = [IrrRep(self, "triv", 1, lambda meta: ((ONE,),))]
        return reps

    def _perm_orbits(self, pts):
        seen = set()
        orbits = []
        for i in range(pts):
            if i in seen:
                continue
            orbit = {i}
            frontier = [i]
            while frontier:
                x = frontier.pop()
                for m in self.metas:
                    if m[x] not in orbit:
                        orbit.add(m[x])
                        frontier.append(m[x])
            seen |= orbit
            orbits.append(sorted(orbit))
        return orbits

    def _i2_irreps(self):
        m = self.family[1]
        N = self.conductor
        step = N // m if m > 0 else N
        reps = []

        def linear(cr, cs):
            # value on s^eps r^k is cr^k * cs^eps
            def fn(meta):
                eps, k = meta
                v = ONE
                if cr == -1 and k % 2 == 1:
                    v = -v
                if cs == -1 and eps == 1:
                    v = -v
                return ((v,),)
            return fn

        reps.append(IrrRep(self, "triv", 1, linear(1, 1)))
        reps.append(IrrRep(self, "sgn", 1, linear(1, -1)))
        if m % 2 == 0:
            reps.append(IrrRep(self, "sgnr", 1, linear(-1, 1)))
            reps.append(IrrRep(self, "sgnrs", 1, linear(-1, -1)))
        top = (m - 1) // 2 if m % 2 == 1 else m // 2 - 1

        def rho(j):
            def fn(meta):
                eps, k = meta
                zp = Cyc.zeta(N, (j * k * step) % N)
                zm = Cyc.zeta(N, (-j * k * step) % N)
                if eps == 0:
                    return ((zp, ZERO), (ZERO, zm))
                return ((ZERO, zm), (zp, ZERO))
            return fn

        for j in range(1, top + 1):
            reps.append(IrrRep(self, f"rho{j}", 2, rho(j)))
        return reps

    def _abelian_irreps(self):
        from .comalg import idempotents_of_commutative_algebra
        n = self.order
        prods = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                vec = [ZERO] * n
                vec[self.mult(i, j)] = ONE
                prods[i][j] = vec
        unit = [ZERO] * n
        unit[self._identity] = ONE
        idems = idempotents_of_commutative_algebra(prods, unit, self.conductor)
        chars = []
        for e in idems:
            # e = (1/|G|) sum_g chi(g^{-1}) g, so chi(g) = |G| * coeff(g^{-1})
            chi = tuple(n * e[self.inv(g)] for g in range(n))
            chars.append(chi)
        chars.sort(key=lambda chi: (0 if all(v == 1 for v in chi) else 1,
                                    _char_sort_key(chi)))
        reps = []
        for j, chi in enumerate(chars):
            label = "triv" if j == 0 else f"chi{j}"

            def fn(meta, chi=chi):
                return ((chi[self._meta_index[meta]],),)
            reps.append(IrrRep(self, label, 1, fn))
        return reps

    # ---- invariant theory hooks (implemented in invariants.py) ---------------
    def invariant_theory(self, side="x"):
        from .invariants import InvariantTheory
        if side not in self._inv_theory:
            self._inv_theory[side] = InvariantTheory(self, side)
        return self._inv_theory[side]

    @property
    def degrees(self):
        if self._degrees is None:
            from .invariants import molien_degrees
            self._degrees = molien_degrees(self)
        return self._degrees

    def fake_polynomial(self, rep):
        if rep.label not in self._fake_cache:
            from .invariants import fake_polynomial
            self._fake_cache[rep.label] = fake_polynomial(self, rep)
        return self._fake_cache[rep.label]

    def b_invariant(self, rep):
        from .series import b_invariant
        return b_invariant(self.fake_polynomial(rep))

    def __repr__(self):
        return f"ReflectionGroup({self.name}, order={self.order}, n={self.n})"


def _char_sort_key(chi):
    from .comalg import _vec_sort_key
    return _vec_sort_key(list(chi))


# --------------------------------------------------------------------------
# Family constructors
# --------------------------------------------------------------------------

def build_zm(m, cap=ORDER_CAP):
    if m < 1:
        raise ValueError("m >= 1 required")
    if m > cap:
        raise CapExceeded(f"|W| = {m} exceeds cap {cap}")
    N = m
    metas = list(range(m))

    def mult(a, b):
        return (a + b) % m

    def inv(a):
        return (-a) % m

    def matrix_fn(a):
        return ((Cyc.zeta(N, a % N),),)

    g = ReflectionGroup(f"Zm:{m}", 1, N, metas, "zm", mult, inv, matrix_fn,
                        {"g": 1 % m}, family=("Zm", m))
    g._identity = 0
    if m == 1:
        g.generators = {}
    return g


def build_sn(n, rep="permutation", cap=ORDER_CAP):
    if not 1 <= n <= 6:
        raise ValueError("1 <= n <= 6 required")
    if factorial(n) > cap:
        raise CapExceeded(f"|W| = {factorial(n)} exceeds cap {cap}")
    if rep not in ("permutation", "reduced"):
        raise ValueError(f"unknown S_n representation {rep!r}")
    metas = sorted(itertools.permutations(range(n)))
    N = 1
    for k in range(1, n + 1):
        N = N * k // gcd(N, k)
    dim = n if rep == "permutation" else n - 1

    if rep == "permutation":
        def matrix_fn(perm):
            return tuple(tuple(ONE if perm[j] == i else ZERO
                               for j in range(n)) for i in range(n))
    else:
        def matrix_fn(perm):
            # basis f_i = e_i - e_{i+1}; column j = image of f_j
            cols = []
            for j in range(n - 1):
                a, b = perm[j], perm[j + 1]
                coeffs = [ZERO] * (n - 1)
                sign = ONE
                if a > b:
                    a, b = b, a
                    sign = -ONE
                for k in range(a, b):
                    coeffs[k] = sign
                cols.append(coeffs)
            return tuple(tuple(cols[j][i] for j in range(n - 1))
                         for i in range(n - 1))

    gens = {}
    for k in range(n - 1):
        t = list(range(n))
        t[k], t[k + 1] = t[k + 1], t[k]
        gens[f"s{k + 1}{k + 2}"] = metas.index(tuple(t))
    g = ReflectionGroup(f"Sn:{n}:{rep}", dim, N, metas, "perm",
                        compose_perm, invert_perm, matrix_fn, gens,
                        family=("Sn", n, rep))
    g._identity = metas.index(tuple(range(n)))
    if n == 1:
        g.generators = {}
    return g


def build_i2(m, cap=ORDER_CAP):
    if m < 1:
        raise ValueError("m >= 1 required")
    if 2 * m > cap:
        raise CapExceeded(f"|W| = {2 * m} exceeds cap {cap}")
    lcm = 2 * m // gcd(2, m)
    N = lcm
    metas = [(eps, k) for eps in (0, 1) for k in range(m)]

    def mult(a, b):
        e1, k1 = a
        e2, k2 = b
        if e2 == 0:
            return (e1, (k1 + k2) % m)
        return ((e1 + 1) % 2, (k2 - k1) % m)

    def inv(a):
        eps, k = a
        if eps == 0:
            return (0, (-k) % m)
        return (1, k)

    step = N // m

    def matrix_fn(meta):
        eps, k = meta
        zp = Cyc.zeta(N, (k * step) % N) if m > 1 else ONE
        zm = Cyc.zeta(N, (-k * step) % N) if m > 1 else ONE
        if eps == 0:
            return ((zp, ZERO), (ZERO, zm))
        return ((ZERO, zm), (zp, ZERO))

    gens = {"r": metas.index((0, 1 % m)), "s": metas.index((1, 0))}
    if m == 1:
        gens = {"s": metas.index((1, 0))}
    g = ReflectionGroup(f"I2:{m}", 2, N, metas, "i2", mult, inv, matrix_fn,
                        gens, family=("I2", m))
    g._identity = metas.index((0, 0))
    return g


def build_from_generators(conductor, gen_matrices, name="custom",
                          cap=ORDER_CAP):
    """Close a set of exact matrices into a group (custom-group JSON path)."""
    n = len(gen_matrices[0])
    gens = [tuple(tuple(Cyc.of(v, conductor) for v in row) for row in m)
            for m in gen_matrices]
    ident = tuple(tuple(ONE if i == j else ZERO for j in range(n))
                  for i in range(n))
    seen = {ident: 0}
    metas = [ident]
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = tuple(tuple(sum((x[i][t] * g[t][j] for t in range(n)
                                 if g[t][j]), ZERO)
                            for j in range(n)) for i in range(n))
            # y = x*g
            if y not in seen:
                if len(metas) >= cap:
                    raise CapExceeded(f"group closure exceeds cap {cap}")
                seen[y] = len(metas)
                metas.append(y)
                frontier.append(y)

    def mult(a, b):
        return tuple(tuple(sum((a[i][t] * b[t][j] for t in range(n)), ZERO)
                           for j in range(n)) for i in range(n))

    def inv(a):
        # finite order: invert by powering
        cur = a
        prev = ident
        while cur != ident:
            prev = cur
            cur = mult(cur, a)
        return prev

    def matrix_fn(meta):
        return meta

    glabels = {f"g{k}": seen[g] for k, g in enumerate(gens)}
    g = ReflectionGroup(name, n, conductor, metas, "matrix", mult, inv,
                        matrix_fn, glabels)
    g._identity = 0
    return g


def build_group(spec, cap=ORDER_CAP):
    """Build from a shorthand string: "Zm:5", "Sn:4:permutation", "I2:6"."""
    parts = str(spec).split(":")
    fam = parts[0]
    if fam == "Zm" and len(parts) == 2:
        return build_zm(int(parts[1]), cap)
    if fam == "Sn" and len(parts) in (2, 3):
        rep = parts[2] if len(parts) == 3 else "permutation"
        return build_sn(int(parts[1]), rep, cap)
    if fam == "I2" and len(parts) == 2:
        return build_i2(int(parts[1]), cap)
    raise ValueError(f"unrecognized group spec {spec!r}")


def dual_rep(rep):
    """The dual irreducible: conjugate (inverse-argument) character."""
    return rep.group.dual_of(rep)


def degrees(group):
    """Invariant degrees, from the Molien-series factorization."""
    return group.degrees


def stabilizer(group, point):
    """Subgroup fixing a point of h*, with inherited reflection data."""
    return group.stabilizer(point)


def fake_polynomial(group, rep):
    """Graded multiplicity polynomial of rep in the coinvariant ring."""
    return group.fake_polynomial(rep)
