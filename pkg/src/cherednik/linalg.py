"""Dense exact linear algebra over Q and Q(zeta_N).

Entries are Fractions or Cyc values; the two interoperate, and Fraction(0)/
Fraction(1) serve as universal zero/one.  Everything is exact Gauss-Jordan;
results satisfy A.x = b on re-substitution, exactly.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows, cols):
    return [[ZERO] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def mat_mul(a, b):
    n, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = zeros(n, cols)
    for i in range(n):
        ai, oi = a[i], out[i]
        for t in range(k):
            v = ai[t]
            if v:
                bt = b[t]
                for j in range(cols):
                    if bt[j]:
                        oi[j] = oi[j] + v * bt[j]
    return out
def mat_vec(a, v):
    out = []
    for row in a:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (new rows, pivot column list)."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def kernel_basis(rows, ncols):
    """Basis of {v : A v = 0}; empty list for full column rank."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            if red[r][f]:
                v[p] = -red[r][f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One exact solution of A x = b, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = red[r][ncols]
    return x


def solve_unique(rows, rhs):
    x = solve(rows, rhs)
    if x is None:
        raise ArithmeticError("inconsistent linear system")
    return x


def row_space_contains(red, pivots, vec):
    """Given rref rows, reduce vec against them; returns (residual, coeffs)."""
    v = list(vec)
    coeffs = []
    for r, p in enumerate(pivots):
        c = v[p]
        coeffs.append(c)
        if c:
            row = red[r]
            v = [a - c * b for a, b in zip(v, row)]
    return v, coeffs


class ExactMatrix:
    """Dense matrix of exact entries with kernel/rank/solve helpers."""

    def __init__(self, entries):
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for r in self.entries:
            if len(r) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n):
        return cls(identity(n))

    def kernel(self):
        return kernel_basis(self.entries, self.cols)

    def rank(self):
        return rank(self.entries, self.cols)

    def solve(self, rhs):
        return solve(self.entries, rhs)

    def mul_vec(self, v):
        return mat_vec(self.entries, v)

    def mul(self, other):
        return ExactMatrix(mat_mul(self.entries, other.entries))

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


def matrix_kernel(matrix):
    """Kernel basis of a matrix given as ExactMatrix or list of rows."""
    if isinstance(matrix, ExactMatrix):
        return matrix.kernel()
    ncols = len(matrix[0]) if matrix else 0
    return kernel_basis(matrix, ncols)
