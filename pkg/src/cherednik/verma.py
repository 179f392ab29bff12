"""Closed graded-character formulas for endomorphism rings of Verma modules:
the main character formula, its hook-polynomial form for symmetric groups,
generator-degree factorizations, and the bigraded self-intersection
characters.

Orientation note: the generator degrees e_i are read so that
prod_i 1/(1 - q^{e_i}) reconstructs the endomorphism-ring character itself
(the "generator degrees" reading); every factorization result carries this
note.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MissingEis, NegativeExponentPresent
from .series import (DEFAULT_TRUNCATION, BigradedCharacter, GradedCharacter,
                     product_of_geometric)

ORIENTATION_NOTE = ("e_i are generator degrees of the endomorphism ring: "
                    "prod 1/(1-q^e_i) reconstructs its graded character")


def endo_character(group, rep, truncation=DEFAULT_TRUNCATION):
    """Graded character of End(Delta(rep)) for a distinguished rep.

    q^{-b} * f(q) * prod_i 1/(1 - q^{d_i}), where f is the fake polynomial
    of the dual representation and b its lowest exponent.  The result must
    be an N-graded series with constant term 1; otherwise the input was not
    a distinguished representative and NegativeExponentPresent is raised.
    """
    dual = group.dual_of(rep)
    f = group.fake_polynomial(dual)
    b = f.min_exponent()
    ch = f.shift(-b).truncate(truncation) * product_of_geometric(
        group.degrees, truncation)
    if any(e < 0 for e in ch.coeffs):
        raise NegativeExponentPresent(
            f"character of End(Delta({rep.label!r})) has negative exponents; "
            "the representation is not distinguished")
    if ch[0] != 1:
        raise NegativeExponentPresent(
            f"character of End(Delta({rep.label!r})) does not start at 1")
    return ch


def verma_character(group, rep, truncation=DEFAULT_TRUNCATION):
    """Graded character of the full standard module: dim(rep)/(1-q)^n."""
    ch = product_of_geometric([1] * group.n, truncation)
    return ch.scale(rep.dim)


def hook_lengths(partition):
    out = []
    cols = [0] * (partition[0] if partition else 0)
    for row_len in partition:
        for j in range(row_len):
            cols[j] += 1
    for i, row_len in enumerate(partition):
        for j in range(row_len):
            arm = row_len - j - 1
            leg = cols[j] - i - 1
            out.append(arm + leg + 1)
    return sorted(out, reverse=True)


def hook_polynomial(partition):
    """prod over cells of (1 - q^{hook length}), as an exact polynomial."""
    poly = GradedCharacter.one()
    for h in hook_lengths(partition):
        poly = poly * GradedCharacter({0: Fraction(1), h: Fraction(-1)})
    return poly


def hook_identity_check(group, partition, truncation=DEFAULT_TRUNCATION):
    """Does End(Delta(partition)) have character 1/hook polynomial?

    ``group`` must be a symmetric group in its permutation representation
    and the partition a singleton block at the given (generic) parameter.
    """
    rep = group.irrep(tuple(partition))
    lhs = endo_character(group, rep, truncation)
    rhs = hook_polynomial(tuple(partition)).truncate(truncation) \
        .series_inverse(truncation)
    return lhs.equals(rhs, up_to=truncation)


class EisFactorization:
    """Sorted generator degrees 0 < e_1 <= ... <= e_n, or no solution."""

    def __init__(self, exponents, note=ORIENTATION_NOTE):
        self.exponents = tuple(exponents) if exponents is not None else None
        self.note = note

    @classmethod
    def no_solution(cls):
        return cls(None)

    def is_solution(self):
        return self.exponents is not None

    def payload(self):
        return {"exponents": list(self.exponents) if self.exponents else None,
                "solvable": self.is_solution(),
                "orientation": self.note}

    def __eq__(self, other):
        if isinstance(other, EisFactorization):
            return self.exponents == other.exponents
        return NotImplemented

    def __repr__(self):
        if self.exponents is None:
            return "EisFactorization(NoSolution)"
        return f"EisFactorization({list(self.exponents)})"


def solve_eis_from_character(ch, n, truncation=DEFAULT_TRUNCATION):
    """Peel n geometric factors off a series with constant term 1.

    At each step the lowest nonconstant exponent e must carry a positive
    integer coefficient; after n peels the remainder must be exactly 1 to
    the truncation order.  Returns the factorization or the NoSolution
    marker (a legitimate outcome, not an error).
    """
    s = ch.truncate(truncation)
    if s[0] != 1:
        return EisFactorization.no_solution()
    exponents = []
    for _ in range(n):
        e = None
        for k in sorted(s.coeffs):
            if k >= 1:
                e = k
                break
        if e is None:
            return EisFactorization.no_solution()
        c = s[e]
        if c.denominator != 1 or c < 1:
            return EisFactorization.no_solution()
        exponents.append(e)
        s = s * GradedCharacter({0: Fraction(1), e: Fraction(-1)},
                                truncation)
    if not s.equals(GradedCharacter.one(truncation), up_to=truncation):
        return EisFactorization.no_solution()
    return EisFactorization(sorted(exponents))


def solve_eis(group, rep, truncation=DEFAULT_TRUNCATION):
    """Generator degrees of End(Delta(rep)) for a distinguished singleton rep."""
    ch = endo_character(group, rep, truncation)
    return solve_eis_from_character(ch, group.n, truncation)


def _bigraded_product(group, rep, eis, signs, truncation):
    if eis is None or not eis.is_solution():
        raise MissingEis("no generator-degree factorization available")
    dual = group.dual_of(rep)
    f = group.fake_polynomial(dual)
    b = f.min_exponent()
    out = BigradedCharacter.from_graded(f.shift(-b).truncate(truncation))
    for e in eis.exponents:
        out = out * BigradedCharacter(
            {(0, 0): Fraction(1), (signs * e, 1): Fraction(1)}, truncation)
    geo = product_of_geometric(group.degrees, truncation)
    return out * BigradedCharacter.from_graded(geo)


def tor_character(group, rep, eis, truncation=DEFAULT_TRUNCATION):
    """Bigraded character of the derived self-intersection, homology side:
    q^{-b} f(q) prod (1 + t q^{-e_i}) / (1 - q^{d_i})."""
    return _bigraded_product(group, rep, eis, -1, truncation)


def ext_character(group, rep, eis, truncation=DEFAULT_TRUNCATION):
    """Bigraded character, cohomology side:
    q^{-b} f(q) prod (1 + t q^{+e_i}) / (1 - q^{d_i})."""
    return _bigraded_product(group, rep, eis, +1, truncation)


def dual_verma_pairing_expected(n):
    """Expected pairing against the dual standard module: one-dimensional
    homology in degree 0, one-dimensional cohomology in degree n."""
    return {"tor": [(0, 1)], "ext": [(n, 1)]}
