from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cherednik.cyclotomic import Cyc, cyclotomic_polynomial, euler_phi

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 12]


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


@pytest.mark.parametrize("n", CONDUCTORS)
def test_zeta_power_identity(n):
    z = Cyc.zeta(n)
    assert z ** n == 1
    # the defining polynomial vanishes on zeta
    phi = cyclotomic_polynomial(n)
    total = Cyc.rational(0, n)
    for k, c in enumerate(phi):
        total = total + Cyc.rational(c, n) * z ** k
    assert not total


def _rand_cyc(draw, n):
    phi = euler_phi(n)
    coeffs = draw(st.lists(
        st.tuples(st.integers(0, phi - 1),
                  st.fractions(min_value=-5, max_value=5, max_denominator=6)),
        min_size=0, max_size=3))
    return Cyc(n, {e: c for e, c in coeffs})


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([3, 4, 5, 8, 12]))
def test_field_axioms(data, n):
    a = _rand_cyc(data.draw, n)
    b = _rand_cyc(data.draw, n)
    c = _rand_cyc(data.draw, n)
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1
        assert (1 / a) * a == 1


@pytest.mark.parametrize("n", [3, 4, 8])
def test_division_and_powers(n):
    a = Cyc(n, {0: Fraction(3, 2), 1: Fraction(-1, 3)})
    assert a / a == 1
    assert a ** -2 == (a * a).inverse()
    assert a ** 0 == 1


def test_canonical_reduction():
    # zeta_3^2 reduces to -1 - zeta_3
    z = Cyc.zeta(3)
    sq = z * z
    assert sq.c == {0: Fraction(-1), 1: Fraction(-1)}
    # zeta_4^2 = -1 is rational
    assert (Cyc.zeta(4) ** 2).is_rational()
    assert (Cyc.zeta(4) ** 2).rational_value() == -1


def test_rational_interop_and_hash():
    a = Cyc.rational(Fraction(2, 3), 6)
    assert a == Fraction(2, 3)
    assert hash(a) == hash(Fraction(2, 3))
    assert a + Fraction(1, 3) == 1
    assert Fraction(1, 2) * Cyc.zeta(4) == Cyc(4, {1: Fraction(1, 2)})
    # Fraction / Cyc goes through the reflected division
    assert Fraction(1) / Cyc.zeta(4) == Cyc.zeta(4) ** 3


def test_conjugation_norm_is_rational():
    z = Cyc.zeta(5)
    a = 1 + z + z ** 3
    norm = a * a.conjugate()
    assert norm == norm.conjugate()


def test_literals_round_trip():
    a = Cyc(8, {1: Fraction(1, 2), 3: Fraction(-3)})
    lits = a.literals()
    assert Cyc.from_literals(8, lits) == a
    assert lits == [[1, 1, 2], [3, -3, 1]]
    # exponents at or above phi(8) reduce into the canonical range
    b = Cyc(8, {5: Fraction(1)})
    assert b.literals() == [[1, -1, 1]]


def test_mixed_conductor_coercion():
    z3 = Cyc.zeta(3)
    z6 = Cyc.zeta(6)
    assert Cyc.of(z3, 6) == z6 ** 2
    with pytest.raises(ValueError):
        Cyc.of(z6, 3)
