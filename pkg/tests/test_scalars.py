from fractions import Fraction

from hypothesis import given, strategies as st

from e6compact.scalars import (OMEGA, OMEGA_BAR, ONE, Q1, QI, QJ, QK, Q_OMEGA, Q_OMEGA_BAR, THETA,
                               ZERO, EisScalar, Quaternion)

fractions = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
eis = st.builds(EisScalar, fractions, fractions)
quats = st.builds(Quaternion, fractions, fractions, fractions, fractions)


def test_omega_identities():
    assert OMEGA * OMEGA_BAR == ONE
    assert OMEGA * OMEGA == -ONE - OMEGA
    assert OMEGA ** 3 == ONE
    assert OMEGA.conj() == OMEGA_BAR


def test_theta():
    assert THETA == OMEGA - OMEGA_BAR
    assert THETA * THETA == -3
    assert THETA.conj() == -THETA
    assert THETA.norm() == 3


def test_inverse_and_division():
    x = EisScalar(Fraction(2, 3), -5)
    assert x * x.inverse() == ONE
    assert (x / THETA) * THETA == x
    assert x / 2 == EisScalar(Fraction(1, 3), Fraction(-5, 2))


def test_str_and_short():
    assert str(EisScalar(1, -2)) == "1+-2*w"
    assert EisScalar.parse("1+-2*w") == EisScalar(1, -2)
    assert OMEGA_BAR.short() == "wb"
    assert (-OMEGA_BAR).short() == "-wb"
    assert OMEGA.short() == "w"
    assert EisScalar(2, Fraction(-1, 2)).short() == "2-1/2w"
    assert ZERO.short() == "0"


def test_hamilton_units():
    assert QI * QJ == QK
    assert QJ * QK == QI
    assert QK * QI == QJ
    assert QI * QI == -Q1
    assert QJ * QI == -QK


def test_quaternion_omega_has_order_three():
    w = Q_OMEGA
    assert w * w * w == Q1
    assert w != Q1 and w * w != Q1
    assert w * w + w + Q1 == Quaternion(0)
    assert Q_OMEGA_BAR == w.conjugate()
    assert w.norm() == 1


def test_star():
    assert QI.star() == -QI
    assert QJ.star() == -QK
    assert QK.star() == -QJ
    assert Q_OMEGA.star().star() == Q_OMEGA


def test_quaternion_parse_round_trip():
    q = Quaternion(Fraction(-1, 2), 3, 0, Fraction(7, 4))
    assert Quaternion.parse(str(q)) == q


@given(eis, eis, eis)
def test_eis_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(eis, eis)
def test_eis_conj_and_norm_multiplicative(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x * y).norm() == x.norm() * y.norm()
    assert x * x.conj() == EisScalar(x.norm())


@given(eis)
def test_eis_text_round_trip(x):
    assert EisScalar.parse(str(x)) == x
    assert hash(EisScalar(x.a, x.b)) == hash(x)


@given(quats, quats, quats)
def test_quaternion_associative(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(quats, quats)
def test_quaternion_star_is_automorphism(p, q):
    assert (p * q).star() == p.star() * q.star()
    assert (p * q).norm() == p.norm() * q.norm()
    assert (p * q).conjugate() == q.conjugate() * p.conjugate()
