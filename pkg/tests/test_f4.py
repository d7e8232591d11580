from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from e6compact import f4
from e6compact.notation import parse_vec
from e6compact.rep78 import M1, M2, M3, M4, row_times
from e6compact.scalars import OMEGA, Q1, QI, QJ, QK, Q_OMEGA, Quaternion

P = f4.parse_wvec
ints = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 4))
quats = st.builds(Quaternion, ints, ints, ints, ints)


def test_bridge_images():
    assert f4.quat_to_block(QI) == tuple(parse_vec("(1,1,1)_0").block(0))
    assert f4.quat_to_block(QJ) == tuple(parse_vec("(1,w,w)_0").block(0))
    assert f4.quat_to_block(QK) == tuple(parse_vec("(1,wb,wb)_0").block(0))
    assert f4.quat_to_block(Q1) == tuple(parse_vec("-(t,0,0)_0").block(0))


@given(quats, quats)
def test_bridge_is_linear_bijection(p, q):
    assert f4.block_to_quat(f4.quat_to_block(p)) == p
    pb, qb, sb = f4.quat_to_block(p), f4.quat_to_block(q), f4.quat_to_block(p + q)
    assert sb == tuple(x + y for x, y in zip(pb, qb))


@given(quats)
def test_complex_omega_is_left_quaternion_omega(q):
    x, y, z = f4.quat_to_block(q)
    assert f4.quat_to_block(Q_OMEGA * q) == (x * OMEGA, y * OMEGA, z * OMEGA)


@pytest.mark.parametrize("text, member, quat", [
    ("(1,1,1)_0", True, "0+1i+0j+0k"),
    ("(t,0,0)_5", True, "-1+0i+0j+0k"),
    ("(1,w,wb)_2", False, None),
])
def test_membership(text, member, quat):
    v = parse_vec(text)
    assert f4.w_membership(v) is member
    if member:
        assert Quaternion.parse(quat) in f4.w_project(v).quats
    else:
        with pytest.raises(f4.NotInW):
            f4.w_project(v)


def test_wvec_parsing():
    assert P("wb*1_0") == f4.WVector.of(0, Q_OMEGA * Q_OMEGA)
    assert P("t*j_3") == f4.WVector.of(3, (QI + QJ + QK) * QJ)
    assert P("-k_9+w_T") == f4.WVector.of(9, -QK) + f4.WVector.of(12, Q_OMEGA)
    with pytest.raises(ValueError):
        P("x_0")
    assert f4.parse_right("kwb") == QK * Q_OMEGA * Q_OMEGA


@pytest.mark.parametrize("x, y, z", [
    ("wb*1_0", "wb*1_1", "j_3+k_9"),
    ("wb*i_0", "wb*j_1", "1_3-1_9"),
    ("w*k_9", "w*1_1", "-1_0-j_3"),
    ("wb*1_0", "wb*i_1", "t*j_3+t*k_9"),
    ("1_1", "wb*j_3", "1_0-k_9"),
    ("wb*j_3", "k_9", "-t*1_0+t*i_1"),
    ("wb*j_3", "j_9", "-1_0-i_1"),
])
def test_f4_products(tensor, x, y, z):
    assert f4.f4_bracket(P(x), P(y), tensor) == P(z)


def test_closure(tensor):
    rep = f4.verify_w_closure(tensor)
    assert rep.ok, rep.render()
    assert rep.checks == 1 + 1326 + 4 + 1
    assert "dim W=52" in rep.notes
    assert any(n.startswith("e leaves W") for n in rep.notes)


def test_f4_table(tensor):
    rep = f4.verify_f4_table(tensor)
    assert rep.ok, rep.render()
    assert rep.checks == 96 == len(f4.f4_table_entries())


@pytest.mark.parametrize("M, right", [(M1, QJ * Q_OMEGA), (M2, QI), (M3, QK * Q_OMEGA), (M4, QJ)])
def test_m_matrices_are_right_multiplications(M, right):
    for q in (Q1, QI, QJ, QK):
        assert f4.block_to_quat(row_times(f4.quat_to_block(q), M)) == q * right


def test_quaternionic_actions():
    rep = f4.verify_quaternionic_actions()
    assert rep.ok, rep.render()


def test_eigencorrespondences(tensor):
    rep = f4.verify_f4_eigencorrespondences(tensor)
    assert rep.ok, rep.render()


def test_axioms_on_random_triples(tensor):
    assert f4.verify_f4_axioms(tensor, samples=50, seed=1).ok


def test_export_round_trip(tensor):
    table = f4.f4_table(tensor)
    assert len(table) == 78 * 12 * 12
    text = f4.export_text(table)
    lines = text.splitlines()
    assert lines[0] == f4.F4_HEADER
    assert "0 -1/2-1/2i-1/2j-1/2k 1 -1/2-1/2i-1/2j-1/2k -> 3 0+0i+1j+0k + 9 0+0i+0j+1k" in lines
    assert f4.import_text(text) == table


def test_import_rejects_bad_header():
    with pytest.raises(ValueError):
        f4.import_text("f4-table v0\n")
