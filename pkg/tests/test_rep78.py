import random
from fractions import Fraction

import pytest

from e6compact.notation import parse_vec
from e6compact.rep78 import (LINES, BlockOperator, Vec78, apply, build_generators, collinear, compose,
                             d_patterns_on_line, extraspecial_check, inverse, line_through, lines_fixed_by,
                             operator_order, parse_word, root_set, verify_relations,
                             verify_root_preservation)
from e6compact.scalars import OMEGA, OMEGA_BAR, ONE, EisScalar

G = build_generators()


def random_vec(rng: random.Random) -> Vec78:
    return Vec78([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(78)])


@pytest.mark.parametrize("gen, src, dst", [
    ("a", "(t,0,0)_0", "(t,0,0)_1"),
    ("b", "(1,1,1)_2", "(w,wb,wb)_6"),
    ("e", "(1,0,0)_1", "(0,1,0)_1"),
    ("e", "(0,1,0)_1", "(0,0,1)_1"),
    ("c", "(1,w,0)_3", "-(w,0,w*wb)_9"),
])
def test_generator_images(gen, src, dst):
    assert apply(G[gen], parse_vec(src)) == parse_vec(dst)


def test_d_scales_block_one_by_omega():
    v = parse_vec("(1,-2,w)_1")
    assert apply(G["d"], v) == v.scale(OMEGA)


def test_c_conjugate_flags():
    c = G["c"]
    assert {t for t in range(13) if not c.conjugate[t]} == {1, 3, 9}


def test_c_is_an_involution_on_basis():
    c = G["c"]
    for u in range(78):
        e = Vec78.basis(u)
        assert apply(c, apply(c, e)) == e


def test_identity_and_inverse():
    v = random_vec(random.Random(1))
    assert apply(BlockOperator.identity(), v) == v
    for g in G.values():
        assert apply(compose(g, inverse(g)), v) == v


@pytest.mark.parametrize("gen, bound, order", [("a", 20, 13), ("b", 5, 3), ("c", 4, 2), ("d", 5, 3), ("e", 5, 3)])
def test_orders(gen, bound, order):
    assert operator_order(G[gen], bound) == order


def test_order_bound_exceeded():
    with pytest.raises(ValueError, match="order exceeds bound"):
        operator_order(G["a"], 5)


def test_relations_all_hold():
    checks = verify_relations()
    assert all(c.ok for c in checks), [c for c in checks if not c.ok]
    names = {c.name for c in checks}
    assert "a^b=a^3" in names and "e^b=e" in names


def test_delta_is_reported():
    delta = [c for c in verify_relations() if c.name.startswith("e^a.e")]
    assert len(delta) == 1 and "delta=" in delta[0].detail


def test_word_parser_conjugation():
    a, b = G["a"], G["b"]
    assert parse_word("a^b") == compose(compose(inverse(b), a), b)
    assert parse_word("a^b") == parse_word("a^3")
    assert parse_word("d d^(a^-1)") == parse_word("d^(a^-3)")


def test_compose_associative_and_inverse_reverses():
    a, c, e = G["a"], G["c"], G["e"]
    assert compose(compose(a, c), e) == compose(a, compose(c, e))
    assert inverse(compose(a, c)) == compose(inverse(c), inverse(a))


def test_norm_preserved():
    rng = random.Random(7)
    for _ in range(5):
        v = random_vec(rng)
        for g in G.values():
            assert apply(g, v).hermitian_norm() == v.hermitian_norm()


def test_root_set():
    roots = root_set()
    assert len(roots) == 936
    assert parse_vec("(t,0,0)_0") in roots
    assert parse_vec("(1,1,1)_5") in roots
    assert all(r.hermitian_norm() == 3 for r in roots)
    assert all(c.ok for c in verify_root_preservation())
    assert {apply(G["c"], r) for r in roots} == roots


def test_root_preservation_detects_escape():
    bad = set(root_set()) | {parse_vec("(1,0,0)_0")}
    assert not all(c.ok for c in verify_root_preservation(bad))


def test_projective_plane():
    assert line_through(0, 1) == frozenset({0, 1, 3, 9})
    assert not collinear(0, 1, 2)
    assert collinear(0, 1, 3)
    assert len(LINES) == 13 and all(len(L) == 4 for L in LINES)
    for r in range(13):
        for s in range(r + 1, 13):
            assert sum(1 for L in LINES if r in L and s in L) == 1


def test_lines_fixed_by_c():
    want = {frozenset(x) for x in ({0, 1, 3, 9}, {1, 2, 4, 10}, {5, 6, 8, 1}, {11, 12, 1, 7}, {12, 0, 2, 8})}
    assert set(lines_fixed_by(G["c"])) == want


def test_d_patterns_on_line():
    pats = d_patterns_on_line([0, 1, 3, 9])
    assert (ONE, OMEGA, OMEGA, OMEGA) in pats
    assert (OMEGA, ONE, OMEGA, OMEGA_BAR) in pats
    assert len(pats) == 9


def test_extraspecial():
    chk = extraspecial_check()
    assert chk.ok and "order=27" in chk.detail


def test_operator_text_round_trip():
    for g in G.values():
        assert BlockOperator.from_text(g.to_text()) == g


def test_vec_scale_is_complex():
    v = parse_vec("(1,0,0)_0")
    assert v.scale(EisScalar(0, 1)) == parse_vec("(w,0,0)_0")
    assert 3 * v == parse_vec("3(1,0,0)_0")
