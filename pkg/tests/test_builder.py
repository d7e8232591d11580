import pytest

from e6compact import builder, tables
from e6compact.builder import ConflictError, IncompleteError, MismatchError
from e6compact.notation import parse_vec
from e6compact.rep78 import Vec78, build_generators
from e6compact.tensor import HEADER, StructureTensor, bracket_eval

SEED2 = ("(1,0,0)_1", "(1,0,0)_9", "-(1,w,w)_0+(wb,w,w)_3")


def br(x: str, y: str, T) -> Vec78:
    return bracket_eval(parse_vec(x), parse_vec(y), T)


def test_seed_table_contents():
    seeds = builder.seed_products()
    assert seeds[((0, 0, 0), (1, 0, 0))] == parse_vec("(wb,1,1)_3-(1,wb,wb)_9")
    assert seeds[((1, 0, 0), (9, 0, 0))] == parse_vec("-(1,w,w)_0+(wb,w,w)_3")
    assert seeds[((0, 1, 0), (0, 2, 0))] == Vec78.zero()
    # two seeds plus 13 blocks of 9 x 9 same-block keys
    assert len(seeds) == 2 + 13 * 81
    assert set(seeds.provenance.values()) == {"seed", "same-block-zero"}


@pytest.mark.parametrize("x, y, z", [
    ("(1,0,0)_0", "(1,0,0)_1", "(wb,1,1)_3-(1,wb,wb)_9"),
    ("(1,0,0)_1", "(1,0,0)_9", "-(1,w,w)_0+(wb,w,w)_3"),
    ("(0,1,0)_0", "(0,0,1)_0", "0"),
    ("(0,1,0)_0", "(1,0,0)_1", "(1,wb,1)_3-(w,w,wb)_9"),
    ("(1,0,0)_1", "(1,0,0)_3", "(w,1,1)_0-(wb,wb,wb)_9"),
    ("(0,0,1)_0", "(0,1,0)_1", "(w,w,1)_3-(wb,1,wb)_9"),
    ("(1,0,0)_9", "(1,0,0)_1", "(1,w,w)_0-(wb,w,w)_3"),
    ("(1,0,0)_T", "(1,0,0)_0", "(wb,1,1)_2-(1,wb,wb)_8"),
])
def test_displayed_products(tensor, x, y, z):
    assert br(x, y, tensor) == parse_vec(z)


def test_c_check_final_product_differs_from_display(tensor):
    # displayed as (w,wb,wb)_8-(wb,w,w)_4; the value forced by the seeds is below
    assert br("(1,0,0)_9", "(1,0,0)_E", tensor) == parse_vec("(w,1,1)_8-(wb,wb,wb)_4")


def test_e6_table_block_39_entry_is_reindexed(tensor):
    # printed entry (0, 1) of the (3, 9) block is the value at column 2
    printed = parse_vec(tables.E6_TABLE[(3, 9)][0][1])
    assert br("(1,0,0)_3", "(0,0,1)_9", tensor) == printed
    assert br("(1,0,0)_3", "(0,1,0)_9", tensor) == parse_vec("(1,wb,w)_0-(wb,wb,w)_1")


def test_propagation_is_complete_and_integral(tensor):
    assert len(tensor) == 22581
    assert tensor.is_integral()
    assert tensor.max_abs() == 1


def test_block_support_rule(tensor):
    # a product of V_0 and V_1 lies in V_3 + V_9
    for k in range(6):
        for m in range(6):
            z = bracket_eval(Vec78.basis(k), Vec78.basis(6 + m), tensor)
            assert z.support() <= {3, 9}


def test_text_round_trip(tensor):
    text = tensor.to_text()
    assert text.splitlines()[0] == HEADER == "e6-sc v1 basis=6t+2k+s seed=paper"
    assert StructureTensor.from_text(text) == tensor
    assert StructureTensor.from_text(text).to_text() == text


def test_text_rejects_garbage():
    with pytest.raises(ValueError):
        StructureTensor.from_text("not a tensor\n")
    with pytest.raises(ValueError):
        StructureTensor.from_text(HEADER + "\n5 3 1 1\n")


def test_propagation_deterministic(tensor):
    assert builder.build_propagated().to_text() == tensor.to_text()


def test_table_route_without_errata_mismatches():
    with pytest.raises(MismatchError, match="row-left"):
        builder.build("both")


def test_table_route_with_errata_matches(tensor):
    assert builder.table_mode_build(errata=True) == tensor


def test_e6_table_orientation():
    assert builder.e6_table_orientation() == "row-left"


def test_conflicting_seed_detected():
    with pytest.raises(ConflictError, match="conflict at"):
        builder.build_propagated([("(1,0,0)_0", "(1,0,0)_1", "(1,0,0)_3"), SEED2])


def test_missing_orbit_is_incomplete():
    with pytest.raises(IncompleteError, match="unassigned"):
        builder.build_propagated([("(1,0,0)_0", "(1,0,0)_1", "(wb,1,1)_3-(1,wb,wb)_9")])


def test_bad_mode():
    with pytest.raises(ValueError):
        builder.build("guess")


def test_invariance_under_every_generator(tensor):
    for name, g in build_generators().items():
        rep = builder.verify_invariance(tensor, g, name)
        assert rep.ok, rep
