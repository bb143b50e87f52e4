from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ktiling.errors import ParseError
from ktiling.instance import InstanceConfig, fixture_names, load_instance, parse_instance, serialize_instance

from conftest import V, cs_polygons, lattices, small_rat

GOOD = """# comment line
polygon = (0,0) (1,0) (1,1) (0,1)   # trailing comment
basis = (1,0) (0,1/2)
k = 2
"""


def test_parse_good():
    cfg = parse_instance(GOOD)
    assert cfg.basis == (V(1, 0), V(0, Fraction(1, 2)))
    assert cfg.offsets == (V(0, 0),)
    assert cfg.k == 2
    assert cfg.line_of("basis") == 3


def test_signed_rationals():
    cfg = parse_instance("polygon = (-5/4,3/2) (5/4,3/2) (5/4,-3/2) (-5/4,-3/2)\nbasis = (5/2,0) (0,3)\n")
    assert cfg.polygon[0] == V(Fraction(-5, 4), Fraction(3, 2))


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("polygon = (0,0) (1,0) (1,1) (0.75,1)\nbasis = (1,0) (0,1)\n", 1, 30),
        ("polygon = (0,0) (1,0) (1,1) (0,1)\nbasis = (1,0) (0,1) (1,1)\n", 2, 1),
        ("polygon = (0,0) (1,0) (1,1) (0,1)\n", 2, 1),
        ("polygon = (0,0) (1,0) (1,1) (0,1)\nbasis = (1,0) (0,1)\nk = 0\n", 3, 5),
        ("polygon = (0,0) (1,0) (1,1) (0,1)\nbasis = (1,0) (0,1)\ncolour = red\n", 3, 1),
        ("polygon = (0,0) (1,0) (1,1) (0,1)\npolygon = (0,0) (1,0) (1,1) (0,1)\n", 2, 1),
        ("polygon = (0,0) (1,0) (1,1) (0,1)\nbasis = (1,0) (0,1/0)\n", 2, 18),
        ("polygon = (0,0) (1,0) (1,1 (0,1)\nbasis = (1,0) (0,1)\n", 1, 28),
        ("polygon = (0,0) (1,0) (2,2) (0,1)\nbasis = (1,0) (0,1)\n", 1, 1),
        ("polygon = (0,0) (1,0) (1,1) (0,1)\nbasis = (1,1) (2,2)\n", 2, 1),
    ],
)
def test_parse_errors_are_located(text, line, col):
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert (err.value.line, err.value.column) == (line, col)


def test_decimal_message():
    with pytest.raises(ParseError, match="not an exact rational"):
        parse_instance("polygon = (0,0) (1,0) (1,1) (0,1)\nbasis = (1,0) (0,0.75)\n")


def test_unchecked_parse_keeps_bad_geometry():
    cfg = parse_instance("polygon = (0,0) (1,0) (2,2) (0,1)\nbasis = (1,0) (0,1)\n", check=False)
    assert len(cfg.polygon) == 4


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_round_trip(name):
    cfg = load_instance(name)
    assert parse_instance(serialize_instance(cfg)) == cfg
    assert load_instance(name + ".tile") == cfg


def test_missing_instance():
    with pytest.raises(FileNotFoundError):
        load_instance("no_such_thing")


@settings(max_examples=50, deadline=None)
@given(cs_polygons(), lattices(), st.lists(st.tuples(small_rat, small_rat), min_size=1, max_size=3), st.none() | st.integers(1, 9))
def test_round_trip_property(P, L, offs, k):
    cfg = InstanceConfig(P.vertices, (L.u1, L.u2), tuple(V(x, y) for x, y in offs), k)
    assert parse_instance(serialize_instance(cfg)) == cfg
