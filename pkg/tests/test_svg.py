import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from ktiling.lattice import BBox
from ktiling.svg import PALETTE, render_svg

from conftest import load

NS = "{http://www.w3.org/2000/svg}"
WINDOW = BBox(Fraction(-4), Fraction(4), Fraction(-4), Fraction(4))


@pytest.mark.parametrize("style", ["outlines", "coverage-heat"])
def test_svg_is_well_formed(style):
    _, P, X = load("d8_lemma3")
    text = render_svg(P, X, WINDOW, style)
    root = ET.fromstring(text)
    assert root.tag == NS + "svg"
    assert root.get("viewBox") == "-4 -4 8 8"
    assert len(root.findall(f".//{NS}polygon")) > 0
    assert text == render_svg(P, X, WINDOW, style)


def test_heat_uses_single_colour_for_tiling():
    _, P, X = load("d8_lemma3")
    root = ET.fromstring(render_svg(P, X, WINDOW, "coverage-heat"))
    fills = {p.get("fill") for p in root.iter(NS + "polygon") if p.get("fill") not in (None, "none")}
    assert fills == {PALETTE[5]}
    assert [t.text for t in root.iter(NS + "text")] == ["5"]


def test_heat_shows_several_colours_for_non_tiling():
    _, P, X = load("d8_badshear")
    root = ET.fromstring(render_svg(P, X, WINDOW, "coverage-heat"))
    assert sorted(t.text for t in root.iter(NS + "text")) == ["4", "5", "6"]


def test_bad_style():
    _, P, X = load("unit_square")
    with pytest.raises(ValueError):
        render_svg(P, X, WINDOW, "hatch")


@pytest.mark.parametrize("name, legend", [("unit_square", "1"), ("d8prime_grs", "7")])
def test_heat_legend_for_tilings(name, legend):
    _, P, X = load(name)
    root = ET.fromstring(render_svg(P, X, WINDOW, "coverage-heat"))
    assert [t.text for t in root.iter(NS + "text")] == [legend]
    fills = {p.get("fill") for p in root.iter(NS + "polygon") if p.get("fill") not in (None, "none")}
    assert fills == {PALETTE[int(legend) % 8]}
