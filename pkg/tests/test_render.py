from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from focksuture import diagrams as dg
from focksuture.render import render


def test_vacuum_ascii():
    out = render(dg.VACUUM, "ascii")
    lines = out.splitlines()
    assert lines[-2].split() == ["0*", "1"]
    assert lines[-1].split() == ["+", "-"]
    assert lines[0].count(".") == 2


@pytest.mark.parametrize("m", range(1, 6))
def test_ascii_injective(m):
    pics = {render(d, "ascii") for d in dg.enumerate_diagrams(m)}
    assert len(pics) == len(dg.enumerate_diagrams(m))


@pytest.mark.parametrize("m", range(1, 5))
def test_svg_well_formed(m):
    for d in dg.enumerate_diagrams(m):
        root = ET.fromstring(render(d, "svg"))
        assert root.tag.endswith("svg")
        chords = [p for p in root.iter() if p.get("class") == "chord"]
        assert len(chords) == d.m
        shaded = [p for p in root.iter() if p.get("class") == "positive"]
        assert len(shaded) == sum(1 for r in d.regions() if r[0] % 2 == 0)


def test_unknown_format():
    with pytest.raises(ValueError):
        render(dg.VACUUM, "png")
