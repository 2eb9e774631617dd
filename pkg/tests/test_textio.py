import pathlib

import pytest

from lea import models
from lea.algebra import EffectAlgebra
from lea.groupoid import EffectGroupoid
from lea.textio import FormatError, format_structure, parse_structure, read_structure, write_structure

from conftest import HSUM_G, L4_G

MODELS_DIR = pathlib.Path(__file__).resolve().parent.parent / "models"

L3_TEXT = """\
kind: effect-algebra
size: 3
names: 0 a 1
zero: 0
one: 2
inv: 2 1 0
table:
0 1 2
1 2 -
2 - -
"""


def test_format_l3():
    assert format_structure(models.l3()) == L3_TEXT


def test_parse_l3():
    E = parse_structure(L3_TEXT)
    assert isinstance(E, EffectAlgebra)
    assert E.plus == models.l3().plus and E.names == ("0", "a", "1")


def test_comments_and_blank_lines():
    text = "# a comment\n\n" + L3_TEXT.replace("table:", "table:  # rows follow")
    assert parse_structure(text).plus == models.l3().plus


@pytest.mark.parametrize("G", [L4_G, HSUM_G], ids=["l4", "hsum"])
def test_groupoid_round_trip(G):
    back = parse_structure(format_structure(G))
    assert isinstance(back, EffectGroupoid)
    assert back.key() == G.key()
    assert format_structure(back) == format_structure(G)


def test_wide_entries_right_justified():
    text = format_structure(models.chain(11))
    row = text.splitlines()[-1]
    assert row.startswith("10  -")


def test_names_optional():
    text = "kind: effect-groupoid\nsize: 2\nzero: 0\none: 1\ninv: 1 0\ntable:\n0 0\n0 1\n"
    G = parse_structure(text)
    assert G.names is None and G.dot == ((0, 0), (0, 1))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "size: 2\nzero: 0\none: 1\ninv: 1 0\ntable:\n0 0\n0 1\n",
        "kind: lattice\nsize: 2\nzero: 0\none: 1\ninv: 1 0\ntable:\n0 0\n0 1\n",
        "kind: effect-groupoid\nsize: 2\nzero: 0\none: 1\ninv: 1 0\ntable:\n0 0\n",
        "kind: effect-groupoid\nsize: 2\nzero: 0\none: 1\ninv: 1 0\ntable:\n0 0\n0 -\n",
        "kind: effect-groupoid\nsize: 2\nzero: 0\none: 1\ninv: 1 0\ntable:\n0 0\n0 x\n",
        "kind: effect-groupoid\nsize: two\nzero: 0\none: 1\ninv: 1 0\ntable:\n0 0\n0 1\n",
        "kind: effect-groupoid\nsize: 2\nzero: 0\none: 1\ninv: 1 0\ntable:\n0 0\n0 1\n0 1\n",
        "kind: effect-groupoid\nsize: 2\nsize: 2\nzero: 0\none: 1\ninv: 1 0\ntable:\n0 0\n0 1\n",
    ],
)
def test_malformed_text(text):
    with pytest.raises(FormatError):
        parse_structure(text)


def test_file_io(tmp_path):
    path = tmp_path / "x.alg"
    write_structure(models.boolean4(), path)
    assert read_structure(path).plus == models.boolean4().plus


@pytest.mark.parametrize("name", sorted(models.STANDARD))
def test_bundled_model_files_match(name):
    path = MODELS_DIR / f"{name}.alg"
    assert path.read_text(encoding="utf-8") == format_structure(models.STANDARD[name]())
