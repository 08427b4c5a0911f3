from __future__ import annotations

import json
import re
import subprocess
import sys
from importlib import resources
from io import StringIO

import jsonschema
import pytest

from singtile.cli import run
from singtile.cyclotomic import EISENSTEIN, GAUSS, parse_element

SCHEMA = json.loads(resources.files("singtile").joinpath("schema/report_v1.json").read_text())


def call(*argv):
    out, err = StringIO(), StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    return code, (json.loads(out) if out.strip() else None), err


COMMANDS = [
    ("classify", "--tiling", "44", "--alpha", "-5+5i"),
    ("classify", "--tiling", "36", "--LR", "4,6"),
    ("classify", "--tiling", "44", "--alpha", "4"),
    ("symmetry", "--tiling", "36", "--alpha", "2+10w"),
    ("symmetry", "--tiling", "63", "--alpha", "6"),
    ("ideals", "--tiling", "44", "--alpha", "-5+5i"),
    ("ideals", "--tiling", "36", "--alpha", "2+10w"),
    ("check", "--tiling", "63", "--alpha", "10+2w", "--ideal", "1+3w"),
    ("check", "--tiling", "44", "--alpha", "4", "--sublattice", "v1=2,v2=2i"),
    ("verify", "--tiling", "44", "--alpha", "-5+5i", "--matrix"),
    ("verify", "--tiling", "36", "--alpha", "-5+5w", "--ideal", "1+2w"),
]


def test_ideals_example():
    code, rep, _ = call_json("ideals", "--tiling", "44", "--alpha", "-5+5i")
    assert code == 0
    assert len(rep["ideals"]) == 8 and rep["max_colors"] == 50
    assert rep["color_counts"] == [1, 2, 5, 10, 25, 50]


def test_symmetry_example():
    code, rep, _ = call_json("symmetry", "--tiling", "36", "--alpha", "2+10w")
    assert code == 0 and rep["symmetry"]["label"] == "C2" and rep["symmetry"]["f1"] == "z+(1+5w)"


def test_inadmissible_exit_code():
    code, out, err = call("classify", "--tiling", "44", "--alpha", "1+i")
    assert code == 2
    assert "inadmissible: |α| ≤ √2" in err


def test_incompatible_is_domain_error():
    code, rep, _ = call_json("check", "--tiling", "44", "--alpha", "-5+5i", "--ideal", "3")
    assert code == 2 and rep["compatible"] is False
    code, _, err = call("render", "--tiling", "44", "--alpha", "4", "--ideal", "3", "--out", "-")
    assert code == 2 and "not compatible" in err


def test_usage_errors():
    assert call("bogus")[0] == 1
    assert call("classify", "--tiling", "44")[0] == 1
    assert call("classify", "--tiling", "99", "--alpha", "4")[0] == 1
    code, _, err = call("classify", "--tiling", "44", "--alpha", "3+x")
    assert code == 1 and "position 2" in err and "^" in err
    code, _, err = call("check", "--tiling", "44", "--alpha", "4", "--sublattice", "v1=2,v2=2jj")
    assert code == 1 and "position 9" in err
    assert call("classify", "--tiling", "44", "--alpha", "1+w")[0] == 2  # wrong ring


def test_LR_and_alpha_agree():
    a = call_json("classify", "--tiling", "36", "--LR", "4,6")[1]
    b = call_json("classify", "--tiling", "36", "--alpha", "2+10w")[1]
    assert a == b
    assert call("classify", "--tiling", "36", "--LR", "4;6")[0] == 1


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_json_validates(argv):
    code, rep, _ = call_json(*argv)
    assert code == 0
    jsonschema.validate(rep, SCHEMA)


_ELEMENT = re.compile(r"-?\d*[iw]?([+-]\d*[iw]?)?")
_AFFINE = re.compile(r"\(([^()]*)\)")


def _elements(obj):
    """Every ring element printed in a report: whole-string leaves and the parenthesised
    coefficients inside affine maps such as 'z+(1+5w)' or '(i)*conj(z)'."""
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _elements(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _elements(v)
    elif isinstance(obj, str):
        if "z" in obj:
            yield from (m for m in _AFFINE.findall(obj) if m != "z")
        elif obj and _ELEMENT.fullmatch(obj):
            yield obj


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_elements_round_trip(argv):
    _, rep, _ = call_json(*argv)
    tag = GAUSS if rep["kind"] == "44" else EISENSTEIN
    seen = list(_elements(rep))
    assert rep["alpha"] in seen
    for text in seen:
        z = parse_element(text, tag)
        assert str(z) == text


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_text_and_json_same_facts(argv):
    _, rep, _ = call_json(*argv)
    _, text, _ = call(*argv)

    def leaves(obj):
        if isinstance(obj, dict):
            for v in obj.values():
                yield from leaves(v)
        elif isinstance(obj, list):
            for v in obj:
                yield from leaves(v)
        else:
            yield obj

    for leaf in leaves(rep):
        if isinstance(leaf, bool):
            continue
        if leaf is None:
            continue
        assert str(leaf) in text, leaf


def test_render_to_file(tmp_path):
    out = tmp_path / "fig.svg"
    code, rep, _ = call_json(
        "render", "--tiling", "44", "--alpha", "4", "--ideal", "2", "--rmin", "0.2", "--rmax", "5", "--out", str(out)
    )
    assert code == 0 and out.exists() and rep["tiles"] == 12
    jsonschema.validate(rep, SCHEMA)
    code, svg, _ = call("render", "--tiling", "44", "--alpha", "4")
    assert code == 0 and svg.startswith("<?xml")


def test_render_palette_flag(tmp_path):
    out = tmp_path / "p.svg"
    code, _, _ = call("render", "--tiling", "44", "--alpha", "4", "--ideal", "2", "--palette",
                      "#ff0000,#00ff00,#0000ff,#000000", "--out", str(out))
    assert code == 0
    fills = set(re.findall(r'fill="(#[0-9a-f]{6})"', out.read_text()))
    assert fills == {"#ff0000", "#00ff00", "#0000ff", "#000000"}


def test_verify_exit_and_counts():
    code, rep, _ = call_json("verify", "--tiling", "63", "--alpha", "6", "--matrix")
    assert code == 0 and rep["disagreements"] == 0
    names = [c["name"] for c in rep["checks"]]
    assert "symmetry_order" in names and "compatible[6]" in names


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "singtile", "symmetry", "--tiling", "44", "--alpha", "-5+5i", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["symmetry"]["label"] == "D5"
