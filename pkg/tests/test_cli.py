import json
import subprocess
import sys

import pytest

from hedrites import formats
from hedrites.pmap import is_isomorphic
from hedrites.pmap.catalog import octahedron, tetrahedron, two_one


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "hedrites.cli", *args],
        input=stdin,
        capture_output=True,
    )


def test_table_ihedrite_text():
    r = run("table", "--class", "ihedrite", "--max-n", "12")
    assert r.returncode == 0
    rows = r.stdout.decode().splitlines()
    assert rows[0].split() == ["n", "4", "5", "6", "7", "8"]
    assert rows[-1].split() == ["12", "5", "3", "14", "5", "5"]
    assert b"n=12 count=" in r.stderr and b"elapsed=" in r.stderr


def test_table_json_totals_match_stream():
    r = run("table", "--class", "selfhedrite", "--max-n", "8", "--format", "json")
    obj = json.loads(r.stdout)
    assert obj["counts"]["4"]["8"] == 6
    g = run("generate", "--class", "selfhedrite", "--i", "4", "--max-n", "8")
    assert g.stdout.decode().endswith(f"# total={obj['totals']['4']}\n")


def test_generate_planar_code():
    r = run("generate", "--class", "octahedrite", "--max-n", "6", "--format", "planar_code")
    assert r.returncode == 0
    body = r.stdout[len(formats.PLANAR_CODE_HEADER):]
    assert r.stdout.startswith(formats.PLANAR_CODE_HEADER) and body[0] == 6
    assert len(body) == 31


def test_planar_code_multigraph_class_is_config_error():
    r = run("generate", "--class", "ihedrite", "--i", "5", "--max-n", "5", "--format", "planar_code")
    assert r.returncode == 2 and r.stdout == b""


def test_unknown_class_is_config_error():
    assert run("generate", "--class", "dodecahedrite", "--max-n", "6").returncode == 2
    assert run("generate", "--class", "ihedrite", "--i", "9", "--max-n", "6").returncode == 2


def test_parse_error_exit_code():
    r = run("classify", "--input", "-", stdin=b"n=1 e=1\nv0: 0 0\ne0: 0 1\n")
    assert r.returncode == 4 and b"line" in r.stderr


def test_runtime_error_exit_code():
    text = formats.emit_rotation_text(tetrahedron()).encode()
    r = run("circuits", "--input", "-", stdin=text)
    assert r.returncode == 3


def test_gc_json_header():
    r = run("gc", "--k", "2", "--l", "1", "--format", "json")
    obj = json.loads(r.stdout)
    assert (obj["k"], obj["l"], obj["n"], obj["symmetry"]) == (2, 1, 30, "O")


def test_gc_rot_header():
    r = run("gc", "--k", "1")
    first = r.stdout.decode().splitlines()[0]
    assert json.loads(first[2:]) == {"k": 1, "l": 0, "n": 6, "symmetry": "Oh"}
    assert is_isomorphic(formats.parse_rotation_text(r.stdout), octahedron())


def test_transform_commands():
    oct_text = formats.emit_rotation_text(octahedron()).encode()
    r = run("inverse-medial", "--input", "-", stdin=oct_text)
    maps = list(formats.iter_rotation_text(r.stdout.decode()))
    assert len(maps) == 2 and all(is_isomorphic(m, tetrahedron()) for m in maps)
    r = run("medial", "--input", "-", stdin=formats.emit_rotation_text(tetrahedron()).encode())
    assert is_isomorphic(formats.parse_rotation_text(r.stdout), octahedron())
    r = run("selfdual-filter", "--input", "-", stdin=oct_text)
    assert is_isomorphic(formats.parse_rotation_text(r.stdout), tetrahedron())


def test_analysis_commands():
    text = formats.emit_rotation_text(octahedron()).encode()
    r = run("circuits", "--input", "-", "--format", "json", stdin=text)
    (row,) = json.loads(r.stdout)
    assert row["lengths"] == [4, 4, 4] and row["borromean_parity"] is True
    r = run("zigzags", "--input", "-", stdin=formats.emit_rotation_text(tetrahedron()).encode())
    assert b"lengths=[4, 4, 4]" in r.stdout
    r = run("gauss-code", "--input", "-", stdin=formats.emit_rotation_text(two_one()).encode())
    assert r.returncode == 0 and len(r.stdout.decode().splitlines()) == 2


def test_classify_input_and_census(tmp_path):
    path = tmp_path / "in.txt"
    path.write_text("".join(formats.emit_stream([octahedron(), two_one()])))
    r = run("classify", "--input", str(path))
    assert r.stdout.decode().split("\n")[:2] == ["0 n=6 Oh order=48", "1 n=2 D4h order=16"]
    r = run("classify", "--class", "octahedrite", "--max-n", "9", "--format", "json")
    census = json.loads(r.stdout)["census"]
    assert census["D3h"] == {"count": 1, "min_n": 9}


def test_count_only_and_output_file(tmp_path):
    out = tmp_path / "counts.txt"
    r = run("generate", "--class", "ihedrite", "--i", "4", "--max-n", "8", "--count-only", "--output", str(out))
    assert r.returncode == 0 and r.stdout == b""
    assert out.read_text().splitlines()[-1] == "# total=9"


@pytest.mark.parametrize(
    "args",
    [
        ("table", "--class", "ihedrite", "--max-n", "14"),
        ("generate", "--class", "octahedrite", "--max-n", "14", "--format", "json"),
    ],
)
def test_jobs_byte_identical(args):
    one = run(*args, "--jobs", "1").stdout
    three = run(*args, "--jobs", "3").stdout
    assert one == three and one
