from collections import Counter

import pytest

from hedrites.pmap import automorphisms, medial
from hedrites.pmap.catalog import bundle, octahedron, tetrahedron, two_one
from hedrites.symmetry import (
    IHEDRITE_GROUPS,
    OCTAHEDRITE_GROUPS,
    SELFHEDRITE_GROUPS,
    SymmetryError,
    classify,
    element_type,
    group_census,
    symbol_order,
)


def test_classify_examples(octahedrites22):
    assert classify(octahedron()).symbol == "Oh"
    assert classify(octahedrites22.results[8][0]).symbol == "D4d"
    assert classify(tetrahedron()).symbol == "Td"
    assert classify(bundle(2)).symbol == "D2h"
    assert classify(bundle(3)).symbol == "D3h"
    assert classify(two_one()).symbol == "D4h"


def test_octahedron_element_types():
    m = octahedron()
    kinds = Counter(str(element_type(m, g)) for g in automorphisms(m).elements)
    # 6 quarter turns about vertex axes, 8 third turns, 9 half turns
    assert kinds["rotation(4)"] == 6
    assert kinds["rotation(3)"] == 8
    assert kinds["rotation(2)"] == 9
    assert kinds["reflection"] == 9
    assert kinds["inversion"] == 1
    assert kinds["rotoreflection(4)"] == 6 and kinds["rotoreflection(6)"] == 8


def test_tetrahedron_reflections():
    m = tetrahedron()
    kinds = Counter(str(element_type(m, g)) for g in automorphisms(m).elements)
    assert kinds["reflection"] == 6 and kinds["inversion"] == 0


def test_not_an_automorphism():
    m = octahedron()
    g = list(range(m.dart_count))
    g[0], g[1] = g[1], g[0]
    with pytest.raises(SymmetryError):
        element_type(m, g)


def test_symbol_orders():
    assert symbol_order("Oh") == 48
    assert symbol_order("D4d") == 16
    assert symbol_order("S4") == 4
    assert symbol_order("C2v") == 4
    assert symbol_order("Ci") == 2
    with pytest.raises(SymmetryError):
        symbol_order("X7")


def test_group_orders_match_automorphisms(octahedrites22):
    for m in octahedrites22.all_maps():
        if m.n_vertices > 16:
            break
        g = classify(m)
        assert g.order == automorphisms(m).order == symbol_order(g.symbol)


def test_census_prefix(octahedrites22):
    census = group_census(m for n in range(6, 13) for m in octahedrites22.results[n])
    mins = {s: n for s, (_, n) in census.items()}
    # D2 first appears at n=10 here; see the acceptance suite
    assert mins == {"Oh": 6, "D4d": 8, "D3h": 9, "D4h": 10, "D2": 10, "C2v": 11, "D3d": 12, "C2": 12}


def test_five_hedrite_census(hedrites14):
    census = group_census(m for m in hedrites14[5].all_maps() if m.n_vertices <= 10)
    assert {s: n for s, (_, n) in census.items()} == {"D3h": 3, "C2v": 5, "Cs": 7, "C2": 8, "C1": 10}


def test_four_self_census(self_hedrites14):
    census = group_census(g for g in self_hedrites14[4].all_maps() if g.n_vertices <= 8)
    assert {s: n for s, (_, n) in census.items()} == {
        "Td": 4, "C4v": 5, "C2": 6, "D2h": 6, "C1": 7, "C3v": 7, "D2d": 8,
    }


def test_symbols_in_group_lists(hedrites14, self_hedrites14):
    for i, run in hedrites14.items():
        allowed = OCTAHEDRITE_GROUPS if i == 8 else IHEDRITE_GROUPS[i]
        assert {classify(m).symbol for m in run.all_maps()} <= set(allowed)
    for i, run in self_hedrites14.items():
        assert {classify(g).symbol for g in run.all_maps()} <= set(SELFHEDRITE_GROUPS[i])


def test_medial_doubles_self_hedrite_order(self_corpus):
    for g in self_corpus:
        assert classify(medial(g)).order == 2 * classify(g).order
