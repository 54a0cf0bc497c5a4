import pytest

from hedrites.gen import (
    ExpansionError,
    GraphClass,
    ReductionError,
    detect_unreducible,
    expand_vertex,
    expansions,
    generate_hedrite_table,
    generate_ihedrites,
    generate_octahedrites,
    oracle_generate,
    reduce_2gon,
    two_gons,
)
from hedrites.gen.classes import ClassError
from hedrites.gen.oracle import OracleLimitError
from hedrites.pmap import build_map, face_stats, is_3_connected, is_isomorphic
from hedrites.pmap.catalog import infinite_family, octahedron, two_one


def test_octahedrite_small_levels(octahedrites22):
    assert len(octahedrites22.results[6]) == 1
    assert is_isomorphic(octahedrites22.results[6][0], octahedron())
    assert octahedrites22.results[7] == []
    assert len(octahedrites22.results[20]) == 30


def test_octahedrites_need_n6():
    with pytest.raises(ValueError):
        generate_octahedrites(5)


def test_expand_octahedron_gives_seven_hedrite():
    m = expand_vertex(octahedron(), 0, 0)
    st = face_stats(m)
    assert m.n_vertices == 7 and (st.p.get(2), st.p.get(3)) == (1, 6)
    assert GraphClass.ihedrite(7).contains(m)


def test_expand_refuses_large_faces(hedrites14):
    # the 8-vertex octahedrite has squares, which may not grow to 5
    m = hedrites14[8].results[8][0]
    grown = list(expansions(m))
    assert all(max(len(f) for f in g.faces) <= 4 for g in grown)
    hit = False
    for w in range(m.n_vertices):
        for axis in (0, 1):
            try:
                expand_vertex(m, w, axis)
            except ExpansionError as exc:
                assert exc.code == "face_too_large"
                hit = True
    assert hit


def test_reduce_inverts_expand():
    m = expand_vertex(octahedron(), 2, 1)
    (f,) = two_gons(m)
    assert is_isomorphic(reduce_2gon(m, f), octahedron())


def test_reduce_two_one_refused():
    m = two_one()
    for f in two_gons(m):
        with pytest.raises(ReductionError):
            reduce_2gon(m, f)


def test_reduce_non_2gon_refused():
    with pytest.raises(ReductionError) as exc:
        reduce_2gon(octahedron(), 0)
    assert exc.value.code == "not_2gon"


def test_reduction_with_two_squares_raises_i(hedrites14):
    seen = False
    for i in range(4, 8):
        for m in hedrites14[i].all_maps():
            for f in two_gons(m):
                darts = m.faces[f]
                sizes = [len(m.faces[m.face_of[m.alpha[d]]]) for d in darts]
                if sizes != [4, 4]:
                    continue
                try:
                    r = reduce_2gon(m, f)
                except ReductionError:
                    continue
                st = face_stats(r)
                assert st.p.get(2, 0) + st.p.get(3, 0) == i + 1
                seen = True
    assert seen


def test_detect_unreducible_examples():
    assert detect_unreducible(octahedron()).kind == "octahedrite"
    assert detect_unreducible(two_one()).kind == "two_one"
    for k in range(4):
        u = detect_unreducible(infinite_family(k))
        assert (u.kind, u.k) == ("infinite_family", k)
    m = expand_vertex(octahedron(), 0, 0)
    u = detect_unreducible(m)
    assert u.kind == "reducible" and u.witness == two_gons(m)[0]


def test_expansions_of_two_one_give_4_hedrites():
    level = [two_one()]
    counts = {2: 1}
    from hedrites.pmap.canon import code_key

    for n in range(3, 7):
        nxt = {}
        for m in level:
            for e in expansions(m):
                nxt.setdefault(code_key(e), e)
        level = list(nxt.values())
        counts[n] = sum(1 for m in level if face_stats(m).p.get(2, 0) == 4)
    # plus the unreducible family members, which expansions cannot reach
    assert counts[4] + 1 == 2 and counts[6] + 1 == 2 and counts[3] == counts[5] == 0


def test_ihedrite_examples():
    five = generate_ihedrites(5, 10).counts
    assert {n: c for n, c in five.items() if c} == {3: 1, 5: 1, 6: 2, 7: 3, 8: 1, 9: 2, 10: 3}
    four = generate_ihedrites(4, 14).counts
    assert all(four[n] == 0 for n in four if n % 2)
    assert generate_ihedrites(6, 4).counts[4] == 1


def test_ihedrite_range_checked():
    with pytest.raises(ValueError):
        generate_ihedrites(8, 10)
    with pytest.raises(ValueError):
        GraphClass.ihedrite(3)


def test_table_cache_truncates():
    big = generate_hedrite_table(12)
    small = generate_hedrite_table(8)
    assert max(small[8].results) == 8
    assert small[6].results[8] == big[6].results[8]


def test_existence_ranges(hedrites14):
    exists = {
        4: lambda n: n % 2 == 0,
        5: lambda n: n >= 5 or n == 3,
        6: lambda n: n >= 4,
        7: lambda n: n >= 7,
        8: lambda n: n >= 8 or n == 6,
    }
    for i, rule in exists.items():
        for n in range(2, 15):
            assert (hedrites14[i].counts.get(n, 0) > 0) == rule(n), (i, n)


def test_every_octahedrite_is_3_connected(octahedrites22):
    for m in octahedrites22.all_maps():
        if m.n_vertices <= 16:
            assert is_3_connected(m)


def test_reduction_terminates(hedrites14):
    for i in range(4, 8):
        for m in hedrites14[i].all_maps():
            cur = m
            while True:
                u = detect_unreducible(cur)
                if u.kind != "reducible":
                    break
                nxt = reduce_2gon(cur, u.witness)
                assert nxt.n_vertices == cur.n_vertices - 1
                cur = nxt


def test_levels_sorted_and_classed(hedrites14):
    from hedrites.pmap.canon import code_key

    for i, run in hedrites14.items():
        for n, maps in run.results.items():
            keys = [code_key(m) for m in maps]
            assert keys == sorted(keys) and len(set(keys)) == len(keys)
            for m in maps:
                run.graph_class.check(m)


def test_class_check_rejects():
    with pytest.raises(ClassError):
        GraphClass.octahedrite().check(two_one())


def test_class_rejects_loop_map():
    # a vertex with a loop and a pendant edge: has a 1-gon
    m = build_map([[0, 1, 2], [3]], [(0, 1), (2, 3)])
    with pytest.raises(ClassError) as exc:
        GraphClass.selfhedrite(2).check(m)
    assert exc.value.code == "loop_face"


def test_oracle_examples():
    run = oracle_generate(GraphClass.octahedrite(), 10)
    assert {n: c for n, c in run.counts.items() if c} == {6: 1, 8: 1, 9: 1, 10: 2}
    run = oracle_generate(GraphClass.ihedrite(7), 9)
    assert {n: c for n, c in run.counts.items() if c} == {7: 1, 8: 1, 9: 1}


def test_oracle_guard():
    with pytest.raises(OracleLimitError):
        oracle_generate(GraphClass.octahedrite(), 13)


def test_jobs_do_not_change_output():
    from hedrites.pmap.canon import code_key

    a = generate_octahedrites(14, jobs=1)
    b = generate_octahedrites(14, jobs=3)
    for n in a.results:
        assert [code_key(m) for m in a.results[n]] == [code_key(m) for m in b.results[n]]
