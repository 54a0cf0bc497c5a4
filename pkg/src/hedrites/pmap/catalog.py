"""Small named maps used as seeds and fixtures."""

from __future__ import annotations

from functools import lru_cache

from .core import PlanarMap, build_map, from_vertex_rotations


@lru_cache(maxsize=None)
def octahedron() -> PlanarMap:
    # 0 = north pole, 5 = south pole, equator 1..4 in ccw order seen from above
    return from_vertex_rotations(
        [
            [1, 2, 3, 4],
            [0, 4, 5, 2],
            [0, 1, 5, 3],
            [0, 2, 5, 4],
            [0, 3, 5, 1],
            [1, 4, 3, 2],
        ]
    )


@lru_cache(maxsize=None)
def tetrahedron() -> PlanarMap:
    return from_vertex_rotations([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])


@lru_cache(maxsize=None)
def cube() -> PlanarMap:
    # top square 0..3 ccw, bottom square 4..7 under it
    return from_vertex_rotations(
        [
            [1, 3, 4],
            [2, 0, 5],
            [3, 1, 6],
            [0, 2, 7],
            [7, 5, 0],
            [4, 6, 1],
            [5, 7, 2],
            [6, 4, 3],
        ]
    )


@lru_cache(maxsize=None)
def bundle(k: int) -> PlanarMap:
    """Two vertices joined by ``k`` parallel edges."""
    rot_u = list(range(k))
    rot_w = [k + ((k - j) % k) for j in range(k)]
    return build_map([rot_u, rot_w], [(j, k + j) for j in range(k)])


def two_one() -> PlanarMap:
    """The 2-vertex map with four parallel edges; all four faces are 2-gons."""
    return bundle(4)


@lru_cache(maxsize=None)
def infinite_family(m: int) -> PlanarMap:
    """Unreducible 4-hedrite with ``2m + 4`` vertices and two 2-connections
    at every cut.

    A horizontal chain of vertical vertex pairs ``(t_j, b_j)``,
    ``j = 0..m+1``, joined by a top and a bottom rail. The end pairs carry a
    triple edge (two 2-gons each); each inner pair carries one straight edge
    and one edge that loops around the right part of the chain.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    last = m + 1
    darts: dict[tuple, int] = {}

    def dart(*key):
        if key not in darts:
            darts[key] = len(darts)
        return darts[key]

    rot = {}
    pairs = []
    for j in range(last + 1):
        t, b = ("t", j), ("b", j)
        if j < last:
            pairs.append((dart(t, "E"), dart(("t", j + 1), "W")))
            pairs.append((dart(b, "E"), dart(("b", j + 1), "W")))
        if j == 0:
            rot[t] = [dart(t, "E"), dart(t, "L"), dart(t, "M"), dart(t, "R")]
            rot[b] = [dart(b, "E"), dart(b, "R"), dart(b, "M"), dart(b, "L")]
            for k in "LMR":
                pairs.append((dart(t, k), dart(b, k)))
        elif j == last:
            rot[t] = [dart(t, "C"), dart(t, "W"), dart(t, "A"), dart(t, "B")]
            rot[b] = [dart(b, "C"), dart(b, "B"), dart(b, "A"), dart(b, "W")]
            for k in "ABC":
                pairs.append((dart(t, k), dart(b, k)))
        else:
            rot[t] = [dart(t, "E"), dart(t, "O"), dart(t, "W"), dart(t, "S")]
            rot[b] = [dart(b, "E"), dart(b, "S"), dart(b, "W"), dart(b, "O")]
            pairs.append((dart(t, "O"), dart(b, "O")))
            pairs.append((dart(t, "S"), dart(b, "S")))
    return build_map(list(rot.values()), pairs)
