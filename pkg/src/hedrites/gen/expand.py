"""2-gon reduction, its inverse vertex expansion, and the unreducible trichotomy."""

from __future__ import annotations

from dataclasses import dataclass

from ..pmap.canon import is_isomorphic
from ..pmap.catalog import infinite_family
from ..pmap.core import MapError, PlanarMap, compact, face_stats


class ReductionError(MapError):
    pass


class ExpansionError(MapError):
    pass


def expand_vertex(m: PlanarMap, w: int, axis: int) -> PlanarMap:
    """Split degree-4 vertex ``w`` into two vertices joined by a new 2-gon.

    With ``w``'s darts ``x0..x3`` in ccw order (``x0`` its smallest dart),
    the faces at corners ``(x_axis, x_axis+1)`` and ``(x_axis+2, x_axis+3)``
    each gain one edge. The new darts are appended; the 2-gon is the face
    of dart ``N+1`` (``N`` = old dart count).
    """
    if axis not in (0, 1):
        raise ValueError("axis must be 0 or 1")
    xs = m.vertices[w]
    if len(xs) != 4:
        raise ExpansionError("not_degree_4", f"vertex {w} has degree {len(xs)}")
    faces, fo = m.faces, m.face_of
    x = [xs[(axis + j) % 4] for j in range(4)]
    # corner (x_j, x_j+1) lies in face(x_j+1)
    fa, fb = fo[x[1]], fo[x[3]]
    grow = 2 if fa == fb else 1
    if len(faces[fa]) + grow > 4 or len(faces[fb]) + grow > 4:
        raise ExpansionError("face_too_large", "face would exceed size 4")
    n = m.dart_count
    p, q, p2, q2 = n, n + 1, n + 2, n + 3
    alpha = list(m.alpha) + [q2, p2, q, p]
    sigma = list(m.sigma) + [0, 0, 0, 0]
    for ring in ((x[1], x[2], p, q), (x[3], x[0], p2, q2)):
        for j in range(4):
            sigma[ring[j]] = ring[(j + 1) % 4]
    return PlanarMap(tuple(alpha), tuple(sigma))


def reduce_2gon(m: PlanarMap, f: int) -> PlanarMap:
    """Merge the two ends of 2-gonal face ``f`` into one vertex.

    The faces across the two 2-gon edges each lose an edge; a result with a
    1-gon is refused.
    """
    darts = m.faces[f]
    if len(darts) != 2:
        raise ReductionError("not_2gon", f"face {f} has size {len(darts)}, not 2")
    q, q2 = darts
    vo = m.vertex_of
    if vo[q] == vo[q2]:
        raise ReductionError("unreducible", "unreducible here: 2-gon bounded by loops")
    if m.degree(vo[q]) != 4 or m.degree(vo[q2]) != 4:
        raise ReductionError("not_degree_4", "2-gon ends must have degree 4")
    s = m.sigma
    a = m.alpha
    p2, p = a[q], a[q2]
    x1, x2 = s[q], s[s[q]]
    x3, x0 = s[q2], s[s[q2]]
    removed = {p, q, p2, q2}
    if {x0, x1, x2, x3} & removed:
        raise ReductionError("unreducible", "unreducible here: degenerate 2-gon")
    alpha = {d: a[d] for d in range(m.dart_count) if d not in removed}
    sigma = {d: s[d] for d in alpha}
    ring = (x0, x1, x2, x3)
    for j in range(4):
        sigma[ring[j]] = ring[(j + 1) % 4]
    r = compact(alpha, sigma)
    if min(len(fc) for fc in r.faces) < 2:
        raise ReductionError("unreducible", "unreducible here: reduction creates a 1-gon")
    return r


def expansions(m: PlanarMap):
    """All valid single expansions of ``m`` (both axes at every vertex)."""
    faces, fo = m.faces, m.face_of
    for w, xs in enumerate(m.vertices):
        if len(xs) != 4:
            continue
        for axis in (0, 1):
            fa, fb = fo[xs[(axis + 1) % 4]], fo[xs[(axis + 3) % 4]]
            grow = 2 if fa == fb else 1
            if len(faces[fa]) + grow <= 4 and len(faces[fb]) + grow <= 4:
                yield expand_vertex(m, w, axis)


def two_gons(m: PlanarMap) -> list[int]:
    return [i for i, f in enumerate(m.faces) if len(f) == 2]


@dataclass(frozen=True)
class Unreducible:
    """Outcome of :func:`detect_unreducible`.

    ``kind`` is one of ``octahedrite``, ``two_one``, ``infinite_family``,
    ``reducible``; ``k`` indexes the family member, ``witness`` is a
    reducible 2-gon face.
    """

    kind: str
    k: int | None = None
    witness: int | None = None


def detect_unreducible(m: PlanarMap) -> Unreducible:
    for f in two_gons(m):
        try:
            reduce_2gon(m, f)
        except ReductionError:
            continue
        return Unreducible("reducible", witness=f)
    st = face_stats(m)
    if st.p.get(2, 0) == 0:
        return Unreducible("octahedrite")
    n = m.n_vertices
    if n == 2 and st.p == {2: 4}:
        return Unreducible("two_one")
    if n >= 4 and n % 2 == 0 and is_isomorphic(m, infinite_family((n - 4) // 2)):
        return Unreducible("infinite_family", k=(n - 4) // 2)
    raise MapError("unclassified", f"unreducible map {m!r} fits no known case")
