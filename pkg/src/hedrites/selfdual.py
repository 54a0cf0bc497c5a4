"""Checkerboard colourings, inverse medial graphs, self-hedrites and
Goldberg-Coxeter octahedrites."""

from __future__ import annotations

import logging
import time
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .gen import GenerationRun, GraphClass, generate_hedrite_table
from .pmap.canon import code_key, is_isomorphic
from .pmap.catalog import cube
from .pmap.core import MapError, PlanarMap, compact
from .symmetry import classify

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Checkerboard:
    base: PlanarMap
    class_of_face: tuple[int, ...]  # 1 or 2 per face

    def faces_in(self, c: int) -> list[int]:
        return [f for f, k in enumerate(self.class_of_face) if k == c]


def checkerboard(m: PlanarMap) -> Checkerboard:
    """Proper 2-colouring of the faces; the face of dart 0 is class 1."""
    fo, a = m.face_of, m.alpha
    col = [0] * m.n_faces
    start = fo[0]
    col[start] = 1
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for d in m.faces[f]:
            g = fo[a[d]]
            if col[g] == 0:
                col[g] = 3 - col[f]
                queue.append(g)
            elif col[g] == col[f]:
                raise MapError("not_bipartite", f"faces {f} and {g} share an edge and a colour")
    return Checkerboard(m, tuple(col))


def _half(m: PlanarMap, board: Checkerboard, c: int) -> PlanarMap:
    # darts of the half are the corners (d, sigma d) whose face has class c
    s, a, fo = m.sigma, m.alpha, m.face_of
    corners = [d for d in range(m.dart_count) if board.class_of_face[fo[s[d]]] == c]
    alpha = {d: s[s[d]] for d in corners}
    rot = {d: a[s[d]] for d in corners}
    return compact(alpha, rot)


def inverse_medial(m: PlanarMap) -> tuple[PlanarMap, PlanarMap]:
    """The two maps whose medial is ``m``: vertices on class-1 faces, then on class-2 faces."""
    if not m.is_regular(4):
        raise MapError("not_4_regular", "inverse medial needs a 4-regular map")
    board = checkerboard(m)
    return _half(m, board, 1), _half(m, board, 2)


def is_self_hedrite(m: PlanarMap) -> PlanarMap | None:
    """The graph ``G`` with ``medial(G) = m`` when it is self-dual, else None."""
    g1, g2 = inverse_medial(m)
    return g1 if is_isomorphic(g1, g2) else None


def generate_self_hedrites(i: int, n_max: int, jobs: int = 1, progress=None) -> GenerationRun:
    """i-self-hedrites with ``n <= n_max`` vertices, from 2i-hedrites on ``2n - 2`` vertices."""
    cls = GraphClass.selfhedrite(i)
    t0 = time.perf_counter()
    hedrites = generate_hedrite_table(max(2 * n_max - 2, 2), jobs)[2 * i]
    run = GenerationRun(cls, n_max)
    for n in range(2, n_max + 1):
        found: dict[tuple, PlanarMap] = {}
        for med in hedrites.results.get(2 * n - 2, []):
            g = is_self_hedrite(med)
            if g is None:
                continue
            found.setdefault(code_key(g), g)
        maps = [found[k] for k in sorted(found)]
        for g in maps:
            cls.check(g)
        run.results[n] = maps
        if progress is not None:
            progress(n, len(maps), time.perf_counter() - t0)
    return run


def simple_zigzag_self_hedrites(n_max: int, irreducible_only: bool = False, jobs: int = 1) -> list[PlanarMap]:
    """4-self-hedrites whose zigzags are all simple.

    The full set is an exhaustive filter over :func:`generate_self_hedrites`.
    The irreducible subset is taken from the other side: inverse medials of
    the irreducible octahedrites with simple central circuits on up to
    ``2 n_max - 2`` vertices, which is much cheaper for large ``n_max``.
    """
    from .circuits import find_irreducible_simple_cc, zigzags

    if irreducible_only:
        found = {}
        for med in find_irreducible_simple_cc(max(2 * n_max - 2, 6), jobs):
            g = is_self_hedrite(med)
            if g is not None:
                found.setdefault(code_key(g), g)
        return sorted(found.values(), key=lambda g: (g.n_vertices, code_key(g)))
    return [g for g in generate_self_hedrites(4, n_max, jobs).all_maps() if all(zigzags(g).simple)]


# --- Goldberg-Coxeter construction on the octahedron ------------------------
#
# Each square face of the cube carries the lattice square with corners
# 0, z, z + iz, iz (z = k + l i), in doubled integer coordinates so that
# unit-cell centres are odd points. Cells are the vertices of the result;
# neighbouring cells are one lattice step apart, unfolding across cube
# edges where needed.


@dataclass(frozen=True)
class GCParams:
    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or not 0 <= self.l <= self.k or (self.k, self.l) == (0, 0):
            raise ValueError(f"need 0 <= l <= k and (k, l) != (0, 0), got ({self.k}, {self.l})")


def _cmul(p, q):
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


_UNITS = [(1, 0), (0, 1), (-1, 0), (0, -1)]


class _CubeLattice:
    def __init__(self, k: int, l: int):
        self.z = (k, l)
        self.N2 = 2 * (k * k + l * l)
        q = cube()
        self.faces = q.faces
        fo = q.face_of
        z2 = (2 * k, 2 * l)
        corners = [(0, 0), z2, (z2[0] - z2[1], z2[1] + z2[0]), (-z2[1], z2[0])]
        self.corners = corners
        # glue[f][j] = (g, unit power, translation) sending f-coords to g-coords across side j
        self.glue = []
        for f, darts in enumerate(self.faces):
            row = []
            for j, d in enumerate(darts):
                e = q.alpha[d]
                g = fo[e]
                m = self.faces[g].index(e)
                p = (m - j + 2) % 4
                rc = _cmul(_UNITS[p], corners[j])
                target = corners[(m + 1) % 4]
                row.append((g, p, (target[0] - rc[0], target[1] - rc[1])))
            self.glue.append(row)

    def coords(self, w):
        k, l = self.z
        return w[0] * k + w[1] * l, w[1] * k - w[0] * l

    def inside(self, w) -> bool:
        a, b = self.coords(w)
        return 0 <= a <= self.N2 and 0 <= b <= self.N2

    def _apply(self, f, j, w):
        g, p, t = self.glue[f][j]
        r = _cmul(_UNITS[p], w)
        return g, p, (r[0] + t[0], r[1] + t[1])

    def canonical(self, f, w):
        """(face, point, rotation power) with the smallest face holding ``w``."""
        best = (f, w, 0)
        a, b = self.coords(w)
        sides = [j for j, hit in enumerate((b == 0, a == self.N2, b == self.N2, a == 0)) if hit]
        for j in sides:
            g, p, w2 = self._apply(f, j, w)
            if g < best[0]:
                best = (g, w2, p)
        return best

    def step(self, f, w, u):
        """Move from cell ``w`` of face ``f`` by unit power ``u``; returns
        (face, point, total rotation power) in canonical form."""
        q = (w[0] + 2 * _UNITS[u][0], w[1] + 2 * _UNITS[u][1])
        p0 = w
        rot = 0
        s_cur = 0
        guard = 0
        while not self.inside(q):
            guard += 1
            if guard > 8:
                raise RuntimeError("lattice step did not settle")
            j, s_exit = self._exit(p0, q, s_cur)
            g, p, p0 = self._apply(f, j, p0)
            _, _, q = self._apply(f, j, q)
            f, rot, s_cur = g, (rot + p) % 4, s_exit
        g, q2, p = self.canonical(f, q)
        return g, q2, (rot + p) % 4

    def _exit(self, p, q, s_min):
        """Side through which segment p->q leaves the square after ``s_min``."""
        ap, bp = self.coords(p)
        aq, bq = self.coords(q)
        best = None
        for j, (x0, x1, bound) in enumerate(
            ((bp, bq, 0), (ap, aq, self.N2), (bp, bq, self.N2), (ap, aq, 0))
        ):
            if x0 == x1:
                continue
            s = Fraction(bound - x0, x1 - x0)
            if s < s_min or s > 1:
                continue
            # leaving means moving outward through this bound
            outward = (x1 < x0) if bound == 0 else (x1 > x0)
            if outward and (best is None or s < best[1]):
                best = (j, s)
        if best is None:
            raise RuntimeError("no exit side found")
        return best


def gc_octahedron(k: int, l: int = 0) -> PlanarMap:
    """GC_{k,l}(Octahedron): octahedrite on ``6 (k^2 + l^2)`` vertices."""
    p = GCParams(k, l)
    lat = _CubeLattice(p.k, p.l)
    cells: dict[tuple, int] = {}
    span = 2 * (p.k + p.l) + 2
    for f in range(6):
        for x in range(-span, span + 1):
            if x % 2 == 0:
                continue
            for y in range(-span, span + 1):
                if y % 2 == 0 or not lat.inside((x, y)):
                    continue
                g, w, _ = lat.canonical(f, (x, y))
                key = (g, w)
                if key not in cells:
                    cells[key] = len(cells)
    order = sorted(cells)
    index = {c: i for i, c in enumerate(order)}
    n = len(order)
    alpha = [0] * (4 * n)
    sigma = [4 * (d // 4) + (d + 1) % 4 for d in range(4 * n)]
    for (f, w), i in index.items():
        for u in range(4):
            g, w2, rot = lat.step(f, w, u)
            back = (u + rot + 2) % 4
            alpha[4 * i + u] = 4 * index[(g, w2)] + back
    m = PlanarMap.from_permutations(alpha, sigma)
    expected = 6 * (p.k**2 + p.l**2)
    if m.n_vertices != expected:
        raise RuntimeError(f"GC construction produced {m.n_vertices} vertices, expected {expected}")
    return m


@dataclass(frozen=True)
class TTdResult:
    k: int
    l: int
    graph: PlanarMap | None  # None when k + l is even
    symbol: str | None


def t_td_pipeline(k_max: int) -> list[TTdResult]:
    """Inverse medials of GC_{k,l}(Octahedron) for ``0 <= l <= k <= k_max``.

    For ``k + l`` odd the result is a 4-self-hedrite of symmetry T or Td; for
    ``k + l`` even the triangles share one checkerboard class and the pair
    is reported with no graph.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    out = []
    for k in range(1, k_max + 1):
        for l in range(0, k + 1):
            med = gc_octahedron(k, l)
            if (k + l) % 2 == 0:
                board = checkerboard(med)
                tri = {board.class_of_face[f] for f, fc in enumerate(med.faces) if len(fc) == 3}
                if len(tri) != 1:
                    raise RuntimeError(f"GC({k},{l}): triangles split across classes")
                out.append(TTdResult(k, l, None, None))
                continue
            g = is_self_hedrite(med)
            if g is None:
                raise RuntimeError(f"GC({k},{l}) with k+l odd is not a medial of a self-dual graph")
            out.append(TTdResult(k, l, g, classify(g).symbol))
    return out
