"""Dart-based rotation systems for plane multigraphs.

A map on ``2E`` darts is stored as two permutations:

* ``alpha`` -- the edge involution, pairing the two darts of every edge;
* ``sigma`` -- the vertex rotation, sending a dart to the next dart
  counterclockwise around its origin vertex.

Faces are the orbits of ``phi = sigma o alpha``: from dart ``d`` the next
dart of its face is ``sigma[alpha[d]]``. This is the only face convention
used anywhere in the package.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

logger = logging.getLogger(__name__)


class MapError(ValueError):
    """Invalid rotation system. ``code`` names the violated invariant."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _orbits(perm: Sequence[int]) -> tuple[list[tuple[int, ...]], list[int]]:
    owner = [-1] * len(perm)
    orbits = []
    for start in range(len(perm)):
        if owner[start] >= 0:
            continue
        idx = len(orbits)
        cyc = []
        d = start
        while owner[d] < 0:
            owner[d] = idx
            cyc.append(d)
            d = perm[d]
        orbits.append(tuple(cyc))
    return orbits, owner


@dataclass(frozen=True)
class FaceStats:
    """Histograms of face sizes (``p``) and vertex degrees (``v``)."""

    p: dict[int, int]
    v: dict[int, int]

    def euler_sum(self, k: int = 4) -> int:
        """Return ``sum_j (k - j) p_j``; 8 for 4-regular maps, 4 for self-dual ones."""
        return sum((k - j) * c for j, c in self.p.items())


@dataclass(frozen=True)
class PlanarMap:
    """Immutable connected genus-0 map. Construct through :func:`build_map`
    or :meth:`from_permutations`; the raw constructor does not validate."""

    alpha: tuple[int, ...]
    sigma: tuple[int, ...]

    @classmethod
    def from_permutations(cls, alpha: Sequence[int], sigma: Sequence[int]) -> "PlanarMap":
        m = cls(tuple(alpha), tuple(sigma))
        m.validate()
        return m

    # -- basic structure ------------------------------------------------------

    @property
    def dart_count(self) -> int:
        return len(self.alpha)

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        inv = [0] * len(self.sigma)
        for d, s in enumerate(self.sigma):
            inv[s] = d
        return tuple(inv)

    @cached_property
    def phi(self) -> tuple[int, ...]:
        a, s = self.alpha, self.sigma
        return tuple(s[a[d]] for d in range(len(a)))

    @cached_property
    def _vertex_data(self):
        return _orbits(self.sigma)

    @cached_property
    def _face_data(self):
        return _orbits(self.phi)

    @property
    def vertices(self) -> list[tuple[int, ...]]:
        """Vertex dart cycles (counterclockwise), ordered by smallest dart."""
        return self._vertex_data[0]

    @property
    def vertex_of(self) -> list[int]:
        return self._vertex_data[1]

    @property
    def faces(self) -> list[tuple[int, ...]]:
        return self._face_data[0]

    @property
    def face_of(self) -> list[int]:
        return self._face_data[1]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.alpha) // 2

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as dart pairs ``(d, alpha[d])`` with ``d < alpha[d]``."""
        return [(d, a) for d, a in enumerate(self.alpha) if d < a]

    def edge_ends(self) -> list[tuple[int, int]]:
        """Edges as (vertex, vertex) pairs in the order of :meth:`edges`."""
        vo = self.vertex_of
        return [(vo[d], vo[a]) for d, a in self.edges()]

    def is_regular(self, k: int) -> bool:
        return all(len(v) == k for v in self.vertices)

    def is_simple(self) -> bool:
        seen = set()
        for u, w in self.edge_ends():
            if u == w:
                return False
            key = (min(u, w), max(u, w))
            if key in seen:
                return False
            seen.add(key)
        return True

    def neighbours(self, v: int) -> list[int]:
        vo, a = self.vertex_of, self.alpha
        return [vo[a[d]] for d in self.vertices[v]]

    # -- validation -----------------------------------------------------------

    def validate(self) -> None:
        a, s = self.alpha, self.sigma
        n = len(a)
        if len(s) != n:
            raise MapError("size_mismatch", "alpha and sigma have different lengths")
        if n % 2:
            raise MapError("odd_darts", f"dart count {n} is odd")
        for d in range(n):
            if not 0 <= a[d] < n or a[d] == d or a[a[d]] != d:
                raise MapError("not_involution", f"edge pairing is not an involution at dart {d}")
        if sorted(s) != list(range(n)):
            raise MapError("not_permutation", "vertex rotation is not a permutation")
        if n and not self._connected():
            raise MapError("disconnected", "map is not connected")
        chi = self.n_vertices - self.n_edges + self.n_faces
        if n and chi != 2:
            raise MapError("nonzero_genus", f"Euler characteristic is {chi}, expected 2")

    def _connected(self) -> bool:
        a, s = self.alpha, self.sigma
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (a[d], s[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == len(a)

    def __repr__(self) -> str:
        return f"PlanarMap(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"


def build_map(
    rotation_lists: Iterable[Sequence[int]],
    pairing: Mapping[int, int] | Iterable[tuple[int, int]],
    graph_class=None,
) -> PlanarMap:
    """Build and validate a map from per-vertex ccw dart lists and an edge pairing.

    ``pairing`` is either a dict dart -> dart or an iterable of dart pairs.
    When ``graph_class`` is given the map must also belong to it (so 1-gons
    are refused).
    """
    rotation_lists = [list(r) for r in rotation_lists]
    darts = [d for r in rotation_lists for d in r]
    n = len(darts)
    if sorted(darts) != list(range(n)):
        raise MapError("bad_rotation", "every dart 0..N-1 must appear exactly once in rotation lists")
    alpha = [-1] * n
    pairs = pairing.items() if isinstance(pairing, Mapping) else pairing
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise MapError("not_involution", f"pairing references unknown dart in ({x}, {y})")
        if x == y:
            raise MapError("not_involution", f"pairing has a fixed point at dart {x}")
        for p, q in ((x, y), (y, x)):
            if alpha[p] not in (-1, q):
                raise MapError("not_involution", f"dart {p} is paired twice")
            alpha[p] = q
    if -1 in alpha:
        raise MapError("not_involution", f"dart {alpha.index(-1)} is unpaired")
    sigma = [0] * n
    for r in rotation_lists:
        for i, d in enumerate(r):
            sigma[d] = r[(i + 1) % len(r)]
    m = PlanarMap.from_permutations(alpha, sigma)
    if graph_class is not None:
        graph_class.check(m)
    return m


def from_vertex_rotations(rotations: Sequence[Sequence[int]]) -> PlanarMap:
    """Build a *simple* map from ccw neighbour lists ``rotations[v]``."""
    dart_id = {}
    lists = []
    for v, nbrs in enumerate(rotations):
        row = []
        for w in nbrs:
            if (v, w) in dart_id:
                raise MapError("multi_edge", f"repeated neighbour {w} at vertex {v}")
            dart_id[(v, w)] = len(dart_id)
            row.append(dart_id[(v, w)])
        lists.append(row)
    pairing = {}
    for (v, w), d in dart_id.items():
        if (w, v) not in dart_id:
            raise MapError("not_involution", f"edge {v}-{w} is not symmetric")
        pairing[d] = dart_id[(w, v)]
    return build_map(lists, pairing)


def face_stats(m: PlanarMap) -> FaceStats:
    p = Counter(len(f) for f in m.faces)
    v = Counter(len(x) for x in m.vertices)
    return FaceStats(dict(sorted(p.items())), dict(sorted(v.items())))


def relabel(m: PlanarMap, perm: Sequence[int]) -> PlanarMap:
    """Rename dart ``d`` to ``perm[d]``; the result is isomorphic to ``m``."""
    n = m.dart_count
    alpha = [0] * n
    sigma = [0] * n
    for d in range(n):
        alpha[perm[d]] = perm[m.alpha[d]]
        sigma[perm[d]] = perm[m.sigma[d]]
    return PlanarMap(tuple(alpha), tuple(sigma))


def compact(alpha: dict[int, int] | Sequence[int], sigma: dict[int, int] | Sequence[int]) -> PlanarMap:
    """Renumber the darts of a map given as sparse dicts to ``0..N-1`` (sorted order)."""
    if not isinstance(alpha, dict):
        alpha = dict(enumerate(alpha))
        sigma = dict(enumerate(sigma))
    ids = {d: i for i, d in enumerate(sorted(alpha))}
    a = [0] * len(ids)
    s = [0] * len(ids)
    for d, i in ids.items():
        a[i] = ids[alpha[d]]
        s[i] = ids[sigma[d]]
    return PlanarMap(tuple(a), tuple(s))


def mirror(m: PlanarMap) -> PlanarMap:
    return PlanarMap(m.alpha, m.sigma_inv)


def dual(m: PlanarMap) -> PlanarMap:
    """Faces become vertices: the dual rotation is the face permutation.

    ``dual(dual(m))`` returns ``m`` with identical permutations.
    """
    return PlanarMap(m.alpha, m.phi)


def medial(m: PlanarMap) -> PlanarMap:
    """One vertex per edge, one edge per corner.

    Corner ``c`` (between darts ``c`` and ``sigma[c]``) yields medial darts
    ``2c`` at the vertex of edge(c) and ``2c+1`` at the vertex of
    edge(sigma[c]).
    """
    n = m.dart_count
    a, s, si = m.alpha, m.sigma, m.sigma_inv
    alpha = [0] * (2 * n)
    sigma = [0] * (2 * n)
    for d in range(n):
        alpha[2 * d] = 2 * d + 1
        alpha[2 * d + 1] = 2 * d
        sigma[2 * d] = 2 * si[d] + 1
        sigma[2 * d + 1] = 2 * a[s[d]]
    return PlanarMap(tuple(alpha), tuple(sigma))


def is_3_connected(m: PlanarMap) -> bool:
    """Brute force over vertex pairs; maps with loops or parallel edges are
    reported as not 3-connected."""
    nv = m.n_vertices
    if nv < 4 or not m.is_simple():
        return False
    adj = [set(m.neighbours(v)) for v in range(nv)]
    for x in range(nv):
        for y in range(x + 1, nv):
            start = next(v for v in range(nv) if v not in (x, y))
            seen = {x, y, start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != nv:
                return False
    return True
