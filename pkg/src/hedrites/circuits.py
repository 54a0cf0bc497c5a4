"""Central circuits, railroads, zigzags, Gauss codes and the Borromean test.

Conventions on darts (``alpha`` edge partner, ``sigma`` ccw successor):

* straight ahead in a 4-regular map: ``d -> sigma^2(alpha(d))``;
* zigzag step, alternating turns: ``(d, L) -> (sigma(alpha d), R)`` and
  ``(d, R) -> (sigma^-1(alpha d), L)``.

Each circuit is a cyclic tuple of darts, each dart leaving the vertex it
names. A traversal and its reversal are recorded once, keeping the one
through the smallest dart.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .pmap.core import MapError, PlanarMap


class CircuitError(ValueError):
    pass


@dataclass(frozen=True)
class CircuitSet:
    kind: str  # "central" | "zigzag"
    circuits: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    self_intersections: tuple[tuple[int, ...], ...]  # vertices passed twice
    crossings: dict = field(default_factory=dict)  # (i, j) -> vertices, i < j
    simple: tuple[bool, ...] = ()

    def __len__(self) -> int:
        return len(self.circuits)


@dataclass(frozen=True)
class GaussCode:
    """Per component: cyclic (crossing, over) pairs; crossings numbered 1..V."""

    components: tuple[tuple[tuple[int, bool], ...], ...]
    crossing_count: int

    def to_text(self) -> str:
        lines = []
        for i, comp in enumerate(self.components):
            body = " ".join(f"{'+' if over else '-'}{c}" for c, over in comp)
            lines.append(f"{i}: {body}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "crossings": self.crossing_count,
            "components": [[c if over else -c for c, over in comp] for comp in self.components],
        }


def _require_4_regular(m: PlanarMap) -> None:
    if not m.is_regular(4):
        raise CircuitError("map is not 4-regular")


def _orbits(nxt, starts):
    seen = set()
    out = []
    for s in starts:
        if s in seen:
            continue
        orb = [s]
        seen.add(s)
        x = nxt(s)
        while x != s:
            orb.append(x)
            seen.add(x)
            x = nxt(x)
        out.append(orb)
    return out


def _vertex_stats(m: PlanarMap, circuits):
    vo = m.vertex_of
    visits = [Counter(vo[d] for d in c) for c in circuits]
    selfx = tuple(tuple(sorted(v for v, k in cnt.items() if k > 1)) for cnt in visits)
    cross = {}
    for i in range(len(circuits)):
        for j in range(i + 1, len(circuits)):
            common = sorted(set(visits[i]) & set(visits[j]))
            if common:
                cross[(i, j)] = tuple(common)
    return selfx, cross


def central_circuits(m: PlanarMap) -> CircuitSet:
    _require_4_regular(m)
    s, a = m.sigma, m.alpha
    orbits = _orbits(lambda d: s[s[a[d]]], range(m.dart_count))
    kept = []
    used = set()
    for orb in orbits:
        if orb[0] in used:
            continue
        kept.append(tuple(orb))
        used.update(orb)
        # reversal travels the partner darts
        used.update(a[d] for d in orb)
    selfx, cross = _vertex_stats(m, kept)
    lengths = tuple(len(c) for c in kept)
    return CircuitSet("central", tuple(kept), lengths, selfx, cross, tuple(not x for x in selfx))


def railroads(m: PlanarMap) -> list[tuple[int, ...]]:
    """Closed strips of 4-gons; each is the cyclic sequence of its faces."""
    _require_4_regular(m)
    faces, fo, a = m.faces, m.face_of, m.alpha
    phi = m.phi
    seen: set = set()
    out = []
    for f, darts in enumerate(faces):
        if len(darts) != 4:
            continue
        for axis in (0, 1):
            if (f, axis) in seen:
                continue
            y = darts[axis]
            strip = []
            keys = []
            closed = False
            while True:
                g = fo[y]
                if len(faces[g]) != 4:
                    break
                key = (g, faces[g].index(y) % 2)
                if keys and key == keys[0]:
                    closed = True
                    break
                if key in keys:
                    break
                keys.append(key)
                strip.append(g)
                y = a[phi[phi[y]]]
            seen.update(keys)
            if closed:
                out.append(tuple(strip))
    return out


def is_irreducible(m: PlanarMap) -> bool:
    return not railroads(m)


def zigzags(m: PlanarMap) -> CircuitSet:
    s, si, a = m.sigma, m.sigma_inv, m.alpha

    def step(state):
        d, turn = state
        return (s[a[d]], 1) if turn == 0 else (si[a[d]], 0)

    states = [(d, t) for d in range(m.dart_count) for t in (0, 1)]
    kept = []
    used = set()
    for orb in _orbits(step, states):
        if orb[0] in used:
            continue
        used.update(orb)
        used.update((a[d], t) for d, t in orb)
        kept.append(tuple(d for d, _ in orb))
    selfx, cross = _vertex_stats(m, kept)
    simple = tuple(len({min(d, a[d]) for d in c}) == len(c) for c in kept)
    return CircuitSet("zigzag", tuple(kept), tuple(len(c) for c in kept), selfx, cross, simple)


def gauss_code(m: PlanarMap) -> GaussCode:
    """Alternating link diagram with one crossing per vertex.

    A strand leaving a vertex by dart ``o`` passes over there exactly when the
    corner between ``o`` and its ccw successor lies in a face of the first
    checkerboard class.
    """
    from .selfdual import checkerboard

    cc = central_circuits(m)
    board = checkerboard(m)
    s, vo, fo = m.sigma, m.vertex_of, m.face_of
    comps = []
    for c in cc.circuits:
        comps.append(tuple((vo[o] + 1, board.class_of_face[fo[s[o]]] == 1) for o in c))
    code = GaussCode(tuple(comps), m.n_vertices)
    _check_gauss(code)
    return code


def _check_gauss(code: GaussCode) -> None:
    seen: Counter = Counter()
    for comp in code.components:
        for k, (c, over) in enumerate(comp):
            seen[(c, over)] += 1
            if len(comp) > 1 and comp[k - 1][1] == over:
                raise MapError("gauss", "over/under flags do not alternate")
    for c in range(1, code.crossing_count + 1):
        if seen[(c, True)] != 1 or seen[(c, False)] != 1:
            raise MapError("gauss", f"crossing {c} is not passed once over and once under")


def intersection_arcs(m: PlanarMap) -> dict[tuple[int, int], list[int]]:
    """For each ordered pair of distinct central circuits ``(i, j)``, the edge
    lengths of the arcs of circuit ``i`` between consecutive crossings with
    circuit ``j``."""
    cc = central_circuits(m)
    vo = m.vertex_of
    vsets = [set(vo[d] for d in c) for c in cc.circuits]
    out = {}
    for i, c in enumerate(cc.circuits):
        for j in range(len(cc.circuits)):
            if i == j:
                continue
            pos = [k for k, d in enumerate(c) if vo[d] in vsets[j]]
            if not pos:
                out[(i, j)] = []
                continue
            out[(i, j)] = [(pos[(t + 1) % len(pos)] - pos[t]) % len(c) or len(c) for t in range(len(pos))]
    return out


def borromean_parity(m: PlanarMap) -> bool:
    """Sufficient parity condition for an alternating Borromean link.

    True when every arc between consecutive crossings of two distinct
    central circuits has even length in edges.
    """
    if len(central_circuits(m)) < 3:
        raise CircuitError("not a candidate m>=3 link: fewer than 3 central circuits")
    return all(x % 2 == 0 for arcs in intersection_arcs(m).values() for x in arcs)


def find_irreducible_simple_cc(n_max: int, jobs: int = 1) -> list[PlanarMap]:
    """Irreducible octahedrites with simple central circuits, ``n <= n_max``."""
    from .gen import generate_octahedrites

    run = generate_octahedrites(n_max, jobs)
    return [m for m in run.all_maps() if all(central_circuits(m).simple) and is_irreducible(m)]
