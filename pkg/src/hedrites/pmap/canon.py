"""Canonical codes, isomorphism and automorphisms of plane maps.

The code of a rooted map is obtained by numbering darts in breadth-first
order starting from the root and recording, for every dart in label
order, the labels of its rotation successor and its edge partner. Rooting
at every dart with both ``sigma`` and ``sigma^-1`` and keeping the
lexicographic minimum gives a code that is invariant under relabelling
and reflection; equal codes mean the maps are isomorphic.

Only roots whose local signature is minimal are tried, which keeps the
search small without affecting the result (signatures are preserved by
every isomorphism, orientation reversing ones included).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PlanarMap


@dataclass(frozen=True)
class CanonicalCode:
    code: tuple[int, ...]
    orientation_flag: bool  # minimum found only in the mirror image


@dataclass(frozen=True)
class AutomorphismGroup:
    elements: tuple[tuple[int, ...], ...]
    proper: tuple[bool, ...]  # per element: orientation preserving?

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def proper_count(self) -> int:
        return sum(self.proper)


def _signatures(m: PlanarMap) -> list[tuple[int, int, int, int]]:
    fo = m.face_of
    faces = m.faces
    vo = m.vertex_of
    verts = m.vertices
    a, si = m.alpha, m.sigma_inv
    sig = []
    for d in range(m.dart_count):
        # faces on the two sides of edge(d), unordered so reflection keeps them
        f1 = len(faces[fo[d]])
        f2 = len(faces[fo[a[d]]])
        if f1 > f2:
            f1, f2 = f2, f1
        sig.append((len(verts[vo[d]]), len(verts[vo[a[d]]]), f1, f2))
    return sig


def root_candidates(m: PlanarMap) -> list[int]:
    sig = _signatures(m)
    best = min(sig)
    return [d for d, s in enumerate(sig) if s == best]


def _code_from(alpha, rot, start, best):
    """BFS code from ``start``; returns (code, order) or None when the code
    exceeds ``best`` lexicographically. Ties with ``best`` are returned."""
    n = len(alpha)
    label = [-1] * n
    label[start] = 0
    order = [start]
    code = []
    tight = best is not None
    i = 0
    while i < len(order):
        d = order[i]
        x = rot[d]
        lx = label[x]
        if lx < 0:
            lx = len(order)
            label[x] = lx
            order.append(x)
        y = alpha[d]
        ly = label[y]
        if ly < 0:
            ly = len(order)
            label[y] = ly
            order.append(y)
        if tight:
            k = 2 * i
            b0 = best[k]
            if lx > b0:
                return None
            if lx < b0:
                tight = False
            else:
                b1 = best[k + 1]
                if ly > b1:
                    return None
                if ly < b1:
                    tight = False
        code.append(lx)
        code.append(ly)
        i += 1
    return code, order


def _minimal_roots(m: PlanarMap):
    """Return (best code, list of (root, reversed, order)) achieving it."""
    roots = root_candidates(m)
    best = None
    winners = []
    for reverse, rot in ((False, m.sigma), (True, m.sigma_inv)):
        for r in roots:
            res = _code_from(m.alpha, rot, r, best)
            if res is None:
                continue
            code, order = res
            if best is None or code < best:
                best = code
                winners = [(r, reverse, order)]
            else:
                winners.append((r, reverse, order))
    return best, winners


def canonical_code(m: PlanarMap) -> CanonicalCode:
    best, winners = _minimal_roots(m)
    flag = all(rev for _, rev, _ in winners)
    return CanonicalCode(tuple(best), flag)


def code_key(m: PlanarMap) -> tuple[int, ...]:
    """Canonical code as a plain tuple; the key used for deduplication."""
    return canonical_code(m).code


def is_isomorphic(a: PlanarMap, b: PlanarMap) -> bool:
    """Isomorphism of maps, orientation preserving or reversing."""
    if a.dart_count != b.dart_count:
        return False
    return code_key(a) == code_key(b)


def canonical_form(m: PlanarMap) -> PlanarMap:
    """The relabelled map whose BFS labelling realises the canonical code."""
    best, winners = _minimal_roots(m)
    _, reverse, order = winners[0]
    n = m.dart_count
    alpha = [0] * n
    sigma = [0] * n
    for i in range(n):
        sigma[i] = best[2 * i]
        alpha[i] = best[2 * i + 1]
    return PlanarMap(tuple(alpha), tuple(sigma))


def automorphisms(m: PlanarMap) -> AutomorphismGroup:
    """All automorphisms, one per code-minimal root.

    Element ``g`` maps dart ``d`` to ``g[d]``; it satisfies ``g alpha = alpha g``
    and ``g sigma = sigma g`` (proper) or ``g sigma = sigma^-1 g`` (reversing).
    """
    _, winners = _minimal_roots(m)
    _, rev0, order0 = winners[0]
    n = m.dart_count
    elements = []
    proper = []
    for _, rev, order in winners:
        g = [0] * n
        for k in range(n):
            g[order0[k]] = order[k]
        elements.append(tuple(g))
        proper.append(rev == rev0)
    # put the identity first
    ident = tuple(range(n))
    idx = elements.index(ident)
    elements.insert(0, elements.pop(idx))
    proper.insert(0, proper.pop(idx))
    return AutomorphismGroup(tuple(elements), tuple(proper))
