"""Point-group classification of plane maps from their automorphism groups.

Everything is combinatorial. An automorphism is a dart permutation together
with its orientation character; its order is that of the pair. Orientation-reversing involutions are told apart by
whether they stabilise some vertex, edge or face: a mirror plane always
cuts through cells, while the antipodal map stabilises none.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import lcm
from typing import Iterable

from .pmap.canon import automorphisms
from .pmap.core import PlanarMap


class SymmetryError(ValueError):
    pass


class ClassificationError(SymmetryError):
    def __init__(self, message: str, evidence: dict):
        super().__init__(f"{message}: {evidence}")
        self.evidence = evidence


@dataclass(frozen=True)
class ElementType:
    kind: str  # identity | rotation | reflection | inversion | rotoreflection
    order: int

    def __str__(self) -> str:
        if self.kind in ("rotation", "rotoreflection"):
            return f"{self.kind}({self.order})"
        return self.kind


@dataclass(frozen=True)
class PointGroup:
    symbol: str  # ASCII Schoenflies, e.g. "D4d"
    order: int
    proper_order: int


OCTAHEDRITE_GROUPS = frozenset(
    "C1 Cs C2 C2v Ci C2h S4 D2 D2d D2h D3 D3d D3h D4 D4d D4h O Oh".split()
)
IHEDRITE_GROUPS = {
    4: frozenset("D4h D4 D2h D2d D2".split()),
    5: frozenset("D3h D3 C2v Cs C2 C1".split()),
    6: frozenset("D2d D2h D2 C2h C2v Ci C2 Cs C1".split()),
    7: frozenset("C2v C2 Cs C1".split()),
    8: OCTAHEDRITE_GROUPS,
}
SELFHEDRITE_GROUPS = {
    2: frozenset("C2 C2v C2h D2 D2h".split()),
    3: frozenset("C1 C2 Cs C2v".split()),
    4: frozenset("C1 C2 C2h C2v C3 C3v C4 C4v Ci Cs D2 D2d D2h S4 T Td".split()),
}


def symbol_order(symbol: str) -> int:
    """Abstract group order of a Schoenflies symbol."""
    fixed = {"C1": 1, "Cs": 2, "Ci": 2, "T": 12, "Td": 24, "Th": 24, "O": 24, "Oh": 48, "I": 60, "Ih": 120}
    if symbol in fixed:
        return fixed[symbol]
    mt = re.fullmatch(r"([CDS])(\d+)([vhd]?)", symbol)
    if not mt:
        raise SymmetryError(f"unknown symbol {symbol!r}")
    letter, k, suffix = mt.group(1), int(mt.group(2)), mt.group(3)
    if letter == "S":
        return k
    base = k if letter == "C" else 2 * k
    return base * (2 if suffix else 1)


def _orientation(m: PlanarMap, g) -> bool:
    """True for orientation preserving, False for reversing."""
    n = m.dart_count
    if len(g) != n or sorted(g) != list(range(n)):
        raise SymmetryError("not an automorphism: not a dart permutation")
    a, s, si = m.alpha, m.sigma, m.sigma_inv
    if any(g[a[d]] != a[g[d]] for d in range(n)):
        raise SymmetryError("not an automorphism: does not commute with the edge involution")
    if all(g[s[d]] == s[g[d]] for d in range(n)):
        return True
    if all(g[s[d]] == si[g[d]] for d in range(n)):
        return False
    raise SymmetryError("not an automorphism: does not respect the rotation")


def _perm_order(g) -> int:
    seen = [False] * len(g)
    out = 1
    for d in range(len(g)):
        if seen[d]:
            continue
        k = 0
        x = d
        while not seen[x]:
            seen[x] = True
            x = g[x]
            k += 1
        out = lcm(out, k)
    return out


def _face_fixed(m: PlanarMap, g, proper: bool) -> bool:
    fo = m.face_of
    for i, f in enumerate(m.faces):
        img = g[f[0]]
        # a reversing map sends the face of d to the face of alpha(g(d))
        if (fo[img] if proper else fo[m.alpha[img]]) == i:
            return True
    return False


def _element(m: PlanarMap, g, proper: bool) -> ElementType:
    k = _perm_order(g)
    if not proper and k % 2:
        # when every vertex has degree <= 2 a reflection can fix all darts
        k *= 2
    if k == 1:
        return ElementType("identity", 1)
    if proper:
        return ElementType("rotation", k)
    if k == 2:
        vo, a = m.vertex_of, m.alpha
        fixed = (
            any(vo[g[v[0]]] == i for i, v in enumerate(m.vertices))
            or any(g[d] in (d, a[d]) for d in range(m.dart_count))
            or _face_fixed(m, g, False)
        )
        return ElementType("reflection" if fixed else "inversion", 2)
    return ElementType("rotoreflection", k)


def element_type(m: PlanarMap, g) -> ElementType:
    return _element(m, g, _orientation(m, g))


def _proper_name(orders: Counter, n: int) -> tuple[str, int]:
    """(family, k) for the rotation subgroup with element-order histogram ``orders``."""
    if n == 1:
        return "C", 1
    if orders.get(n, 0) > 0:
        return "C", n
    if n == 12 and orders.get(3, 0) == 8 and orders.get(6, 0) == 0:
        return "T", 0
    if n == 24 and orders.get(3, 0) == 8 and orders.get(4, 0) > 0:
        return "O", 0
    if n == 60 and orders.get(5, 0) == 24:
        return "I", 0
    if n % 2 == 0 and orders.get(2, 0) >= n // 2:
        return "D", n // 2
    raise ClassificationError("unrecognised rotation group", {"order": n, "element_orders": dict(orders)})


def classify(m: PlanarMap) -> PointGroup:
    group = automorphisms(m)
    types = [_element(m, g, p) for g, p in zip(group.elements, group.proper)]
    proper_orders = Counter(t.order for t, p in zip(types, group.proper) if p)
    kinds = Counter(t.kind for t in types)
    n = group.proper_count
    family, k = _proper_name(proper_orders, n)
    refl = kinds.get("reflection", 0)
    inv = kinds.get("inversion", 0)
    evidence = {
        "proper": f"{family}{k or ''}",
        "reflections": refl,
        "inversion": inv,
        "rotoreflection_orders": sorted({t.order for t in types if t.kind == "rotoreflection"}),
    }
    order = group.order
    if order == n:
        symbol = {"C": f"C{k}", "D": f"D{k}", "T": "T", "O": "O", "I": "I"}[family]
    elif family == "C" and k == 1:
        symbol = "Cs" if refl == 1 else "Ci" if inv == 1 else None
    elif family == "C":
        symbol = f"C{k}v" if refl == k else f"C{k}h" if refl == 1 else f"S{2 * k}" if refl == 0 else None
    elif family == "D":
        symbol = f"D{k}h" if refl == k + 1 else f"D{k}d" if refl == k else None
    elif family == "T":
        symbol = "Td" if refl == 6 else "Th" if inv == 1 else None
    elif family == "O":
        symbol = "Oh"
    else:
        symbol = "Ih"
    if symbol is None:
        raise ClassificationError("unclassifiable symmetry", evidence)
    if symbol_order(symbol) != order:
        raise ClassificationError(f"order mismatch for {symbol}", {**evidence, "order": order})
    return PointGroup(symbol, order, n)


def group_census(maps: Iterable[PlanarMap]) -> dict[str, tuple[int, int]]:
    """symbol -> (count, smallest vertex count), sorted by symbol."""
    count: Counter = Counter()
    first: dict[str, int] = {}
    for m in maps:
        s = classify(m).symbol
        count[s] += 1
        first[s] = min(first.get(s, m.n_vertices), m.n_vertices)
    return {s: (count[s], first[s]) for s in sorted(count)}
