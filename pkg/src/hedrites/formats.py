"""Text and binary serialisations of plane maps.

Rotation text, one block per map::

    n=<vertices> e=<edges>
    v0: <darts of vertex 0, counterclockwise>
    ...
    e0: <dart> <partner>
    ...

Blocks are separated by blank lines; lines starting with ``#`` are
comments. Parsing then emitting reproduces the input permutations exactly.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Iterator

from .pmap.core import MapError, PlanarMap


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class FormatError(ValueError):
    pass


_HEADER = re.compile(r"n=(\d+)\s+e=(\d+)")
_VERTEX = re.compile(r"v(\d+):((?:\s+\d+)*)")
_EDGE = re.compile(r"e(\d+):\s+(\d+)\s+(\d+)")


def emit_rotation_text(m: PlanarMap) -> str:
    lines = [f"n={m.n_vertices} e={m.n_edges}"]
    for i, darts in enumerate(m.vertices):
        lines.append(f"v{i}: " + " ".join(map(str, darts)))
    for j, (d, e) in enumerate(m.edges()):
        lines.append(f"e{j}: {d} {e}")
    return "\n".join(lines) + "\n"


def _parse_block(lines: list[tuple[int, str]]) -> PlanarMap:
    lineno, head = lines[0]
    mt = _HEADER.fullmatch(head)
    if not mt:
        raise ParseError(lineno, f"expected 'n=<V> e=<E>', got {head!r}")
    nv, ne = int(mt.group(1)), int(mt.group(2))
    D = 2 * ne
    body = lines[1:]
    if len(body) != nv + ne:
        where = body[-1][0] if body else lineno
        raise ParseError(where, f"expected {nv} vertex and {ne} edge lines, got {len(body)} lines")
    sigma = [-1] * D
    alpha = [-1] * D
    owner: dict[int, int] = {}
    for idx, (ln, text) in enumerate(body[:nv]):
        mv = _VERTEX.fullmatch(text)
        if not mv or int(mv.group(1)) != idx:
            raise ParseError(ln, f"expected vertex line 'v{idx}: ...', got {text!r}")
        darts = [int(x) for x in mv.group(2).split()]
        if not darts:
            raise ParseError(ln, "vertex with no darts")
        for d in darts:
            if d >= D:
                raise ParseError(ln, f"dart {d} out of range 0..{D - 1}")
            if d in owner:
                raise ParseError(ln, f"dart {d} already listed at vertex v{owner[d]}")
            owner[d] = idx
        for a, b in zip(darts, darts[1:] + darts[:1]):
            sigma[a] = b
    for idx, (ln, text) in enumerate(body[nv:]):
        me = _EDGE.fullmatch(text)
        if not me or int(me.group(1)) != idx:
            raise ParseError(ln, f"expected edge line 'e{idx}: <dart> <dart>', got {text!r}")
        x, y = int(me.group(2)), int(me.group(3))
        for d in (x, y):
            if d not in owner:
                raise ParseError(ln, f"dangling dart {d}: not listed at any vertex")
            if alpha[d] >= 0:
                raise ParseError(ln, f"dart {d} already used by another edge (involution violated)")
        if x == y:
            raise ParseError(ln, f"edge pairs dart {x} with itself (involution violated)")
        alpha[x], alpha[y] = y, x
    missing = [d for d in range(D) if d not in owner]
    if missing:
        raise ParseError(body[nv - 1][0] if nv else lineno, f"darts {missing[:5]} not listed at any vertex")
    try:
        return PlanarMap.from_permutations(alpha, sigma)
    except MapError as exc:
        raise ParseError(lineno, f"invalid map: {exc}") from exc


def iter_rotation_text(text: str) -> Iterator[PlanarMap]:
    block: list[tuple[int, str]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if block:
                yield _parse_block(block)
                block = []
            continue
        block.append((ln, line))
    if block:
        yield _parse_block(block)


def parse_rotation_text(data: bytes | str) -> PlanarMap:
    """Parse exactly one map."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    maps = list(iter_rotation_text(text))
    if len(maps) != 1:
        raise ParseError(1, f"expected one map, found {len(maps)}")
    return maps[0]


def emit_stream(maps: Iterable[PlanarMap]) -> Iterator[str]:
    """Rotation-text blocks with a final ``# total=N`` trailer."""
    total = 0
    for m in maps:
        if total:
            yield "\n"
        yield emit_rotation_text(m)
        total += 1
    yield f"# total={total}\n"


PLANAR_CODE_HEADER = b">>planar_code<<"


def planar_code_entry(m: PlanarMap) -> bytes:
    """One planar_code record: neighbours clockwise, 1-based, 0-terminated."""
    if not m.is_simple():
        raise FormatError("planar_code cannot represent multigraphs or loops")
    if m.n_vertices > 255:
        raise FormatError("planar_code (one-byte form) needs at most 255 vertices")
    vo, a, si = m.vertex_of, m.alpha, m.sigma_inv
    out = bytearray([m.n_vertices])
    for darts in m.vertices:
        d = darts[0]
        for _ in darts:
            out.append(vo[a[d]] + 1)
            d = si[d]
        out.append(0)
    return bytes(out)


def emit_planar_code(maps: Iterable[PlanarMap]) -> bytes:
    return PLANAR_CODE_HEADER + b"".join(planar_code_entry(m) for m in maps)


def emit_dot(m: PlanarMap, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(m.n_vertices):
        lines.append(f"  {v};")
    for u, w in m.edge_ends():
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def map_to_json(m: PlanarMap) -> dict:
    return {
        "n": m.n_vertices,
        "e": m.n_edges,
        "rotation": [list(v) for v in m.vertices],
        "edges": [list(e) for e in m.edges()],
    }


def map_from_json(obj: dict) -> PlanarMap:
    D = 2 * obj["e"]
    sigma = [0] * D
    alpha = [0] * D
    for darts in obj["rotation"]:
        for x, y in zip(darts, darts[1:] + darts[:1]):
            sigma[x] = y
    for x, y in obj["edges"]:
        alpha[x], alpha[y] = y, x
    return PlanarMap.from_permutations(alpha, sigma)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"
