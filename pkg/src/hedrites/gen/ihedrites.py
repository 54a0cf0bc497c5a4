"""Level-by-level enumeration of all 4-regular maps with faces of size 2..4.

Every such map with ``n`` vertices is an octahedrite, the 2-vertex map
``2_1``, a member of the infinite unreducible family, or the expansion of
some map with ``n - 1`` vertices. Level ``n`` is therefore built from level
``n - 1`` by all single expansions, together with the octahedrites and
unreducible seeds of size ``n``.
"""

from __future__ import annotations

import logging
import time
from typing import Callable

from ..pmap.canon import code_key
from ..pmap.catalog import infinite_family, two_one
from ..pmap.core import PlanarMap, face_stats
from .expand import expansions
from .patch import octahedrites

logger = logging.getLogger(__name__)


def seeds(n: int) -> list[PlanarMap]:
    """Unreducible maps with a 2-gon on ``n`` vertices."""
    if n == 2:
        return [two_one()]
    if n >= 4 and n % 2 == 0:
        return [infinite_family((n - 4) // 2)]
    return []


def hedrite_levels(
    n_max: int,
    octa: Callable[[int], list[PlanarMap]] = octahedrites,
    progress: Callable[[int, int, float], None] | None = None,
):
    """Yield ``(n, maps)`` for ``n = 2..n_max``; maps sorted by canonical code."""
    prev: list[PlanarMap] = []
    t0 = time.perf_counter()
    for n in range(2, n_max + 1):
        level: dict[tuple, PlanarMap] = {}
        for m in prev:
            for e in expansions(m):
                k = code_key(e)
                if k not in level:
                    level[k] = e
        for s in seeds(n):
            level.setdefault(code_key(s), s)
        for o in octa(n):
            level.setdefault(code_key(o), o)
        prev = [level[k] for k in sorted(level)]
        if progress is not None:
            progress(n, len(prev), time.perf_counter() - t0)
        logger.debug("level n=%d size=%d", n, len(prev))
        yield n, prev


def p2_of(m: PlanarMap) -> int:
    return face_stats(m).p.get(2, 0)
