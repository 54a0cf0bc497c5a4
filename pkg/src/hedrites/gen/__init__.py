"""Isomorph-free generation of octahedrites and i-hedrites."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from ..pmap.canon import code_key
from ..pmap.core import PlanarMap
from .classes import IHEDRITE_P, SELFHEDRITE_P, ClassError, GraphClass
from .expand import (
    ExpansionError,
    ReductionError,
    Unreducible,
    detect_unreducible,
    expand_vertex,
    expansions,
    reduce_2gon,
    two_gons,
)
from .ihedrites import hedrite_levels
from .oracle import ORACLE_MAX_N, OracleLimitError, oracle_maps
from .patch import octahedrites

logger = logging.getLogger(__name__)

Progress = Callable[[int, int, float], None]

_TABLE_CACHE: dict[int, dict] = {}


@dataclass
class GenerationRun:
    """Per-n generated maps for one class, each list sorted by canonical code."""

    graph_class: GraphClass
    n_max: int
    results: dict[int, list[PlanarMap]] = field(default_factory=dict)

    @property
    def counts(self) -> dict[int, int]:
        return {n: len(ms) for n, ms in sorted(self.results.items())}

    def all_maps(self):
        for n in sorted(self.results):
            yield from self.results[n]


def _octahedrite_levels(n_max: int, jobs: int = 1) -> dict[int, list[PlanarMap]]:
    ns = list(range(6, n_max + 1))
    if jobs > 1 and len(ns) > 1:
        # largest first so the slowest level starts early
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            out = dict(zip(ns[::-1], pool.map(octahedrites, ns[::-1])))
    else:
        out = {n: octahedrites(n) for n in ns}
    return {n: out[n] for n in ns}


def generate_octahedrites(n_max: int, jobs: int = 1, progress: Progress | None = None) -> GenerationRun:
    if n_max < 6:
        raise ValueError(f"octahedrites need n_max >= 6, got {n_max}")
    t0 = time.perf_counter()
    levels = _octahedrite_levels(n_max, jobs)
    run = GenerationRun(GraphClass.octahedrite(), n_max)
    for n, maps in levels.items():
        run.results[n] = maps
        if progress is not None:
            progress(n, len(maps), time.perf_counter() - t0)
    return run


def generate_hedrite_table(
    n_max: int, jobs: int = 1, progress: Progress | None = None
) -> dict[int, GenerationRun]:
    """i-hedrites for every i in 4..8 from a single expansion sweep.

    Results are memoised per process; a request at or below a previously
    computed ``n_max`` is served by truncation.
    """
    if _TABLE_CACHE and max(_TABLE_CACHE) >= n_max:
        big = _TABLE_CACHE[max(_TABLE_CACHE)]
        return {
            i: GenerationRun(r.graph_class, n_max, {n: ms for n, ms in r.results.items() if n <= n_max})
            for i, r in big.items()
        }
    octa = _octahedrite_levels(n_max, jobs) if n_max >= 6 else {}
    runs = {i: GenerationRun(GraphClass.ihedrite(i), n_max) for i in IHEDRITE_P}
    by_p2 = {p2: i for i, (p2, _) in IHEDRITE_P.items()}
    for n, level in hedrite_levels(n_max, lambda k: octa.get(k, []), progress):
        split: dict[int, list[PlanarMap]] = {i: [] for i in runs}
        for m in level:
            p2 = sum(1 for f in m.faces if len(f) == 2)
            split[by_p2[p2]].append(m)
        for i, ms in split.items():
            runs[i].results[n] = ms
    _TABLE_CACHE.clear()
    _TABLE_CACHE[n_max] = runs
    return generate_hedrite_table(n_max)


def generate_ihedrites(i: int, n_max: int, jobs: int = 1, progress: Progress | None = None) -> GenerationRun:
    if i not in (4, 5, 6, 7):
        raise ValueError(f"i must be in 4..7, got {i}")
    return generate_hedrite_table(n_max, jobs, progress)[i]


def oracle_generate(cls: GraphClass, n_max: int) -> GenerationRun:
    """Brute-force counterpart of the production generators (tests only)."""
    if n_max > ORACLE_MAX_N:
        raise OracleLimitError(f"oracle is limited to n_max <= {ORACLE_MAX_N}, got {n_max}")
    run = GenerationRun(cls, n_max)
    for n in range(1, n_max + 1):
        maps = oracle_maps(cls, n)
        run.results[n] = sorted(maps, key=code_key)
    return run


__all__ = [
    "ClassError",
    "ExpansionError",
    "GenerationRun",
    "GraphClass",
    "IHEDRITE_P",
    "OracleLimitError",
    "ReductionError",
    "SELFHEDRITE_P",
    "Unreducible",
    "detect_unreducible",
    "expand_vertex",
    "expansions",
    "generate_hedrite_table",
    "generate_ihedrites",
    "generate_octahedrites",
    "oracle_generate",
    "reduce_2gon",
    "two_gons",
]
