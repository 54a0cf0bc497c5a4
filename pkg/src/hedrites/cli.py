"""Command-line entry point: ``hedrites <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import formats
from .circuits import (
    CircuitError,
    borromean_parity,
    central_circuits,
    gauss_code,
    intersection_arcs,
    railroads,
    zigzags,
)
from .gen import GraphClass, generate_hedrite_table, generate_octahedrites
from .pmap.core import MapError, PlanarMap, medial
from .symmetry import classify, group_census

logger = logging.getLogger("hedrites")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3
EXIT_PARSE = 4

COMMANDS = (
    "generate",
    "classify",
    "table",
    "medial",
    "inverse-medial",
    "gc",
    "circuits",
    "zigzags",
    "gauss-code",
    "selfdual-filter",
)


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    graph_class: GraphClass | None
    n_max: int | None
    fmt: str
    jobs: int
    count_only: bool
    output: str | None
    input: str | None = None
    k: int = 1
    l: int = 0
    table_all_i: bool = False


class _Out:
    """Text or bytes sink for stdout or ``--output``."""

    def __init__(self, path: str | None):
        self.path = path
        self._fh = open(path, "wb") if path else None

    def write(self, data: str | bytes) -> None:
        raw = data.encode("utf-8") if isinstance(data, str) else data
        if self._fh:
            self._fh.write(raw)
        else:
            sys.stdout.buffer.write(raw)

    def close(self) -> None:
        if self._fh:
            self._fh.close()
        else:
            sys.stdout.flush()


def _progress(n: int, count: int, elapsed: float) -> None:
    print(f"n={n} count={count} elapsed={elapsed:.2f}", file=sys.stderr, flush=True)


def _parse_class(name: str | None, i: int | None) -> GraphClass | None:
    if name is None:
        return None
    try:
        return GraphClass.parse(name, i)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hedrites", description="Octahedrites, i-hedrites and i-self-hedrites.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats_=("rot", "planar_code", "dot", "json"), default="rot"):
        sp.add_argument("--format", dest="fmt", choices=formats_, default=default)
        sp.add_argument("--output", help="write here instead of stdout")

    def cls_args(sp, required=True):
        sp.add_argument("--class", dest="cls", required=required, help="octahedrite | ihedrite | selfhedrite")
        sp.add_argument("--i", type=int, help="i for ihedrite (4..8) or selfhedrite (2..4)")
        sp.add_argument("--max-n", type=int, required=required, help="largest vertex count")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")

    sp = sub.add_parser("generate", help="stream all graphs of a class up to --max-n")
    cls_args(sp)
    common(sp)
    sp.add_argument("--count-only", action="store_true", help="print per-n counts only")

    sp = sub.add_parser("table", help="count table (i-hedrites or i-self-hedrites)")
    cls_args(sp)
    common(sp, ("text", "json"), "text")

    sp = sub.add_parser("classify", help="symmetry of input graphs, or census of a generated class")
    sp.add_argument("--input", help="rotation-text file ('-' for stdin)")
    cls_args(sp, required=False)
    common(sp, ("text", "json"), "text")

    for name, helptext in (
        ("medial", "medial graph of each input graph"),
        ("inverse-medial", "the two inverse medial graphs of each 4-regular input graph"),
        ("selfdual-filter", "keep 4-regular inputs whose inverse medial is self-dual; emit it"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--input", required=True, help="rotation-text file ('-' for stdin)")
        common(sp)

    for name, helptext in (
        ("circuits", "central circuit statistics"),
        ("zigzags", "zigzag statistics"),
        ("gauss-code", "alternating link diagram of the central circuits"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--input", required=True, help="rotation-text file ('-' for stdin)")
        common(sp, ("text", "json"), "text")

    sp = sub.add_parser("gc", help="Goldberg-Coxeter octahedrite GC_{k,l}(Octahedron)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, default=0)
    common(sp)
    return p


def _config(args) -> RunConfig:
    name, i = getattr(args, "cls", None), getattr(args, "i", None)
    table_all_i = False
    if args.command == "table" and i is None and name is not None:
        # a table covers every i of its class
        if name.replace("-", "").replace("_", "").lower() == "ihedrite":
            i, table_all_i = 4, True
        elif "self" in name.lower():
            i = 4
    cls = _parse_class(name, i)
    jobs = getattr(args, "jobs", 1) or 1
    if jobs < 1:
        raise ConfigError("--jobs must be >= 1")
    cfg = RunConfig(
        command=args.command,
        graph_class=cls,
        n_max=getattr(args, "max_n", None),
        fmt=args.fmt,
        jobs=jobs,
        count_only=getattr(args, "count_only", False),
        output=args.output,
        input=getattr(args, "input", None),
        k=getattr(args, "k", 1),
        l=getattr(args, "l", 0),
        table_all_i=table_all_i,
    )
    if cls is not None and cls.kind == "octahedrite" and cfg.n_max is not None and cfg.n_max < 6:
        raise ConfigError("octahedrites need --max-n >= 6")
    if cfg.fmt == "planar_code" and cls is not None and cls.admits_multigraphs:
        raise ConfigError(f"planar_code cannot represent {cls.label} (multigraphs)")
    if cfg.command == "classify" and cfg.input is None and (cls is None or cfg.n_max is None):
        raise ConfigError("classify needs --input or --class with --max-n")
    if cfg.n_max is not None and cfg.n_max < 1:
        raise ConfigError("--max-n must be positive")
    return cfg


def _read_input(path: str) -> list[PlanarMap]:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return list(formats.iter_rotation_text(text))


def _generate_run(cfg: RunConfig):
    cls = cfg.graph_class
    if cls.kind == "octahedrite":
        if cfg.n_max < 6:
            return {}
        return generate_octahedrites(cfg.n_max, cfg.jobs, _progress).results
    if cls.kind == "ihedrite":
        return generate_hedrite_table(cfg.n_max, cfg.jobs, _progress)[cls.i].results
    from .selfdual import generate_self_hedrites

    return generate_self_hedrites(cls.i, cfg.n_max, cfg.jobs, _progress).results


def _emit_maps(out: _Out, maps, fmt: str, header: dict | None = None) -> None:
    maps = list(maps)
    if fmt == "rot":
        if header is not None:
            out.write("# " + json.dumps(header, sort_keys=True) + "\n")
        for chunk in formats.emit_stream(maps):
            out.write(chunk)
    elif fmt == "planar_code":
        out.write(formats.emit_planar_code(maps))
    elif fmt == "dot":
        for i, m in enumerate(maps):
            out.write(formats.emit_dot(m, f"G{i}"))
    else:
        obj = dict(header or {})
        obj["graphs"] = [formats.map_to_json(m) for m in maps]
        obj["total"] = len(maps)
        out.write(formats.dumps(obj))


def _cmd_generate(cfg: RunConfig, out: _Out) -> None:
    results = _generate_run(cfg)
    label = cfg.graph_class.label
    if cfg.count_only:
        counts = {n: len(ms) for n, ms in sorted(results.items())}
        if cfg.fmt == "json":
            out.write(formats.dumps({"class": label, "counts": {str(n): c for n, c in counts.items()},
                                     "total": sum(counts.values())}))
        else:
            for n, c in counts.items():
                out.write(f"n={n} count={c}\n")
            out.write(f"# total={sum(counts.values())}\n")
        return
    maps = [m for n in sorted(results) for m in results[n]]
    _emit_maps(out, maps, cfg.fmt, {"class": label} if cfg.fmt == "json" else None)


def _cmd_table(cfg: RunConfig, out: _Out) -> None:
    from .tables import hedrite_table, octahedrite_table, selfhedrite_table

    kind = cfg.graph_class.kind
    if kind == "ihedrite" or cfg.table_all_i:
        table = hedrite_table(cfg.n_max, cfg.jobs, _progress)
    elif kind == "selfhedrite":
        table = selfhedrite_table(cfg.n_max, cfg.jobs, _progress)
    else:
        table = octahedrite_table(cfg.n_max, cfg.jobs, _progress)
    out.write(formats.dumps(table.to_json()) if cfg.fmt == "json" else table.to_text())


def _cmd_classify(cfg: RunConfig, out: _Out) -> None:
    if cfg.input is not None:
        rows = []
        for idx, m in enumerate(_read_input(cfg.input)):
            g = classify(m)
            rows.append({"index": idx, "n": m.n_vertices, "symbol": g.symbol, "order": g.order,
                         "proper_order": g.proper_order})
        if cfg.fmt == "json":
            out.write(formats.dumps(rows))
        else:
            for r in rows:
                out.write(f"{r['index']} n={r['n']} {r['symbol']} order={r['order']}\n")
        return
    results = _generate_run(cfg)
    census = group_census(m for n in sorted(results) for m in results[n])
    if cfg.fmt == "json":
        out.write(formats.dumps({"class": cfg.graph_class.label,
                                 "census": {s: {"count": c, "min_n": n} for s, (c, n) in census.items()}}))
    else:
        width = max((len(s) for s in census), default=6)
        out.write(f"{'symbol'.ljust(width)}  count  min_n\n")
        for s, (c, n) in census.items():
            out.write(f"{s.ljust(width)}  {c:5d}  {n:5d}\n")


def _cmd_transform(cfg: RunConfig, out: _Out) -> None:
    from .selfdual import inverse_medial, is_self_hedrite

    maps = _read_input(cfg.input)
    if cfg.command == "medial":
        result = [medial(m) for m in maps]
    elif cfg.command == "inverse-medial":
        result = [g for m in maps for g in inverse_medial(m)]
    else:
        result = [g for g in (is_self_hedrite(m) for m in maps) if g is not None]
    _emit_maps(out, result, cfg.fmt)


def _circuit_stats(m: PlanarMap) -> dict:
    cc = central_circuits(m)
    obj = {
        "n": m.n_vertices,
        "lengths": list(cc.lengths),
        "simple": list(cc.simple),
        "railroad_count": len(railroads(m)),
    }
    if len(cc) >= 3:
        obj["borromean_parity"] = borromean_parity(m)
        obj["arcs"] = {f"{i},{j}": arcs for (i, j), arcs in sorted(intersection_arcs(m).items())}
    return obj


def _cmd_analysis(cfg: RunConfig, out: _Out) -> None:
    maps = _read_input(cfg.input)
    if cfg.command == "gauss-code":
        codes = [gauss_code(m) for m in maps]
        if cfg.fmt == "json":
            out.write(formats.dumps([c.to_json() for c in codes]))
        else:
            out.write("\n".join(c.to_text() for c in codes))
        return
    if cfg.command == "circuits":
        rows = [_circuit_stats(m) for m in maps]
    else:
        rows = []
        for m in maps:
            z = zigzags(m)
            rows.append({"n": m.n_vertices, "lengths": list(z.lengths), "simple": list(z.simple)})
    if cfg.fmt == "json":
        out.write(formats.dumps(rows))
    else:
        for idx, r in enumerate(rows):
            extra = f" railroads={r['railroad_count']}" if "railroad_count" in r else ""
            if "borromean_parity" in r:
                extra += f" borromean_parity={r['borromean_parity']}"
            out.write(f"{idx} n={r['n']} lengths={r['lengths']} simple={r['simple']}{extra}\n")


def _cmd_gc(cfg: RunConfig, out: _Out) -> None:
    from .selfdual import gc_octahedron

    try:
        m = gc_octahedron(cfg.k, cfg.l)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    header = {"k": cfg.k, "l": cfg.l, "n": m.n_vertices, "symmetry": classify(m).symbol}
    if cfg.fmt == "dot":
        out.write(f"// {json.dumps(header, sort_keys=True)}\n")
    _emit_maps(out, [m], cfg.fmt, header if cfg.fmt in ("rot", "json") else None)


HANDLERS = {
    "generate": _cmd_generate,
    "table": _cmd_table,
    "classify": _cmd_classify,
    "medial": _cmd_transform,
    "inverse-medial": _cmd_transform,
    "selfdual-filter": _cmd_transform,
    "circuits": _cmd_analysis,
    "zigzags": _cmd_analysis,
    "gauss-code": _cmd_analysis,
    "gc": _cmd_gc,
}


def run(cfg: RunConfig) -> int:
    out = _Out(cfg.output)
    try:
        HANDLERS[cfg.command](cfg, out)
    finally:
        out.close()
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = _config(args)
        return run(cfg)
    except ConfigError as exc:
        print(f"hedrites: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except formats.ParseError as exc:
        print(f"hedrites: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BrokenPipeError:
        # downstream reader closed early (e.g. piped into head)
        sys.stderr.close()
        return EXIT_OK
    except OSError as exc:
        print(f"hedrites: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (MapError, CircuitError, formats.FormatError, ValueError, RuntimeError) as exc:
        print(f"hedrites: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
