"""Count tables for i-hedrites and i-self-hedrites, as text and JSON."""

from __future__ import annotations

from dataclasses import dataclass

from .gen import generate_hedrite_table, generate_octahedrites


@dataclass
class CountTable:
    kind: str  # "ihedrite" | "selfhedrite" | "octahedrite"
    columns: list[int]  # values of i
    rows: dict[int, dict[int, int]]  # n -> i -> count

    def to_json(self) -> dict:
        return {
            "class": self.kind,
            "columns": self.columns,
            "counts": {str(i): {str(n): r[i] for n, r in self.rows.items()} for i in self.columns},
            "totals": {str(i): sum(r[i] for r in self.rows.values()) for i in self.columns},
        }

    def to_text(self) -> str:
        head = ["n"] + [str(i) for i in self.columns]
        body = [[str(n)] + [str(r[i]) for i in self.columns] for n, r in self.rows.items()]
        widths = [max(len(row[c]) for row in [head] + body) for c in range(len(head))]
        fmt = lambda row: "  ".join(x.rjust(w) for x, w in zip(row, widths))  # noqa: E731
        return "\n".join([fmt(head)] + [fmt(r) for r in body]) + "\n"


def hedrite_table(n_max: int, jobs: int = 1, progress=None) -> CountTable:
    runs = generate_hedrite_table(n_max, jobs, progress)
    cols = [4, 5, 6, 7, 8]
    rows = {n: {i: runs[i].counts.get(n, 0) for i in cols} for n in range(2, n_max + 1)}
    return CountTable("ihedrite", cols, rows)


def selfhedrite_table(n_max: int, jobs: int = 1, progress=None) -> CountTable:
    from .selfdual import generate_self_hedrites

    cols = [2, 3, 4]
    runs = {i: generate_self_hedrites(i, n_max, jobs, progress) for i in cols}
    rows = {n: {i: runs[i].counts.get(n, 0) for i in cols} for n in range(2, n_max + 1)}
    return CountTable("selfhedrite", cols, rows)


def octahedrite_table(n_max: int, jobs: int = 1, progress=None) -> CountTable:
    run = generate_octahedrites(n_max, jobs, progress)
    rows = {n: {8: c} for n, c in run.counts.items()}
    return CountTable("octahedrite", [8], rows)
