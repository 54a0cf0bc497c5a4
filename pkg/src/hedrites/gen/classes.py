"""Graph class records: octahedrites, i-hedrites and i-self-hedrites."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..pmap.core import MapError, PlanarMap, face_stats

# (p2, p3) forced by the Euler identities
IHEDRITE_P = {4: (4, 0), 5: (3, 2), 6: (2, 4), 7: (1, 6), 8: (0, 8)}
SELFHEDRITE_P = {2: (2, 0), 3: (1, 2), 4: (0, 4)}


class ClassError(MapError):
    pass


@dataclass(frozen=True)
class GraphClass:
    kind: str  # "octahedrite" | "ihedrite" | "selfhedrite"
    i: int
    face_sizes: frozenset = field(default=frozenset({2, 3, 4}))
    p2: int = 0
    p3: int = 0
    degrees: frozenset = field(default=frozenset({4}))

    @classmethod
    def octahedrite(cls) -> "GraphClass":
        return cls("octahedrite", 8, frozenset({3, 4}), 0, 8, frozenset({4}))

    @classmethod
    def ihedrite(cls, i: int) -> "GraphClass":
        if i not in IHEDRITE_P:
            raise ValueError(f"i-hedrites exist only for i in 4..8, got {i}")
        if i == 8:
            return cls.octahedrite()
        p2, p3 = IHEDRITE_P[i]
        return cls("ihedrite", i, frozenset({2, 3, 4}), p2, p3, frozenset({4}))

    @classmethod
    def selfhedrite(cls, i: int) -> "GraphClass":
        if i not in SELFHEDRITE_P:
            raise ValueError(f"i-self-hedrites exist only for i in 2..4, got {i}")
        p2, p3 = SELFHEDRITE_P[i]
        return cls("selfhedrite", i, frozenset({2, 3, 4}), p2, p3, frozenset({2, 3, 4}))

    @classmethod
    def parse(cls, name: str, i: int | None = None) -> "GraphClass":
        name = name.lower().replace("-", "").replace("_", "")
        if name == "octahedrite":
            return cls.octahedrite()
        if name == "ihedrite":
            if i is None:
                raise ValueError("ihedrite needs i")
            return cls.ihedrite(i)
        if name in ("selfhedrite", "iselfhedrite"):
            if i is None:
                raise ValueError("selfhedrite needs i")
            return cls.selfhedrite(i)
        raise ValueError(f"unknown graph class {name!r}")

    @property
    def label(self) -> str:
        if self.kind == "octahedrite":
            return "octahedrite"
        return f"{self.kind}({self.i})"

    @property
    def admits_multigraphs(self) -> bool:
        return self.p2 > 0

    def min_vertices(self) -> int:
        """Smallest vertex count with a member."""
        if self.kind == "selfhedrite":
            return self.i
        return {4: 2, 5: 3, 6: 4, 7: 7, 8: 6}[self.i]

    def face_budget(self, n: int) -> dict[int, int]:
        """Exact face-size counts of an n-vertex member."""
        # 4-regular: F = n + 2; self-dual: F = n
        faces = n if self.kind == "selfhedrite" else n + 2
        p4 = faces - self.p2 - self.p3
        budget = {2: self.p2, 3: self.p3, 4: p4}
        return {k: c for k, c in budget.items() if k in self.face_sizes}

    def violations(self, m: PlanarMap) -> list[str]:
        st = face_stats(m)
        out = []
        if set(st.v) - set(self.degrees):
            out.append(f"degrees {sorted(st.v)} not within {sorted(self.degrees)}")
        if set(st.p) - set(self.face_sizes):
            out.append(f"face sizes {sorted(st.p)} not within {sorted(self.face_sizes)}")
        if st.p.get(2, 0) != self.p2 or st.p.get(3, 0) != self.p3:
            out.append(f"(p2, p3) = ({st.p.get(2, 0)}, {st.p.get(3, 0)}), expected ({self.p2}, {self.p3})")
        if self.kind == "selfhedrite":
            if st.euler_sum(4) != 4:
                out.append("sum (4-j) p_j != 4")
            from ..pmap.canon import is_isomorphic
            from ..pmap.core import dual

            if not out and not is_isomorphic(m, dual(m)):
                out.append("not self-dual")
        elif st.euler_sum(4) != 8:
            out.append("sum (4-j) p_j != 8")
        return out

    def contains(self, m: PlanarMap) -> bool:
        return not self.violations(m)

    def check(self, m: PlanarMap) -> None:
        bad = self.violations(m)
        if bad:
            code = "loop_face" if 1 in face_stats(m).p else "class_violation"
            raise ClassError(code, f"map is not a {self.label}: " + "; ".join(bad))
