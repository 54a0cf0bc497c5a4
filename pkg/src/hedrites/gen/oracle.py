"""Slow brute-force generator used only to cross-check the production ones.

Vertices are created one at a time with a chosen degree; the smallest
unmatched dart is always paired next, with any other unmatched dart or with
the first dart of a new vertex. The only pruning is validity: a face walk
may not grow past the largest allowed size and closed faces must fit the
budget. Genus and connectivity are checked on completed maps, and
duplicates are removed with a naive code computed from every root.

Multigraphs are always allowed, including for octahedrites, so the
simplicity of octahedrites is itself checked rather than assumed.
"""

from __future__ import annotations

import sys
from collections import Counter

from ..pmap.core import PlanarMap
from .classes import GraphClass

ORACLE_MAX_N = 12


class OracleLimitError(ValueError):
    pass


def naive_code(alpha, sigma) -> tuple:
    """Minimum BFS code over all darts and both orientations."""
    n = len(alpha)
    sinv = [0] * n
    for d, s in enumerate(sigma):
        sinv[s] = d
    best = None
    for rot in (sigma, sinv):
        for root in range(n):
            label = {root: 0}
            order = [root]
            code = []
            for d in order:
                for y in (rot[d], alpha[d]):
                    if y not in label:
                        label[y] = len(order)
                        order.append(y)
                    code.append(label[y])
            t = tuple(code)
            if best is None or t < best:
                best = t
    return best


def _degree_plan(cls: GraphClass, n: int) -> Counter | None:
    if cls.kind != "selfhedrite":
        return Counter({4: n})
    # self-dual: vertex degree counts equal face size counts
    v4 = n - cls.p2 - cls.p3
    if v4 < 0:
        return None
    return Counter({2: cls.p2, 3: cls.p3, 4: v4})


class _Search:
    def __init__(self, cls: GraphClass, n: int):
        self.cls = cls
        self.n = n
        self.plan = _degree_plan(cls, n)
        self.budget = cls.face_budget(n)
        self.max_face = max(k for k, c in self.budget.items() if c > 0) if self.budget else 0
        self.alpha: list[int] = []
        self.sigma: list[int] = []
        self.sinv: list[int] = []
        self.left = Counter(self.plan) if self.plan else Counter()
        self.used = Counter()
        self.found: dict[tuple, PlanarMap] = {}

    def run(self):
        if self.plan is None or any(c < 0 for c in self.budget.values()):
            return []
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
        for deg in sorted(k for k, c in self.left.items() if c > 0):
            self._add_vertex(deg)
            self._dfs()
            self._pop_vertex(deg)
        return [self.found[k] for k in sorted(self.found)]

    def _add_vertex(self, deg):
        base = len(self.alpha)
        self.alpha.extend([-1] * deg)
        self.sigma.extend(base + (j + 1) % deg for j in range(deg))
        self.sinv.extend(base + (j - 1) % deg for j in range(deg))
        self.left[deg] -= 1
        return base

    def _pop_vertex(self, deg):
        del self.alpha[-deg:]
        del self.sigma[-deg:]
        del self.sinv[-deg:]
        self.left[deg] += 1

    def _face(self, d):
        """(closed, size) of the face walk through matched dart ``d``."""
        alpha, sigma = self.alpha, self.sigma
        cap = self.max_face + 1
        size = 1
        c = sigma[alpha[d]]
        while c != d:
            size += 1
            if size > cap:
                return False, size
            a = alpha[c]
            if a < 0:
                break
            c = sigma[a]
        else:
            return True, size
        # extend backwards through predecessors
        sinv = self.sinv
        c = d
        while True:
            p = alpha[sinv[c]]
            if p < 0:
                break
            c = p
            size += 1
            if size > cap:
                break
        return False, size

    def _dfs(self):
        try:
            e = self.alpha.index(-1)
        except ValueError:
            if sum(self.left.values()) == 0:
                self._leaf()
            return
        cands = [x for x in range(e + 1, len(self.alpha)) if self.alpha[x] < 0]
        for x in cands:
            self._pair(e, x)
        for deg in sorted(k for k, c in self.left.items() if c > 0):
            base = self._add_vertex(deg)
            self._pair(e, base)
            self._pop_vertex(deg)

    def _pair(self, e, x):
        alpha = self.alpha
        alpha[e], alpha[x] = x, e
        closed = []
        ok = True
        for d in (e, x):
            is_closed, size = self._face(d)
            if is_closed:
                if d == x and closed and self._same_face(e, x):
                    break
                if self.used[size] + 1 > self.budget.get(size, 0):
                    ok = False
                    break
                self.used[size] += 1
                closed.append(size)
            elif size > self.max_face:
                ok = False
                break
        if ok:
            self._dfs()
        for size in closed:
            self.used[size] -= 1
        alpha[e], alpha[x] = -1, -1

    def _same_face(self, e, x):
        alpha, sigma = self.alpha, self.sigma
        c = sigma[alpha[e]]
        while c != e:
            if c == x:
                return True
            c = sigma[alpha[c]]
        return False

    def _leaf(self):
        if any(self.used[k] != c for k, c in self.budget.items()):
            return
        try:
            m = PlanarMap.from_permutations(tuple(self.alpha), tuple(self.sigma))
        except ValueError:
            return  # nonzero genus
        if not self.cls.contains(m):
            return
        key = naive_code(m.alpha, m.sigma)
        self.found.setdefault(key, m)


def oracle_maps(cls: GraphClass, n: int) -> list[PlanarMap]:
    """All maps of ``cls`` with exactly ``n`` vertices, one per isomorphism class."""
    if n > ORACLE_MAX_N:
        raise OracleLimitError(f"oracle is limited to n <= {ORACLE_MAX_N}, got {n}")
    if n < 1:
        return []
    return _Search(cls, n).run()
