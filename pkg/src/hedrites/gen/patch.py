"""Face-by-face patch growing for 4-regular plane maps.

The partial map lives on ``4n`` darts: vertex ``v`` owns darts
``4v..4v+3`` in counterclockwise order, so the rotation is fixed and only
the edge pairing is searched. Faces are grown one at a time: the search
always extends the longest open face walk, either by closing it or by
pairing its end dart with another open dart on the same boundary
component, or with a dart of a fresh vertex. Pairing darts on different
boundary components would raise the genus, so it is never tried.

Every rooted labelling of a map is reached exactly once (fresh vertices are
introduced in discovery order through their first dart), and completed
maps are deduplicated by canonical code.
"""

from __future__ import annotations

import logging
import sys

from ..pmap.canon import _code_from, root_candidates
from ..pmap.core import PlanarMap

logger = logging.getLogger(__name__)


class PatchSearch:
    """Exhaustive search for 4-regular maps on ``n`` vertices whose faces
    have sizes in ``face_budget`` (size -> exact count)."""

    def __init__(self, n: int, face_budget: dict[int, int], simple: bool = True):
        self.n = n
        # every map has a face of the smallest budgeted size; root dart 0 on one
        self.root_size = min(k for k, c in face_budget.items() if c > 0)
        self.budget = dict(face_budget)
        self.max_face = max(face_budget)
        self.simple = simple
        D = 4 * n
        self.D = D
        self.sig = [d - d % 4 + (d + 1) % 4 for d in range(D)]
        self.sinv = [d - d % 4 + (d + 3) % 4 for d in range(D)]
        self.alpha = [-1] * D
        self.nv = 0
        self.used = {k: 0 for k in face_budget}
        self.adj = [[0] * n for _ in range(n)]
        self.found: dict[tuple, PlanarMap] = {}
        self.leaves = 0
        self.nodes = 0

    # -- chain helpers ---------------------------------------------------------

    def _chain_back(self, e):
        """Length and start of the open face walk ending at unmatched ``e``."""
        alpha, sinv = self.alpha, self.sinv
        length = 1
        d = e
        while True:
            p = alpha[sinv[d]]
            if p < 0:
                return length, d
            d = p
            length += 1
            if length > self.max_face + 1:
                return length, d

    def _chain_fwd(self, s):
        """Length and end of the open face walk starting at ``s``."""
        alpha, sig = self.alpha, self.sig
        length = 1
        d = s
        while True:
            a = alpha[d]
            if a < 0:
                return length, d
            d = sig[a]
            length += 1
            if length > self.max_face + 1:
                return length, d

    def _boundary(self, e):
        """Unmatched darts on the boundary component through ``e``."""
        comp = [e]
        sig = self.sig
        u = self._chain_fwd(sig[e])[1]
        while u != e:
            comp.append(u)
            u = self._chain_fwd(sig[u])[1]
        return comp

    # -- search ----------------------------------------------------------------

    def run(self) -> list[PlanarMap]:
        limit = max(sys.getrecursionlimit(), 10 * self.D + 100)
        sys.setrecursionlimit(limit)
        self.nv = 1
        self._dfs()
        return [self.found[k] for k in sorted(self.found)]

    def _pick(self):
        best = None
        alpha = self.alpha
        for d in range(4 * self.nv):
            if alpha[d] >= 0:
                continue
            length, start = self._chain_back(d)
            if best is None or length > best[0]:
                best = (length, d, start)
                if length >= self.max_face:
                    break
        return best

    def _dfs(self):
        self.nodes += 1
        pick = self._pick()
        if pick is None:
            if self.nv == self.n:
                self._leaf()
            return
        length, e, start = pick
        sig, sinv = self.sig, self.sinv
        ve = e >> 2
        comp = self._boundary(e)
        close = sinv[start]
        cands = []
        for x in comp:
            if x == e:
                continue
            if x != close and length >= self.max_face:
                continue
            vx = x >> 2
            if vx == ve or (self.simple and self.adj[ve][vx]):
                continue
            if x != close:
                l2, _ = self._chain_fwd(sig[x])
                if length + l2 > self.max_face:
                    continue
            cands.append(x)
        if self.nv < self.n and length < self.max_face:
            cands.append(4 * self.nv)
        for x in cands:
            self._try(e, x)

    def _face_ok(self, size, delta):
        if size not in self.budget:
            return False
        return self.used[size] + delta <= self.budget[size]

    def _walk(self, d):
        """(closed, size, darts) of the face walk through matched dart ``d``."""
        alpha, sig, sinv = self.alpha, self.sig, self.sinv
        cap = self.max_face
        darts = [d]
        c = sig[alpha[d]]
        while c != d:
            darts.append(c)
            if len(darts) > cap:
                return False, len(darts), darts
            a = alpha[c]
            if a < 0:
                break
            c = sig[a]
        else:
            return True, len(darts), darts
        # open: extend backwards from d
        c = d
        while True:
            p = alpha[sinv[c]]
            if p < 0:
                break
            c = p
            darts.append(c)
            if len(darts) > cap:
                break
        return False, len(darts), darts

    def _root_violated(self):
        alpha = self.alpha
        if alpha[0] < 0:
            return False
        closed, size, _ = self._walk(0)
        return size > self.root_size or (closed and size != self.root_size)

    def _try(self, e, x):
        alpha = self.alpha
        fresh = (x >> 2) == self.nv
        if fresh:
            self.nv += 1
        ve, vx = e >> 2, x >> 2
        alpha[e] = x
        alpha[x] = e
        self.adj[ve][vx] += 1
        self.adj[vx][ve] += 1
        closed = []
        ok = True
        closed_e, size_e, darts_e = self._walk(e)
        checks = [(closed_e, size_e)]
        if x not in darts_e:
            closed_x, size_x, _ = self._walk(x)
            checks.append((closed_x, size_x))
        if self._root_violated():
            ok = False
        for is_closed, size in checks:
            if not ok:
                break
            if is_closed:
                if not self._face_ok(size, 1):
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
        alpha[e] = -1
        alpha[x] = -1
        self.adj[ve][vx] -= 1
        self.adj[vx][ve] -= 1
        if fresh:
            self.nv -= 1

    def _leaf(self):
        for k, c in self.budget.items():
            if self.used[k] != c:
                return
        self.leaves += 1
        m = PlanarMap(tuple(self.alpha), tuple(self.sig))
        key = _min_code(m)
        if key not in self.found:
            self.found[key] = m


def _min_code(m: PlanarMap) -> tuple:
    best = None
    for rot in (m.sigma, m.sigma_inv):
        for r in root_candidates(m):
            res = _code_from(m.alpha, rot, r, best)
            if res is not None:
                best = res[0]
    return tuple(best)


def octahedrites(n: int) -> list[PlanarMap]:
    if n < 6:
        return []
    return PatchSearch(n, {3: 8, 4: n - 6}).run()
