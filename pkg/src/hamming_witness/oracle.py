"""Brute-force ground truth for tiny Hamming graphs.

Nothing here imports the construction module: the graph is materialised as
bitset adjacency rows straight from the pairwise distance test, and the exact
independence number and f-value are found by generic search. Works for k = 2.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass

from .core import GraphParams, are_adjacent, unrank
from .errors import BudgetExceeded, TooLarge

DEFAULT_CAP = 4096
DEFAULT_F_BUDGET = 10**7


@dataclass
class DenseGraph:
    vertex_count: int
    rows: list  # rows[r] is an int bitmask of the neighbours of rank r

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def degree(self, a: int) -> int:
        return self.rows[a].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2


@dataclass
class OracleResult:
    which: str
    params: GraphParams | None
    value: int
    subsets_examined: int
    elapsed: float
    witness: tuple = ()
    search_space: int | None = None

    def fields(self) -> dict:
        out = {"method": "oracle", "which": self.which}
        if self.params is not None:
            out["n"] = self.params.n
            out["k"] = self.params.k
        out["value"] = self.value
        out["subsets_examined"] = self.subsets_examined
        if self.search_space is not None:
            out["search_space"] = self.search_space
        out["elapsed"] = f"{self.elapsed:.3f}"
        return out


def build_dense(p: GraphParams, cap: int = DEFAULT_CAP) -> DenseGraph:
    """All k^n vertices and every pairwise adjacency, O(V^2 n)."""
    if p.order > cap:
        raise TooLarge(f"{p} has {p.order} vertices, cap is {cap}")
    verts = [unrank(r, p) for r in range(p.order)]
    rows = [0] * len(verts)
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if are_adjacent(verts[a], verts[b]):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return DenseGraph(len(verts), rows)


def from_edges(vertex_count: int, edges) -> DenseGraph:
    rows = [0] * vertex_count
    for a, b in edges:
        if a != b:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return DenseGraph(vertex_count, rows)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover(g: DenseGraph, cand: int) -> int:
    """Size of a greedy clique partition of ``cand``: an upper bound on any independent subset."""
    cliques = []  # (members mask, common neighbourhood mask)
    for v in _bits(cand):
        for i, (members, common) in enumerate(cliques):
            if common >> v & 1:
                cliques[i] = (members | 1 << v, common & g.rows[v])
                break
        else:
            cliques.append((1 << v, g.rows[v]))
    return len(cliques)


def _greedy_mis(g: DenseGraph, cand: int) -> int:
    chosen = 0
    while cand:
        v = min(_bits(cand), key=lambda u: (g.rows[u] & cand).bit_count())
        chosen |= 1 << v
        cand &= ~(g.rows[v] | 1 << v)
    return chosen


def exact_mis(g: DenseGraph, cap: int = DEFAULT_CAP) -> OracleResult:
    """Exact maximum independent set by branch and bound.

    Bound: current size plus a greedy clique partition of the candidates.
    Branches on the candidate of largest degree among the candidates,
    include branch first.
    """
    if g.vertex_count > cap:
        raise TooLarge(f"{g.vertex_count} vertices, cap is {cap}")
    start = time.perf_counter()
    best = _greedy_mis(g, (1 << g.vertex_count) - 1)
    best_size = best.bit_count()
    nodes = 0

    def search(chosen: int, cand: int):
        nonlocal best, best_size, nodes
        nodes += 1
        size = chosen.bit_count()
        if not cand:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + cand.bit_count() <= best_size:
            return
        if size + _clique_cover(g, cand) <= best_size:
            return
        v = max(_bits(cand), key=lambda u: (g.rows[u] & cand).bit_count())
        search(chosen | 1 << v, cand & ~(g.rows[v] | 1 << v))
        # Excluding v only helps if v has a candidate neighbour.
        if g.rows[v] & cand:
            search(chosen, cand & ~(1 << v))

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, g.vertex_count + 100))
    try:
        search(0, (1 << g.vertex_count) - 1)
    finally:
        sys.setrecursionlimit(limit)
    return OracleResult(
        which="mis",
        params=None,
        value=best_size,
        subsets_examined=nodes,
        elapsed=time.perf_counter() - start,
        witness=tuple(_bits(best)),
    )


def exact_f(
    g: DenseGraph,
    alpha: int,
    budget: int = DEFAULT_F_BUDGET,
    upper_bound: int | None = None,
) -> OracleResult:
    """Minimum, over all (alpha+1)-subsets, of the maximum induced degree.

    Subsets are grown in lexicographic order and a branch is dropped as soon as
    its partial maximum degree can no longer beat the best value found. An
    ``upper_bound`` that is known to be achieved (e.g. the audited degree of a
    witness set) may seed the search; the scan below it is still exhaustive.
    """
    size = alpha + 1
    total = math.comb(g.vertex_count, size)
    if total > budget:
        raise BudgetExceeded(
            f"C({g.vertex_count}, {size}) = {total} subsets exceeds budget {budget}",
            required=total,
            budget=budget,
        )
    if size > g.vertex_count:
        raise ValueError(f"no subset of size {size} in {g.vertex_count} vertices")
    start = time.perf_counter()
    V = g.vertex_count
    rows = g.rows
    best = size if upper_bound is None else upper_bound
    best_set: tuple = ()
    seen = 0

    def grow(chosen: list, mask: int, degs: list, next_v: int, cur_max: int):
        nonlocal best, best_set, seen
        if len(chosen) == size:
            seen += 1
            if cur_max < best:
                best, best_set = cur_max, tuple(chosen)
            return
        for v in range(next_v, V - (size - len(chosen)) + 1):
            hits = rows[v] & mask
            dv = hits.bit_count()
            if dv >= best:
                continue
            new_max = max(cur_max, dv)
            bumped = []
            ok = True
            for u in _bits(hits):
                i = chosen.index(u)
                degs[i] += 1
                bumped.append(i)
                if degs[i] > new_max:
                    new_max = degs[i]
                    if new_max >= best:
                        ok = False
            if ok:
                chosen.append(v)
                degs.append(dv)
                grow(chosen, mask | 1 << v, degs, v + 1, new_max)
                chosen.pop()
                degs.pop()
            for i in bumped:
                degs[i] -= 1
            if best == 0:
                return

    grow([], 0, [], 0, 0)
    if not best_set and upper_bound is not None:
        # Nothing strictly below the seed exists; the seed itself is the minimum.
        best = upper_bound
    return OracleResult(
        which="f",
        params=None,
        value=best,
        subsets_examined=seen,
        elapsed=time.perf_counter() - start,
        witness=best_set,
        search_space=total,
    )


def oracle_mis(p: GraphParams, cap: int = DEFAULT_CAP) -> OracleResult:
    res = exact_mis(build_dense(p, cap), cap)
    res.params = p
    return res


def oracle_f(
    p: GraphParams,
    budget: int = DEFAULT_F_BUDGET,
    cap: int = DEFAULT_CAP,
    upper_bound: int | None = None,
) -> OracleResult:
    g = build_dense(p, cap)
    alpha = exact_mis(g, cap).value
    res = exact_f(g, alpha, budget, upper_bound)
    res.params = p
    return res


def predicted_f(p: GraphParams) -> int:
    """The known value: 1 for k >= 3, ceil(sqrt(n)) on the hypercube."""
    if p.k >= 3:
        return 1
    return math.isqrt(p.n - 1) + 1
