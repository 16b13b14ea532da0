"""Adjacency audits over the enumerated sets.

Every check here is a proof by exhaustion: it walks the relevant vertices,
looks at their neighbours directly, and stops at the first violation with a
:class:`VerificationFailed` carrying the offending vertex. Exhaustive sweeps
are bounded by an explicit probe budget and refuse to run past it.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .construction import (
    SetSpec,
    enumerate_set,
    in_W,
    in_Y,
    membership,
    partner,
    size_of,
    size_W,
    size_Y,
)
from .core import (
    GraphParams,
    Vertex,
    all_vertices,
    are_adjacent,
    check_vertex,
    coord_sum,
    format_vertex,
    last_nonzero,
    neighbors,
    rank,
)
from .errors import (
    BudgetExceeded,
    KTooSmall,
    NotAdjacent,
    NotAMember,
    PreconditionViolation,
    VerificationFailed,
    ZeroVector,
)

DEFAULT_BUDGET = 10**6
ZERO_NOTE = "zero vector excluded: it has no last nonzero coordinate and lies in no Y set"


@dataclass
class InducedSubgraphReport:
    params: GraphParams
    spec: SetSpec
    vertex_count: int
    edge_count: int
    max_degree: int
    degree_histogram: dict = field(default_factory=dict)
    status: str = "ok"
    counterexample: str | None = None
    note: str | None = None

    def check_handshake(self) -> None:
        degree_sum = sum(d * c for d, c in self.degree_histogram.items())
        if degree_sum != 2 * self.edge_count:
            raise AssertionError(f"degree sum {degree_sum} != 2 * {self.edge_count} edges")
        if sum(self.degree_histogram.values()) != self.vertex_count:
            raise AssertionError("histogram does not account for every vertex")

    def fields(self) -> dict:
        """Ordered field mapping used by both the text and the JSON report."""
        out = {
            "n": self.params.n,
            "k": self.params.k,
            "spec": str(self.spec),
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "max_degree": self.max_degree,
            "histogram": {str(d): c for d, c in sorted(self.degree_histogram.items())},
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class MatchingCertificate:
    """The perfect matching between Y(1,1) and Y(2,2) plus the isolated rest of W."""

    pairs: list
    isolated: list

    def validate(self, p: GraphParams) -> None:
        """Re-check every structural claim of the certificate from scratch."""
        expected = size_Y(1, 1, p)
        if len(self.pairs) != expected:
            raise VerificationFailed(f"{len(self.pairs)} pairs, expected |Y(1,1)| = {expected}")
        seen = set()
        for v, w in self.pairs:
            if not in_Y(v, 1, 1, p) or not in_Y(w, 2, 2, p):
                raise VerificationFailed("pair endpoints outside Y(1,1) x Y(2,2)", vertex=v)
            if not are_adjacent(v, w):
                raise VerificationFailed("pair is not an edge", vertex=v)
            seen.update((v, w))
        for u in self.isolated:
            if not in_W(u, p) or in_Y(u, 1, 1, p) or in_Y(u, 2, 2, p):
                raise VerificationFailed("isolated vertex outside Y(2,i), i >= 3", vertex=u)
            deg = induced_degree(u, lambda x: in_W(x, p), p)
            if deg != 0:
                raise VerificationFailed("isolated vertex has a neighbour in W", vertex=u, degree=deg)
            seen.add(u)
        total = 2 * len(self.pairs) + len(self.isolated)
        if len(seen) != total:
            raise VerificationFailed("a vertex appears more than once in the certificate")
        if total != size_W(p):
            raise VerificationFailed(f"certificate covers {total} vertices, |W| = {size_W(p)}")


class AdjacencyCase(enum.Enum):
    GT = "GT"  # l(v) > l(w)
    LT = "LT"  # l(v) < l(w)
    EQ = "EQ"  # l(v) = l(w)


def induced_degree(v: Sequence[int], member: Callable[[Sequence[int]], bool], p: GraphParams) -> int:
    if not member(v):
        raise NotAMember(f"{format_vertex(v, p)} is not in the set")
    return sum(1 for w in neighbors(v, p) if member(w))


def audit_set(spec: SetSpec, p: GraphParams) -> InducedSubgraphReport:
    """Degree audit of the subgraph induced by any set, via its membership predicate."""
    member = membership(spec, p)
    hist = Counter()
    for v in enumerate_set(spec, p):
        hist[induced_degree(v, member, p)] += 1
    count = sum(hist.values())
    report = InducedSubgraphReport(
        params=p,
        spec=spec,
        vertex_count=count,
        edge_count=sum(d * c for d, c in hist.items()) // 2,
        max_degree=max(hist, default=0),
        degree_histogram=dict(sorted(hist.items())),
    )
    report.check_handshake()
    return report


def induced_edges(spec: SetSpec, p: GraphParams):
    """Yield (rank_u, rank_v) with rank_u < rank_v for every induced edge, sorted."""
    member = membership(spec, p)
    for v in enumerate_set(spec, p):
        rv = rank(v, p)
        ups = sorted(rank(w, p) for w in neighbors(v, p) if member(w))
        for rw in ups:
            if rw > rv:
                yield rv, rw


# -- the witness set -----------------------------------------------------------

def _w_neighbours(v: Vertex, k: int) -> list:
    """Neighbours of ``v`` that lie in W, in O(n*k) without re-scanning each neighbour.

    Changing coordinate i to a moves the sum by a - v[i]; the last nonzero
    coordinate of the neighbour follows from the last two nonzero positions of v.
    """
    n = len(v)
    total = sum(v)
    last = prev = -1
    for i in range(n - 1, -1, -1):
        if v[i]:
            if last < 0:
                last = i
            else:
                prev = i
                break
    out = []
    for i in range(n):
        x = v[i]
        for a in range(k):
            if a == x:
                continue
            s = (total - x + a) % k
            if s != 1 and s != 2:
                continue
            if i > last:
                tail = a
            elif i == last:
                tail = a if a else (v[prev] if prev >= 0 else 0)
            else:
                tail = v[last]
            if (s == 1 and tail == 1) or (s == 2 and tail >= 2):
                out.append(v[:i] + (a,) + v[i + 1:])
    return out


def _w_block(p: GraphParams, prefix: tuple):
    """Audit the members of W whose top coordinates equal ``prefix``.

    Returns (histogram, pairs, isolated, failure) where failure is None or a
    (vertex, degree, reason) triple for the first violation in rank order.
    """
    k, n = p.k, p.n
    hist = Counter()
    pairs, isolated = [], []
    top = prefix[::-1]
    free = n - 1 - len(prefix)
    for rev in itertools.product(range(k), repeat=free):
        upper = rev[::-1] + top
        base = sum(upper)
        for v1 in sorted({(1 - base) % k, (2 - base) % k}):
            v = (v1,) + upper
            if not in_W(v, p):
                continue
            nbrs = _w_neighbours(v, k)
            deg = len(nbrs)
            hist[deg] += 1
            if deg > 1:
                return hist, pairs, isolated, (v, deg, "induced degree exceeds 1")
            t = v[last_nonzero(v) - 1]
            s = sum(v) % k
            if s == 1:
                w = partner(v, 1, 2, p)
                if nbrs != [w]:
                    return hist, pairs, isolated, (v, deg, "Y(1,1) vertex not matched to its partner")
                pairs.append((v, w))
            elif t == 2:
                if deg != 1:
                    return hist, pairs, isolated, (v, deg, "Y(2,2) vertex left unmatched")
            else:
                if deg != 0:
                    return hist, pairs, isolated, (v, deg, "Y(2,i), i >= 3, vertex not isolated")
                isolated.append(v)
    return hist, pairs, isolated, None


def _w_prefixes(p: GraphParams, workers: int):
    depth = 0
    while depth < p.n - 1 and p.k**depth < 4 * workers:
        depth += 1
    return list(itertools.product(range(p.k), repeat=depth))


def verify_W(p: GraphParams, workers: int = 1):
    """Audit the witness set: |W| = k^(n-1) + 1 and induced maximum degree exactly 1.

    Returns ``(report, certificate)``; raises VerificationFailed with the first
    counterexample otherwise. ``workers`` only changes how the rank space is
    split, never the result or the pair order.
    """
    if p.k < 3:
        raise KTooSmall(p.k)
    p.check_rank_width()
    expected = size_W(p)
    prefixes = _w_prefixes(p, workers)
    if workers <= 1:
        blocks = (_w_block(p, pre) for pre in prefixes)
        results = _merge_blocks(p, blocks)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = _merge_blocks(p, pool.map(_w_block, itertools.repeat(p), prefixes))
    hist, pairs, isolated = results
    count = sum(hist.values())
    edges = sum(d * c for d, c in hist.items()) // 2
    report = InducedSubgraphReport(
        params=p,
        spec=SetSpec.W(),
        vertex_count=count,
        edge_count=edges,
        max_degree=max(hist, default=0),
        degree_histogram=dict(sorted(hist.items())),
        note=ZERO_NOTE,
    )
    report.check_handshake()
    if count != expected:
        raise VerificationFailed(f"|W| = {count}, expected k^(n-1)+1 = {expected}", details=report.fields())
    if report.max_degree != 1:
        raise VerificationFailed(f"max degree {report.max_degree}, expected exactly 1", details=report.fields())
    cert = MatchingCertificate(pairs=pairs, isolated=isolated)
    cert.validate(p)
    return report, cert


def _merge_blocks(p, blocks):
    hist = Counter()
    pairs, isolated = [], []
    for h, pr, iso, failure in blocks:
        hist.update(h)
        pairs.extend(pr)
        isolated.extend(iso)
        if failure is not None:
            v, deg, reason = failure
            raise VerificationFailed(
                f"{reason}: vertex {format_vertex(v, p)} has induced degree {deg}",
                vertex=v,
                degree=deg,
            )
    return hist, pairs, isolated


# -- lemma checks --------------------------------------------------------------

def _charge(probes: int, budget: int, what: str) -> None:
    if probes > budget:
        raise BudgetExceeded(
            f"{what} needs {probes} neighbour probes, budget is {budget}",
            required=probes,
            budget=budget,
        )


def check_independence(spec: SetSpec, p: GraphParams, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff no member of the set has a neighbour in the set."""
    spec.validate(p)
    _charge(size_of(spec, p) * p.degree, budget, f"independence audit of {spec}")
    member = membership(spec, p)
    for v in enumerate_set(spec, p):
        for w in neighbors(v, p):
            if member(w):
                return False
    return True


def _tail(v, p):
    try:
        idx = last_nonzero(v)
    except ZeroVector:
        raise ZeroVector(f"{format_vertex(v, p)} is the zero vector") from None
    return idx, v[idx - 1]


def classify_adjacency(v: Sequence[int], w: Sequence[int], p: GraphParams):
    """Return (case, congruence_holds) for an adjacent pair of nonzero vertices.

    The case compares last nonzero indices; the congruence tested is
    GT: s1 - s2 = t1, LT: s2 - s1 = t2, EQ: s1 - s2 = t1 - t2 (mod k).
    Equal tail values are only meaningful in the GT/LT cases and are rejected
    when the last nonzero indices coincide.
    """
    v, w = check_vertex(v, p), check_vertex(w, p)
    if not are_adjacent(v, w):
        raise NotAdjacent(f"{format_vertex(v, p)} and {format_vertex(w, p)} are not adjacent")
    lv, t1 = _tail(v, p)
    lw, t2 = _tail(w, p)
    if t1 == t2 and lv == lw:
        raise PreconditionViolation(f"t1 = t2 = {t1} with equal last nonzero index; EQ case needs t1 != t2")
    s1, s2 = coord_sum(v, p), coord_sum(w, p)
    k = p.k
    if lv > lw:
        return AdjacencyCase.GT, (s1 - s2 - t1) % k == 0
    if lv < lw:
        return AdjacencyCase.LT, (s2 - s1 - t2) % k == 0
    return AdjacencyCase.EQ, (s1 - s2 - t1 + t2) % k == 0


def congruences(s1, t1, s2, t2, k) -> dict:
    return {
        "i": (s1 - s2 - t1) % k == 0,
        "ii": (s2 - s1 - t2) % k == 0,
        "iii": (s1 - s2 - t1 + t2) % k == 0,
    }


def _check_quadruple(s1, t1, s2, t2, p):
    for name, x in (("s1", s1), ("s2", s2), ("t1", t1), ("t2", t2)):
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < p.k:
            raise PreconditionViolation(f"{name} = {x!r} is not a residue in [0, {p.k})")
    if t1 == 0 or t2 == 0:
        raise PreconditionViolation("t1 and t2 must be nonzero")
    if t1 == t2:
        raise PreconditionViolation("t1 = t2; the lemma assumes t1 != t2")


def check_no_cross_edges(s1, t1, s2, t2, p: GraphParams, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff no edge joins Y(s1,t1) and Y(s2,t2); requires all three congruences false."""
    _check_quadruple(s1, t1, s2, t2, p)
    held = [name for name, ok in congruences(s1, t1, s2, t2, p.k).items() if ok]
    if held:
        raise PreconditionViolation(f"congruence(s) ({', '.join(held)}) hold; lemma does not apply")
    _charge(size_Y(s1, t1, p) * p.degree, budget, "cross-edge audit")
    for v in enumerate_set(SetSpec.Y(s1, t1), p):
        for w in neighbors(v, p):
            if in_Y(w, s2, t2, p):
                return False
    return True


def check_unique_partner(s1, t1, s2, t2, p: GraphParams, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff each v in Y(s1,t1) has exactly one neighbour in Y(s2,t2), namely its partner."""
    _check_quadruple(s1, t1, s2, t2, p)
    if not congruences(s1, t1, s2, t2, p.k)["iii"]:
        raise PreconditionViolation("s1 - s2 != t1 - t2 (mod k); lemma does not apply")
    _charge(size_Y(s1, t1, p) * p.degree, budget, "unique-partner audit")
    for v in enumerate_set(SetSpec.Y(s1, t1), p):
        found = [w for w in neighbors(v, p) if in_Y(w, s2, t2, p)]
        if found != [partner(v, t1, t2, p)]:
            return False
    return True


# -- sweeps --------------------------------------------------------------------

def _quadruples(k):
    for s1, s2 in itertools.product(range(k), repeat=2):
        for t1, t2 in itertools.product(range(1, k), repeat=2):
            if t1 != t2:
                yield s1, t1, s2, t2


def sweep_classify(p: GraphParams, budget: int = DEFAULT_BUDGET) -> dict:
    """Classify every ordered adjacent pair of nonzero vertices with distinct tail values.

    Both orientations are visited, so GT and LT counts mirror each other.
    """
    _charge(p.order * p.degree, budget, "classification sweep")
    counts = Counter({"GT": 0, "LT": 0, "EQ": 0, "same_tail_skipped": 0})
    for v in all_vertices(p):
        if not any(v):
            continue
        for w in neighbors(v, p):
            if not any(w):
                continue
            if v[last_nonzero(v) - 1] == w[last_nonzero(w) - 1]:
                counts["same_tail_skipped"] += 1
                continue
            case, ok = classify_adjacency(v, w, p)
            if not ok:
                raise VerificationFailed(
                    f"case {case.value} congruence fails for {format_vertex(v, p)} ~ {format_vertex(w, p)}",
                    vertex=v,
                    details={"w": w, "case": case.value},
                )
            counts[case.value] += 1
    return dict(counts)


def sweep_no_cross(p: GraphParams, budget: int = DEFAULT_BUDGET) -> dict:
    """Run the non-adjacency check on every quadruple meeting its precondition."""
    counts = Counter({"checked": 0, "not_applicable": 0})
    for s1, t1, s2, t2 in _quadruples(p.k):
        if any(congruences(s1, t1, s2, t2, p.k).values()):
            counts["not_applicable"] += 1
            continue
        if not check_no_cross_edges(s1, t1, s2, t2, p, budget):
            raise VerificationFailed(
                f"edge found between Y({s1},{t1}) and Y({s2},{t2})",
                details={"quadruple": (s1, t1, s2, t2)},
            )
        counts["checked"] += 1
    return dict(counts)


def sweep_unique_partner(p: GraphParams, budget: int = DEFAULT_BUDGET) -> dict:
    counts = Counter({"checked": 0, "not_applicable": 0})
    for s1, t1, s2, t2 in _quadruples(p.k):
        if not congruences(s1, t1, s2, t2, p.k)["iii"]:
            counts["not_applicable"] += 1
            continue
        if not check_unique_partner(s1, t1, s2, t2, p, budget):
            raise VerificationFailed(
                f"Y({s1},{t1}) -> Y({s2},{t2}) is not a unique-partner map",
                details={"quadruple": (s1, t1, s2, t2)},
            )
        counts["checked"] += 1
    return dict(counts)


def sweep_independence(p: GraphParams, budget: int = DEFAULT_BUDGET) -> dict:
    """Every X(s), and every union of Y(s,t) over a nonempty set of t, is independent."""
    counts = Counter({"X": 0, "Y_unions": 0})
    for s in range(p.k):
        spec = SetSpec.X(s)
        if not check_independence(spec, p, budget):
            raise VerificationFailed(f"{spec} is not independent", details={"spec": str(spec)})
        counts["X"] += 1
        for r in range(1, p.k):
            for ts in itertools.combinations(range(1, p.k), r):
                spec = SetSpec.union(*(SetSpec.Y(s, t) for t in ts))
                if not check_independence(spec, p, budget):
                    raise VerificationFailed(f"{spec} is not independent", details={"spec": str(spec)})
                counts["Y_unions"] += 1
    return dict(counts)
