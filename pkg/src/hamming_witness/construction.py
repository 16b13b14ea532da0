"""The vertex sets X(s), Y(s, t), Z(s, t, c) and the witness set W.

Membership predicates are O(n). ``enumerate_set`` streams members in ascending
rank order; the default ``method="filter"`` walks every vertex and applies the
predicate, ``method="constructive"`` picks the upper coordinates freely and
solves for the first one. Both are required to agree (see the tests and the
golden files).

Size formulas use Python integers and stay exact for any n.
"""

from __future__ import annotations

import itertools
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .core import GraphParams, Vertex, all_vertices, check_vertex
from .errors import (
    IndexOutOfRange,
    InvalidSpec,
    InvalidT,
    KTooSmall,
    PreconditionViolation,
)


@dataclass(frozen=True)
class SetSpec:
    """Symbolic description of one of the vertex sets.

    ``kind`` is one of ``"X"``, ``"Y"``, ``"Z"``, ``"W"`` or ``"U"``; the last is
    a union of Y sets (``parts``), written ``Y:1,1+Y:1,2`` in text form. ``c`` is
    a 1-based coordinate index.
    """

    kind: str
    s: int | None = None
    t: int | None = None
    c: int | None = None
    parts: tuple = ()

    @classmethod
    def X(cls, s):
        return cls("X", s=s)

    @classmethod
    def Y(cls, s, t):
        return cls("Y", s=s, t=t)

    @classmethod
    def Z(cls, s, t, c):
        return cls("Z", s=s, t=t, c=c)

    @classmethod
    def W(cls):
        return cls("W")

    @classmethod
    def union(cls, *parts):
        return cls("U", parts=tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "SetSpec":
        text = text.strip()
        if "+" in text:
            return cls.union(*(cls.parse(part) for part in text.split("+")))
        if text == "W":
            return cls.W()
        m = re.fullmatch(r"([XYZ]):(\d+(?:,\d+)*)", text)
        if not m:
            raise InvalidSpec(f"cannot parse set spec {text!r}; expected X:s, Y:s,t, Z:s,t,c or W")
        kind, nums = m.group(1), [int(x) for x in m.group(2).split(",")]
        arity = {"X": 1, "Y": 2, "Z": 3}[kind]
        if len(nums) != arity:
            raise InvalidSpec(f"{kind} takes {arity} argument(s), got {len(nums)} in {text!r}")
        return cls(kind, *nums)

    def __str__(self):
        if self.kind == "X":
            return f"X:{self.s}"
        if self.kind == "Y":
            return f"Y:{self.s},{self.t}"
        if self.kind == "Z":
            return f"Z:{self.s},{self.t},{self.c}"
        if self.kind == "U":
            return "+".join(str(part) for part in self.parts)
        return "W"

    def validate(self, p: GraphParams) -> "SetSpec":
        """Check every field against ``p``. Residues are never reduced mod k."""
        if self.kind == "W":
            if p.k < 3:
                raise KTooSmall(p.k)
            return self
        if self.kind == "U":
            if not self.parts or any(part.kind != "Y" for part in self.parts):
                raise InvalidSpec("a union may only combine Y sets")
            for part in self.parts:
                part.validate(p)
            return self
        if self.kind not in ("X", "Y", "Z"):
            raise InvalidSpec(f"unknown set kind {self.kind!r}")
        _check_residue("s", self.s, p)
        if self.kind in ("Y", "Z"):
            _check_t(self.t, p)
        if self.kind == "Z":
            _check_c(self.c, p)
        return self


def _check_residue(name, x, p):
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < p.k:
        raise InvalidSpec(f"{name} = {x!r} is not a residue in [0, {p.k})")


def _check_t(t, p):
    if t == 0:
        raise InvalidT("t must be nonzero")
    _check_residue("t", t, p)


def _check_c(c, p):
    if isinstance(c, bool) or not isinstance(c, int) or not 1 <= c <= p.n:
        raise IndexOutOfRange(f"c = {c!r} is not a coordinate index in [1, {p.n}]")


def _tail(v: Sequence[int]):
    """(1-based last nonzero index, its value), or (0, 0) for the zero vector."""
    for i in range(len(v) - 1, -1, -1):
        if v[i]:
            return i + 1, v[i]
    return 0, 0


# -- membership ----------------------------------------------------------------

def in_X(v: Sequence[int], s: int, p: GraphParams) -> bool:
    return sum(v) % p.k == s


def in_Y(v: Sequence[int], s: int, t: int, p: GraphParams) -> bool:
    if t == 0:
        raise InvalidT("t must be nonzero")
    idx, val = _tail(v)
    return idx > 0 and val == t and sum(v) % p.k == s


def in_Z(v: Sequence[int], s: int, t: int, c: int, p: GraphParams) -> bool:
    if t == 0:
        raise InvalidT("t must be nonzero")
    idx, val = _tail(v)
    return idx == c and val == t and sum(v) % p.k == s


def in_W(v: Sequence[int], p: GraphParams) -> bool:
    """W = Y(1,1) together with Y(2,i) for 2 <= i <= k-1."""
    if p.k < 3:
        raise KTooSmall(p.k)
    idx, val = _tail(v)
    if idx == 0:
        return False
    s = sum(v) % p.k
    return (s == 1 and val == 1) or (s == 2 and val >= 2)


def membership(spec: SetSpec, p: GraphParams) -> Callable[[Sequence[int]], bool]:
    spec.validate(p)
    if spec.kind == "X":
        return lambda v: in_X(v, spec.s, p)
    if spec.kind == "Y":
        return lambda v: in_Y(v, spec.s, spec.t, p)
    if spec.kind == "Z":
        return lambda v: in_Z(v, spec.s, spec.t, spec.c, p)
    if spec.kind == "W":
        return lambda v: in_W(v, p)
    preds = [membership(part, p) for part in spec.parts]
    return lambda v: any(pred(v) for pred in preds)


# -- enumeration ---------------------------------------------------------------

def _block_prefixes(p: GraphParams, workers: int):
    """Split the rank space into contiguous blocks keyed by the top coordinates.

    Each prefix fixes (v(n), v(n-1), ...) from the most significant end; blocks
    listed in lexicographic prefix order cover ranks in ascending order.
    """
    depth = 0
    while depth < p.n and p.k**depth < 4 * workers:
        depth += 1
    return list(itertools.product(range(p.k), repeat=depth))


def _filter_block(spec: SetSpec, p: GraphParams, prefix: tuple) -> list:
    pred = membership(spec, p)
    free = p.n - len(prefix)
    top = prefix[::-1]
    out = []
    for rev in itertools.product(range(p.k), repeat=free):
        v = rev[::-1] + top
        if pred(v):
            out.append(v)
    return out


def _constructive(spec: SetSpec, p: GraphParams) -> Iterator[Vertex]:
    k, n = p.k, p.n
    if spec.kind == "U":
        yield from sorted(
            itertools.chain.from_iterable(
                _constructive(part, p) for part in dict.fromkeys(spec.parts)
            ),
            key=lambda v: v[::-1],
        )
        return
    if spec.kind == "Z":
        s, t, c = spec.s, spec.t, spec.c
        if c == 1:
            if s == t:
                yield (t,) + (0,) * (n - 1)
            return
        for rev in itertools.product(range(k), repeat=c - 2):
            mid = rev[::-1]
            v1 = (s - sum(mid) - t) % k
            yield (v1,) + mid + (t,) + (0,) * (n - c)
        return
    targets = (1, 2) if spec.kind == "W" else (spec.s,)
    pred = membership(spec, p)
    # Fix v(2..n) in rank order; v(1) is then determined by each target sum.
    for rev in itertools.product(range(k), repeat=n - 1):
        upper = rev[::-1]
        base = sum(upper)
        firsts = sorted({(s - base) % k for s in targets})
        for v1 in firsts:
            v = (v1,) + upper
            if pred(v):
                yield v


def enumerate_set(
    spec: SetSpec, p: GraphParams, method: str = "filter", workers: int = 1
) -> Iterator[Vertex]:
    """Yield the members of ``spec`` in ascending rank order, without duplicates.

    ``workers > 1`` filters disjoint rank blocks in a process pool and merges
    them back in block order, so the output is identical to the serial run.
    """
    spec.validate(p)
    p.check_rank_width()
    if method == "constructive":
        yield from _constructive(spec, p)
        return
    if method != "filter":
        raise ValueError(f"unknown enumeration method {method!r}")
    if workers <= 1:
        pred = membership(spec, p)
        for v in all_vertices(p):
            if pred(v):
                yield v
        return
    prefixes = _block_prefixes(p, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for block in pool.map(_filter_block, *zip(*[(spec, p, pre) for pre in prefixes])):
            yield from block


# -- partner map ---------------------------------------------------------------

def partner(v: Sequence[int], t1: int, t2: int, p: GraphParams) -> Vertex:
    """Replace the last nonzero coordinate of ``v`` (which must equal t1) by t2."""
    v = check_vertex(v, p)
    problems = []
    idx, val = _tail(v)
    if idx == 0:
        problems.append("v is the zero vector")
    elif val != t1:
        problems.append(f"v(l(v)) = {val} != t1 = {t1}")
    if t2 == 0:
        problems.append("t2 = 0")
    if t1 == t2:
        problems.append("t1 = t2")
    if not 0 <= t2 < p.k:
        problems.append(f"t2 = {t2} not in [0, {p.k})")
    if problems:
        raise PreconditionViolation("partner: " + "; ".join(problems))
    w = list(v)
    w[idx - 1] = t2
    return tuple(w)


# -- size formulas -------------------------------------------------------------

def _geometric(p: GraphParams) -> int:
    # 1 + k + ... + k^(n-2); exact division
    num = p.k ** (p.n - 1) - 1
    q, r = divmod(num, p.k - 1)
    assert r == 0
    return q


def size_alpha(p: GraphParams) -> int:
    return p.k ** (p.n - 1)


def size_X(s: int, p: GraphParams) -> int:
    _check_residue("s", s, p)
    return p.k ** (p.n - 1)


def size_Y(s: int, t: int, p: GraphParams) -> int:
    _check_t(t, p)
    _check_residue("s", s, p)
    return _geometric(p) + (1 if s == t else 0)


def size_Z(s: int, t: int, c: int, p: GraphParams) -> int:
    _check_t(t, p)
    _check_residue("s", s, p)
    _check_c(c, p)
    if c == 1:
        return 1 if s == t else 0
    return p.k ** (c - 2)


def size_W(p: GraphParams) -> int:
    if p.k < 3:
        raise KTooSmall(p.k)
    g = _geometric(p)
    decomposed = 2 * (g + 1) + (p.k - 3) * g
    closed = p.k ** (p.n - 1) + 1
    if decomposed != closed:
        raise ArithmeticError(f"size decomposition {decomposed} != {closed}")
    return closed


def size_W_edges(p: GraphParams) -> int:
    """Edges of the subgraph induced by W: one per Y(1,1) vertex."""
    if p.k < 3:
        raise KTooSmall(p.k)
    return size_Y(1, 1, p)


def size_of(spec: SetSpec, p: GraphParams) -> int:
    spec.validate(p)
    if spec.kind == "X":
        return size_X(spec.s, p)
    if spec.kind == "Y":
        return size_Y(spec.s, spec.t, p)
    if spec.kind == "Z":
        return size_Z(spec.s, spec.t, spec.c, p)
    if spec.kind == "W":
        return size_W(p)
    distinct = {(part.s, part.t) for part in spec.parts}
    return sum(size_Y(s, t, p) for s, t in distinct)

