"""Vertices, adjacency and rank codecs for the Hamming graph H(n, k).

A vertex is a plain tuple of ``n`` residues in ``range(k)``. Storage is 0-based
(``v[0]`` is the first coordinate), but every function that *reports* a
coordinate index uses 1-based numbering so output lines up with the usual
mathematical notation ``v(1), ..., v(n)``.

The canonical order of vertices is the mixed-radix rank
``rank(v) = sum(v[i] * k**i)``, i.e. the first coordinate is the least
significant digit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .errors import (
    ArithmeticOverflow,
    DimensionMismatch,
    InvalidParams,
    InvalidVertex,
    RankOutOfRange,
    ZeroVector,
)

Vertex = Tuple[int, ...]

# Ranks are kept inside a signed 64-bit word; anything larger is refused.
RANK_LIMIT = 2**63


@dataclass(frozen=True)
class GraphParams:
    n: int
    k: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvalidParams(f"n must be a positive integer, got {self.n!r}")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 2:
            raise InvalidParams(f"k must be an integer >= 2, got {self.k!r}")

    @property
    def order(self) -> int:
        """Number of vertices, k**n (arbitrary precision)."""
        return self.k**self.n

    @property
    def degree(self) -> int:
        return self.n * (self.k - 1)

    def check_rank_width(self) -> None:
        if self.order > RANK_LIMIT:
            raise ArithmeticOverflow(
                f"k^n = {self.k}^{self.n} exceeds 2^63; ranks and enumeration "
                "are limited to 63-bit widths"
            )

    def __str__(self):
        return f"H({self.n},{self.k})"


def check_vertex(v: Sequence[int], p: GraphParams) -> Vertex:
    """Validate ``v`` against ``p`` and return it as a tuple."""
    v = tuple(v)
    if len(v) != p.n:
        raise DimensionMismatch(f"vertex has {len(v)} coordinates, expected n = {p.n}")
    for i, x in enumerate(v):
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < p.k:
            raise InvalidVertex(f"coordinate {i + 1} = {x!r} is not in [0, {p.k})")
    return v


def zero(p: GraphParams) -> Vertex:
    return (0,) * p.n


def coord_sum(v: Sequence[int], p: GraphParams) -> int:
    return sum(v) % p.k


def last_nonzero(v: Sequence[int]) -> int:
    """Return the 1-based index of the last nonzero coordinate of ``v``.

    Raises ZeroVector for the all-zero vector, where the index is undefined.
    """
    for i in range(len(v) - 1, -1, -1):
        if v[i]:
            return i + 1
    raise ZeroVector("last nonzero coordinate is undefined for the zero vector")


def last_nonzero_value(v: Sequence[int]) -> int:
    return v[last_nonzero(v) - 1]


def hamming_distance(v: Sequence[int], w: Sequence[int]) -> int:
    if len(v) != len(w):
        raise DimensionMismatch(f"lengths differ: {len(v)} vs {len(w)}")
    return sum(1 for a, b in zip(v, w) if a != b)


def are_adjacent(v: Sequence[int], w: Sequence[int], p: GraphParams | None = None) -> bool:
    if p is not None:
        check_vertex(v, p)
        check_vertex(w, p)
    return hamming_distance(v, w) == 1


def neighbors(v: Sequence[int], p: GraphParams) -> Iterator[Vertex]:
    """Yield the n*(k-1) neighbours of ``v``: coordinate ascending, then value ascending."""
    v = tuple(v)
    for i in range(p.n):
        head, cur, tail = v[:i], v[i], v[i + 1:]
        for a in range(p.k):
            if a != cur:
                yield head + (a,) + tail


def rank(v: Sequence[int], p: GraphParams) -> int:
    v = check_vertex(v, p)
    p.check_rank_width()
    r = 0
    for x in reversed(v):
        r = r * p.k + x
    return r


def unrank(r: int, p: GraphParams) -> Vertex:
    p.check_rank_width()
    if isinstance(r, bool) or not isinstance(r, int) or not 0 <= r < p.order:
        raise RankOutOfRange(f"rank {r!r} outside [0, {p.order})")
    out = []
    for _ in range(p.n):
        r, d = divmod(r, p.k)
        out.append(d)
    return tuple(out)


def all_vertices(p: GraphParams) -> Iterator[Vertex]:
    """Every vertex of H(n, k) in ascending rank order."""
    p.check_rank_width()
    # product() varies its last slot fastest; reversing makes coordinate 1 the low digit.
    for rev in itertools.product(range(p.k), repeat=p.n):
        yield rev[::-1]


def format_vertex(v: Sequence[int], p: GraphParams) -> str:
    """Text form: a digit string for k <= 10, comma-separated decimals otherwise."""
    if p.k <= 10:
        return "".join(str(x) for x in v)
    return ",".join(str(x) for x in v)


def parse_vertex(text: str, p: GraphParams) -> Vertex:
    text = text.strip()
    try:
        if p.k <= 10:
            if not text.isdigit():
                raise ValueError
            v = tuple(int(c) for c in text)
        else:
            v = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidVertex(f"cannot parse vertex {text!r} for k = {p.k}") from None
    return check_vertex(v, p)
