import itertools

import pytest

from hamming_witness.core import GraphParams

ACCEPTANCE_LINES = []

# Instances small enough for quadratic brute force.
SMALL = [GraphParams(n, k) for k in (2, 3, 4, 5) for n in (1, 2, 3) if k**n <= 125]
SMALL_K3 = [p for p in SMALL if p.k >= 3]


def brute_vertices(p):
    """Every vertex, generated independently of the rank codec (rank order)."""
    return [tuple(reversed(t)) for t in itertools.product(range(p.k), repeat=p.n)]


def brute_distance(v, w):
    return sum(a != b for a, b in zip(v, w))


def brute_last(v):
    """(1-based index, value) of the last nonzero coordinate, or None."""
    nz = [i for i, x in enumerate(v) if x]
    return (nz[-1] + 1, v[nz[-1]]) if nz else None


def brute_Y(p, s, t):
    out = []
    for v in brute_vertices(p):
        tail = brute_last(v)
        if tail and tail[1] == t and sum(v) % p.k == s:
            out.append(v)
    return out


def brute_W(p):
    members = set(brute_Y(p, 1, 1))
    for i in range(2, p.k):
        members.update(brute_Y(p, 2, i))
    return [v for v in brute_vertices(p) if v in members]


@pytest.fixture(params=SMALL_K3, ids=str)
def small_k3(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
