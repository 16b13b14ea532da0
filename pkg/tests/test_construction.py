import itertools

import pytest
from hypothesis import given, strategies as st

from hamming_witness.construction import (
    SetSpec,
    enumerate_set,
    in_W,
    in_X,
    in_Y,
    in_Z,
    membership,
    partner,
    size_alpha,
    size_of,
    size_W,
    size_W_edges,
    size_X,
    size_Y,
    size_Z,
)
from hamming_witness.core import GraphParams, rank
from hamming_witness.errors import (
    IndexOutOfRange,
    InvalidSpec,
    InvalidT,
    KTooSmall,
    PreconditionViolation,
)

from conftest import brute_last, brute_vertices, brute_W, brute_Y

# enumeration checks stay well inside k^n <= 10^5 while covering every k the tests care about
GRID = [GraphParams(n, k) for k in (2, 3, 4, 5, 6) for n in (1, 2, 3, 4) if k**n <= 1296] + [
    GraphParams(7, 3),
    GraphParams(5, 4),
]
GRID_K3 = [p for p in GRID if p.k >= 3]


def all_specs(p):
    specs = [SetSpec.X(s) for s in range(p.k)]
    for s, t in itertools.product(range(p.k), range(1, p.k)):
        specs.append(SetSpec.Y(s, t))
        specs.extend(SetSpec.Z(s, t, c) for c in range(1, p.n + 1))
    if p.k >= 3:
        specs.append(SetSpec.W())
    return specs


def test_in_X_examples():
    p = GraphParams(2, 3)
    assert in_X((2, 2), 1, p)
    assert in_X((0, 0), 0, p)
    assert not in_X((1, 0), 2, p)


def test_in_Y_examples():
    p = GraphParams(2, 3)
    assert in_Y((0, 1), 1, 1, p)
    assert not in_Y((2, 2), 1, 1, p)
    for s, t in itertools.product(range(3), (1, 2)):
        assert not in_Y((0, 0), s, t, p)
    with pytest.raises(InvalidT):
        in_Y((0, 1), 1, 0, p)


def test_in_W_examples():
    p = GraphParams(2, 3)
    assert [v for v in brute_vertices(p) if in_W(v, p)] == [(1, 0), (2, 0), (0, 1), (0, 2)]
    p1 = GraphParams(1, 3)
    assert [v for v in brute_vertices(p1) if in_W(v, p1)] == [(1,), (2,)]
    assert in_W((3, 3), GraphParams(2, 4))
    with pytest.raises(KTooSmall):
        in_W((1, 0), GraphParams(2, 2))


@pytest.mark.parametrize("p", GRID_K3, ids=str)
def test_in_W_matches_definition(p):
    assert [v for v in brute_vertices(p) if in_W(v, p)] == brute_W(p)


def test_enumerate_examples():
    assert list(enumerate_set(SetSpec.Y(2, 2), GraphParams(2, 3))) == [(2, 0), (0, 2)]
    assert [rank(v, GraphParams(2, 3)) for v in enumerate_set(SetSpec.Y(2, 2), GraphParams(2, 3))] == [2, 6]
    assert list(enumerate_set(SetSpec.X(0), GraphParams(1, 3))) == [(0,)]
    assert sum(1 for _ in enumerate_set(SetSpec.W(), GraphParams(3, 3))) == 10 == size_W(GraphParams(3, 3))


@pytest.mark.parametrize("p", GRID, ids=str)
def test_enumeration_agrees_with_predicate_and_formula(p):
    verts = brute_vertices(p)
    for spec in all_specs(p):
        pred = membership(spec, p)
        got = list(enumerate_set(spec, p))
        assert got == [v for v in verts if pred(v)], spec
        assert len(got) == size_of(spec, p), spec
        ranks = [rank(v, p) for v in got]
        assert ranks == sorted(set(ranks))


@pytest.mark.parametrize("p", GRID, ids=str)
def test_constructive_path_matches_filter_path(p):
    for spec in all_specs(p):
        assert list(enumerate_set(spec, p, method="constructive")) == list(enumerate_set(spec, p)), spec


@pytest.mark.parametrize("p", [GraphParams(3, 3), GraphParams(4, 4), GraphParams(1, 5)], ids=str)
def test_parallel_enumeration_is_identical(p):
    for spec in (SetSpec.W(), SetSpec.X(1), SetSpec.Y(2, 1)):
        assert list(enumerate_set(spec, p, workers=3)) == list(enumerate_set(spec, p)), spec


def test_union_spec():
    p = GraphParams(2, 4)
    spec = SetSpec.parse("Y:1,1+Y:1,2")
    assert str(spec) == "Y:1,1+Y:1,2"
    got = list(enumerate_set(spec, p))
    assert got == [v for v in brute_vertices(p) if v in set(brute_Y(p, 1, 1) + brute_Y(p, 1, 2))]
    assert size_of(spec, p) == len(got)
    dup = SetSpec.union(SetSpec.Y(1, 1), SetSpec.Y(1, 1))
    assert list(enumerate_set(dup, p, method="constructive")) == list(enumerate_set(dup, p))
    with pytest.raises(InvalidSpec):
        SetSpec.union(SetSpec.X(1)).validate(p)


@pytest.mark.parametrize("p", GRID, ids=str)
def test_X_sets_partition_vertices(p):
    seen = []
    for s in range(p.k):
        members = list(enumerate_set(SetSpec.X(s), p))
        assert len(members) == p.k ** (p.n - 1) == size_X(s, p)
        seen.extend(members)
    assert sorted(seen) == sorted(brute_vertices(p))


@pytest.mark.parametrize("p", GRID, ids=str)
def test_Y_sets_partition_X(p):
    for s in range(p.k):
        parts = [set(enumerate_set(SetSpec.Y(s, t), p)) for t in range(1, p.k)]
        for a, b in itertools.combinations(parts, 2):
            assert not a & b
        x = set(enumerate_set(SetSpec.X(s), p))
        if s == 0:
            x.discard((0,) * p.n)
        assert set().union(*parts) == x


@pytest.mark.parametrize("p", GRID, ids=str)
def test_X_sets_are_independent(p):
    for s in range(p.k):
        members = list(enumerate_set(SetSpec.X(s), p))
        for v, w in itertools.combinations(members, 2):
            assert sum(a != b for a, b in zip(v, w)) != 1


def test_partner_examples():
    p = GraphParams(2, 3)
    assert partner((0, 1), 1, 2, p) == (0, 2)
    with pytest.raises(PreconditionViolation, match="t1"):
        partner((2, 2), 1, 2, p)
    with pytest.raises(PreconditionViolation, match="zero"):
        partner((0, 0), 1, 2, p)
    with pytest.raises(PreconditionViolation, match="t1 = t2"):
        partner((0, 1), 1, 1, p)


@pytest.mark.parametrize("p", GRID_K3, ids=str)
def test_partner_is_bijection_Y11_to_Y22(p):
    y11 = list(enumerate_set(SetSpec.Y(1, 1), p))
    images = [partner(v, 1, 2, p) for v in y11]
    assert all(in_Y(w, 2, 2, p) for w in images)
    assert all(brute_last(w)[0] == brute_last(v)[0] for v, w in zip(y11, images))
    assert sorted(images) == sorted(enumerate_set(SetSpec.Y(2, 2), p))
    assert [partner(w, 2, 1, p) for w in images] == y11


def test_size_alpha():
    assert size_alpha(GraphParams(2, 3)) == 3
    assert all(size_alpha(GraphParams(1, k)) == 1 for k in range(2, 9))
    assert size_alpha(GraphParams(3, 3)) == 9


def test_size_Y_examples():
    assert size_Y(1, 1, GraphParams(2, 3)) == 2 == len(brute_Y(GraphParams(2, 3), 1, 1))
    assert size_Y(2, 3, GraphParams(2, 4)) == 1
    assert brute_Y(GraphParams(2, 4), 2, 3) == [(3, 3)]
    for k in (3, 4, 5):
        p = GraphParams(1, k)
        for s, t in itertools.product(range(k), range(1, k)):
            assert size_Y(s, t, p) == (1 if s == t else 0)
    with pytest.raises(InvalidT):
        size_Y(1, 0, GraphParams(2, 3))


def test_size_Z_examples():
    p = GraphParams(3, 4)
    assert size_Z(2, 2, 1, p) == 1
    assert size_Z(1, 2, 1, p) == 0
    assert all(size_Z(s, t, 2, p) == 1 for s in range(4) for t in range(1, 4))
    assert size_Z(0, 1, 3, p) == 4
    with pytest.raises(IndexOutOfRange):
        size_Z(0, 1, 4, p)
    with pytest.raises(InvalidT):
        size_Z(0, 0, 1, p)


@pytest.mark.parametrize("p", GRID, ids=str)
def test_Z_sizes_sum_to_Y_size(p):
    for s, t in itertools.product(range(p.k), range(1, p.k)):
        assert sum(size_Z(s, t, c, p) for c in range(1, p.n + 1)) == size_Y(s, t, p)


def test_size_W_examples():
    assert size_W(GraphParams(2, 3)) == 4 == len(brute_W(GraphParams(2, 3)))
    assert size_W(GraphParams(2, 4)) == 5 == len(brute_W(GraphParams(2, 4)))
    assert size_W(GraphParams(1, 5)) == 2
    assert brute_W(GraphParams(1, 5)) == [(1,), (2,)]
    with pytest.raises(KTooSmall, match="does not hold when k = 2"):
        size_W(GraphParams(3, 2))


@given(st.integers(1, 200), st.integers(3, 50))
def test_size_formulas_exact_for_large_n(n, k):
    p = GraphParams(n, k)
    geometric = sum(k**i for i in range(n - 1))
    assert size_Y(1, 1, p) == geometric + 1
    assert size_Y(0, 1, p) == geometric
    assert size_W(p) == 2 * (geometric + 1) + (k - 3) * geometric == k ** (n - 1) + 1
    assert size_W_edges(p) == size_Y(1, 1, p)


def test_remark_k2_Y11_too_small():
    # the k = 2 fallback W = Y(1,1) would fall short of alpha + 1
    for n in range(1, 8):
        p = GraphParams(n, 2)
        assert size_Y(1, 1, p) == 2 ** (n - 1) < size_alpha(p) + 1


def test_spec_parsing():
    assert SetSpec.parse("X:0") == SetSpec.X(0)
    assert SetSpec.parse("Y:1,2") == SetSpec.Y(1, 2)
    assert SetSpec.parse("Z:1,2,3") == SetSpec.Z(1, 2, 3)
    assert SetSpec.parse("W") == SetSpec.W()
    for text in ("X:0", "Y:1,2", "Z:1,2,3", "W"):
        assert str(SetSpec.parse(text)) == text
    for bad in ("Q:1", "X:1,2", "Y:1", "X:-1", "w"):
        with pytest.raises(InvalidSpec):
            SetSpec.parse(bad)


def test_residues_are_not_reduced():
    p = GraphParams(2, 3)
    with pytest.raises(InvalidSpec):
        SetSpec.X(3).validate(p)
    with pytest.raises(InvalidSpec):
        SetSpec.Y(1, 3).validate(p)
    with pytest.raises(InvalidT):
        SetSpec.Y(1, 0).validate(p)
    with pytest.raises(IndexOutOfRange):
        SetSpec.Z(1, 1, 0).validate(p)
    with pytest.raises(KTooSmall):
        list(enumerate_set(SetSpec.W(), GraphParams(2, 2)))


def test_in_Z_matches_definition():
    p = GraphParams(3, 3)
    for v in brute_vertices(p):
        tail = brute_last(v)
        for s, t, c in itertools.product(range(3), (1, 2), (1, 2, 3)):
            expected = tail is not None and tail == (c, t) and sum(v) % 3 == s
            assert in_Z(v, s, t, c, p) == expected
