from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_join_irreducibles, brute_lattice, le
from schubcycle.irreducible import (
    PQ,
    NotJoinIrreducibleError,
    filter_shape,
    is_join_irreducible,
    join_irreducibles,
    l_set,
    minimal_join_irreducibles,
    phi,
    phi_by_counting,
    phi_inverse,
    pivot_index,
    pq_in_image,
)
from schubcycle.minor import GammaContext, Minor
from schubcycle.poset import coheight_in, enumerate_lattice, induced_subposet, join_irreducibles_oracle

PAPER = GammaContext(14, Minor([2, 4, 5, 9, 10, 12, 13]))
G1 = Minor([3, 4, 5, 9, 10, 12, 13])
G2 = Minor([2, 4, 6, 9, 10, 12, 13])
G3 = Minor([2, 4, 5, 9, 11, 12, 13])
G4 = Minor([2, 4, 5, 9, 10, 12, 14])


def ctx(n, *gamma):
    return GammaContext(n, Minor(gamma))


def every_context(max_n):
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            for g in combinations(range(1, n + 1), m):
                yield GammaContext(n, Minor(g))


@st.composite
def contexts(draw, max_n=11):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, n))
    g = draw(st.lists(st.integers(1, n), min_size=m, max_size=m, unique=True))
    return GammaContext(n, Minor(sorted(g)))


class TestClassification:
    def test_examples(self):
        assert is_join_irreducible(G1, PAPER)
        assert not is_join_irreducible(PAPER.gamma, PAPER)
        assert not is_join_irreducible([2, 4], ctx(4, 1, 2))

    def test_outside_lattice(self):
        with pytest.raises(ValueError):
            is_join_irreducible([1, 3], ctx(4, 2, 3))
        with pytest.raises(ValueError):
            is_join_irreducible([2, 5], ctx(4, 1, 2))

    def test_pivot(self):
        assert pivot_index(G2, PAPER) == 3
        assert pivot_index(G1, PAPER) == 1
        assert pivot_index([1, 4], ctx(4, 1, 2)) == 2
        with pytest.raises(NotJoinIrreducibleError):
            pivot_index([2, 4], ctx(4, 1, 2))

    def test_matches_brute_force(self):
        for c in every_context(7):
            lattice = brute_lattice(c.n, c.gamma)
            closed = {x for x in lattice if is_join_irreducible(x, c)}
            assert closed == brute_join_irreducibles(lattice)


class TestPhi:
    def test_examples(self):
        assert phi(G1, PAPER) == (5, 0)
        assert phi(G4, PAPER) == (0, 6)
        assert phi(G2, PAPER) == (4, 2)
        assert phi([8, 9, 10, 11, 12, 13, 14], PAPER) == (0, 0)

    def test_not_irreducible(self):
        with pytest.raises(NotJoinIrreducibleError):
            phi(PAPER.gamma, PAPER)

    @given(contexts())
    def test_counting_form_agrees(self, c):
        for x in join_irreducibles(c):
            assert phi(x, c) == phi_by_counting(x, c)
            assert phi(x, c).q <= c.m - 1

    def test_pq_in_image_examples(self):
        assert not pq_in_image((2, 3), PAPER)
        assert pq_in_image((4, 2), PAPER)
        assert pq_in_image((0, 0), PAPER)
        assert not pq_in_image((0, 0), ctx(3, 2, 3))
        assert not pq_in_image((-1, 0), PAPER)
        assert not pq_in_image((0, 7), PAPER)

    def test_inverse_examples(self):
        assert phi_inverse((4, 2), PAPER) == G2
        assert phi_inverse((0, 0), PAPER) == (8, 9, 10, 11, 12, 13, 14)
        assert phi_inverse((0, 1), ctx(4, 1, 2)) == (1, 4)
        with pytest.raises(NotJoinIrreducibleError):
            phi_inverse((2, 3), PAPER)

    @given(contexts(), st.integers(0, 12), st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
    def test_filter_property(self, c, p, q, dp, dq):
        if pq_in_image((p, q), c):
            assert pq_in_image((max(p - dp, 0), max(q - dq, 0)), c)


@pytest.fixture(scope="module")
def instances():
    out = []
    for c in every_context(7):
        view = enumerate_lattice(c)
        irr = join_irreducibles_oracle(view)
        out.append((c, irr, induced_subposet(view, irr)))
    return out


class TestExhaustive:
    """Closed forms against the brute-force poset for every gamma with n <= 7."""

    def test_phi_injective_and_image_is_filter(self, instances):
        for c, irr, _ in instances:
            images = [phi(x, c) for x in irr]
            assert len(set(images)) == len(images)
            shape = filter_shape(c)
            assert set(images) == set(shape.points())
            assert shape.point_count == len(irr)

    def test_order_isomorphism(self, instances):
        for c, irr, _ in instances:
            for x in irr:
                for y in irr:
                    (p, q), (p2, q2) = phi(x, c), phi(y, c)
                    assert le(x, y) == (p >= p2 and q >= q2)

    def test_round_trips(self, instances):
        for c, irr, _ in instances:
            for x in irr:
                assert phi_inverse(phi(x, c), c) == x
            for pq in filter_shape(c).points():
                assert phi(phi_inverse(pq, c), c) == pq

    def test_coheight_law(self, instances):
        for c, irr, sub in instances:
            for x in irr:
                p, q = phi(x, c)
                assert p + q == coheight_in(sub, x)

    def test_minimal_elements(self, instances):
        for c, irr, sub in instances:
            expected = {(sub.elements[k], coheight_in(sub, sub.elements[k])) for k in sub.minimal_indices()}
            got = minimal_join_irreducibles(c)
            assert set(got) == expected and len(got) == len(expected)
            assert {phi(x, c) for x, _ in got} == filter_shape(c).minimal_points

    def test_image_membership_predicate(self, instances):
        for c, irr, _ in instances:
            images = {phi(x, c) for x in irr}
            for p in range(c.n + 1):
                for q in range(c.m + 1):
                    assert pq_in_image((p, q), c) == ((p, q) in images)

    def test_enumeration_via_inverse(self, instances):
        for c, irr, _ in instances:
            assert join_irreducibles(c) == sorted(irr)


class TestFilterShape:
    def test_paper(self):
        shape = filter_shape(PAPER)
        assert shape.arm_limits == {0: 5, 1: 4, 2: 4, 3: 1, 4: 1, 5: 0, 6: 0}
        assert shape.minimal_points == {(5, 0), (4, 2), (1, 4), (0, 6)}
        assert shape.point_count == 22
        assert (2, 3) not in shape and (4, 2) in shape

    def test_top_is_empty(self):
        shape = filter_shape(ctx(5, 3, 4, 5))
        assert shape.arm_limits == {} and shape.point_count == 0 and not shape.minimal_points

    def test_small(self):
        shape = filter_shape(ctx(4, 1, 3))
        assert shape.arm_limits == {0: 1, 1: 0}
        assert shape.minimal_points == {PQ(1, 0), PQ(0, 1)}
        assert shape.point_count == 3


class TestLSet:
    def test_examples(self):
        assert l_set(PAPER) == (1, 3, 5, 7)
        assert l_set(ctx(14, *range(8, 15))) == ()
        assert l_set(ctx(4, 1, 3)) == (1, 2)

    def test_minimal_examples(self):
        assert minimal_join_irreducibles(PAPER) == [(G1, 5), (G2, 6), (G3, 5), (G4, 6)]
        assert minimal_join_irreducibles(ctx(14, *range(8, 15))) == []
        assert minimal_join_irreducibles(ctx(4, 1, 3)) == [((2, 3), 1), ((1, 4), 1)]

    @given(contexts())
    def test_l_set_condition(self, c):
        b = list(c.gamma) + [c.n + 1]
        for l in l_set(c):
            assert b[l - 1] + 1 < b[l] and b[l - 1] < c.n
