import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semigrass.errors import InvariantViolation, MembershipError, PartitionError
from semigrass.poset import Q, QTILDE, Cell, Poset, ideal_meet_join
from semigrass.polytope import (
    CHAIN,
    DIAGONAL,
    EXPLICIT,
    ORDER,
    ZERO,
    HibiMonomial,
    LatticePoint,
    Partition,
    chain_sum,
    check_chain_points,
    decompose_point,
    enumerate_dilation,
    hibi_generator,
    straighten_pair,
    vertex_point,
    weak_chains,
)

FINITE_CELLS = [(3, 4), (2, 4), (1, 4), (1, 5), (1, 6)]
SHIFTED_GENERATORS = [(4, 4), (5, 6), (3, 8)]


def checker(c):
    return (c[0] + c[1]) % 2 == 0


def indicator(cells):
    return LatticePoint.from_dict({Cell(*c): 1 for c in cells})


class TestPartition:
    def test_diagonal_needs_qtilde(self):
        J = Poset(Q, 2, 4).ideal([])
        with pytest.raises(PartitionError):
            vertex_point(J, Partition(DIAGONAL))

    def test_explicit_needs_predicate(self):
        with pytest.raises(PartitionError):
            Partition(EXPLICIT)
        with pytest.raises(PartitionError):
            Partition(ORDER, checker)
        with pytest.raises(PartitionError):
            Partition("mixed")


class TestVertices:
    def test_chain_vertex_is_antichain(self):
        J = Poset(Q, 3, 7).ideal(FINITE_CELLS)
        assert vertex_point(J, Partition(CHAIN)) == indicator([(3, 4), (1, 6)])

    def test_order_vertex_is_indicator(self):
        J = Poset(Q, 3, 7).ideal(FINITE_CELLS)
        assert vertex_point(J, Partition(ORDER)) == indicator(FINITE_CELLS)

    @pytest.mark.parametrize("kind", [ORDER, CHAIN, DIAGONAL])
    def test_empty_ideal(self, kind):
        assert vertex_point(Poset(QTILDE, 2, 4).ideal([]), Partition(kind)) == ZERO

    def test_diagonal_vertex(self):
        J = Poset(QTILDE, 3, 7).downward_closure(SHIFTED_GENERATORS)
        assert vertex_point(J, Partition(DIAGONAL)) == indicator([(4, 4), (5, 5), (5, 6), (3, 8)])

    def test_hibi_generators(self):
        J = Poset(Q, 3, 7).ideal(FINITE_CELLS)
        g = hibi_generator(J, Partition(ORDER))
        assert g.degree == 1 and g.point == indicator(FINITE_CELLS)
        assert str(hibi_generator(J, Partition(CHAIN))) == "sy_{1,6}y_{3,4}"
        assert str(hibi_generator(Poset(Q, 3, 7).ideal([]), Partition(CHAIN))) == "s"
        assert (g * g).degree == 2


class TestLatticePoint:
    def test_negative_rejected(self):
        with pytest.raises(MembershipError):
            LatticePoint.from_dict({Cell(1, 3): -1})

    def test_json_round_trip(self):
        u = indicator(FINITE_CELLS) + indicator([(1, 4)])
        assert LatticePoint.from_json(u.to_json()) == u
        assert u[(1, 4)] == 2 and u.degree == 6


class TestDecompose:
    def test_single_vertex(self):
        P = Poset(QTILDE, 2, 4)
        for J in P.enumerate_ideals(1):
            assert decompose_point(vertex_point(J, Partition(CHAIN)), 1, Partition(CHAIN), P) == (J,)

    def test_incomparable_pair_straightens_to_meet_join(self):
        P = Poset(Q, 2, 4)
        a = P.ideal({(1, 3), (1, 4)})
        b = P.ideal({(1, 3), (2, 3)})
        part = Partition(ORDER)
        u = vertex_point(a, part) + vertex_point(b, part)
        got = decompose_point(u, 2, part, P)
        assert [set(J.cells) for J in got] == [{(1, 3)}, {(1, 3), (1, 4), (2, 3)}]
        assert straighten_pair(a, b, part) == got == ideal_meet_join(a, b)

    def test_comparable_pair_unchanged(self):
        P = Poset(Q, 2, 4)
        a, b = P.ideal({(1, 3)}), P.ideal({(1, 3), (1, 4)})
        assert straighten_pair(a, b, Partition(CHAIN)) == (a, b)
        assert straighten_pair(b, a, Partition(CHAIN)) == (a, b)

    def test_shifted_chain(self):
        P = Poset(QTILDE, 3, 7)
        low = P.ideal(FINITE_CELLS)
        high = P.ideal(P.downward_closure(SHIFTED_GENERATORS).cells)
        assert low <= high
        part = Partition(ORDER)
        assert decompose_point(chain_sum([low, high], part), 2, part, P) == (low, high)

    def test_point_outside_dilation(self):
        P = Poset(Q, 2, 4)
        # q_{1,4} without q_{1,3} is not an order-polytope point
        with pytest.raises(MembershipError):
            decompose_point(indicator([(1, 4)]), 1, Partition(ORDER), P)
        with pytest.raises(MembershipError):
            decompose_point(indicator([(1, 3)]), 0, Partition(ORDER), P)
        assert decompose_point(ZERO, 0, Partition(ORDER), P) == ()

    def test_diagonal_pairs_straighten(self):
        P = Poset(QTILDE, 3, 7)
        part = Partition(DIAGONAL)
        ideals = P.enumerate_ideals(1)
        for a in ideals[::5]:
            for b in ideals[::3]:
                lo, hi = straighten_pair(a, b, part)
                assert lo <= hi
                assert chain_sum([lo, hi], part) == chain_sum([a, b], part)


class TestDilation:
    def test_counts(self):
        ideals = Poset(Q, 2, 4).enumerate_ideals()
        assert enumerate_dilation(0, Partition(ORDER), ideals) == [ZERO]
        assert len(enumerate_dilation(1, Partition(ORDER), ideals)) == 6
        assert len(enumerate_dilation(2, Partition(ORDER), ideals)) == 20

    def test_weak_chain_count(self):
        ideals = Poset(Q, 2, 4).enumerate_ideals()
        brute = sum(1 for a in ideals for b in ideals if a <= b)
        assert len(weak_chains(ideals, 2)) == brute

    @pytest.mark.parametrize("part", [Partition(ORDER), Partition(CHAIN), Partition(EXPLICIT, checker)])
    def test_finite_sweep(self, part):
        P = Poset(Q, 2, 5)
        checked, failures = check_chain_points(P, part, P.enumerate_ideals(), 3)
        assert checked == 10 + 55 + 170 and failures == []

    def test_collision_is_reported(self):
        ideals = Poset(Q, 2, 4).enumerate_ideals()
        # a repeated ideal yields two chains with one sum
        with pytest.raises(InvariantViolation):
            enumerate_dilation(1, Partition(CHAIN), ideals + ideals[-1:])


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([(2, 4), (3, 5)]),
    st.sampled_from([ORDER, CHAIN, DIAGONAL]),
    st.integers(1, 3),
    st.data(),
)
def test_random_chain_recovered(pn, kind, k, data):
    P = Poset(QTILDE, *pn)
    ideals = sorted(P.enumerate_ideals(2), key=len)
    picks = sorted(data.draw(st.lists(st.integers(0, len(ideals) - 1), min_size=k, max_size=k)))
    chain = [ideals[t] for t in picks]
    # force a chain by taking running joins
    for t in range(1, k):
        chain[t] = ideal_meet_join(chain[t - 1], chain[t])[1]
    part = Partition(kind)
    u = chain_sum(chain, part)
    assert decompose_point(u, k, part, P) == tuple(chain)
    assert sum(HibiMonomial(1, vertex_point(J, part)).degree for J in chain) == k
