from itertools import chain, combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semigrass.errors import CoordinateError, ResourceCapError
from semigrass.poset import Q, QTILDE, Cell, OrderIdeal, Poset, ideal_meet_join

FINITE_SS_CELLS = {(3, 4), (2, 4), (1, 4), (1, 5), (1, 6)}

# every cell drawn with a color in the shifted picture for (2,3,6) at shift 2, p=3, n=7
SHIFTED_CELLS = {
    (4, 4), (5, 5),
    (3, 4), (4, 5), (5, 6),
    (2, 4), (3, 5), (4, 6),
    (1, 4), (2, 5), (3, 6),
    (1, 5), (2, 6), (3, 7),
    (1, 6), (2, 7), (3, 8),
    (1, 7), (2, 8),
}  # fmt: skip


def brute_ideals(P, cells):
    cells = list(cells)
    subsets = chain.from_iterable(combinations(cells, r) for r in range(len(cells) + 1))
    return [frozenset(s) for s in subsets if P.is_order_ideal(s)]


def brute_covers(P, cells):
    out = []
    for a in cells:
        for b in cells:
            if a != b and P.leq(a, b):
                if not any(c not in (a, b) and P.leq(a, c) and P.leq(c, b) for c in cells):
                    out.append((a, b))
    return sorted(out)


class TestOrder:
    def test_diagonal_cell_dominates_its_column(self):
        P = Poset(QTILDE, 3, 7)
        assert P.cell_leq((1, 4), (4, 4))
        # not componentwise, only through the row shift by p
        assert P.cell_leq((1, 7), (4, 4))
        assert P.clause((1, 7), (4, 4)) == "ii"

    def test_clause_three_pair(self):
        P = Poset(QTILDE, 3, 7)
        assert P.cell_leq((1, 7), (2, 8))
        assert not P.cell_leq((2, 8), (1, 7))

    def test_cells_outside_raise(self):
        P = Poset(Q, 3, 7)
        with pytest.raises(CoordinateError):
            P.cell_leq((4, 4), (1, 4))
        with pytest.raises(CoordinateError):
            Poset(QTILDE, 3, 7).cell_leq((1, 3), (1, 4))

    @pytest.mark.parametrize("kind", [Q, QTILDE])
    @pytest.mark.parametrize("p,n", [(1, 2), (2, 4), (3, 7)])
    def test_partial_order_axioms(self, kind, p, n):
        P = Poset(kind, p, n)
        cells = P.window(3 if kind == QTILDE else 0)
        for a in cells:
            assert P.leq(a, a)
            for b in cells:
                if a != b and P.leq(a, b):
                    assert not P.leq(b, a)
                    for c in cells:
                        if P.leq(b, c):
                            assert P.leq(a, c)

    def test_window_is_downward_closed(self):
        P = Poset(QTILDE, 3, 7)
        assert P.is_order_ideal(P.window(2))


class TestIdeals:
    def test_finite_example_is_ideal(self):
        P = Poset(Q, 3, 7)
        assert P.is_order_ideal(FINITE_SS_CELLS)
        assert P.is_order_ideal(())
        assert not P.is_order_ideal({(1, 5)})

    def test_closure_of_finite_generators(self):
        P = Poset(Q, 3, 7)
        J = P.downward_closure([(3, 4), (1, 6)])
        assert set(J.cells) == FINITE_SS_CELLS
        assert J.maximal == {Cell(3, 4), Cell(1, 6)}

    def test_closure_of_shifted_generators(self):
        P = Poset(QTILDE, 3, 7)
        J = P.downward_closure([(4, 4), (5, 6), (3, 8)])
        assert set(J.cells) == SHIFTED_CELLS
        assert len(J) == 19
        # q_{4,4} lies below q_{4,5}, so it is not maximal
        assert J.maximal == {Cell(5, 6), Cell(3, 8)}
        assert J.level == 2

    def test_levels(self):
        P = Poset(QTILDE, 3, 7)
        assert P.ideal_level(()) == 0
        assert P.ideal(SHIFTED_CELLS).level == 2

    def test_empty_maximal(self):
        assert Poset(Q, 2, 4).max_elements(()) == frozenset()

    @pytest.mark.parametrize("p,n,count", [(1, 2, 2), (2, 4, 6), (2, 5, 10), (3, 7, 35)])
    def test_finite_ideal_counts(self, p, n, count):
        P = Poset(Q, p, n)
        ideals = P.enumerate_ideals()
        assert len(ideals) == count
        if len(P.window()) <= 12:
            assert {J.cells for J in ideals} == set(brute_ideals(P, P.window()))

    @pytest.mark.parametrize("p,n,kmax", [(2, 4, 1), (2, 4, 2), (2, 3, 3), (3, 5, 1)])
    def test_windowed_ideals_match_brute_force(self, p, n, kmax):
        P = Poset(QTILDE, p, n)
        got = P.enumerate_ideals(kmax)
        cells = P.window(kmax + 1)
        brute = [J for J in brute_ideals(P, cells) if P.ideal_level(J) <= kmax]
        assert len(got) == len({J.cells for J in got})
        assert {J.cells for J in got} == set(brute)

    def test_windowed_count_two_four(self):
        assert len(Poset(QTILDE, 2, 4).enumerate_ideals(1)) == 12

    def test_meet_join(self):
        P = Poset(Q, 2, 4)
        a = P.ideal({(1, 3), (1, 4)})
        b = P.ideal({(1, 3), (2, 3)})
        meet, join = ideal_meet_join(a, b)
        assert set(meet.cells) == {(1, 3)}
        assert set(join.cells) == {(1, 3), (1, 4), (2, 3)}

    def test_cap_is_enforced(self, monkeypatch):
        monkeypatch.setenv("SEMIGRASS_RESOURCE_CAP", "5")
        with pytest.raises(ResourceCapError):
            Poset(Q, 3, 7).enumerate_ideals()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 4), (2, 5), (3, 5), (3, 7)]), st.data())
def test_meet_and_join_are_ideals(pn, data):
    P = Poset(QTILDE, *pn)
    ideals = P.enumerate_ideals(2)
    a = data.draw(st.sampled_from(ideals))
    b = data.draw(st.sampled_from(ideals))
    meet, join = ideal_meet_join(a, b)
    assert P.is_order_ideal(meet.cells) and P.is_order_ideal(join.cells)
    assert meet <= a <= join and meet <= b <= join


class TestHasse:
    def test_finite_edge_count(self):
        assert len(Poset(Q, 2, 4).hasse_edges()) == 4
        assert Poset(Q, 1, 2).hasse_edges() == []

    @pytest.mark.parametrize("kind,p,n,kmax", [(Q, 3, 7, 0), (QTILDE, 2, 4, 1), (QTILDE, 3, 7, 1)])
    def test_edges_are_covers(self, kind, p, n, kmax):
        P = Poset(kind, p, n)
        assert sorted(P.hasse_edges(kmax)) == brute_covers(P, P.window(kmax))

    def test_window_has_dashed_edges(self):
        P = Poset(QTILDE, 3, 7)
        clauses = {P.clause(a, b) for a, b in P.hasse_edges(1)}
        assert "ii" in clauses and "iii" in clauses
        dot = P.to_dot(1)
        assert "q_4_4 -> q_1_7 [style=dashed, color=gray];" in dot
        assert "q_2_8 -> q_4_4 [style=dashed, color=gray];" in dot
        assert dot.startswith('digraph "qtilde_3_7"')


def test_ideal_json_round_trip():
    P = Poset(Q, 3, 7)
    J = P.ideal(FINITE_SS_CELLS)
    assert P.ideal(map(tuple, J.to_json())) == J
    assert isinstance(J, OrderIdeal)
