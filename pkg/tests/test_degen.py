import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semigrass.degen import (
    LaurentMonomial,
    basis_verify,
    check_bijection,
    check_order_isomorphism,
    check_psi,
    gen_leq,
    generator_chains,
    hibi_correspondence,
    hibi_to_z,
    hilbert_count,
    ideal_chains,
    pbw_cells,
    phi,
    phi_inverse,
    psi_image,
    psi_s,
    psi_y,
    sagbi_verify,
)
from semigrass.errors import DomainError
from semigrass.pluecker import PBW, SS, GeneratorIndex, closed_initial, gen_family
from semigrass.poset import QTILDE, Cell, Poset
from semigrass.symalg import Monomial, VarId

FINITE = {(3, 4), (2, 4), (1, 4), (1, 5), (1, 6)}
SHIFTED = {
    (4, 4), (5, 5), (3, 4), (4, 5), (5, 6), (2, 4), (3, 5), (4, 6), (1, 4), (2, 5),
    (3, 6), (1, 5), (2, 6), (3, 7), (1, 6), (2, 7), (3, 8), (1, 7), (2, 8),
}  # fmt: skip


def ix(I, k, family):
    return GeneratorIndex(tuple(I), k, family)


class TestBijections:
    def test_finite_examples(self):
        assert set(phi(SS, ix((2, 3, 6), 0, SS), 3, 7, finite=True).cells) == FINITE
        J = phi(PBW, ix((6, 2, 4), 0, PBW), 3, 7, finite=True)
        assert set(J.cells) == FINITE
        assert J.maximal == {Cell(3, 4), Cell(1, 6)}

    def test_shifted_examples(self):
        a = phi(SS, ix((2, 3, 6), 2, SS), 3, 7)
        b = phi(PBW, ix((1, 4, 6), 2, PBW), 3, 7)
        assert set(a.cells) == set(b.cells) == SHIFTED
        assert sorted(pbw_cells(ix((1, 4, 6), 2, PBW), 3, 7)) == [(3, 8), (4, 4), (5, 6)]
        assert phi_inverse(SS, a) == ix((2, 3, 6), 2, SS)
        assert phi_inverse(PBW, b) == ix((1, 4, 6), 2, PBW)

    @pytest.mark.parametrize("kind", [SS, PBW])
    def test_minimal_tuple(self, kind):
        u = ix((1, 2, 3), 0, kind)
        assert len(phi(kind, u, 3, 7)) == 0
        assert phi_inverse(kind, Poset(QTILDE, 3, 7).ideal([])) == u

    def test_finite_needs_zero_shift(self):
        with pytest.raises(DomainError):
            phi(SS, ix((1, 2, 3), 1, SS), 3, 7, finite=True)
        with pytest.raises(DomainError):
            phi(PBW, ix((1, 3, 5), 0, PBW), 3, 7)

    @pytest.mark.parametrize("kind", [SS, PBW])
    @pytest.mark.parametrize("p,n,kmax", [(2, 4, 2), (3, 5, 1), (1, 3, 3), (2, 3, 2)])
    def test_sweeps(self, kind, p, n, kmax):
        assert check_bijection(kind, p, n, kmax).ok
        assert check_order_isomorphism(kind, p, n, kmax).ok

    def test_ss_order_is_componentwise_at_equal_shift(self):
        gens = gen_family(3, 6, SS, 0)
        for u in gens:
            for v in gens:
                assert gen_leq(SS, u, v, 6) == all(a <= b for a, b in zip(u.I, v.I))


class TestColumns:
    def test_comparisons(self):
        a = ix((1, 2, 6, 5), 0, PBW)
        b = ix((3, 8, 7, 6), 2, PBW)
        c = ix((5, 1, 7, 9), 4, PBW)
        d = ix((2, 3, 4, 5), 1, PBW)
        assert gen_leq(PBW, a, b, 9) and gen_leq(PBW, b, c, 9)
        assert not gen_leq(PBW, a, d, 9) and not gen_leq(PBW, d, a, 9)

    def test_mixed_families_rejected(self):
        with pytest.raises(DomainError):
            gen_leq(SS, ix((1, 2), 0, SS), ix((1, 2), 0, PBW), 4)


class TestPsi:
    def test_generator_images(self):
        assert psi_s(3) == LaurentMonomial({VarId(1, 1, 0): 1, VarId(2, 2, 0): 1, VarId(3, 3, 0): 1})
        assert psi_y(3, 7, (4, 4)) == LaurentMonomial({VarId(1, 4, 1): 1, VarId(1, 1, 0): -1})

    def test_full_cancellation(self):
        u = ix((1, 4, 6), 2, PBW)
        _, g = hibi_correspondence(PBW, u, 3, 7)
        assert str(g) == "sy_{3,8}y_{4,4}y_{5,5}y_{5,6}"
        img = psi_image(3, 7, g)
        assert img.is_polynomial()
        assert img.to_monomial() == Monomial.of((1, 4, 1), (2, 6, 1), (3, 1, 0))
        assert img.to_monomial() == closed_initial(PBW, 3, 7, u.I, u.k)[1]

    def test_multiplicative(self):
        _, g = hibi_correspondence(PBW, ix((1, 4, 6), 2, PBW), 3, 7)
        _, h = hibi_correspondence(PBW, ix((6, 2, 4), 0, PBW), 3, 7)
        assert psi_image(3, 7, g * h) == psi_image(3, 7, g) * psi_image(3, 7, h)

    def test_outside_cell(self):
        with pytest.raises(DomainError):
            psi_y(3, 7, (1, 2))

    @pytest.mark.parametrize("p,n,kmax", [(2, 4, 2), (3, 5, 1), (3, 7, 2)])
    def test_sweep(self, p, n, kmax):
        assert check_psi(p, n, kmax).ok

    def test_ss_translation(self):
        u = ix((2, 3, 6), 2, SS)
        _, g = hibi_correspondence(SS, u, 3, 7)
        assert g.point.support == frozenset(Cell(*c) for c in SHIFTED)
        assert hibi_to_z(SS, 3, 7, g) == closed_initial(SS, 3, 7, u.I, u.k)[1]


def brute_chain_count(kind, p, n, m, e):
    gens = gen_family(p, n, kind, e)

    def rec(last, left, budget):
        if left == 0:
            return int(budget == 0)
        return sum(rec(v, left - 1, budget - v.k) for v in gens if v.k <= budget and gen_leq(kind, last, v, n))

    return sum(rec(u, m - 1, e - u.k) for u in gens if u.k <= e)


class TestCounts:
    def test_small_values(self):
        assert hilbert_count(SS, 2, 4, 2, 0) == 20
        assert hilbert_count(PBW, 2, 4, 0, 0) == 1
        assert hilbert_count(SS, 2, 4, 0, 1) == 0

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from([(2, 4), (2, 3), (1, 3), (3, 5)]), st.integers(1, 3), st.integers(0, 3))
    def test_families_agree_with_brute_force(self, pn, m, e):
        p, n = pn
        count = brute_chain_count(SS, p, n, m, e)
        assert hilbert_count(SS, p, n, m, e) == count == hilbert_count(PBW, p, n, m, e)

    @pytest.mark.parametrize("kind", [SS, PBW])
    def test_chain_lists_match_counts(self, kind):
        for m in (1, 2):
            for e in range(3):
                n_gen = len(generator_chains(kind, 2, 4, m, e))
                assert n_gen == len(ideal_chains(kind, 2, 4, m, e)) == hilbert_count(kind, 2, 4, m, e)


class TestGradedChecks:
    def test_classical_anchor(self):
        s = sagbi_verify(SS, 2, 4, 2, 0, 1)
        b = basis_verify(SS, 2, 4, 2, 0, 1)
        assert s.ok and b.ok and s.dim == s.expected == b.dim == 20

    def test_pbw_shifted(self):
        s = sagbi_verify(PBW, 2, 4, 2, 1, 1)
        assert s.ok and s.dim == hilbert_count(PBW, 2, 4, 2, 1)

    @pytest.mark.parametrize("e", range(5))
    def test_single_generators(self, e):
        # a single generator keeps its initial term whenever ceil(e/p) <= d
        for kind in (SS, PBW):
            s = sagbi_verify(kind, 2, 4, 1, e, 2)
            assert s.ok and s.dim == 6

    @pytest.mark.parametrize("e", [0, 1, 2])
    def test_small_pbw_sweep(self, e):
        b = basis_verify(PBW, 2, 3, 2, e, 2)
        assert b.ok and b.dim == b.expected

    def test_preconditions(self):
        with pytest.raises(ValueError):
            sagbi_verify(SS, 2, 4, 2, 2, 1)
        with pytest.raises(ValueError):
            basis_verify(SS, 2, 4, 0, 0, 0)

    def test_report_shape(self):
        rep = sagbi_verify(PBW, 2, 3, 2, 1, 1).to_json()
        assert rep["status"] == "ok" and rep["cell"] == {"m": 2, "e": 1, "d": 1}
        assert rep["counterexamples"] == []
