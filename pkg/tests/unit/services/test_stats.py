"""
Unit tests for descent, major index, length and delent statistics
"""

import pytest
from hypothesis import given, strategies as st

from services import stats
from services.perm_core import Permutation, all_even_permutations, com, inverse, rev
from utils.exceptions import DomainError, ParityError


def permutations_of(min_n: int, max_n: int):
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    ).map(lambda images: Permutation(tuple(images)))


class TestSymmetricStatistics:
    """Des_S, maj, rmaj, ell_S, Del_S, ltrm, rtlm"""

    def test_s_stats_record(self):
        """
        Core: full record of the projected golden permutation
        """
        record = stats.s_stats(Permutation((5, 3, 6, 4, 2, 1)))

        assert record.des == {1, 3, 4, 5}
        assert record.maj == 13
        assert record.rmaj == 11
        assert record.ell == 12
        assert record.del_set == {2, 5, 6}
        assert record.del_count == 3
        assert record.ltrm == {5, 3, 2, 1}

    def test_delent_and_ltrm(self):
        w = Permutation((5, 2, 3, 1, 4))

        assert stats.s_del(w) == {2, 4}
        assert stats.del_s(w) == 2
        assert stats.ltrm(w) == {5, 2, 1}
        assert stats.rtlm(w) == {4, 1}

    def test_identity_has_no_descents_or_delents(self):
        w = Permutation((1, 2, 3, 4))

        assert stats.s_des(w) == frozenset()
        assert stats.s_del(w) == frozenset()
        assert stats.ltrm(w) == {1}
        assert stats.rtlm(w) == {1, 2, 3, 4}

    @given(permutations_of(1, 8))
    def test_ltrm_duality(self, w):
        """
        Property: ltrm(w) = Del_S(w^-1) + {1}
        """
        assert stats.ltrm(w) == stats.s_del(inverse(w)) | {1}

    @given(permutations_of(1, 8))
    def test_rev_com_statistics(self, w):
        """
        Property: rev com preserves length and turns maj into rmaj
        """
        turned = rev(com(w))

        assert stats.ell_s(turned) == stats.ell_s(w)
        assert stats.maj_s(turned) == stats.rmaj_s(w)


class TestAlternatingStatistics:
    """Des_A, rmaj_A, ell_A, Del_A, ltram"""

    def test_golden_inverse_sets(self):
        """
        Core: the inverse of the golden input and of its image share Des_A and Del_A
        """
        v_inv = Permutation((7, 6, 3, 2, 5, 1, 4))
        image_inv = Permutation((6, 5, 4, 1, 7, 2, 3))

        assert stats.a_des(v_inv) == {1, 2, 4}
        assert stats.a_des(image_inv) == {1, 2, 4}
        assert stats.a_del(v_inv) == {3, 4, 6}
        assert stats.a_del(image_inv) == {3, 4, 6}

    def test_golden_rmaj_and_length(self, golden_v, golden_psi_v):
        assert stats.rmaj_a(golden_v) == 11
        assert stats.ell_a(golden_v) == 12
        assert stats.ell_a(golden_psi_v) == 11
        assert stats.del_a(golden_psi_v) == 3

    def test_a_stats_record(self):
        record = stats.a_stats(Permutation((4, 2, 6, 3, 1, 5)))

        assert record.del_set == {4, 5}
        assert record.del_count == 2
        assert record.ltram == {4, 2, 3, 1}
        assert record.maj == sum(record.des)

    def test_odd_permutation_rejected(self):
        with pytest.raises(ParityError):
            stats.a_stats(Permutation((2, 1, 3, 4)))

    def test_degree_two_rejected(self):
        with pytest.raises(DomainError):
            stats.a_des(Permutation((1, 2)))

    @pytest.mark.parametrize("degree", [3, 4, 5, 6])
    def test_ltram_duality_exhaustive(self, degree):
        """
        Property: ltram(v) = Del_A(v^-1) + {1, 2}
        """
        for v in all_even_permutations(degree):
            assert stats.ltram(v) == stats.a_del(inverse(v)) | {1, 2}

    def test_identity_has_empty_descent_set(self):
        assert stats.a_des(Permutation((1, 2, 3, 4, 5))) == frozenset()


class TestShiftedStatistics:
    """ell_q, Del_q, Des_q, rmaj_q, ltrm_q"""

    def test_ell_q_counts_generators_from_q(self):
        w = Permutation((3, 7, 2, 5, 1, 4, 6))

        assert stats.ell_q(1, w) == 10
        assert stats.ell_q(3, w) == 6
        assert stats.ell_q(4, w) == 4

    def test_q_two_record(self):
        record = stats.q_stats(2, Permutation((3, 7, 2, 5, 1, 4, 6)))

        assert record.del_q_set == {3, 5}
        assert record.des_q == {2, 4}
        assert record.rmaj_q == 8
        assert record.ell_q == 8
        assert record.ltrm_q == {3, 7, 2, 1}

    @given(permutations_of(1, 8))
    def test_q_one_degenerates_to_symmetric(self, w):
        """
        Property: at q = 1 the shifted statistics are the plain ones
        """
        assert stats.ell_q(1, w) == stats.ell_s(w)
        assert stats.q_del(1, w) == stats.s_del(w)
        assert stats.q_des(1, w) == stats.s_des(w)
        assert stats.rmaj_q(1, w) == stats.rmaj_s(w)
        assert stats.ltrm_q(1, w) == stats.ltrm(w)

    @given(permutations_of(3, 8))
    def test_q_two_delent_is_alternating_delent(self, w):
        assert stats.q_del(2, w) == stats.a_del(w)

    @given(permutations_of(2, 8), st.integers(min_value=1, max_value=3))
    def test_q_duality(self, w, q):
        """
        Property: ltrm_q(w) = Del_q(w^-1) + {1..q}
        """
        if q > w.n:
            return
        assert stats.ltrm_q(q, w) == stats.q_del(q, inverse(w)) | set(range(1, q + 1))

    def test_q_above_degree_rejected(self):
        with pytest.raises(DomainError):
            stats.q_stats(4, Permutation((1, 2, 3)))
        with pytest.raises(DomainError):
            stats.ell_q(0, Permutation((1, 2, 3)))

    def test_shift(self):
        assert stats.shift({1, 3}, 2) == {3, 5}
