"""
Unit tests for S- and A-canonical presentations
"""

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from services.canonical import (
    ACanonical,
    AFactor,
    FactorKind,
    SCanonical,
    SFactor,
    a,
    a_canonical,
    a_length,
    a_procedure,
    enumerate_r_a,
    enumerate_r_s,
    expand_a,
    expand_s,
    parse_word,
    s,
    s_canonical,
    word_to_perm,
)
from services.perm_core import (
    Permutation,
    all_even_permutations,
    all_permutations,
    inversion_count,
    is_even,
)
from utils.exceptions import DomainError, InvariantViolation, ParityError, WordFormatError


def even_permutations(min_n: int, max_n: int):
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    ).map(lambda images: Permutation(tuple(images))).filter(is_even)


class TestFactorSets:
    """R^S_j and R^A_j"""

    def test_r_s_order_and_size(self):
        factors = enumerate_r_s(3)

        assert [str(f) for f in factors] == ["(1)", "(s_3)", "(s_3 s_2)", "(s_3 s_2 s_1)"]

    def test_r_a_order_and_size(self):
        """
        Core: R^A_j has j+2 elements: Identity, the runs, then the two tails
        """
        factors = enumerate_r_a(3)

        assert [str(f) for f in factors] == [
            "(1)", "(a_3)", "(a_3 a_2)", "(a_3 a_2 a_1)", "(a_3 a_2 a_1^-1)",
        ]
        assert [str(f) for f in enumerate_r_a(1)] == ["(1)", "(a_1)", "(a_1^-1)"]

    def test_invalid_factor_is_internal_error(self):
        with pytest.raises(InvariantViolation):
            AFactor(2, FactorKind.RUN, ell=1)
        with pytest.raises(InvariantViolation):
            SFactor(2, 3)

    def test_factor_index_must_be_positive(self):
        with pytest.raises(DomainError):
            enumerate_r_s(0)

    def test_factor_lengths(self):
        assert SFactor(5, 2).length == 4
        assert AFactor(5, FactorKind.RUN, ell=3).length == 3
        assert AFactor(5, FactorKind.TAIL, sign=-1).length == 5
        assert AFactor(5).length == 0


class TestWords:
    """Generator words evaluated left to right"""

    def test_a_1_is_three_cycle(self):
        assert word_to_perm([a(1)], 3) == Permutation((2, 3, 1))
        assert word_to_perm([a(1, -1)], 3) == Permutation((3, 1, 2))

    def test_coxeter_word_example(self):
        word = parse_word("s1 s2 s1 s4 s3 s6 s5 s4 s3 s2")

        assert word_to_perm(word, 7) == Permutation((3, 7, 2, 5, 1, 4, 6))

    def test_parse_word_accepts_underscores_parentheses_and_identity(self):
        word = parse_word("(a_1)(a_2 a_1^-1) e s_3")

        assert word == (a(1), a(2), a(1, -1), parse_word("e")[0], s(3))

    @pytest.mark.parametrize("text", ["", "x1", "s0", "s2^-1", "a", "s1^2"])
    def test_parse_word_rejects_bad_tokens(self, text):
        with pytest.raises(WordFormatError):
            parse_word(text)

    def test_word_index_out_of_range(self):
        """
        Core: a_k touches position k+2, so it needs degree k+2
        """
        with pytest.raises(WordFormatError):
            word_to_perm([a(3)], 4)
        with pytest.raises(WordFormatError):
            word_to_perm([s(4)], 4)


class TestSCanonical:
    """The S-procedure"""

    def test_example_presentation(self):
        p = s_canonical(Permutation((3, 7, 2, 5, 1, 4, 6)))

        assert str(p) == "(s_1)(s_2 s_1)(s_4 s_3)(s_6 s_5 s_4 s_3 s_2)"
        assert p.length == 10
        assert p.factor(3).kind is FactorKind.IDENTITY

    def test_identity_presentation(self):
        p = s_canonical(Permutation((1, 2, 3, 4)))

        assert str(p) == "e"
        assert p.length == 0
        assert len(p.factors) == 3

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_round_trip_and_length_exhaustive(self, n):
        """
        Property: expand_s inverts s_canonical and the length is the inversion count
        """
        for w in all_permutations(n):
            p = s_canonical(w)
            assert expand_s(p) == w
            assert p.length == inversion_count(w)
            assert word_to_perm(p.word(), n) == w

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_factor_tuples_biject_onto_s_n(self, n):
        """
        Property: every factor tuple expands to a distinct permutation
        """
        images = {
            expand_s(SCanonical(n, tuple(factors))).images
            for factors in itertools.product(*(enumerate_r_s(j) for j in range(1, n)))
        }

        assert len(images) == math.factorial(n)


class TestACanonical:
    """Peel-off presentation of A_{n+1}"""

    def test_golden_presentation(self, golden_v):
        """
        Core: the worked seven-letter example
        """
        p = a_canonical(golden_v)

        assert str(p) == "(a_1)(a_2 a_1^-1)(a_3 a_2)(a_4 a_3 a_2 a_1)(a_5 a_4 a_3)"
        assert p.length == 12
        assert p.degree == 7

    def test_inverse_of_golden_presentation(self):
        p = a_canonical(Permutation((7, 6, 3, 2, 5, 1, 4)))

        assert str(p) == "(a_1)(a_3 a_2)(a_4 a_3 a_2 a_1^-1)(a_5 a_4 a_3 a_2 a_1^-1)"

    def test_small_degrees(self):
        assert str(a_canonical(Permutation((2, 3, 1)))) == "(a_1)"
        assert str(a_canonical(Permutation((3, 1, 2)))) == "(a_1^-1)"
        assert str(a_canonical(Permutation((1, 2)))) == "e"

    def test_odd_permutation_rejected(self):
        with pytest.raises(ParityError):
            a_canonical(Permutation((2, 1, 3)))

    def test_degree_one_rejected(self):
        with pytest.raises(DomainError):
            a_canonical(Permutation((1,)))

    @pytest.mark.parametrize("degree", [3, 4, 5, 6])
    def test_round_trip_exhaustive(self, degree):
        for v in all_even_permutations(degree):
            assert expand_a(a_canonical(v)) == v

    @pytest.mark.parametrize("degree", [3, 4, 5, 6, 7])
    def test_procedure_agrees_with_peel_off(self, degree):
        """
        Oracle: the three-step rewriting gives the same presentation
        """
        for v in all_even_permutations(degree):
            assert a_procedure(v) == a_canonical(v)

    @pytest.mark.parametrize("degree", [3, 4, 5, 6])
    def test_factor_tuples_biject_onto_a_n(self, degree):
        n = degree - 1
        images = set()
        for factors in itertools.product(*(enumerate_r_a(j) for j in range(1, n))):
            v = expand_a(ACanonical(n, tuple(factors)))
            assert is_even(v)
            images.add(v.images)

        assert len(images) == math.factorial(degree) // 2

    @given(even_permutations(3, 9))
    def test_round_trip_random(self, v):
        p = a_canonical(v)

        assert expand_a(p) == v
        assert a_length(v) == p.length
