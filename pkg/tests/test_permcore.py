import itertools

import pytest
from hypothesis import given, strategies as st

from tower_schubert.permcore import (
    Permutation, Transposition, all_perms, col_perm, compose, format_perm, format_word, identity, inverse,
    lehmer_code, length, parse_perm, parse_word, perm_from_code, reduced_word, row_perm, simple, transposition,
    word_to_perm,
)

from conftest import MONK_PERM, perms, words


def P(*imgs):
    return Permutation(imgs)


class TestPermutation:
    def test_trailing_fixed_points_are_trimmed(self):
        assert P(2, 1, 3, 4) == P(2, 1)
        assert P(1, 2, 3) == identity()
        assert P(1, 2, 3).images == ()

    def test_rejects_non_permutations(self):
        for bad in ([1, 1], [0, 1], [2, 3], [1, 3]):
            with pytest.raises(ValueError):
                Permutation(bad)

    def test_call_and_one_line(self):
        w = P(2, 1, 4, 5, 3)
        assert [w(x) for x in range(1, 8)] == [2, 1, 4, 5, 3, 6, 7]
        assert w.one_line(6) == (2, 1, 4, 5, 3, 6)
        assert w.one_line(3) == w.one_line()

    def test_repr_and_str(self):
        assert repr(P(2, 1, 4, 5, 3)) == "Permutation(2, 1, 4, 5, 3)"
        assert str(P(2, 1, 4, 5, 3)) == "2,1,4,5,3"
        assert str(identity()) == "1"

    def test_hashable_and_ordered(self):
        assert len({P(2, 1), P(2, 1, 3), identity()}) == 2
        assert sorted([P(3, 1, 2), P(2, 1)]) == [P(2, 1), P(3, 1, 2)]


class TestCompose:
    def test_involution(self):
        assert compose(simple(1), simple(1)) == identity()

    def test_right_multiplication_swaps_positions(self):
        assert compose(P(2, 1), transposition(1, 3)) == P(3, 1, 2)
        assert MONK_PERM * transposition(5, 6) == P(1, 2, 5, 6, 10, 4, 3, 8, 7, 11, 9)

    def test_function_composition(self):
        u, v = P(2, 3, 1), P(2, 1)
        assert all((u * v)(x) == u(v(x)) for x in range(1, 5))

    @given(perms(6), perms(6), perms(6))
    def test_associative(self, u, v, w):
        assert (u * v) * w == u * (v * w)


class TestInverseLength:
    @pytest.mark.parametrize("w, inv", [((), ()), ((2, 1, 4, 5, 3), (2, 1, 5, 3, 4)), ((3, 1, 2), (2, 3, 1))])
    def test_inverse(self, w, inv):
        assert inverse(Permutation(w)) == Permutation(inv)

    @pytest.mark.parametrize("w, ell", [((), 0), ((2, 1, 4, 5, 3), 3), ((1, 2, 6, 4, 3, 7, 5), 5)])
    def test_length(self, w, ell):
        assert length(Permutation(w)) == ell

    @given(perms())
    def test_inverse_is_involutive_and_preserves_length(self, w):
        assert inverse(inverse(w)) == w
        assert w * inverse(w) == identity()
        assert length(inverse(w)) == length(w)


class TestLehmer:
    @pytest.mark.parametrize("w, code", [((), ()), ((2, 1, 5, 3, 4), (1, 0, 2)), ((2, 3, 1), (1, 1))])
    def test_examples(self, w, code):
        assert lehmer_code(Permutation(w)) == code

    def test_bijection_on_s5(self):
        codes = {lehmer_code(w) for w in all_perms(5)}
        assert len(codes) == 120
        assert all(perm_from_code(lehmer_code(w)) == w for w in all_perms(5))

    @given(perms())
    def test_sum_is_length(self, w):
        assert sum(lehmer_code(w)) == length(w)

    def test_every_sequence_is_a_code(self):
        assert perm_from_code((3, 0)) == P(4, 1, 2, 3)
        with pytest.raises(ValueError):
            perm_from_code((1, -1))


class TestWords:
    @pytest.mark.parametrize("word, w", [((3, 3), ()), ((4, 3, 4, 1, 3), (2, 1, 4, 5, 3)), ((1, 2, 1), (3, 2, 1))])
    def test_word_to_perm(self, word, w):
        assert word_to_perm(word) == Permutation(w)

    def test_reduced_word_examples(self):
        assert reduced_word(identity()) == ()
        assert reduced_word(P(2, 1)) == (1,)
        rw = reduced_word(P(3, 1, 2))
        assert len(rw) == 2 and word_to_perm(rw) == P(3, 1, 2)

    def test_reduced_word_exhaustive_s5(self):
        for w in all_perms(5):
            rw = reduced_word(w)
            assert len(rw) == length(w) and word_to_perm(rw) == w

    @given(words())
    def test_word_length_parity(self, word):
        assert (length(word_to_perm(word)) - len(word)) % 2 == 0
        assert length(word_to_perm(word)) <= len(word)


class TestTransposition:
    def test_ordered_pair(self):
        assert Transposition(1, 3).perm() == P(3, 2, 1)
        with pytest.raises(ValueError):
            Transposition(3, 3)
        with pytest.raises(ValueError):
            Transposition(3, 1)

    def test_transposition_length_is_odd(self):
        for i, j in itertools.combinations(range(1, 7), 2):
            assert length(transposition(i, j)) == 2 * (j - i) - 1


class TestGrassmannianCycles:
    def test_row_perm(self):
        assert row_perm(4, 1) == simple(4)
        assert row_perm(1, 2) == P(3, 1, 2)
        assert row_perm(3, 2) == P(1, 2, 5, 3, 4)

    def test_col_perm(self):
        assert col_perm(4, 1) == simple(4)
        assert col_perm(2, 1) == P(1, 3, 2)
        assert col_perm(2, 2) == P(2, 3, 1)
        with pytest.raises(ValueError):
            col_perm(2, 3)

    @given(st.integers(1, 6), st.integers(1, 6))
    def test_lengths(self, k, m):
        assert length(row_perm(k, m)) == m
        if m <= k:
            assert length(col_perm(k, m)) == m


class TestTextFormat:
    @given(perms())
    def test_perm_round_trip(self, w):
        assert parse_perm(format_perm(w)) == w

    @given(words())
    def test_word_round_trip(self, word):
        assert parse_word(format_word(word)) == word

    def test_parse_accepts_brackets_and_spaces(self):
        assert parse_perm("[2, 1, 3]") == P(2, 1)
        assert parse_word("4 3 4") == (4, 3, 4)

    @pytest.mark.parametrize("bad", ["1,x", "1,1", "0"])
    def test_parse_perm_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_perm(bad)

    def test_parse_word_rejects_zero(self):
        with pytest.raises(ValueError):
            parse_word("1,0")
