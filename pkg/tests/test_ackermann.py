import pytest
from hypothesis import given
from hypothesis import strategies as st

from bmestar.ackermann import (AckMemo, SparseNat, ack, ack_prime, cantor_pair, cantor_unpair,
                               seq_code, set_code, set_decode, seq_decode, stage_code)
from bmestar.budget import Budget, BudgetExhausted
from bmestar.oracles import naive_ack

BIG = Budget(10**6)


class TestAck:
    @pytest.mark.parametrize("m", range(4))
    @pytest.mark.parametrize("n", range(6))
    def test_matches_naive_recursion(self, m, n):
        assert ack(m, n, BIG) == naive_ack(m, n)

    def test_examples(self):
        assert ack(0, 7, BIG) == 8
        assert ack(2, 2, BIG) == 7
        assert ack(3, 3, BIG) == 61

    def test_row_four(self):
        assert ack(4, 0, BIG) == 13
        assert ack(4, 1, Budget(10**7)) == 65533

    @given(st.integers(0, 200))
    def test_low_rows_closed_forms(self, n):
        assert ack(1, n, BIG) == n + 2
        assert ack(2, n, BIG) == 2 * n + 3
        if n <= 8:
            assert ack(3, n, BIG) == 2 ** (n + 3) - 3

    def test_recursion_equations(self):
        memo = AckMemo()
        for m in range(1, 4):
            for n in range(1, 5):
                inner = ack(m, n - 1, BIG, memo)
                assert ack(m, n, BIG, memo) == ack(m - 1, inner, BIG, memo)
            assert ack(m, 0, BIG, memo) == ack(m - 1, 1, BIG, memo)

    def test_memo_entries_are_justified(self):
        memo = AckMemo()
        ack(3, 4, BIG, memo)
        assert memo.check() is None
        assert memo.steps_used == len(memo)
        memo.table[(2, 2)] = 8
        assert memo.check() is not None

    def test_exhaustion(self):
        memo = AckMemo()
        with pytest.raises(BudgetExhausted) as info:
            ack(3, 5, Budget(100), memo)
        assert info.value.steps_used == 100
        assert len(memo) == 100
        assert memo.check() is None

    def test_shared_memo_resumes(self):
        memo = AckMemo()
        with pytest.raises(BudgetExhausted):
            ack(3, 3, Budget(50), memo)
        assert ack(3, 3, BIG, memo) == 61

    def test_value_cap(self):
        with pytest.raises(BudgetExhausted) as info:
            ack(3, 10, Budget(10**6, max_value_bits=8))
        assert info.value.reason == "value"

    def test_no_host_recursion(self):
        # naive recursion would need thousands of frames here
        assert ack(2, 5000, Budget(10**6)) == 10003

    def test_rejects_negatives(self):
        with pytest.raises(ValueError):
            ack(-1, 0, BIG)


class TestAckPrime:
    def test_examples(self):
        assert ack_prime(0, BIG) == cantor_pair(1, 1) == 4
        # 2 = <0, 1>, A(0, 1) = 2
        assert ack_prime(2, BIG) == cantor_pair(2, 2) == 12

    def test_out_of_reach(self):
        # 21 = <6, 0>
        assert cantor_unpair(21) == (6, 0)
        with pytest.raises(BudgetExhausted):
            ack_prime(21, Budget(10**4))


class TestPairing:
    def test_examples(self):
        assert cantor_pair(0, 0) == 0
        assert cantor_pair(1, 0) == 1
        assert cantor_pair(0, 1) == 2
        assert cantor_pair(2, 2) == 12

    def test_bijection_on_an_initial_segment(self):
        assert sorted(cantor_pair(m, n) for m in range(50) for n in range(50 - m)) == list(range(1275))

    @given(st.integers(0, 10**40))
    def test_unpair_then_pair(self, x):
        assert cantor_pair(*cantor_unpair(x)) == x

    @given(st.integers(0, 10**20), st.integers(0, 10**20))
    def test_pair_then_unpair(self, m, n):
        assert cantor_unpair(cantor_pair(m, n)) == (m, n)

    @given(st.integers(0, 10**6), st.integers(0, 10**6))
    def test_dominates_components(self, m, n):
        assert cantor_pair(m, n) >= max(m, n)

    def test_rejects_negatives(self):
        with pytest.raises(ValueError):
            cantor_pair(-1, 0)
        with pytest.raises(ValueError):
            cantor_unpair(-1)


class TestCodes:
    def test_set_code_examples(self):
        assert set_code([]) == 0
        assert set_code({0, 2}) == 5
        assert set_code([3]) == 8

    @given(st.frozensets(st.integers(0, 200)))
    def test_set_round_trip_and_membership_bound(self, xs):
        code = set_code(xs)
        assert set_decode(code) == xs
        assert all(y <= code for y in xs)

    @given(st.lists(st.integers(0, 30), max_size=6))
    def test_seq_round_trip(self, seq):
        assert seq_decode(seq_code(seq)) == tuple(seq)

    def test_seq_decode_rejects_non_sequences(self):
        # {<0,0>, <0,1>}: position 0 twice
        assert seq_decode(set_code([cantor_pair(0, 0), cantor_pair(0, 1)])) is None
        # only position 1
        assert seq_decode(set_code([cantor_pair(1, 0)])) is None

    def test_stage_code(self):
        assert stage_code([()]) == 1
        assert stage_code([(0,), (1,)]) == 18
        assert stage_code([]) == 0


class TestSparseNat:
    @given(st.integers(0, 2**300), st.integers(0, 2**300))
    def test_orders_like_the_integer(self, a, b):
        x, y = SparseNat.of_int(a), SparseNat.of_int(b)
        assert (x < y) == (a < b)
        assert (x == y) == (a == b)
        assert (x < b) == (a < b)
        assert (x == b) == (a == b)
        assert x.to_int() == a
        assert hash(x) == hash(a)

    def test_huge_values_stay_symbolic(self):
        x = SparseNat([10**9, 5])
        assert x > 2**4000
        assert x.bit_length() == 10**9 + 1
        with pytest.raises(OverflowError):
            x.to_int()
        assert str(x) == f"2^{10**9} + 2^5"

    def test_negative_ints_are_smaller(self):
        assert SparseNat() > -1
