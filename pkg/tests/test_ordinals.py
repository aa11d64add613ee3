import pytest
from hypothesis import given
from hypothesis import strategies as st

from bmestar.ordinals import (OMEGA, ONE, ZERO, Kind, Ordinal, OrdinalSyntaxError, classify,
                              compare, fundamental_sequence, parse_ordinal, pred)
from strategies import limit_ordinals, ordinals

w = OMEGA


def p(text):
    return parse_ordinal(text)


class TestParse:
    def test_zero(self):
        assert p("0") == ZERO
        assert p("0").terms == ()

    def test_single_power(self):
        assert p("w^2").terms == ((Ordinal.from_int(2), 1),)

    def test_three_terms(self):
        a = p("w^w + w*2 + 3")
        assert a.terms == ((w, 1), (ONE, 2), (ZERO, 3))

    def test_absorbs_smaller_terms_on_the_left(self):
        assert p("3 + w") == w
        assert p("w + w^2") == p("w^2")
        assert p("w*2 + w") == p("w*3")
        assert p("w + 1 + w") == p("w*2")

    def test_parenthesized_exponents(self):
        assert p("w^(w + 1)") == Ordinal.omega_power(w + 1)
        assert p("w^w^2") == Ordinal.omega_power(Ordinal.omega_power(Ordinal.from_int(2)))

    def test_whitespace_is_ignored(self):
        assert p("  w ^ 2 *3+ 1 ") == p("w^2*3 + 1")

    @pytest.mark.parametrize("text, pos", [
        ("", 0), ("w^", 2), ("w*0", 2), ("w +", 3), ("w^(1", 4), ("x", 0), ("w w", 2),
    ])
    def test_syntax_errors_carry_a_position(self, text, pos):
        with pytest.raises(OrdinalSyntaxError) as info:
            p(text)
        assert info.value.pos == pos

    @given(ordinals())
    def test_printing_round_trips(self, a):
        assert p(str(a)) == a


class TestCompare:
    def test_examples(self):
        assert compare(w, Ordinal.from_int(5)) == 1
        assert compare(p("w*2 + 1"), p("w*2 + 1")) == 0
        assert compare(p("w^2"), p("w*9")) == 1

    def test_mixed_with_ints(self):
        assert w > 10**100
        assert Ordinal.from_int(3) == 3
        assert hash(Ordinal.from_int(3)) == hash(3)

    @given(ordinals(), ordinals())
    def test_antisymmetric(self, a, b):
        assert compare(a, b) == -compare(b, a)
        assert (compare(a, b) == 0) == (a == b)

    @given(ordinals(), ordinals(), ordinals())
    def test_transitive(self, a, b, c):
        a, b, c = sorted([a, b, c])
        assert compare(a, b) <= 0 and compare(b, c) <= 0 and compare(a, c) <= 0

    @given(ordinals(), ordinals())
    def test_addition_is_monotone_on_the_right(self, a, b):
        assert a + b >= b
        assert a + b >= a
        if not b.is_zero:
            assert a + b > a


class TestClassify:
    def test_examples(self):
        assert classify(ZERO) is Kind.ZERO
        assert classify(p("w + 3")) is Kind.SUCCESSOR
        assert classify(p("w^2")) is Kind.LIMIT

    @given(ordinals())
    def test_successor_of_anything(self, a):
        assert classify(a + 1) is Kind.SUCCESSOR
        assert pred(a + 1) == a


class TestPred:
    def test_examples(self):
        assert pred(p("w + 3")) == p("w + 2")
        assert pred(ONE) == ZERO
        assert pred(p("w^2 + w + 1")) == p("w^2 + w")

    @pytest.mark.parametrize("a", ["0", "w", "w^2*3"])
    def test_rejects_non_successors(self, a):
        with pytest.raises(ValueError):
            pred(p(a))


class TestFundamentalSequence:
    def test_examples(self):
        assert fundamental_sequence(w, 4) == 4
        assert fundamental_sequence(p("w^2"), 3) == p("w*3")
        assert fundamental_sequence(p("w^w"), 2) == p("w^2")

    def test_zero_index_of_successor_exponent(self):
        assert fundamental_sequence(p("w*2"), 0) == w
        assert fundamental_sequence(w, 0) == ZERO

    @pytest.mark.parametrize("a", ["0", "5", "w + 1"])
    def test_rejects_non_limits(self, a):
        with pytest.raises(ValueError):
            fundamental_sequence(p(a), 1)

    @given(limit_ordinals(), st.integers(0, 6))
    def test_below_the_limit(self, lam, n):
        assert fundamental_sequence(lam, n) < lam

    @given(limit_ordinals(), st.integers(1, 6))
    def test_strictly_increasing(self, lam, n):
        assert fundamental_sequence(lam, n) < fundamental_sequence(lam, n + 1)


class TestNormalForm:
    def test_rejects_increasing_exponents(self):
        with pytest.raises(ValueError):
            Ordinal([(ZERO, 1), (ONE, 1)])

    def test_rejects_zero_coefficients(self):
        with pytest.raises(ValueError):
            Ordinal([(ONE, 0)])

    @given(ordinals())
    def test_exponents_strictly_decrease(self, a):
        exps = [e for e, _ in a.terms]
        assert all(x > y for x, y in zip(exps, exps[1:]))
        assert all(c > 0 for _, c in a.terms)
