import pytest
from hypothesis import given
from hypothesis import strategies as st

from bmestar.ackermann import cantor_pair
from bmestar.budget import Budget, BudgetExhausted
from bmestar.hierarchy import fgh_eval
from bmestar.iteration import (BUILTINS, ApproxSeq, Fails, FnSpec, Holds, Inconclusive, build_approx,
                               builtin, check_approx, iterate_fn, partial)
from bmestar.ordinals import Ordinal

B = Budget(10**6)
succ, dbl = builtin("successor"), builtin("doubling")


class TestCheck:
    def test_holds(self):
        assert check_approx(dbl, [1, 2, 4, 8], B) == Holds()

    def test_fails_with_witness(self):
        assert check_approx(dbl, [1, 2, 3], B) == Fails(1, 2, 4)

    def test_padding_keeps_it_holding(self):
        assert check_approx(dbl, [1, 5, 100], B) == Holds()

    def test_partial_functions_skip_undefined_points(self):
        evens = partial("half", lambda x: x // 2 if x % 2 == 0 else None)
        assert check_approx(evens, [3, 1], B) == Holds()
        assert check_approx(evens, [4, 1], B) == Fails(0, 4, 2)

    def test_inconclusive_then_counterexample(self):
        def f(x, budget):
            if x == 0:
                raise BudgetExhausted(0, "x=0")
            return 100
        spec = FnSpec("odd", f)
        assert isinstance(check_approx(spec, [1, 5], B), Fails)
        assert isinstance(check_approx(spec, [0, 5], B), Inconclusive)

    def test_short_sequences_hold(self):
        assert check_approx(dbl, [7], B) == Holds()
        assert check_approx(dbl, [], B) == Holds()


class TestBuild:
    def test_doubling(self):
        assert build_approx(dbl, 4, 1, B).entries == (1, 2, 4, 8)

    def test_empty_max_is_zero(self):
        nowhere = partial("nowhere", lambda x: None)
        assert build_approx(nowhere, 3, 5, B).entries == (5, 0, 0)

    def test_ack_prime_prefix(self):
        s = build_approx(builtin("ack-prime"), 3, 0, B)
        assert s.entries == (0, cantor_pair(1, 1), 24)

    def test_ack_prime_runs_out(self):
        # the third entry needs A' up to 24; 15 = <5, 0> and A(5, 0) = 65533
        out = build_approx(builtin("ack-prime"), 4, 0, Budget(10**4))
        assert isinstance(out, Inconclusive)
        assert (out.i, out.x) == (2, 15)
        assert out.exhausted.steps_used == 10**4

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            build_approx(dbl, 0, 1, B)
        with pytest.raises(ValueError):
            build_approx(dbl, 2, -1, B)

    @given(st.sampled_from(["successor", "doubling", "ackermann:0", "ackermann:1", "fgh:0", "fgh:1"]),
           st.integers(1, 8), st.integers(0, 3))
    def test_round_trip(self, name, z, seed):
        f = builtin(name)
        s = build_approx(f, z, seed, B)
        assert isinstance(s, ApproxSeq) and len(s) == z
        assert check_approx(f, s.entries, B) == Holds()

    @given(st.sampled_from(["successor", "doubling", "ackermann:1", "ackermann:2"]),
           st.integers(2, 6), st.integers(0, 3))
    def test_monotone_entries_for_inflationary_functions(self, name, z, seed):
        s = build_approx(builtin(name), z, seed, B).entries
        assert all(a <= b for a, b in zip(s[1:], s[2:]))
        assert s[1] >= seed

    @given(st.integers(1, 6), st.integers(0, 3))
    def test_least_approximation(self, z, seed):
        """Lowering any later entry breaks the condition."""
        s = list(build_approx(dbl, z, seed, B).entries)
        for i in range(1, z):
            if s[i] > 0:
                lower = s[:i] + [s[i] - 1] + s[i + 1:]
                assert isinstance(check_approx(dbl, lower, B), Fails)


class TestIterate:
    def test_examples(self):
        assert iterate_fn(succ, 5, 0, B) == 5
        assert iterate_fn(dbl, 0, 42, B) == 42
        assert iterate_fn(dbl, 3, 3, B) == 24

    def test_undefined_propagates(self):
        f = partial("drop", lambda x: x - 1 if x > 0 else None)
        assert iterate_fn(f, 5, 3, B) is None
        assert iterate_fn(f, 3, 3, B) == 0

    def test_exhaustion_propagates(self):
        with pytest.raises(BudgetExhausted):
            iterate_fn(builtin("ackermann:3"), 2, 5, Budget(100))

    @pytest.mark.parametrize("beta", [0, 1])
    @pytest.mark.parametrize("n", range(5))
    def test_agrees_with_the_hierarchy(self, beta, n):
        f = builtin(f"fgh:{beta}")
        assert iterate_fn(f, n, n, B) == fgh_eval(Ordinal.from_int(beta + 1), n, B)


class TestRegistry:
    def test_names(self):
        assert set(BUILTINS) == {"successor", "doubling", "ackermann", "ack-prime", "fgh"}

    def test_parameters(self):
        assert builtin("ackermann:2")(3, B) == 9
        assert builtin("fgh:w")(2, B) == 8
        assert builtin("fgh:w + 1").name == "fgh:w + 1"

    @pytest.mark.parametrize("bad", ["nope", "ackermann", "fgh", "doubling:3"])
    def test_bad_names(self, bad):
        with pytest.raises((KeyError, ValueError)):
            builtin(bad)
