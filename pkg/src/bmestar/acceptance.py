"""The acceptance corpus: one check per criterion, each with its time limit.

Each check returns a :class:`CriterionResult`; a check passes only when
its condition holds *and* it finished inside its limit.  Nothing here is
relaxed to make a check pass: where a condition cannot be met the result
says why.
"""

from __future__ import annotations

import gc
import itertools
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional

from .ack_enum import FuelSchedule, build_ack_enumeration, decode_node
from .ackermann import ack, cantor_pair, cantor_unpair, seq_code
from .budget import Budget, BudgetExhausted
from .enumeration import (Enumeration, Finite, chain_lengths, bme_bound, check_finite,
                          fmt_seq, is_bounded, validate)
from .generators import random_valid
from .hierarchy import fgh_eval
from .iteration import ApproxSeq, FnSpec, Holds, Inconclusive, build_approx, builtin, check_approx
from .ordinals import OMEGA, Ordinal
from .oracles import brute_validate, f1_closed, f2_closed, naive_ack, unfold_finite_level


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    seconds: float
    limit: float
    detail: str

    @property
    def passed(self) -> bool:
        return self.ok and self.seconds < self.limit

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        timing = f"{self.seconds:.2f}s/<{self.limit:g}s"
        return f"[{verdict}] {self.number}. {self.title} ({timing}): {self.detail}"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "condition_held": self.ok,
            "seconds": round(self.seconds, 3),
            "limit": self.limit,
            "detail": self.detail,
        }


def _timed(number: int, title: str, limit: float, body: Callable[[], tuple]) -> CriterionResult:
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    start = time.perf_counter()
    try:
        ok, detail = body()
    finally:
        elapsed = time.perf_counter() - start
        if enabled:
            gc.enable()
    return CriterionResult(number, title, ok, elapsed, limit, detail)


def ackermann_exactness() -> CriterionResult:
    def body():
        wrong = [(m, n) for m in range(4) for n in range(6)
                 if ack(m, n, Budget(100_000)) != naive_ack(m, n)]
        a33 = ack(3, 3, Budget(100_000))
        ok = not wrong and a33 == 61
        return ok, f"24 pairs, mismatches={wrong or 'none'}, A(3,3)={a33}"
    return _timed(1, "Ackermann exactness", 1.0, body)


def _f_n_at_n(n: int) -> int:
    """f_n(n) by unfolding finite levels, bottoming out in closed forms."""
    if n <= 2:
        return unfold_finite_level(n, n)
    x = n
    for _ in range(n):
        x = _f_n_at_n_below(n - 1, x)
    return x


def _f_n_at_n_below(level: int, x: int) -> int:
    if level == 2:
        return f2_closed(x)
    if level == 1:
        return f1_closed(x)
    for _ in range(x):
        x = _f_n_at_n_below(level - 1, x)
    return x


def hierarchy_closed_forms() -> CriterionResult:
    def body():
        wrong = []
        for n in range(11):
            if fgh_eval(Ordinal.from_int(1), n, Budget(10_000), accelerate=False) != f1_closed(n):
                wrong.append(("f_1", n))
            if fgh_eval(Ordinal.from_int(2), n, Budget(100_000), accelerate=False) != f2_closed(n):
                wrong.append(("f_2", n))
        for n in range(4):
            value = fgh_eval(OMEGA, n, Budget.unlimited())
            if value != _f_n_at_n(n):
                wrong.append(("f_w", n))
        bits = value.bit_length()
        return not wrong, f"n<=10 for f_1, f_2 and n<=3 for f_w; mismatches={wrong or 'none'}; f_w(3) has {bits} bits"
    return _timed(2, "Hierarchy closed forms", 1.0, body)


def exhaustive_universe(max_len: int = 3, max_entry: int = 2, max_new: int = 2):
    seqs = [()]
    for length in range(1, max_len + 1):
        seqs += list(itertools.product(range(max_entry + 1), repeat=length))
    options = [frozenset()]
    for k in range(1, max_new + 1):
        options += [frozenset(c) for c in itertools.combinations(seqs, k)]
    return options


def validator_exhaustive(max_stages: int = 3) -> CriterionResult:
    """Every enumeration with stages 0, 1, ..., at most ``max_stages`` of them.

    Once a prefix is invalid its first violation is fixed, so its
    extensions are not generated; :func:`pruning_is_sound` spot-checks that.
    """
    options = exhaustive_universe()

    def body():
        count = mismatches = 0
        first: Optional[str] = None

        def grow(prefix, used):
            nonlocal count, mismatches, first
            k = len(prefix)
            for new in options:
                if not used.isdisjoint(new):
                    continue
                stages = prefix + [(k, new)]
                ours = validate(Enumeration(stages))
                count += 1
                if ours != brute_validate(stages):
                    mismatches += 1
                    first = first or str(stages)
                if ours is None and k + 1 < max_stages:
                    grow(stages, used | new)

        grow([], frozenset())
        detail = f"{count} enumerations, {mismatches} disagreements"
        if first:
            detail += f"; first {first}"
        return mismatches == 0, detail
    return _timed(3, "Validator vs brute force, exhaustive", 30.0, body)


def pruning_is_sound(samples: int = 2000, seed: int = 0) -> int:
    """Extend random invalid 2-stage prefixes and count verdict changes."""
    rng = random.Random(seed)
    options = exhaustive_universe()
    changed = 0
    found = 0
    while found < samples:
        a, b, c = (rng.choice(options) for _ in range(3))
        if (a & b) or (a & c) or (b & c):
            continue
        prefix = [(0, a), (1, b)]
        v = validate(Enumeration(prefix))
        if v is None:
            continue
        found += 1
        if validate(Enumeration(prefix + [(2, c)])) != v:
            changed += 1
    return changed


def bounding_replay(count: int = 500, seed: int = 2024) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        violations = []
        for i in range(count):
            e = random_valid(rng)
            b = max(chain_lengths(e).values())
            bound = bme_bound(e, b)
            for s in e.stage_of:
                if not seq_code(s) <= bound:
                    violations.append((i, fmt_seq(s)))
        return not violations, f"{count} enumerations (b = longest chain), violations={violations[:3] or 'none'}"
    return _timed(4, "Bounding theorem replay", 30.0, body)


ACK_ENUM_CASES = [(m, n) for m in (1, 2) for n in (1, 2, 3)]


def ack_enumeration_replay() -> CriterionResult:
    def body():
        problems = []
        longest = {}
        for m, n in ACK_ENUM_CASES:
            ae = build_ack_enumeration(m, n, FuelSchedule(Budget(1_000_000), 100_000))
            tag = f"(m,n)=({m},{n})"
            if validate(ae.enumeration) is not None:
                problems.append(f"{tag} invalid")
            if not ae.complete:
                problems.append(f"{tag} incomplete")
            longest[(m, n)] = max(chain_lengths(ae.enumeration).values())
            if not is_bounded(ae.enumeration, m + 1):
                problems.append(f"{tag} longest chain {longest[(m, n)]} > {m + 1}")
            result = check_finite(ae.stream(), 10_000)
            if not isinstance(result, Finite):
                problems.append(f"{tag} not finite within 10000 stages")
            for tau, value in ae.realized.items():
                meaning = decode_node(tau, m)
                if value != naive_ack(meaning.i, meaning.j):
                    problems.append(f"{tag} {fmt_seq(tau)} -> {value}")
        chains = ", ".join(f"({m},{n}):{c}" for (m, n), c in longest.items())
        return not problems, f"longest chains {chains}; problems={problems or 'none'}"
    return _timed(5, "Ackermann enumeration replay", 10.0, body)


def ack_prime_bound(z: int = 5, budget: Budget = Budget(1_000_000)) -> CriterionResult:
    def body():
        built = build_approx(builtin("ack-prime"), z, 0, budget)
        if isinstance(built, Inconclusive):
            reached = build_approx(builtin("ack-prime"), built.i + 1, 0, budget)
            short = [f"(s)_{j}={reached[j]}<{cantor_pair(j + 1, j + 1)}"
                     for j in range(1, len(reached)) if reached[j] < cantor_pair(j + 1, j + 1)]
            return False, (f"built only {reached.entries}: step {built.i} needs x={built.x}, "
                           f"i.e. A{cantor_unpair(built.x)}, out of reach; "
                           f"shortfalls already: {', '.join(short) or 'none'}")
        short = [(j, built[j], cantor_pair(j + 1, j + 1)) for j in range(1, z)
                 if built[j] < cantor_pair(j + 1, j + 1)]
        text = ", ".join(f"(s)_{j}={v}<{w}" for j, v, w in short)
        return not short, f"s={built.entries}; shortfalls: {text or 'none'}"
    return _timed(6, "A' approximation bound", 5.0, body)


APPROX_CORPUS = [
    ("successor", 0), ("successor", 1),
    ("doubling", 0), ("doubling", 1),
    ("ackermann:0", 0), ("ackermann:0", 1),
    ("ackermann:1", 0), ("ackermann:1", 1),
    ("ackermann:2", 0),
    ("fgh:0", 0), ("fgh:0", 1),
    ("fgh:1", 0), ("fgh:1", 1),
    ("fgh:2", 0),
    ("ack-prime", 0),
]


def _cached(f: FnSpec) -> FnSpec:
    """Memoize a deterministic FnSpec for one fixed budget."""
    @lru_cache(maxsize=None)
    def outcome(x):
        try:
            return f(x, budget_ref[0]), None
        except BudgetExhausted as exc:
            return None, exc

    budget_ref: List[Budget] = [None]

    def fn(x, budget):
        budget_ref[0] = budget
        value, exc = outcome(x)
        if exc is not None:
            raise exc
        return value
    return FnSpec(f.name, fn, f.description, f.total)


def approx_round_trip(max_z: int = 8, budget: Budget = Budget(1_000_000)) -> CriterionResult:
    def body():
        failures = []
        for name, seed in APPROX_CORPUS:
            f = _cached(builtin(name))
            for z in range(1, max_z + 1):
                built = build_approx(f, z, seed, budget)
                if not isinstance(built, ApproxSeq):
                    failures.append(f"{name} seed {seed} z={z}: build inconclusive at x={built.x}")
                    break
                verdict = check_approx(f, built.entries, budget)
                if not isinstance(verdict, Holds):
                    failures.append(f"{name} seed {seed} z={z}: {verdict}")
                    break
        return not failures, f"{len(APPROX_CORPUS)} (function, seed) pairs; failures: {failures or 'none'}"
    return _timed(7, "Approximation round trip", 5.0, body)


def pairing_bijection(limit: int = 10_000) -> CriterionResult:
    def body():
        bad = [x for x in range(limit) if cantor_pair(*cantor_unpair(x)) != x]
        side = int(limit ** 0.5)
        bad += [(m, n) for m in range(side) for n in range(side)
                if cantor_unpair(cantor_pair(m, n)) != (m, n)]
        zero = cantor_pair(0, 0)
        return not bad and zero == 0, f"x<{limit} and m,n<{side}; mismatches={bad[:3] or 'none'}; <0,0>={zero}"
    return _timed(8, "Pairing bijection", 1.0, body)


CRITERIA: List[Callable[[], CriterionResult]] = [
    ackermann_exactness,
    hierarchy_closed_forms,
    validator_exhaustive,
    bounding_replay,
    ack_enumeration_replay,
    ack_prime_bound,
    approx_round_trip,
    pairing_bijection,
]


def run_all(only: Optional[List[int]] = None) -> List[CriterionResult]:
    return [check() for i, check in enumerate(CRITERIA, 1) if only is None or i in only]
