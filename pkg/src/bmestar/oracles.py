"""Slow, direct reference implementations used to cross-check the fast paths."""

from __future__ import annotations

import sys
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .enumeration import Condition, Seq, Violation, canonical, seq_key


def naive_ack(m: int, n: int) -> int:
    """Plain recursion on the three defining cases; small arguments only."""
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20_000))
    try:
        return _naive_ack(m, n)
    finally:
        sys.setrecursionlimit(limit)


def _naive_ack(m: int, n: int) -> int:
    if m == 0:
        return n + 1
    if n == 0:
        return _naive_ack(m - 1, 1)
    return _naive_ack(m - 1, _naive_ack(m, n - 1))


def f1_closed(n: int) -> int:
    return 2 * n


def f2_closed(n: int) -> int:
    return n << n


def unfold_finite_level(level: int, n: int) -> int:
    """f_level(n) by literal nested iteration, for level <= 2 or tiny n."""
    if level == 0:
        return n + 1
    x = n
    for _ in range(n):
        x = unfold_finite_level(level - 1, x)
    return x


def _is_proper_prefix(p: Seq, t: Seq) -> bool:
    return len(p) < len(t) and t[:len(p)] == p


def brute_validate(stages: Sequence[Tuple[int, Iterable[Seq]]]) -> Optional[Violation]:
    """Check the monotone-enumeration conditions by scanning every pair.

    Uses the same reporting order as :func:`bmestar.enumeration.validate`:
    stages in order, sequences shortest-then-lexicographic, C3a before C3b.
    """
    if not stages:
        return Violation(Condition.C1, 0, ())
    first_index, first = stages[0]
    if () not in first:
        return Violation(Condition.C1, first_index, ())
    before: List[Tuple[Seq, int]] = [(tuple(s), first_index) for s in first]
    for index, new in stages[1:]:
        new = canonical(map(tuple, new))
        for tau in new:
            n = len(tau)
            tau0 = max((s for s, _ in before if len(s) < n and tau[:len(s)] == s), key=len)
            k = len(tau0)
            extensions = [(s, i) for s, i in before if len(s) > k and s[:k] == tau0]
            if extensions:
                s, i = min(extensions, key=lambda p: (p[1], seq_key(p[0])))
                return Violation(Condition.C3A, index, tau, tau0, s, i)
            for sigma in new:
                if sigma[:k] != tau0:
                    return Violation(Condition.C3B, index, tau, tau0, sigma, index)
        before.extend((s, index) for s in new)
    return None


@lru_cache(maxsize=None)
def _chain(stage_of_items: frozenset, tau: Seq) -> int:
    stage_of = dict(stage_of_items)
    s = stage_of[tau]
    if not tau:
        return 1
    prior = [p for p in stage_of if _is_proper_prefix(p, tau) and stage_of[p] < s]
    return 1 + _chain(stage_of_items, max(prior, key=len))


def brute_chain_length(stage_of: dict, tau: Seq) -> int:
    return _chain(frozenset(stage_of.items()), tuple(tau))
