"""The monotone enumeration whose finiteness yields A(m, n).

A nonempty sequence ``tau`` of length ``k`` stands for ``A(m + 1 - k, tau[-1])``.
Stage 0 enumerates ``<>``; stage 1 enumerates ``<0>, ..., <n-1>`` (the values
``A(m, j)`` for ``j < n``) and the spine ``<n,1>, <n,0,1>, ...`` (``A(m-1, 1)``
downwards).  After that, whenever ``A(i, j)`` (with ``i >= 1``) represented
by ``tau`` is found to be defined, ``tau*<0>, ..., tau*<A(i, j)>`` are
enumerated.  Each realization gets its own stage, stamped
``cantor_pair(stage of tau, realization counter)`` so that every stage only
extends a single node.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .ackermann import AckMemo, ack, cantor_pair
from .budget import Budget, BudgetExhausted
from .enumeration import Enumeration, EnumTree, Seq, fmt_seq

FIRST_WORKING_STAGE = 1


@dataclass(frozen=True)
class AckNodeMeaning:
    i: int
    j: int

    def __str__(self):
        return f"A({self.i},{self.j})"


class NotARepresentation(ValueError):
    pass


@dataclass(frozen=True)
class FuelSchedule:
    per_query_budget: Budget = field(default_factory=lambda: Budget(1_000_000))
    max_realizations: int = 10_000

    def __post_init__(self):
        if self.max_realizations < 0:
            raise ValueError("max_realizations must be a natural number")


def decode_node(tau: Seq, m: int) -> AckNodeMeaning:
    k = len(tau)
    if k == 0 or k > m + 1:
        raise NotARepresentation(f"{fmt_seq(tau)} does not represent a value for m={m}")
    return AckNodeMeaning(m + 1 - k, tau[-1])


def spine(m: int, n: int) -> List[Seq]:
    """``<n,1>, <n,0,1>, ..., <n,0,...,0,1>`` with at most ``m-2`` zeros
    (just ``<n,1>`` when ``m <= 2``)."""
    return [(n,) + (0,) * d + (1,) for d in range(max(1, m - 1))]


@dataclass
class AckEnumeration:
    m: int
    n: int
    enumeration: Enumeration
    realized: Dict[Seq, int]
    unrealized: List[Seq]

    @property
    def complete(self) -> bool:
        """True when every representation was realized (none left for lack of fuel)."""
        return not self.unrealized

    def tree(self) -> EnumTree:
        return EnumTree(self.enumeration.stage_of)

    def stream(self) -> Iterator[Tuple[int, frozenset]]:
        for st in self.enumeration.stages:
            yield st.index, st.new

    def to_dot(self) -> str:
        stage_of = self.enumeration.stage_of

        def label(tau: Seq) -> str:
            if not tau:
                return "<>"
            return str(decode_node(tau, self.m))

        def edge_style(tau: Seq) -> str:
            s = stage_of.get(tau)
            if s is None or s == FIRST_WORKING_STAGE:
                return "solid"
            return "dashed"

        return self.tree().to_dot(self.enumeration, label=label, edge_style=edge_style)


def build_ack_enumeration(m: int, n: int, fuel: Optional[FuelSchedule] = None) -> AckEnumeration:
    """Build the enumeration, realizing pending nodes in FIFO order.

    A node whose value the per-query budget can't resolve is left
    unrealized; so is everything still pending once ``max_realizations``
    realizations have happened.
    """
    if m < 1 or n < 1:
        raise ValueError("the construction needs m >= 1 and n >= 1")
    fuel = fuel or FuelSchedule()
    stages: Dict[int, frozenset] = {0: frozenset({()})}
    first = [(j,) for j in range(n)] + spine(m, n)
    stages[FIRST_WORKING_STAGE] = frozenset(first)

    pending = deque((tau, FIRST_WORKING_STAGE) for tau in first if len(tau) <= m)
    memo = AckMemo()
    realized: Dict[Seq, int] = {}
    unrealized: List[Seq] = []
    clock = FIRST_WORKING_STAGE + 1
    while pending:
        if len(realized) >= fuel.max_realizations:
            unrealized.extend(tau for tau, _ in pending)
            break
        tau, own_stage = pending.popleft()
        meaning = decode_node(tau, m)
        try:
            value = ack(meaning.i, meaning.j, fuel.per_query_budget, memo)
        except BudgetExhausted:
            unrealized.append(tau)
            continue
        realized[tau] = value
        stamp = cantor_pair(own_stage, clock)
        clock += 1
        children = [tau + (c,) for c in range(value + 1)]
        stages[stamp] = frozenset(children)
        if len(tau) + 1 <= m:
            pending.extend((child, stamp) for child in children)

    enumeration = Enumeration(sorted(stages.items()))
    return AckEnumeration(m, n, enumeration, realized, unrealized)
