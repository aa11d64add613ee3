"""Ackermann-Peter function, Cantor pairing and the finite-set coding."""

from __future__ import annotations

from functools import total_ordering
from math import isqrt
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .budget import Budget, BudgetExhausted


def cantor_pair(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("pairing is defined on naturals")
    s = m + n
    return s * (s + 1) // 2 + n


def cantor_unpair(x: int) -> Tuple[int, int]:
    if x < 0:
        raise ValueError("pairing is defined on naturals")
    w = (isqrt(8 * x + 1) - 1) // 2
    n = x - w * (w + 1) // 2
    return w - n, n


class AckMemo:
    """Memo table for one evaluation session.

    Entries are only ever added, and each one was produced by a rule of the
    recursion from entries already present.
    """

    def __init__(self):
        self.table: Dict[Tuple[int, int], int] = {}
        self.steps_used = 0

    def __contains__(self, key) -> bool:
        return key in self.table

    def __getitem__(self, key) -> int:
        return self.table[key]

    def __len__(self) -> int:
        return len(self.table)

    def check(self) -> Optional[Tuple[int, int]]:
        """Return the first entry not justified by the recursion, or None."""
        t = self.table
        for (m, n), v in t.items():
            if m == 0:
                ok = v == n + 1
            elif n == 0:
                ok = t.get((m - 1, 1)) == v
            else:
                inner = t.get((m, n - 1))
                ok = inner is not None and t.get((m - 1, inner)) == v
            if not ok:
                return m, n
        return None


def ack(m: int, n: int, budget: Budget, memo: Optional[AckMemo] = None) -> int:
    """A(m, n) by an explicit goal stack.

    One budget step is charged per memo entry created.  On exhaustion
    :class:`BudgetExhausted` is raised and the partial table stays in
    ``memo`` (pass one in to inspect it).
    """
    if m < 0 or n < 0:
        raise ValueError("A is defined on naturals")
    memo = AckMemo() if memo is None else memo
    t = memo.table
    limit = budget.max_steps
    cap = budget.max_value_bits
    used = 0
    stack = [(m, n)]
    while stack:
        goal = stack[-1]
        if goal in t:
            stack.pop()
            continue
        i, j = goal
        if i == 0:
            value = j + 1
        elif j == 0:
            value = t.get((i - 1, 1))
            if value is None:
                stack.append((i - 1, 1))
                continue
        else:
            inner = t.get((i, j - 1))
            if inner is None:
                stack.append((i, j - 1))
                continue
            value = t.get((i - 1, inner))
            if value is None:
                stack.append((i - 1, inner))
                continue
        if limit is not None and used >= limit:
            raise BudgetExhausted(used, goal)
        if cap is not None and value.bit_length() > cap:
            raise BudgetExhausted(used, goal, "value")
        used += 1
        memo.steps_used += 1
        t[goal] = value
        stack.pop()
    return t[(m, n)]


def ack_prime(x: int, budget: Budget, memo: Optional[AckMemo] = None) -> int:
    """``<A(a, b), A(a, b)>`` where ``(a, b)`` unpairs ``x``."""
    a, b = cantor_unpair(x)
    v = ack(a, b, budget, memo)
    return cantor_pair(v, v)


def set_code(xs: Iterable[int]) -> int:
    """Code a finite set of naturals by its characteristic bit string."""
    code = 0
    for y in set(xs):
        if y < 0:
            raise ValueError("set_code takes naturals")
        code |= 1 << y
    return code


def set_decode(code: int) -> frozenset:
    if code < 0:
        raise ValueError("codes are naturals")
    return frozenset(i for i, bit in enumerate(reversed(bin(code)[2:])) if bit == "1")


def seq_code(seq: Sequence[int]) -> int:
    """Code a finite sequence as the set of its paired (position, entry)."""
    return set_code(cantor_pair(i, v) for i, v in enumerate(seq))


def seq_decode(code: int) -> Optional[Tuple[int, ...]]:
    """Inverse of :func:`seq_code`; None if ``code`` codes no sequence."""
    entries: Dict[int, int] = {}
    for p in set_decode(code):
        i, v = cantor_unpair(p)
        if i in entries:
            return None
        entries[i] = v
    if sorted(entries) != list(range(len(entries))):
        return None
    return tuple(entries[i] for i in range(len(entries)))


@total_ordering
class SparseNat:
    """A natural number kept as the set of positions of its one bits.

    Set codes of sequence codes are doubly exponential and can't be
    materialized, but they can still be compared: ``sum(2^y for y in S)``
    orders like the descending list of ``S``.
    """

    __slots__ = ("bits", "_desc")

    def __init__(self, bits: Iterable[int] = ()):
        self.bits = frozenset(bits)
        self._desc = sorted(self.bits, reverse=True)

    @classmethod
    def of_int(cls, x: int) -> "SparseNat":
        return cls(set_decode(x))

    @property
    def top(self) -> int:
        return self._desc[0] if self._desc else -1

    def bit_length(self) -> int:
        return self.top + 1

    def to_int(self, max_bits: Optional[int] = 1 << 24) -> int:
        if max_bits is not None and self.bit_length() > max_bits:
            raise OverflowError(f"value has {self.bit_length()} bits")
        return set_code(self.bits)

    __int__ = to_int

    def _cmp(self, other) -> int:
        if isinstance(other, int):
            if other < 0:
                return 1
            top, width = self.top, other.bit_length()
            if top >= width:
                return 1
            if top < width - 1:
                return -1
            other = SparseNat.of_int(other)
        if not isinstance(other, SparseNat):
            return NotImplemented
        a, b = self._desc, other._desc
        return (a > b) - (a < b)

    def __eq__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __hash__(self):
        if self.bit_length() <= 4096:
            return hash(self.to_int())
        return hash(self.bits)

    def __repr__(self):
        if self.bit_length() <= 64:
            return f"SparseNat({self.to_int()})"
        return f"SparseNat(2^{self.top} + ...)"

    def __str__(self):
        if self.bit_length() <= 4096:
            return str(self.to_int())
        return " + ".join(f"2^{y}" for y in self._desc)


def stage_code(seqs: Iterable[Sequence[int]]) -> SparseNat:
    """Code of a finite set of sequences, kept symbolic."""
    return SparseNat(seq_code(s) for s in seqs)
