"""Fast-growing hierarchy evaluator.

    f_0(n)       = n + 1
    f_{b+1}(n)   = f_b^n(n)
    f_lam(n)     = f_{lam[n]}(n)

Evaluation runs on an explicit stack of ``[index, remaining]`` frames, each
meaning "apply f_index to the current value ``remaining`` more times".
Every rule application costs one budget step.

With ``accelerate=True`` runs of f_0 and f_1 applications are collapsed into
closed forms (``f_0^k(v) = v + k``; ``f_1^k(v) = 2^k v`` at a cost of
``k + v(2^k - 1)`` steps).  The value, the step count and the point of
exhaustion are the same as unit stepping; only the wall-clock time differs.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from .budget import Budget, BudgetExhausted
from .ordinals import ONE, ZERO, Kind, Ordinal, classify, fundamental_sequence, pred


class _Run:
    def __init__(self, budget: Budget, trace: Optional[list] = None):
        self.limit = budget.max_steps
        self.cap = budget.max_value_bits
        self.steps = 0
        self.trace = trace

    def room(self) -> Optional[int]:
        return None if self.limit is None else self.limit - self.steps

    def refuse(self, index, reason="steps"):
        raise BudgetExhausted(self.steps, index, reason)

    def take_step(self, index):
        if self.limit is not None and self.steps >= self.limit:
            self.refuse(index)
        self.steps += 1

    def successor_run(self, value: int, k: int) -> int:
        """k applications of f_0."""
        room = self.room()
        cap_fit = None if self.cap is None else max(0, (1 << self.cap) - 1 - value)
        fit = min(x for x in (k, room, cap_fit) if x is not None)
        if fit < k:
            self.steps += fit
            # unit stepping checks the value cap before the step limit
            if cap_fit is not None and cap_fit == fit:
                self.refuse(ZERO, "value")
            self.refuse(ZERO)
        self.steps += k
        return value + k

    def doubling_run(self, value: int, k: int) -> int:
        """k applications of f_1."""
        room = self.room()
        fits = True
        if room is not None and k > room.bit_length() + 1:
            fits = False
        if self.cap is not None and value.bit_length() + k > self.cap:
            fits = False
        if fits:
            cost = k + value * ((1 << k) - 1)
            if room is None or cost <= room:
                self.steps += cost
                return value << k
        # some limit binds: walk one f_1 application at a time; per-application
        # cost doubles, so this stops within about log2(limit) rounds
        for _ in range(k):
            self.take_step(ONE)
            value = self.successor_run(value, value)
        return value


def _evaluate(alpha: Ordinal, n: int, budget: Budget, accelerate: bool,
              trace: Optional[list] = None) -> Tuple[int, int]:
    if n < 0:
        raise ValueError("n must be a natural number")
    run = _Run(budget, trace)
    value = n
    stack: List[list] = [[alpha, 1]]
    while stack:
        frame = stack[-1]
        index, remaining = frame
        if remaining == 0:
            stack.pop()
            continue
        if accelerate and index.is_finite and int(index) <= 1:
            stack.pop()
            if index.is_zero:
                value = run.successor_run(value, remaining)
            else:
                value = run.doubling_run(value, remaining)
            continue
        kind = classify(index)
        if kind is Kind.ZERO and run.cap is not None and (value + 1).bit_length() > run.cap:
            run.refuse(index, "value")
        run.take_step(index)
        frame[1] = remaining - 1
        if trace is not None:
            trace.append((index, value))
        if kind is Kind.ZERO:
            value += 1
        elif kind is Kind.SUCCESSOR:
            stack.append([pred(index), value])
        else:
            stack.append([fundamental_sequence(index, value), 1])
    return value, run.steps


def fgh_eval(alpha: Ordinal, n: int, budget: Budget, accelerate: bool = True) -> int:
    """Return f_alpha(n), raising :class:`BudgetExhausted` when fuel runs out."""
    return _evaluate(alpha, n, budget, accelerate)[0]


def fgh_steps(alpha: Ordinal, n: int, budget: Budget, accelerate: bool = True) -> Tuple[int, int]:
    """Return ``(f_alpha(n), steps_used)``."""
    return _evaluate(alpha, n, budget, accelerate)


def fgh_trace(alpha: Ordinal, n: int, budget: Budget) -> Tuple[List[Tuple[Ordinal, int]], int]:
    """Record every ``(index, argument)`` pair the evaluator expands.

    Returns ``(trace, value)``.  On exhaustion the partial trace is attached
    to the raised exception as ``exc.trace``.
    """
    trace: list = []
    try:
        value, _ = _evaluate(alpha, n, budget, accelerate=False, trace=trace)
    except BudgetExhausted as exc:
        exc.trace = trace
        raise
    return trace, value


def replay_trace(trace: List[Tuple[Ordinal, int]]) -> int:
    """Re-apply the rules along a trace and return the value it computes.

    Each step must take the current value as its argument, and a successor
    or limit step with a positive argument must be followed by the rewrite
    it prescribes.
    """
    if not trace:
        raise ValueError("empty trace")
    value = trace[0][1]
    for pos, (index, arg) in enumerate(trace):
        if arg != value:
            raise ValueError(f"step {pos}: argument {arg} != current value {value}")
        kind = classify(index)
        if kind is Kind.ZERO:
            value += 1
            continue
        if kind is Kind.SUCCESSOR:
            if arg == 0:
                continue
            expected = pred(index)
        else:
            expected = fundamental_sequence(index, arg)
        if pos + 1 < len(trace) and trace[pos + 1][0] != expected:
            raise ValueError(f"step {pos + 1}: expected index {expected}")
    return value
