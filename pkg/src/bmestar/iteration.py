"""Approximations to the iteration of (partial) functions.

A sequence ``s`` approximates the iteration of ``f`` when, for every
``i < len(s) - 1`` and every ``x <= s[i]`` on which ``f`` is defined,
``f(x) <= s[i + 1]``.

Functions are :class:`FnSpec` values: ``spec(x, budget)`` returns the value,
``None`` where the function is undefined, or raises
:class:`~bmestar.budget.BudgetExhausted` when it can't decide in budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from .ackermann import ack, ack_prime
from .budget import Budget, BudgetExhausted
from .hierarchy import fgh_eval
from .ordinals import parse_ordinal


@dataclass(frozen=True)
class FnSpec:
    name: str
    fn: Callable[[int, Budget], Optional[int]]
    description: str = ""
    total: bool = True

    def __call__(self, x: int, budget: Budget) -> Optional[int]:
        return self.fn(x, budget)


@dataclass(frozen=True)
class Holds:
    pass


@dataclass(frozen=True)
class Fails:
    i: int
    x: int
    y: int


@dataclass(frozen=True)
class Inconclusive:
    i: int
    x: int
    exhausted: BudgetExhausted


@dataclass(frozen=True)
class ApproxSeq:
    entries: Tuple[int, ...]
    subject: FnSpec

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def check_approx(f: FnSpec, s: Sequence[int], budget: Budget) -> Union[Holds, Fails, Inconclusive]:
    """Decide the approximation condition for ``s``.

    Every ``(i, x)`` is examined in order.  The first counterexample is
    returned as :class:`Fails` even if an earlier evaluation ran out of fuel,
    since a counterexample settles the question; otherwise the first
    out-of-fuel evaluation makes the answer :class:`Inconclusive`.
    """
    undecided = None
    for i in range(len(s) - 1):
        for x in range(s[i] + 1):
            try:
                y = f(x, budget)
            except BudgetExhausted as exc:
                if undecided is None:
                    undecided = Inconclusive(i, x, exc)
                continue
            if y is not None and y > s[i + 1]:
                return Fails(i, x, y)
    return undecided or Holds()


def build_approx(f: FnSpec, z: int, seed: int, budget: Budget) -> Union[ApproxSeq, Inconclusive]:
    """The pointwise-least approximation of length ``z`` starting at ``seed``."""
    if z < 1:
        raise ValueError("z must be at least 1")
    if seed < 0:
        raise ValueError("seed must be a natural number")
    s = [seed]
    for i in range(z - 1):
        best = 0
        for x in range(s[i] + 1):
            try:
                y = f(x, budget)
            except BudgetExhausted as exc:
                return Inconclusive(i, x, exc)
            if y is not None and y > best:
                best = y
        s.append(best)
    return ApproxSeq(tuple(s), f)


def iterate_fn(f: FnSpec, k: int, x: int, budget: Budget) -> Optional[int]:
    """``f`` composed ``k`` times, applied to ``x``; each application gets
    its own ``budget``.  None if any application is undefined."""
    if k < 0:
        raise ValueError("k must be a natural number")
    for _ in range(k):
        x = f(x, budget)
        if x is None:
            return None
    return x


def successor() -> FnSpec:
    return FnSpec("successor", lambda x, budget: x + 1, "x + 1")


def doubling() -> FnSpec:
    return FnSpec("doubling", lambda x, budget: 2 * x, "2x")


def ackermann(m: int) -> FnSpec:
    return FnSpec(f"ackermann:{m}", lambda x, budget: ack(m, x, budget), f"A({m}, x)")


def ack_prime_spec() -> FnSpec:
    return FnSpec("ack-prime", lambda x, budget: ack_prime(x, budget),
                  "<A((x)_0,(x)_1), A((x)_0,(x)_1)>")


def fgh(alpha) -> FnSpec:
    if isinstance(alpha, str):
        alpha = parse_ordinal(alpha)
    return FnSpec(f"fgh:{alpha}", lambda x, budget: fgh_eval(alpha, x, budget), f"f_{alpha}(x)")


def partial(name: str, fn: Callable[[int], Optional[int]], description: str = "") -> FnSpec:
    """Wrap a plain function that returns None where undefined."""
    return FnSpec(name, lambda x, budget: fn(x), description, total=False)


BUILTINS: Dict[str, Callable[..., FnSpec]] = {
    "successor": successor,
    "doubling": doubling,
    "ackermann": lambda m: ackermann(int(m)),
    "ack-prime": ack_prime_spec,
    "fgh": fgh,
}


def builtin(spec: str) -> FnSpec:
    """Look up ``name`` or ``name:param`` (e.g. ``ackermann:2``, ``fgh:w``)."""
    name, _, param = spec.partition(":")
    if name not in BUILTINS:
        raise KeyError(f"unknown function {name!r}; choose from {', '.join(BUILTINS)}")
    needs = name in ("ackermann", "fgh")
    if needs and not param:
        raise ValueError(f"{name} needs a parameter, e.g. {name}:2")
    if not needs and param:
        raise ValueError(f"{name} takes no parameter")
    return BUILTINS[name](param) if needs else BUILTINS[name]()
