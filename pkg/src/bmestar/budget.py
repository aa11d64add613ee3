"""Fuel accounting shared by every evaluator in the package."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class Budget:
    """Limits for one evaluation.

    ``max_steps`` counts recursion-rule applications; ``None`` removes the
    limit (useful when a closed-form shortcut keeps the work small even
    though the step count is astronomical).  ``max_value_bits`` caps the
    size of intermediate values.
    """

    max_steps: Optional[int] = 10_000
    max_value_bits: Optional[int] = None

    def __post_init__(self):
        if self.max_steps is not None and self.max_steps <= 0:
            raise ValueError("max_steps must be positive")
        if self.max_value_bits is not None and self.max_value_bits <= 0:
            raise ValueError("max_value_bits must be positive")

    @classmethod
    def unlimited(cls) -> "Budget":
        return cls(max_steps=None)


class BudgetExhausted(Exception):
    """Raised when an evaluator runs out of fuel.

    ``steps_used`` is the number of rule applications performed before the
    refused one, ``deepest_index`` identifies the rule that was refused
    (an ordinal for the hierarchy, an ``(m, n)`` pair for Ackermann).
    """

    def __init__(self, steps_used: int, deepest_index: Any, reason: str = "steps"):
        self.steps_used = steps_used
        self.deepest_index = deepest_index
        self.reason = reason
        super().__init__(
            f"budget exhausted ({reason}) after {steps_used} steps at {deepest_index}"
        )

    def payload(self) -> dict:
        return {
            "exhausted": {
                "steps_used": self.steps_used,
                "deepest_index": str(self.deepest_index),
                "reason": self.reason,
            }
        }
