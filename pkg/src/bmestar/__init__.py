"""Executable monotone enumerations, iteration approximations, the
Ackermann function and the fast-growing hierarchy."""

from .ack_enum import AckEnumeration, AckNodeMeaning, FuelSchedule, NotARepresentation, build_ack_enumeration, decode_node
from .ackermann import AckMemo, SparseNat, ack, ack_prime, cantor_pair, cantor_unpair, seq_code, set_code, stage_code
from .budget import Budget, BudgetExhausted
from .enumeration import (Condition, Enumeration, EnumTree, Finite, InvalidEnumeration, Unresolved, Validator,
                          Violation, bme_bound, check_finite, f_prime, f_step, is_bounded, stage_by_stage,
                          tree_of, validate)
from .hierarchy import fgh_eval, fgh_trace, replay_trace
from .iteration import (ApproxSeq, Fails, FnSpec, Holds, Inconclusive, build_approx, builtin, check_approx,
                        iterate_fn)
from .ordinals import OMEGA, Ordinal, OrdinalSyntaxError, parse_ordinal

__version__ = "0.1.0"
