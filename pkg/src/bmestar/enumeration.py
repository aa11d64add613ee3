"""Monotone enumerations of finite sequences.

An enumeration is an explicit list of stages ``(index, new)`` where ``new``
is the set of sequences first enumerated at that stage, so that
``E[s]`` is the union of ``new`` over stages with index ``<= s``.
Sequences are tuples of naturals.

It is *monotone* when

* C1: the empty sequence is enumerated at the first stage;
* C2: every stage is finite;
* C3: for every ``tau`` new at a later stage ``s`` with ``tau0`` its longest
  proper initial segment enumerated before ``s``,
  (a) nothing properly extending ``tau0`` was enumerated before ``s``, and
  (b) every sequence new at ``s`` extends ``tau0``.
"""

from __future__ import annotations

import enum
import json
from itertools import chain
from collections.abc import Collection
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .ackermann import SparseNat, seq_code, stage_code

Seq = Tuple[int, ...]


def seq_key(seq: Seq):
    return len(seq), seq


def canonical(seqs: Iterable[Seq]) -> List[Seq]:
    """Sort shortest first, then lexicographically."""
    return sorted(sorted(seqs), key=len)


def extends(seq: Seq, prefix: Seq) -> bool:
    return len(seq) >= len(prefix) and seq[:len(prefix)] == prefix


def fmt_seq(seq: Seq) -> str:
    return "<" + ",".join(map(str, seq)) + ">"


class Condition(enum.Enum):
    C1 = "C1"
    C2 = "C2"
    C3A = "C3a"
    C3B = "C3b"


class Violation(NamedTuple):
    condition: Condition
    stage: int
    witness: Seq
    tau0: Optional[Seq] = None
    conflict: Optional[Seq] = None
    conflict_stage: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "condition": self.condition.value,
            "stage": self.stage,
            "witness": list(self.witness),
            "tau0": None if self.tau0 is None else list(self.tau0),
            "conflict": None if self.conflict is None else list(self.conflict),
            "conflict_stage": self.conflict_stage,
        }

    def __str__(self):
        msg = f"{self.condition.value} violated at stage {self.stage} by {fmt_seq(self.witness)}"
        if self.conflict is not None:
            msg += f" (tau0={fmt_seq(self.tau0)}, conflict {fmt_seq(self.conflict)}"
            msg += f" at stage {self.conflict_stage})"
        return msg


class InvalidEnumeration(ValueError):
    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(str(violation))


class Stage(NamedTuple):
    index: int
    new: frozenset


class Enumeration:
    """An immutable list of stages with strictly increasing indices."""

    def __init__(self, stages: Iterable[Tuple[int, Iterable[Iterable[int]]]]):
        out: List[Stage] = []
        seen: set = set()
        last = -1
        for index, new in stages:
            if index <= last:
                raise ValueError(f"stage index {index} is negative or does not increase")
            new = frozenset(map(tuple, new))
            if not seen.isdisjoint(new):
                dup = min(new & seen, key=seq_key)
                raise ValueError(f"{fmt_seq(dup)} enumerated twice")
            seen |= new
            out.append(Stage(index, new))
            last = index
        if min(chain.from_iterable(seen), default=0) < 0:
            raise ValueError("sequence entries must be naturals")
        self.stages: Tuple[Stage, ...] = tuple(out)

    def __len__(self):
        return len(self.stages)

    def __repr__(self):
        parts = ", ".join(
            f"{st.index}: {{{', '.join(fmt_seq(s) for s in sorted(st.new, key=seq_key))}}}"
            for st in self.stages
        )
        return f"Enumeration([{parts}])"

    def __eq__(self, other):
        return isinstance(other, Enumeration) and self.stages == other.stages

    def __hash__(self):
        return hash(self.stages)

    @cached_property
    def stage_of(self) -> Dict[Seq, int]:
        return {s: st.index for st in self.stages for s in st.new}

    @cached_property
    def by_index(self) -> Dict[int, Stage]:
        return {st.index: st for st in self.stages}

    def sequences(self) -> List[Seq]:
        """All enumerated sequences, in stage order."""
        return [s for st in self.stages for s in sorted(st.new, key=seq_key)]

    def cumulative(self, s: int) -> frozenset:
        """``E[s]``."""
        return frozenset(x for st in self.stages if st.index <= s for x in st.new)

    def prefix(self, k: int) -> "Enumeration":
        """The first ``k`` stages."""
        return Enumeration((st.index, st.new) for st in self.stages[:k])

    def to_json(self) -> dict:
        return {
            "stages": [
                {"s": st.index, "new": [list(x) for x in sorted(st.new, key=seq_key)]}
                for st in self.stages
            ]
        }

    @classmethod
    def from_json(cls, obj) -> "Enumeration":
        if isinstance(obj, (str, bytes)):
            obj = json.loads(obj)
        try:
            stages = obj["stages"]
            return cls((int(st["s"]), st["new"]) for st in stages)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed enumeration JSON: {exc}") from exc


class Validator:
    """Checks an enumeration one stage at a time.

    ``add_stage`` returns the first violation in the stage (None if the
    stage is fine) and only records the stage when it is fine.  Within a
    stage, sequences are examined shortest first, then lexicographically,
    and for each one C3a is checked before C3b.
    """

    def __init__(self):
        self.stage_of: Dict[Seq, int] = {}
        self.extended = set()
        self.last_index: Optional[int] = None

    def add_stage(self, index: int, new) -> Optional[Violation]:
        stage_of = self.stage_of
        last = self.last_index
        if last is not None and index <= last:
            raise ValueError(f"stage index {index} does not increase")
        if type(new) is not frozenset:
            if not isinstance(new, Collection):
                return Violation(Condition.C2, index, ())
            new = frozenset(map(tuple, new))
        if not stage_of.keys().isdisjoint(new):
            dup = min((s for s in new if s in stage_of), key=seq_key)
            raise ValueError(f"{fmt_seq(dup)} enumerated twice")
        if last is None:
            if () not in new:
                return Violation(Condition.C1, index, ())
        elif new:
            # Only the first sequence needs checking: if it passes, every
            # other one extends its tau0, and a longer tau0 for another
            # sequence would be an earlier extension of the first one's
            # tau0, contradicting C3a.
            tau = min(sorted(new), key=len) if len(new) > 1 else next(iter(new))
            k = len(tau) - 1
            while tau[:k] not in stage_of:
                k -= 1
            tau0 = tau[:k]
            if tau0 in self.extended:
                return self._c3a(index, tau, tau0)
            for s in new:
                if s[:k] != tau0:
                    stray = min((s for s in new if s[:k] != tau0), key=seq_key)
                    return Violation(Condition.C3B, index, tau, tau0, stray, index)
        self.last_index = index
        for s in new:
            stage_of[s] = index
        self.extended.update([s[:k] for s in new for k in range(len(s))])
        return None

    def _c3a(self, index, tau, tau0) -> Violation:
        stage_of = self.stage_of
        k = len(tau0)
        conflict = min(
            (s for s in stage_of if len(s) > k and s[:k] == tau0),
            key=lambda s: (stage_of[s], seq_key(s)),
        )
        return Violation(Condition.C3A, index, tau, tau0, conflict, stage_of[conflict])

    def longest_prior_prefix(self, tau: Seq) -> Seq:
        """The longest proper initial segment of ``tau`` recorded so far."""
        for k in range(len(tau) - 1, -1, -1):
            if tau[:k] in self.stage_of:
                return tau[:k]
        raise LookupError("no proper initial segment recorded")


def validate(e: Enumeration) -> Optional[Violation]:
    """Return the first violation in stage order, or None if ``e`` is monotone."""
    if not e.stages:
        return Violation(Condition.C1, 0, ())
    add = Validator().add_stage
    for index, new in e.stages:
        bad = add(index, new)
        if bad is not None:
            return bad
    return None


def require_valid(e: Enumeration) -> None:
    bad = validate(e)
    if bad is not None:
        raise InvalidEnumeration(bad)


class EnumTree:
    """A finite prefix-closed set of sequences."""

    def __init__(self, nodes: Iterable[Seq]):
        closed = set()
        for s in nodes:
            s = tuple(s)
            for k in range(len(s) + 1):
                closed.add(s[:k])
        closed.add(())
        self.nodes = frozenset(closed)

    def __contains__(self, seq) -> bool:
        return tuple(seq) in self.nodes

    def __len__(self):
        return len(self.nodes)

    def __iter__(self) -> Iterator[Seq]:
        return iter(sorted(self.nodes, key=seq_key))

    def __eq__(self, other):
        if isinstance(other, EnumTree):
            return self.nodes == other.nodes
        if isinstance(other, (set, frozenset)):
            return self.nodes == other
        return NotImplemented

    def __repr__(self):
        return "EnumTree({" + ", ".join(fmt_seq(s) for s in self) + "})"

    def children(self, seq: Seq) -> List[Seq]:
        return sorted((s for s in self.nodes if len(s) == len(seq) + 1 and s[:-1] == seq),
                      key=seq_key)

    def leaves(self) -> List[Seq]:
        inner = {s[:-1] for s in self.nodes if s}
        return sorted(self.nodes - inner, key=seq_key)

    def depth(self) -> int:
        return max(len(s) for s in self.nodes)

    def to_dot(self, enumeration: Optional[Enumeration] = None,
               label: Callable[[Seq], str] = fmt_seq,
               edge_style: Optional[Callable[[Seq], str]] = None) -> str:
        """Graphviz source; with ``enumeration``, nodes new at the same stage
        share a box."""
        ids = {s: f"n{i}" for i, s in enumerate(self)}
        lines = ["digraph enumeration {", "  rankdir=BT;", "  node [shape=plaintext];"]
        grouped = set()
        if enumeration is not None:
            for st in enumeration.stages:
                members = [s for s in sorted(st.new, key=seq_key) if s in self.nodes]
                if not members:
                    continue
                lines.append(f"  subgraph cluster_s{st.index} {{")
                lines.append(f'    label="stage {st.index}"; color=gray;')
                for s in members:
                    lines.append(f'    {ids[s]} [label="{label(s)}"];')
                    grouped.add(s)
                lines.append("  }")
        for s in self:
            if s not in grouped:
                style = ", fontcolor=gray" if enumeration is not None else ""
                lines.append(f'  {ids[s]} [label="{label(s)}"{style}];')
        for s in self:
            if s:
                style = edge_style(s) if edge_style else "solid"
                lines.append(f"  {ids[s[:-1]]} -> {ids[s]} [dir=none, style={style}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def tree_of(e: Enumeration) -> EnumTree:
    require_valid(e)
    return EnumTree(e.stage_of)


def _tau0(e: Enumeration, tau: Seq) -> Seq:
    stage_of = e.stage_of
    s = stage_of[tau]
    for k in range(len(tau) - 1, -1, -1):
        p = tau[:k]
        if stage_of.get(p, s) < s:
            return p
    raise ValueError(f"{fmt_seq(tau)} has no initial segment enumerated earlier")


def stage_by_stage(e: Enumeration, tau: Seq) -> List[Seq]:
    """The chain ``<>, ..., tau`` of maximal initial segments of ``tau``
    enumerated at earlier stages, each one the ``tau0`` of the next."""
    tau = tuple(tau)
    if tau not in e.stage_of:
        raise ValueError(f"{fmt_seq(tau)} is not enumerated")
    chain = [tau]
    while chain[-1]:
        chain.append(_tau0(e, chain[-1]))
    chain.reverse()
    return chain


def chain_lengths(e: Enumeration) -> Dict[Seq, int]:
    """Length of the stage-by-stage sequence of every enumerated sequence."""
    out: Dict[Seq, int] = {}
    for s in e.sequences():
        out[s] = 1 if not s else out[_tau0(e, s)] + 1
    return out


def unbounded_witness(e: Enumeration, b: int) -> Optional[Seq]:
    """First enumerated sequence whose stage-by-stage sequence is longer than ``b``."""
    require_valid(e)
    for s, n in chain_lengths(e).items():
        if n > b:
            return s
    return None


def is_bounded(e: Enumeration, b: int) -> bool:
    return unbounded_witness(e, b) is None


def f_prime(e: Enumeration, tau: Seq) -> Optional[int]:
    """First stage at which a proper extension of ``tau`` is enumerated."""
    tau = tuple(tau)
    n = len(tau)
    stages = [i for s, i in e.stage_of.items() if len(s) > n and s[:n] == tau]
    return min(stages, default=None)


def f_step(e: Enumeration, tau: Seq) -> Optional[frozenset]:
    """``E[F'(tau)] minus E[F'(tau) - 1]``: everything new at that stage."""
    s = f_prime(e, tau)
    return None if s is None else e.by_index[s].new


def f_domain(e: Enumeration) -> List[Seq]:
    """The sequences on which ``f_prime`` is defined."""
    return sorted({s[:k] for s in e.stage_of for k in range(len(s))}, key=seq_key)


def iteration_bound(e: Enumeration, b: int) -> SparseNat:
    """``max(s_0, ..., s_b)`` for the approximation ``s`` to the iteration of ``F``.

    ``F`` maps the code of ``tau`` to the code of ``f_step(e, tau)``;
    ``s_0`` is the code of ``<>`` and ``s_{i+1}`` the largest ``F(x)`` with
    ``x <= s_i`` (0 when there is none).  Codes are compared symbolically.
    """
    graph = [(seq_code(t), stage_code(f_step(e, t))) for t in f_domain(e)]
    s = [SparseNat()]
    for _ in range(b):
        s.append(max((fx for x, fx in graph if s[-1] >= x), default=SparseNat()))
    return max(s)


def bme_bound(e: Enumeration, b: int) -> SparseNat:
    """A number dominating the code of every sequence enumerated by ``e``,
    which must be a monotone enumeration bounded by ``b``.

    Along a stage-by-stage sequence each element is a member of ``F`` of the
    previous one, so its code is at most ``s_i`` by induction.
    """
    require_valid(e)
    witness = unbounded_witness(e, b)
    if witness is not None:
        raise ValueError(f"enumeration is not bounded by {b}: {fmt_seq(witness)}")
    return iteration_bound(e, b)


@dataclass(frozen=True)
class Finite:
    tree: EnumTree
    enumeration: Enumeration = field(repr=False)


@dataclass(frozen=True)
class Unresolved:
    stages_consumed: int


def check_finite(stream: Iterable[Tuple[int, Iterable[Seq]]], stage_budget: int):
    """Consume a stream of stages, validating as it goes.

    Returns :class:`Finite` if the stream ends within ``stage_budget``
    stages, :class:`Unresolved` if it is still producing when the budget is
    spent.  A violation raises :class:`InvalidEnumeration`.
    """
    it = iter(stream)
    v = Validator()
    stages = []
    for _ in range(stage_budget):
        try:
            index, new = next(it)
        except StopIteration:
            break
        bad = v.add_stage(index, new)
        if bad is not None:
            raise InvalidEnumeration(bad)
        stages.append((index, new))
    else:
        try:
            next(it)
        except StopIteration:
            pass
        else:
            return Unresolved(stage_budget)
    if not stages:
        raise InvalidEnumeration(Violation(Condition.C1, 0, ()))
    e = Enumeration(stages)
    return Finite(EnumTree(e.stage_of), e)
